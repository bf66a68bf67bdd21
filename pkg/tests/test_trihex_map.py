import pytest

from trihex.core.analysis import IsomorphismRelation, is_isomorphic
from trihex.core.trihex_map import CombinatorialMap, validate
from trihex.utils.error_handler import ConsistencyError

# Planar K4: vertex 0 in the middle of the triangle 1, 2, 3.
K4_ROTATION = [[1, 2, 3], [2, 0, 3], [3, 0, 1], [1, 0, 2]]

# Triangular prism with one vertical edge contracted.
CONTRACTED_PRISM = [[1, 3, 4, 2], [0, 2, 3], [0, 4, 1], [0, 1, 4], [0, 3, 2]]


@pytest.mark.parametrize("text, vertices", [("9,0,4", 40), ("5,2,2", 72), ("0,0,0", 4)])
def test_quotient_builds_validate(build_quotient, text, vertices):
    report = validate(build_quotient(text))
    assert report.passed, report.first_failure
    assert report.vertex_count == vertices
    assert report.triangle_count == 4
    assert report.euler_residual == 0


def test_spine_build_of_godseye_validates(build_spines):
    report = validate(build_spines("0,3,0"))
    assert report.passed
    assert report.vertex_count == 16
    assert report.hexagon_count == 6


def test_hand_built_tetrahedron(tetrahedron):
    m = CombinatorialMap.from_rotation_system(K4_ROTATION)
    report = validate(m)
    assert report.passed
    assert (report.vertex_count, report.edge_count, report.face_count) == (4, 6, 4)
    assert is_isomorphic(m, tetrahedron) is IsomorphismRelation.ORIENTATION_PRESERVING


def test_contracted_edge_fails_three_regularity():
    report = validate(CombinatorialMap.from_rotation_system(CONTRACTED_PRISM))
    assert not report.passed
    assert report.first_failure == "3-regular"
    assert report.to_dict()["checks"]["3-regular"] is False


def test_square_fails_three_regularity_and_face_sizes():
    report = validate(CombinatorialMap.from_rotation_system([[1, 3], [2, 0], [3, 1], [0, 2]]))
    checks = dict(report.checks)
    assert report.first_failure == "3-regular"
    assert not checks["face sizes"]
    assert checks["connected"]


def test_asymmetric_rotation_system_is_rejected():
    with pytest.raises(ConsistencyError, match="not at"):
        CombinatorialMap.from_rotation_system([[1], []])


def test_permutations_are_checked():
    with pytest.raises(ConsistencyError):
        CombinatorialMap((1, 0), (0,))
    with pytest.raises(ConsistencyError):
        CombinatorialMap((1, 1), (0, 1))


class TestFaceCycles:
    def test_duplicate_directed_edge(self):
        with pytest.raises(ConsistencyError, match="glued twice"):
            CombinatorialMap.from_face_cycles([[0, 1, 2], [0, 1, 2]])

    def test_dangling_dart(self):
        with pytest.raises(ConsistencyError, match="dangling"):
            CombinatorialMap.from_face_cycles([[0, 1, 2]])

    def test_rebuild_from_own_faces(self, build_quotient):
        m = build_quotient("3,1,2")
        faces = [m.face_vertices(index) for index in range(m.num_faces)]
        rebuilt = CombinatorialMap.from_face_cycles(faces)
        assert sorted(rebuilt.face_sizes()) == sorted(m.face_sizes())
        assert is_isomorphic(rebuilt, m) is IsomorphismRelation.ORIENTATION_PRESERVING

    def test_deterministic(self, build_quotient):
        m = build_quotient("5,2,2")
        faces = [m.face_vertices(index) for index in range(m.num_faces)]
        assert CombinatorialMap.from_face_cycles(faces) == CombinatorialMap.from_face_cycles(faces)


class TestStructure:
    def test_face_cycles_follow_edges(self, build_quotient):
        m = build_quotient("5,2,2")
        edges = set(m.edges)
        for index in range(m.num_faces):
            cycle = m.face_vertices(index)
            for position, x in enumerate(cycle):
                y = cycle[(position + 1) % len(cycle)]
                assert (min(x, y), max(x, y)) in edges

    def test_face_step_continues_at_head(self, build_quotient):
        m = build_quotient("3,1,2")
        for dart in range(m.num_darts):
            assert m.tail(m.face_permutation[dart]) == m.head(dart)

    def test_counts(self, build_quotient):
        m = build_quotient("1,0,0")
        assert (m.num_vertices, m.num_edges, m.num_faces) == (8, 12, 6)
        assert len(m.triangles()) == 4
        assert len(m.hexagons()) == 2
        assert len(m.edges) == 12

    def test_mirror_is_an_involution(self, build_quotient):
        m = build_quotient("5,0,2")
        assert m.mirrored().mirrored() == m
        assert m.mirrored().edges == m.edges

    def test_networkx_view(self, build_quotient):
        graph = build_quotient("5,2,2").to_networkx()
        assert graph.number_of_nodes() == 72
        assert graph.number_of_edges() == 108
        assert all(degree == 3 for _, degree in graph.degree())

    def test_neighbors_follow_rotation(self, tetrahedron):
        for x in range(4):
            around = tetrahedron.neighbors(x)
            assert sorted(around) == sorted(set(range(4)) - {x})
