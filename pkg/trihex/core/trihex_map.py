"""
Combinatorial maps: dart-based encoding of an embedded graph.

A map is a pair of permutations on darts ``0..n-1``: ``involution`` pairs
the two darts of an edge and ``rotation`` gives the next dart
counterclockwise around the origin vertex. Faces are the orbits of
``rotation^-1 . involution`` and are traversed counterclockwise with the
face on the left of every dart.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from trihex.utils.error_handler import ConsistencyError

Cycle = Tuple[int, ...]


def _orbits(permutation: Sequence[int]) -> Tuple[Cycle, ...]:
    """Cycles of a permutation, each starting at its least element, ordered by that element."""
    seen = [False] * len(permutation)
    cycles = []
    for start in range(len(permutation)):
        if seen[start]:
            continue
        cycle = []
        current = start
        while not seen[current]:
            seen[current] = True
            cycle.append(current)
            current = permutation[current]
        cycles.append(tuple(cycle))
    return tuple(cycles)


def _membership(cycles: Sequence[Cycle], size: int) -> Tuple[int, ...]:
    owner = [0] * size
    for index, cycle in enumerate(cycles):
        for dart in cycle:
            owner[dart] = index
    return tuple(owner)


def _is_permutation(values: Sequence[int]) -> bool:
    return sorted(values) == list(range(len(values)))


@dataclass(frozen=True)
class CombinatorialMap:
    involution: Tuple[int, ...]
    rotation: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.involution) != len(self.rotation):
            raise ConsistencyError("involution and rotation act on different dart sets")
        if not (_is_permutation(self.involution) and _is_permutation(self.rotation)):
            raise ConsistencyError("involution and rotation must be permutations of the darts")

    # --------------------------------------------------------- constructors
    @classmethod
    def from_rotation_system(cls, neighbors: Sequence[Sequence[int]]) -> "CombinatorialMap":
        """
        Map of a simple graph from per-vertex counterclockwise neighbour lists.
        Dart ``(x, k)`` points from ``x`` to ``neighbors[x][k]``.
        """
        offsets = []
        total = 0
        for around in neighbors:
            offsets.append(total)
            total += len(around)
        involution = [0] * total
        rotation = [0] * total
        for x, around in enumerate(neighbors):
            degree = len(around)
            for k, y in enumerate(around):
                dart = offsets[x] + k
                rotation[dart] = offsets[x] + (k + 1) % degree
                try:
                    back = list(neighbors[y]).index(x)
                except (ValueError, IndexError):
                    raise ConsistencyError(f"edge {x}-{y} is listed at {x} but not at {y}", x=x, y=y) from None
                involution[dart] = offsets[y] + back
        return cls(tuple(involution), tuple(rotation))

    @classmethod
    def from_face_cycles(cls, faces: Sequence[Sequence[int]]) -> "CombinatorialMap":
        """
        Glue polygons given as counterclockwise vertex cycles. Every directed
        edge must occur exactly once and its reverse must occur too.
        Darts at each vertex are numbered counterclockwise starting from the
        edge to the smallest neighbour.
        """
        left_face: Dict[Tuple[int, int], Tuple[int, int]] = {}
        for index, cycle in enumerate(faces):
            length = len(cycle)
            for position in range(length):
                dart = (cycle[position], cycle[(position + 1) % length])
                if dart in left_face:
                    raise ConsistencyError(f"directed edge {dart[0]}->{dart[1]} glued twice", edge=dart)
                left_face[dart] = (index, position)

        for a, b in left_face:
            if (b, a) not in left_face:
                raise ConsistencyError(f"dangling dart {a}->{b} has no partner", edge=(a, b))

        # Counterclockwise successor of a->b around a: a->pred(a) in the face left of a->b.
        successor: Dict[Tuple[int, int], Tuple[int, int]] = {}
        for (a, b), (index, position) in left_face.items():
            cycle = faces[index]
            successor[(a, b)] = (a, cycle[position - 1])

        outgoing: Dict[int, List[Tuple[int, int]]] = {}
        for a, b in left_face:
            outgoing.setdefault(a, []).append((a, b))

        numbering: Dict[Tuple[int, int], int] = {}
        for vertex in sorted(outgoing):
            start = min(outgoing[vertex], key=lambda dart: dart[1])
            dart = start
            while True:
                numbering[dart] = len(numbering)
                dart = successor[dart]
                if dart == start:
                    break
            if sum(1 for d in outgoing[vertex] if d not in numbering):
                raise ConsistencyError(f"darts around vertex {vertex} do not form one rotation cycle", vertex=vertex)

        involution = [0] * len(numbering)
        rotation = [0] * len(numbering)
        for (a, b), number in numbering.items():
            involution[number] = numbering[(b, a)]
            rotation[number] = numbering[successor[(a, b)]]
        return cls(tuple(involution), tuple(rotation))

    # ------------------------------------------------------------ structure
    @property
    def num_darts(self) -> int:
        return len(self.involution)

    @cached_property
    def rotation_inverse(self) -> Tuple[int, ...]:
        inverse = [0] * self.num_darts
        for dart, image in enumerate(self.rotation):
            inverse[image] = dart
        return tuple(inverse)

    @cached_property
    def face_permutation(self) -> Tuple[int, ...]:
        """Next dart along the face on the left: ``rotation^-1(involution(d))``."""
        inverse = self.rotation_inverse
        return tuple(inverse[self.involution[d]] for d in range(self.num_darts))

    @cached_property
    def vertices(self) -> Tuple[Cycle, ...]:
        return _orbits(self.rotation)

    @cached_property
    def faces(self) -> Tuple[Cycle, ...]:
        return _orbits(self.face_permutation)

    @cached_property
    def vertex_of(self) -> Tuple[int, ...]:
        return _membership(self.vertices, self.num_darts)

    @cached_property
    def face_of(self) -> Tuple[int, ...]:
        return _membership(self.faces, self.num_darts)

    def head(self, dart: int) -> int:
        return self.vertex_of[self.involution[dart]]

    def tail(self, dart: int) -> int:
        return self.vertex_of[dart]

    @cached_property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        """Vertex pairs ``(x, y)`` with ``x <= y``, one per edge, sorted."""
        pairs = []
        for dart, partner in enumerate(self.involution):
            if dart < partner:
                x, y = self.vertex_of[dart], self.vertex_of[partner]
                pairs.append((min(x, y), max(x, y)))
        return tuple(sorted(pairs))

    def neighbors(self, vertex: int) -> Tuple[int, ...]:
        """Neighbouring vertices counterclockwise, starting from the least dart."""
        return tuple(self.head(dart) for dart in self.vertices[vertex])

    def face_vertices(self, face: int) -> Tuple[int, ...]:
        return tuple(self.vertex_of[dart] for dart in self.faces[face])

    def face_sizes(self) -> Tuple[int, ...]:
        return tuple(len(face) for face in self.faces)

    def triangles(self) -> Tuple[int, ...]:
        return tuple(i for i, face in enumerate(self.faces) if len(face) == 3)

    def hexagons(self) -> Tuple[int, ...]:
        return tuple(i for i, face in enumerate(self.faces) if len(face) == 6)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return self.num_darts // 2

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def mirrored(self) -> "CombinatorialMap":
        """The same graph embedded with the opposite orientation."""
        return CombinatorialMap(self.involution, self.rotation_inverse)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.num_vertices))
        graph.add_edges_from(self.edges)
        return graph


# --------------------------------------------------------------------------
# Validation
# --------------------------------------------------------------------------


@dataclass
class ValidationReport:
    vertex_count: int
    edge_count: int
    face_count: int
    triangle_count: int
    hexagon_count: int
    connected: bool = False
    simple: bool = False
    euler_residual: int = 0
    checks: List[Tuple[str, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def first_failure(self) -> Optional[str]:
        for name, ok in self.checks:
            if not ok:
                return name
        return None

    def to_dict(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "edges": self.edge_count,
            "faces": self.face_count,
            "triangles": self.triangle_count,
            "hexagons": self.hexagon_count,
            "connected": self.connected,
            "simple": self.simple,
            "euler_residual": self.euler_residual,
            "checks": {name: ok for name, ok in self.checks},
            "passed": self.passed,
            "first_failure": self.first_failure,
        }


def validate(m: CombinatorialMap) -> ValidationReport:
    """Run every structural check in order and report all results."""
    sizes = m.face_sizes()
    report = ValidationReport(
        vertex_count=m.num_vertices,
        edge_count=m.num_edges,
        face_count=m.num_faces,
        triangle_count=sum(1 for size in sizes if size == 3),
        hexagon_count=sum(1 for size in sizes if size == 6),
    )

    involution_ok = all(m.involution[d] != d and m.involution[m.involution[d]] == d for d in range(m.num_darts))
    report.checks.append(("involution", involution_ok))
    report.checks.append(("3-regular", all(len(vertex) == 3 for vertex in m.vertices)))
    report.checks.append(("face sizes", all(size in (3, 6) for size in sizes)))
    report.checks.append(("four triangles", report.triangle_count == 4))

    graph = m.to_networkx()
    report.connected = m.num_vertices > 0 and nx.is_connected(graph)
    report.checks.append(("connected", report.connected))

    no_loops = all(m.vertex_of[d] != m.head(d) for d in range(m.num_darts))
    no_multi_edges = len(set(m.edges)) == len(m.edges)
    report.simple = no_loops and no_multi_edges
    report.checks.append(("simple", report.simple))

    report.euler_residual = m.num_vertices - m.num_edges + m.num_faces - 2
    report.checks.append(("euler", report.euler_residual == 0))

    report.checks.append(("2-connected", report.connected and m.num_vertices > 2 and nx.is_biconnected(graph)))
    return report
