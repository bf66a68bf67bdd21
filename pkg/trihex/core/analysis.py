"""
Structure recovery on built trihexes.

Belts, spines and pseudo-roads are all chains of faces crossed through
opposite edges. In a hexagon the edge opposite to the one entered is three
steps further along the face cycle; triangles have no opposite edge, so
chains stop there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from trihex.core.census import signatures_for_vertices
from trihex.core.construction import build_by_quotient
from trihex.core.signature import Signature, SignatureClass, equivalent_signatures
from trihex.core.trihex_map import CombinatorialMap
from trihex.utils.error_handler import ConsistencyError
from trihex.utils.logger import get_logger

logger = get_logger("trihex.analysis")


class IsomorphismRelation(Enum):
    ORIENTATION_PRESERVING = "orientation_preserving"
    MIRROR_ONLY = "mirror_only"
    NONE = "none"


class ConnectivityGrade(Enum):
    TWO_CONNECTED = "two_connected"
    THREE_CONNECTED = "three_connected"


class Chirality(Enum):
    AS_BUILT = "as_built"
    MIRRORED = "mirrored"


def _canonical_cycle(faces: Sequence[int]) -> Tuple[int, ...]:
    """Least rotation of the sequence or of its reversal."""
    n = len(faces)
    candidates = []
    for sequence in (list(faces), list(reversed(faces))):
        for shift in range(n):
            candidates.append(tuple(sequence[shift:] + sequence[:shift]))
    return min(candidates)


@dataclass(frozen=True)
class Belt:
    faces: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class PseudoRoad:
    """Triangle ``source`` to triangle ``target`` through ``hexagons``."""

    source: int
    target: int
    hexagons: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.hexagons)

    def key(self) -> Tuple[int, ...]:
        forward = (self.source, *self.hexagons, self.target)
        return min(forward, tuple(reversed(forward)))


@dataclass(frozen=True)
class Spine:
    head: int
    tail: int
    hexagons: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.hexagons)


@dataclass
class CurvatureGraph:
    triangles: Tuple[int, ...]
    adjacency: Tuple[Tuple[bool, ...], ...]
    witnesses: Dict[Tuple[int, int], PseudoRoad] = field(default_factory=dict)
    road_counts: Dict[Tuple[int, int], int] = field(default_factory=dict)

    @property
    def edge_count(self) -> int:
        return len(self.witnesses)

    @property
    def is_complete(self) -> bool:
        n = len(self.triangles)
        return self.edge_count == n * (n - 1) // 2

    def to_dict(self) -> dict:
        return {
            "triangles": list(self.triangles),
            "adjacency": [[int(cell) for cell in row] for row in self.adjacency],
            "edges": [
                {
                    "pair": list(pair),
                    "roads": self.road_counts[pair],
                    "witness": list(self.witnesses[pair].hexagons),
                }
                for pair in sorted(self.witnesses)
            ],
            "complete": self.is_complete,
        }


# --------------------------------------------------------------------------
# Opposite-edge traces
# --------------------------------------------------------------------------


def _opposite(m: CombinatorialMap, dart: int) -> int:
    step = m.face_permutation
    return step[step[step[dart]]]


def _trace_from_triangle(m: CombinatorialMap, dart: int) -> Tuple[Tuple[int, ...], Optional[int]]:
    """
    Cross the edge of ``dart`` out of its triangle and keep leaving each
    hexagon through the opposite edge. Returns the hexagons passed and the
    triangle reached, or ``None`` when the chain repeats a hexagon.
    """
    hexagons: List[int] = []
    seen = set()
    current = dart
    for _ in range(m.num_faces + 1):
        entry = m.involution[current]
        face = m.face_of[entry]
        if len(m.faces[face]) == 3:
            return tuple(hexagons), face
        if face in seen:
            return tuple(hexagons), None
        seen.add(face)
        hexagons.append(face)
        current = _opposite(m, entry)
    return tuple(hexagons), None


def _roads(m: CombinatorialMap) -> List[PseudoRoad]:
    roads: Dict[Tuple[int, ...], PseudoRoad] = {}
    for triangle in m.triangles():
        for dart in m.faces[triangle]:
            hexagons, target = _trace_from_triangle(m, dart)
            if target is None:
                continue
            road = PseudoRoad(triangle, target, hexagons)
            roads.setdefault(road.key(), road)
    return [roads[key] for key in sorted(roads)]


def find_belts(m: CombinatorialMap) -> List[Belt]:
    """Every closed opposite-edge circuit of distinct hexagons, deduplicated."""
    hexagonal = set(m.hexagons())
    visited = set()
    belts = set()
    for face in sorted(hexagonal):
        for start in m.faces[face]:
            if start in visited:
                continue
            faces: List[int] = []
            entry = start
            closed = False
            for _ in range(m.num_darts):
                visited.add(entry)
                faces.append(m.face_of[entry])
                following = m.involution[_opposite(m, entry)]
                if m.face_of[following] not in hexagonal:
                    break
                if following == start:
                    closed = True
                    break
                entry = following
            if closed and len(faces) >= 2 and len(set(faces)) == len(faces):
                belts.add(_canonical_cycle(faces))
    return [Belt(faces) for faces in sorted(belts)]


def find_spines(m: CombinatorialMap) -> List[Spine]:
    """Triangle-to-triangle chains; each triangle anchors three of them."""
    spines = []
    for road in _roads(m):
        spines.append(Spine(head=road.source, tail=road.target, hexagons=road.hexagons))
    return spines


def curvature_graph(m: CombinatorialMap) -> CurvatureGraph:
    triangles = m.triangles()
    position = {face: i for i, face in enumerate(triangles)}
    witnesses: Dict[Tuple[int, int], PseudoRoad] = {}
    road_counts: Dict[Tuple[int, int], int] = {}
    for road in _roads(m):
        if road.source == road.target:
            continue
        pair = (min(road.source, road.target), max(road.source, road.target))
        road_counts[pair] = road_counts.get(pair, 0) + 1
        best = witnesses.get(pair)
        if best is None or (road.length, road.key()) < (best.length, best.key()):
            witnesses[pair] = road
    size = len(triangles)
    adjacency = [[False] * size for _ in range(size)]
    for c, d in witnesses:
        adjacency[position[c]][position[d]] = adjacency[position[d]][position[c]] = True
    return CurvatureGraph(
        triangles=triangles,
        adjacency=tuple(tuple(row) for row in adjacency),
        witnesses=witnesses,
        road_counts=road_counts,
    )


# --------------------------------------------------------------------------
# Isomorphism
# --------------------------------------------------------------------------


def _traversal_code(m: CombinatorialMap, root: int, target: Optional[Tuple[int, ...]] = None) -> Optional[Tuple[int, ...]]:
    """
    Breadth-first relabelling from ``root`` over (involution, rotation).
    With ``target`` given, stops as soon as the code diverges from it.
    """
    n = m.num_darts
    label = [-1] * n
    label[root] = 0
    order = [root]
    code: List[int] = []
    cursor = 0
    while cursor < len(order):
        dart = order[cursor]
        cursor += 1
        for following in (m.involution[dart], m.rotation[dart]):
            if label[following] < 0:
                label[following] = len(order)
                order.append(following)
            code.append(label[following])
            if target is not None and code[-1] != target[len(code) - 1]:
                return None
    if len(order) != n:
        return None
    return tuple(code)


@lru_cache(maxsize=512)
def canonical_code(m: CombinatorialMap) -> Tuple[int, ...]:
    """Least traversal code over all roots; equal codes mean isomorphic maps."""
    codes = (_traversal_code(m, root) for root in range(m.num_darts))
    return min(code for code in codes if code is not None)


def _matches(m1: CombinatorialMap, m2: CombinatorialMap) -> bool:
    if m1.num_darts != m2.num_darts or sorted(m1.face_sizes()) != sorted(m2.face_sizes()):
        return False
    if m1.num_darts == 0:
        return True
    target = _traversal_code(m1, 0)
    if target is None:
        return False
    return any(_traversal_code(m2, root, target) is not None for root in range(m2.num_darts))


def is_isomorphic(m1: CombinatorialMap, m2: CombinatorialMap) -> IsomorphismRelation:
    if _matches(m1, m2):
        return IsomorphismRelation.ORIENTATION_PRESERVING
    if _matches(m1, m2.mirrored()):
        return IsomorphismRelation.MIRROR_ONLY
    return IsomorphismRelation.NONE


# --------------------------------------------------------------------------
# Connectivity and identification
# --------------------------------------------------------------------------


def connectivity_grade(m: CombinatorialMap) -> ConnectivityGrade:
    if nx.node_connectivity(m.to_networkx()) >= 3:
        return ConnectivityGrade.THREE_CONNECTED
    return ConnectivityGrade.TWO_CONNECTED


@lru_cache(maxsize=256)
def _reference_code(canonical: Signature) -> Tuple[int, ...]:
    return canonical_code(build_by_quotient(canonical))


def identify_signature(m: CombinatorialMap) -> Tuple[SignatureClass, Chirality]:
    """The class whose quotient build matches ``m``, and whether it matched mirrored."""
    v = m.num_vertices
    classes: Dict[Signature, SignatureClass] = {}
    for sig in signatures_for_vertices(v):
        cls, _ = equivalent_signatures(sig)
        classes.setdefault(cls.canonical, cls)

    own = canonical_code(m)
    flipped = canonical_code(m.mirrored())
    direct = [cls for rep, cls in classes.items() if _reference_code(rep) == own]
    if len(direct) > 1:
        raise ConsistencyError(
            f"map matches {len(direct)} classes at v={v}",
            classes=[cls.canonical.text for cls in direct],
        )
    if direct:
        return direct[0], Chirality.AS_BUILT

    mirrored = [cls for rep, cls in classes.items() if _reference_code(rep) == flipped]
    if len(mirrored) == 1:
        return mirrored[0], Chirality.MIRRORED
    logger.error("Identification failed", vertices=v, mirrored_matches=len(mirrored))
    raise ConsistencyError(f"no signature class matches the map (v={v})", vertices=v)
