"""
Building trihexes from signatures.

``build_by_quotient`` folds the hexagonal tiling by the half-turn group of
the rotocenter lattice. ``build_by_spines`` glues two spines and ``b`` belts
along their boundary cycles. The two are independent constructions of the
same map and are cross-checked in the test suite.
"""

from __future__ import annotations

from typing import Callable, Dict, List

from trihex.core.hexlattice import rotocenter_lattice
from trihex.core.signature import Signature
from trihex.core.trihex_map import CombinatorialMap
from trihex.utils.error_handler import ConsistencyError, SignatureError
from trihex.utils.logger import get_logger

logger = get_logger("trihex.construction")

METHODS = ("quotient", "spines")


def build_by_quotient(sig: Signature) -> CombinatorialMap:
    """
    Vertices are canonical vertex orbits, dart ``3x + k`` leaves vertex ``x``
    towards its ``k``-th neighbour counterclockwise in the tiling.
    """
    lattice = rotocenter_lattice(sig)
    hex_orbits = lattice.hex_orbits()
    if len(hex_orbits) != sig.hexagons + 4:
        raise ConsistencyError(
            f"{len(hex_orbits)} hexagon orbits for {sig}, expected {sig.hexagons + 4}",
            signature=sig.text,
        )
    orbits = lattice.vertex_orbits()
    if len(orbits) != sig.vertices:
        raise ConsistencyError(
            f"{len(orbits)} vertex orbits for {sig}, expected {sig.vertices}",
            signature=sig.text,
        )
    index = {vertex: i for i, vertex in enumerate(orbits)}

    involution = [0] * (3 * len(orbits))
    rotation = [0] * (3 * len(orbits))
    for i, vertex in enumerate(orbits):
        for k, neighbor in enumerate(vertex.neighbors()):
            # g maps the neighbour onto its representative; g(vertex) is then
            # the neighbour of that representative along the same edge.
            target, sign, shift = lattice.vertex_transform(neighbor)
            image = vertex.transformed(sign, shift)
            try:
                back = target.neighbors().index(image)
            except ValueError:
                raise ConsistencyError(
                    f"edge {vertex} -> {neighbor} has no partner in the quotient",
                    signature=sig.text,
                ) from None
            involution[3 * i + k] = 3 * index[target] + back
            rotation[3 * i + k] = 3 * i + (k + 1) % 3

    result = CombinatorialMap(tuple(involution), tuple(rotation))
    logger.debug("Built by quotient", signature=sig.text, vertices=result.num_vertices, faces=result.num_faces)
    return result


# --------------------------------------------------------------------------
# Spine and belt gluing
#
# Seams are the boundary cycles between consecutive layers: seam 0 borders
# the first spine, seam b borders the second, and belt k sits between seams
# k-1 and k. Each seam has 4s+4 vertices at positions t (mod 4s+4).
# A spine is laid out with local positions i on its own boundary, counted
# counterclockwise from the tip of the head triangle.
# --------------------------------------------------------------------------


def _spine_faces(s: int) -> List[List[int]]:
    """Faces of a spine of length ``s`` as counterclockwise cycles of local positions."""
    faces = [[0, 1, -1]]
    for r in range(1, s + 1):
        faces.append([-2 * r, -2 * r + 1, 2 * r - 1, 2 * r, 2 * r + 1, -2 * r - 1])
    faces.append([2 * s + 2, 2 * s + 3, 2 * s + 1])
    return faces


def _belt_faces(k: int, s: int) -> List[List[tuple]]:
    """
    Hexagons of belt ``k`` as ``(seam, position)`` cycles. Hexagon ``r``
    touches positions ``2r-1..2r+1`` of seam ``k`` and ``2r-2..2r`` of seam ``k-1``.
    """
    faces = []
    for r in range(2 * s + 2):
        faces.append(
            [
                (k, 2 * r),
                (k, 2 * r - 1),
                (k - 1, 2 * r - 2),
                (k - 1, 2 * r - 1),
                (k - 1, 2 * r),
                (k, 2 * r + 1),
            ]
        )
    return faces


def build_by_spines(sig: Signature) -> CombinatorialMap:
    """
    Glue the first spine onto seam 0 reading its boundary clockwise, insert
    ``b`` belts, then glue the second spine onto seam ``b`` shifted by the
    offset: its local position ``j`` lands on ``j - 2f - 1``.
    """
    s, b, f = sig.s, sig.b, sig.f
    boundary = 4 * s + 4

    def seam(k: int, t: int) -> int:
        return k * boundary + t % boundary

    faces: List[List[int]] = []
    for cycle in _spine_faces(s):
        faces.append([seam(0, -i) for i in cycle])
    for k in range(1, b + 1):
        for cycle in _belt_faces(k, s):
            faces.append([seam(layer, t) for layer, t in cycle])
    for cycle in _spine_faces(s):
        faces.append([seam(b, j - 2 * f - 1) for j in cycle])

    result = CombinatorialMap.from_face_cycles(faces)
    if result.num_vertices != sig.vertices:
        raise ConsistencyError(
            f"spine gluing produced {result.num_vertices} vertices for {sig}, expected {sig.vertices}",
            signature=sig.text,
        )
    logger.debug("Built by spines", signature=sig.text, vertices=result.num_vertices, faces=result.num_faces)
    return result


_BUILDERS: Dict[str, Callable[[Signature], CombinatorialMap]] = {"quotient": build_by_quotient, "spines": build_by_spines}


def build(sig: Signature, method: str = "quotient") -> CombinatorialMap:
    try:
        builder = _BUILDERS[method]
    except KeyError:
        raise SignatureError(f"unknown construction method {method!r}; choose from {', '.join(METHODS)}") from None
    return builder(sig)
