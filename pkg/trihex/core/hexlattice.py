"""
Integer model of the hexagonal tiling and its rotocenter lattices.

Hexagon centres carry coordinates ``(q, r)``: ``q`` counts steps along the
SW to NE diagonal, ``r`` counts steps south within a column, so the NW to SE
step is ``(1, 1)``. A signature ``(s, b, f)`` determines the lattice ``L``
spanned by ``u = (0, s+1)`` and ``w = (b+1, -f)``. The half-turns about the
points of ``L`` generate the group ``{x -> +-x + t : t in 2L}`` and the
trihex is the quotient of the tiling by that group.

Tiling vertices are stored as the sorted triple of hexagons meeting there.
There are two shapes: kind 0 is ``{h, h+(1,0), h+(1,1)}`` (the right-hand
corner of ``h``) and kind 1 is ``{h, h+(0,1), h+(1,1)}`` (its lower-right
corner), ``h`` being the least hexagon of the triple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, Optional, Tuple

from trihex.core.signature import Signature
from trihex.utils.error_handler import LatticeError


@dataclass(frozen=True, order=True, slots=True)
class HexCoord:
    q: int
    r: int

    def __add__(self, other: "HexCoord") -> "HexCoord":
        return HexCoord(self.q + other.q, self.r + other.r)

    def __sub__(self, other: "HexCoord") -> "HexCoord":
        return HexCoord(self.q - other.q, self.r - other.r)

    def __neg__(self) -> "HexCoord":
        return HexCoord(-self.q, -self.r)

    def scaled(self, k: int) -> "HexCoord":
        return HexCoord(k * self.q, k * self.r)

    def rotated(self) -> "HexCoord":
        """A sixth of a turn counterclockwise about the origin hexagon."""
        return HexCoord(self.r, self.r - self.q)

    def mirrored(self) -> "HexCoord":
        """Reflection in the vertical line through the origin hexagon."""
        return HexCoord(-self.q, self.r - self.q)

    def __str__(self) -> str:
        return f"({self.q},{self.r})"


_ONE_ONE = HexCoord(1, 1)
_EAST = HexCoord(1, 0)
_SOUTH = HexCoord(0, 1)


@dataclass(frozen=True, order=True, slots=True)
class TilingVertex:
    """A honeycomb vertex as the sorted triple of its three hexagons."""

    hexes: Tuple[HexCoord, HexCoord, HexCoord]

    @classmethod
    def of(cls, *hexes: HexCoord) -> "TilingVertex":
        if len(hexes) != 3:
            raise LatticeError(f"a tiling vertex needs three hexagons, got {len(hexes)}")
        first, second, third = sorted(hexes)
        if third - first != _ONE_ONE or (second - first) not in (_EAST, _SOUTH):
            raise LatticeError(
                "hexagons do not meet at a common vertex",
                hexes=[str(h) for h in hexes],
            )
        return cls((first, second, third))

    @classmethod
    def at(cls, base: HexCoord, kind: int) -> "TilingVertex":
        middle = base + (_EAST if kind == 0 else _SOUTH)
        return cls((base, middle, base + _ONE_ONE))

    @property
    def base(self) -> HexCoord:
        return self.hexes[0]

    @property
    def kind(self) -> int:
        return 0 if self.hexes[1] - self.hexes[0] == _EAST else 1

    def neighbors(self) -> Tuple["TilingVertex", "TilingVertex", "TilingVertex"]:
        """The three adjacent vertices in counterclockwise order."""
        h = self.base
        if self.kind == 0:
            # directions 0, 120 and 240 degrees
            return (
                TilingVertex.at(h + _EAST, 1),
                TilingVertex.at(h - _SOUTH, 1),
                TilingVertex.at(h, 1),
            )
        # directions 60, 180 and 300 degrees
        return (
            TilingVertex.at(h, 0),
            TilingVertex.at(h - _EAST, 0),
            TilingVertex.at(h + _SOUTH, 0),
        )

    def transformed(self, sign: int, shift: HexCoord) -> "TilingVertex":
        """Image under ``x -> sign * x + shift``."""
        return TilingVertex.of(*(h.scaled(sign) + shift for h in self.hexes))

    def __str__(self) -> str:
        return "{" + " ".join(str(h) for h in self.hexes) + "}"


# --------------------------------------------------------------------------
# Lattices
# --------------------------------------------------------------------------


def _hermite(u: HexCoord, w: HexCoord) -> Tuple[int, int, int]:
    """
    Reduce a basis to ``{(columns, -shear), (0, period)}`` with
    ``columns, period > 0`` and ``0 <= shear < period``.
    """
    a, b = (u.q, u.r), (w.q, w.r)
    while b[0] != 0:
        k = a[0] // b[0]
        a, b = b, (a[0] - k * b[0], a[1] - k * b[1])
    if a[0] < 0:
        a = (-a[0], -a[1])
    if a[0] == 0 or b[1] == 0:
        raise LatticeError("basis vectors are linearly dependent", u=str(u), w=str(w))
    period = abs(b[1])
    return a[0], (-a[1]) % period, period


@dataclass(frozen=True)
class RotocenterLattice:
    """Lattice of half-turn centres; ``source`` is set when built from a signature."""

    u: HexCoord
    w: HexCoord
    source: Optional[Signature] = None

    @cached_property
    def _normal_form(self) -> Tuple[int, int, int]:
        return _hermite(self.u, self.w)

    @property
    def determinant(self) -> int:
        return abs(self.u.q * self.w.r - self.u.r * self.w.q)

    def contains(self, h: HexCoord) -> bool:
        columns, shear, period = self._normal_form
        if h.q % columns:
            return False
        return (h.r + (h.q // columns) * shear) % period == 0

    def reduce_doubled(self, h: HexCoord) -> HexCoord:
        """The representative of ``h + 2L`` inside the box ``[0, 2*columns) x [0, 2*period)``."""
        columns, shear, period = self._normal_form
        n = h.q // (2 * columns)
        return HexCoord(h.q - 2 * columns * n, (h.r + 2 * shear * n) % (2 * period))

    def canonical_hex(self, h: HexCoord) -> HexCoord:
        return min(self.reduce_doubled(h), self.reduce_doubled(-h))

    def vertex_transform(self, x: TilingVertex) -> Tuple[TilingVertex, int, HexCoord]:
        """
        Canonical representative ``c`` of the orbit of ``x`` together with a
        group element ``p -> sign * p + shift`` taking ``x`` to ``c``.
        """
        base, kind = x.base, x.kind
        direct = self.reduce_doubled(base)
        candidate = TilingVertex.at(direct, kind)
        # -x is a vertex of the other kind based at -base - (1,1)
        flipped_base = -base - _ONE_ONE
        flipped = self.reduce_doubled(flipped_base)
        opposite = TilingVertex.at(flipped, 1 - kind)
        if candidate <= opposite:
            return candidate, 1, direct - base
        return opposite, -1, flipped - flipped_base

    def canonical_vertex(self, x: TilingVertex) -> TilingVertex:
        return self.vertex_transform(x)[0]

    # ---------------------------------------------------------- enumeration
    def fundamental_box(self) -> Iterator[HexCoord]:
        columns, _, period = self._normal_form
        for q in range(2 * columns):
            for r in range(2 * period):
                yield HexCoord(q, r)

    def hex_orbits(self) -> List[HexCoord]:
        return sorted({self.canonical_hex(h) for h in self.fundamental_box()})

    def fixed_cosets(self) -> List[HexCoord]:
        """Residues of ``L`` modulo ``2L``: hexagons fixed by some half-turn."""
        return [h for h in self.fundamental_box() if self.contains(h)]

    def vertex_orbits(self) -> List[TilingVertex]:
        return sorted(
            {self.canonical_vertex(TilingVertex.at(h, kind)) for h in self.fundamental_box() for kind in (0, 1)}
        )

    # --------------------------------------------------------- symmetries
    def rotated(self, k: int = 1) -> "RotocenterLattice":
        """The lattice turned by ``k`` sixths of a full turn counterclockwise."""
        u, w = self.u, self.w
        for _ in range(k % 6):
            u, w = u.rotated(), w.rotated()
        return RotocenterLattice(u, w)

    def mirrored(self) -> "RotocenterLattice":
        return RotocenterLattice(self.u.mirrored(), self.w.mirrored())

    def signature(self) -> Signature:
        """Signature read back from the normal form of the basis."""
        columns, shear, period = self._normal_form
        return Signature(period - 1, columns - 1, shear)

    # --------------------------------------------------------------- debug
    def dump(self) -> str:
        return f"u={self.u} w={self.w}"

    def orbit_table(self) -> str:
        lines = ["q,r,canonical_q,canonical_r,fixed"]
        for h in self.fundamental_box():
            c = self.canonical_hex(h)
            lines.append(f"{h.q},{h.r},{c.q},{c.r},{int(self.contains(h))}")
        return "\n".join(lines) + "\n"


def rotocenter_lattice(sig: Signature) -> RotocenterLattice:
    return RotocenterLattice(HexCoord(0, sig.s + 1), HexCoord(sig.b + 1, -sig.f), source=sig)


def is_rotocenter(lattice: RotocenterLattice, h: HexCoord) -> bool:
    return lattice.contains(h)


def canonical_hex_orbit(lattice: RotocenterLattice, h: HexCoord) -> HexCoord:
    return lattice.canonical_hex(h)


def canonical_vertex_orbit(lattice: RotocenterLattice, x: TilingVertex) -> TilingVertex:
    return lattice.canonical_vertex(x)


def lattice_signatures(sig: Signature) -> frozenset:
    """Signatures read off the lattice of ``sig`` turned through 0, 60 and 120 degrees."""
    lattice = rotocenter_lattice(sig)
    return frozenset(lattice.rotated(k).signature() for k in range(3))
