"""
Signature arithmetic for trihexes.

A trihex is named by a signature ``(s, b, f)``: spine length, belt count and
offset. The same trihex reads differently depending on which of the three
spine directions is used to describe it, so signatures fall into classes of
one or three members. This module computes counts, those classes, mirror
images and the tightness criterion. Everything is pure integer arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import FrozenSet, Tuple

from trihex.utils.error_handler import ConsistencyError, SignatureError

_SIGNATURE_PATTERN = re.compile(r"([0-9]+),([0-9]+),([0-9]+)")

Triple = Tuple[int, int, int]


@dataclass(frozen=True, order=True)
class Signature:
    """Ordered triple ``(s, b, f)`` with ``0 <= f <= s``."""

    s: int
    b: int
    f: int

    def __post_init__(self) -> None:
        for name in ("s", "b", "f"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise SignatureError(f"{name} must be an integer, got {value!r}", **{name: value})
            if value < 0:
                raise SignatureError(f"{name} must be nonnegative, got {value}", **{name: value})
        if self.f > self.s:
            raise SignatureError(
                f"offset out of range: f={self.f} exceeds s={self.s} (need 0 <= f <= s)",
                s=self.s,
                f=self.f,
            )

    # ----------------------------------------------------------------- parsing
    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Parse the ``s,b,f`` text form (no spaces, base 10)."""
        match = _SIGNATURE_PATTERN.fullmatch(text)
        if match is None:
            raise SignatureError(f"malformed signature {text!r}: expected three integers as s,b,f", text=text)
        s, b, f = (int(group) for group in match.groups())
        return cls(s, b, f)

    @classmethod
    def normalized(cls, s: int, b: int, f: int) -> "Signature":
        """Build a signature, reducing the offset into ``[0, s]``."""
        if s < 0:
            raise SignatureError(f"s must be nonnegative, got {s}", s=s)
        return cls(s, b, f % (s + 1))

    # ----------------------------------------------------------------- derived
    @property
    def hexagons(self) -> int:
        return 2 * (self.s + 1) * (self.b + 1) - 2

    @property
    def vertices(self) -> int:
        return 4 * (self.s + 1) * (self.b + 1)

    @property
    def key(self) -> Tuple[int, int]:
        """Ordering key for canonical representatives."""
        return (self.b, self.f)

    @property
    def text(self) -> str:
        return f"{self.s},{self.b},{self.f}"

    def as_tuple(self) -> Triple:
        return (self.s, self.b, self.f)

    def __str__(self) -> str:
        return f"({self.s},{self.b},{self.f})"


@dataclass(frozen=True)
class EquivalenceDerivation:
    """Intermediate quantities of the two re-descriptions of a signature."""

    source: Signature
    h: int
    j2: int
    p2: int
    sig2: Signature
    j3: int
    p3: int
    sig3: Signature

    def to_dict(self) -> dict:
        return {
            "signature": self.source.text,
            "h": self.h,
            "j2": self.j2,
            "p2": self.p2,
            "sig2": self.sig2.text,
            "j3": self.j3,
            "p3": self.p3,
            "sig3": self.sig3.text,
        }


@dataclass(frozen=True)
class SignatureClass:
    """A set of signatures describing the same trihex (or its mirror image)."""

    members: FrozenSet[Signature]
    canonical: Signature
    chiral: bool

    @classmethod
    def of(cls, members, chiral: bool) -> "SignatureClass":
        frozen = frozenset(members)
        return cls(members=frozen, canonical=min(frozen, key=lambda sig: sig.key), chiral=chiral)

    @property
    def vertices(self) -> int:
        return self.canonical.vertices

    @property
    def hexagons(self) -> int:
        return self.canonical.hexagons

    def ordered(self) -> Tuple[Signature, ...]:
        """Members sorted by ``(b, f)``, smallest belt count first."""
        return tuple(sorted(self.members, key=lambda sig: sig.key))

    def table_row(self) -> Tuple[Signature, Signature, Signature]:
        """Three signatures as a table row; a one-member class repeats itself."""
        ordered = self.ordered()
        if len(ordered) == 1:
            return (ordered[0],) * 3
        return ordered[0], ordered[1], ordered[2]

    def to_dict(self) -> dict:
        return {
            "canonical": self.canonical.text,
            "members": [sig.text for sig in self.ordered()],
            "chiral": self.chiral,
        }

    def __contains__(self, sig: object) -> bool:
        return sig in self.members


# --------------------------------------------------------------------------
# Integer kernels. These work on bare tuples so the census sweep can run
# over hundreds of thousands of signatures without object overhead.
# --------------------------------------------------------------------------


def _solve_congruence(a: int, c: int, m: int) -> int:
    """Smallest ``p >= 1`` with ``p * a == c (mod m)``."""
    a %= m
    c %= m
    g = gcd(a, m)
    if c % g:
        raise ConsistencyError(
            f"offset congruence {a}*p = {c} (mod {m}) has no solution",
            a=a,
            c=c,
            m=m,
        )
    reduced = m // g
    if reduced == 1:
        return 1
    p = (c // g) * pow(a // g, -1, reduced) % reduced
    return p or reduced


def _redescribe(s1: int, b1: int, step: int, h: int) -> Tuple[int, int, int, int]:
    """Spine length, belt count and congruence solution along another direction."""
    period = s1 + 1
    j = period // gcd(step % period, period)
    s = j * (b1 + 1) - 1
    numerator = h - 2 * s
    denominator = 2 * s + 2
    if numerator < 0 or numerator % denominator:
        raise ConsistencyError(
            f"belt count ({h} - {2 * s}) / {denominator} is not a nonnegative integer",
            s1=s1,
            b1=b1,
            step=step,
        )
    b = numerator // denominator
    p = _solve_congruence(step, b + 1, period)
    return j, s, b, p


def _derive(s1: int, b1: int, f1: int) -> Tuple[int, int, Triple, int, int, Triple, int]:
    h = 2 * s1 * b1 + 2 * s1 + 2 * b1

    j2, s2, b2, p2 = _redescribe(s1, b1, f1, h)
    f2 = (s2 - p2 * (b1 + 1) - b2) % (s2 + 1)

    j3, s3, b3, p3 = _redescribe(s1, b1, f1 + b1 + 1, h)
    f3 = (s3 + 1 - p3 * (b1 + 1)) % (s3 + 1)

    return j2, p2, (s2, b2, f2), j3, p3, (s3, b3, f3), h


def _mirror_triple(s: int, b: int, f: int) -> Triple:
    return (s, b, (s - f - b) % (s + 1))


def _class_triples(s: int, b: int, f: int) -> Tuple[Triple, Triple, Triple]:
    _, _, sig2, _, _, sig3, _ = _derive(s, b, f)
    return (s, b, f), sig2, sig3


def _canonical_triple(s: int, b: int, f: int) -> Triple:
    return min(_class_triples(s, b, f), key=lambda t: (t[1], t[2]))


# --------------------------------------------------------------------------
# Public operations
# --------------------------------------------------------------------------


def counts(sig: Signature) -> Tuple[int, int]:
    """(hexagons, vertices) of the trihex named by ``sig``."""
    return sig.hexagons, sig.vertices


@lru_cache(maxsize=4096)
def equivalent_signatures(sig: Signature) -> Tuple[SignatureClass, EquivalenceDerivation]:
    """The class ``{sig, sig2, sig3}`` with every intermediate of its derivation."""
    j2, p2, t2, j3, p3, t3, h = _derive(sig.s, sig.b, sig.f)
    sig2 = Signature(*t2)
    sig3 = Signature(*t3)
    members = frozenset((sig, sig2, sig3))
    if len(members) == 2:
        raise ConsistencyError(
            f"signature {sig} produced a two-member class",
            members=sorted(m.text for m in members),
        )
    derivation = EquivalenceDerivation(
        source=sig, h=h, j2=j2, p2=p2, sig2=sig2, j3=j3, p3=p3, sig3=sig3
    )
    chiral = mirror_signature(sig) not in members
    return SignatureClass.of(members, chiral=chiral), derivation


def derivation_order(sig: Signature) -> Tuple[Signature, ...]:
    """``sig``, ``sig2``, ``sig3`` in the order derived, duplicates dropped."""
    _, derivation = equivalent_signatures(sig)
    ordered = []
    for member in (sig, derivation.sig2, derivation.sig3):
        if member not in ordered:
            ordered.append(member)
    return tuple(ordered)


def mirror_signature(sig: Signature) -> Signature:
    return Signature(*_mirror_triple(sig.s, sig.b, sig.f))


def merged_class(sig: Signature) -> SignatureClass:
    """Union of the class of ``sig`` and the class of its mirror image."""
    own, _ = equivalent_signatures(sig)
    mirrored, _ = equivalent_signatures(mirror_signature(sig))
    chiral = own.members.isdisjoint(mirrored.members)
    return SignatureClass.of(own.members | mirrored.members, chiral=chiral)


def is_tight(sig: Signature) -> bool:
    """True iff the trihex has no belts: ``b == 0`` and f, f+1, s+1 pairwise coprime."""
    period = sig.s + 1
    return sig.b == 0 and gcd(sig.f, period) == 1 and gcd(sig.f + 1, period) == 1


def all_members_beltless(sig: Signature) -> bool:
    """The second tightness criterion: every class member has ``b == 0``."""
    cls, _ = equivalent_signatures(sig)
    return all(member.b == 0 for member in cls.members)


def is_godseye(sig: Signature) -> bool:
    """Whether the class of ``sig`` contains ``(0, b, 0)`` with ``b > 0``."""
    cls, _ = equivalent_signatures(sig)
    return any(member.s == 0 and member.b > 0 for member in cls.members)
