"""
Counting trihexes by vertex count.

``sigma(v)`` counts signatures, ``alpha(v)`` counts equivalence classes and
``beta(v)`` counts isomorphism classes of the underlying graphs (a chiral
pair collapses to one graph). The sweep helpers produce the census table and
the gap statistics over ranges of ``v``.
"""

from __future__ import annotations

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Dict, Iterable, List, Sequence, TextIO, Tuple

import numpy as np

from trihex.core.signature import (
    Signature,
    SignatureClass,
    Triple,
    _canonical_triple,
    _mirror_triple,
    equivalent_signatures,
)
from trihex.utils.error_handler import ConsistencyError, ErrorCategory, TrihexError, VertexCountError
from trihex.utils.logger import get_logger, log_execution_time

logger = get_logger("trihex.census")

CSV_HEADER = ("v", "sigma", "alpha", "beta", "ceil_sigma_3", "ceil_sigma_6")


# ---------------------------------------------------------------- factoring
@lru_cache(maxsize=8)
def _primes_up_to(limit: int) -> Tuple[int, ...]:
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for candidate in range(2, isqrt(limit) + 1):
        if sieve[candidate]:
            sieve[candidate * candidate :: candidate] = False
    return tuple(int(p) for p in np.flatnonzero(sieve))


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``((p1, m1), (p2, m2), ...)`` with increasing primes."""

    factors: Tuple[Tuple[int, int], ...]

    @property
    def value(self) -> int:
        result = 1
        for prime, exponent in self.factors:
            result *= prime**exponent
        return result

    def divisor_sum(self) -> int:
        total = 1
        for prime, exponent in self.factors:
            total *= (prime ** (exponent + 1) - 1) // (prime - 1)
        return total

    def divisors(self) -> List[int]:
        divisors = [1]
        for prime, exponent in self.factors:
            divisors = [d * prime**k for d in divisors for k in range(exponent + 1)]
        return sorted(divisors)


def factorize(n: int) -> Factorization:
    """Trial division by a sieved prime table."""
    if n < 1:
        raise TrihexError(f"cannot factor {n}", category=ErrorCategory.VALIDATION, details={"n": n})
    # Round the table size up so nearby calls share one cached sieve.
    limit = max(1024, 1 << (isqrt(n) + 1).bit_length())
    factors = []
    remaining = n
    for prime in _primes_up_to(limit):
        if prime * prime > remaining:
            break
        if remaining % prime == 0:
            exponent = 0
            while remaining % prime == 0:
                remaining //= prime
                exponent += 1
            factors.append((prime, exponent))
    if remaining > 1:
        factors.append((remaining, 1))
    return Factorization(tuple(factors))


def _check_vertex_count(v: int) -> int:
    if isinstance(v, bool) or not isinstance(v, int) or v <= 0 or v % 4:
        raise VertexCountError(v)
    return v // 4


# --------------------------------------------------------------- operations
def sigma(v: int) -> int:
    """Number of signatures with ``v`` vertices: the divisor sum of ``v / 4``."""
    return factorize(_check_vertex_count(v)).divisor_sum()


def _triples_for(v: int) -> List[Triple]:
    quarter = _check_vertex_count(v)
    triples = []
    for divisor in factorize(quarter).divisors():
        s, b = divisor - 1, quarter // divisor - 1
        triples.extend((s, b, f) for f in range(s + 1))
    return triples


def signatures_for_vertices(v: int) -> List[Signature]:
    """All signatures with ``v`` vertices in ``(s, b, f)`` order."""
    return [Signature(*triple) for triple in _triples_for(v)]


def _class_keys(v: int) -> Tuple[int, int]:
    canonical: Dict[Triple, Triple] = {}
    for triple in _triples_for(v):
        canonical[triple] = _canonical_triple(*triple)
    merged = set()
    for triple, rep in canonical.items():
        mirror_rep = canonical[_mirror_triple(*triple)]
        merged.add(min(rep, mirror_rep, key=lambda t: (t[1], t[2])))
    return len(set(canonical.values())), len(merged)


def alpha(v: int) -> int:
    """Number of equivalence classes at ``v`` vertices."""
    return _class_keys(v)[0]


def beta(v: int) -> int:
    """Number of graph isomorphism classes at ``v`` vertices."""
    return _class_keys(v)[1]


def classes_at(v: int) -> List[SignatureClass]:
    """Every class at ``v`` vertices, ordered by canonical ``(b, f)``."""
    seen: Dict[Signature, SignatureClass] = {}
    for sig in signatures_for_vertices(v):
        cls, _ = equivalent_signatures(sig)
        seen.setdefault(cls.canonical, cls)
    return [seen[key] for key in sorted(seen, key=lambda sig: sig.key)]


# --------------------------------------------------------------- census rows
@dataclass(frozen=True)
class CensusRow:
    v: int
    sigma: int
    alpha: int
    beta: int

    @property
    def ceil_sigma_3(self) -> int:
        return -(-self.sigma // 3)

    @property
    def ceil_sigma_6(self) -> int:
        return -(-self.sigma // 6)

    @property
    def alpha_gap(self) -> int:
        return self.alpha - self.ceil_sigma_3

    @property
    def beta_gap(self) -> int:
        return self.beta - self.ceil_sigma_6

    @property
    def chiral_pairs(self) -> int:
        return self.alpha - self.beta

    @property
    def convex(self) -> int:
        """Trihexes at ``v`` that are convex polyhedra: all but the godseye."""
        return self.beta - 1

    def check(self) -> None:
        """Raise if the row breaks the counting bounds."""
        problems = []
        if not self.ceil_sigma_3 <= self.alpha <= self.sigma:
            problems.append("ceil(sigma/3) <= alpha <= sigma")
        if not self.ceil_sigma_6 <= self.beta <= self.sigma:
            problems.append("ceil(sigma/6) <= beta <= sigma")
        if not self.beta <= self.alpha <= 2 * self.beta:
            problems.append("beta <= alpha <= 2*beta")
        if problems:
            raise ConsistencyError(f"census row v={self.v} violates {', '.join(problems)}", v=self.v)

    def as_csv_fields(self) -> Tuple[int, ...]:
        return (self.v, self.sigma, self.alpha, self.beta, self.ceil_sigma_3, self.ceil_sigma_6)


def census_row(v: int) -> CensusRow:
    a, b = _class_keys(v)
    row = CensusRow(v=v, sigma=sigma(v), alpha=a, beta=b)
    row.check()
    return row


@log_execution_time(logger)
def census(v_min: int, v_max: int, workers: int = 1) -> List[CensusRow]:
    """One row per multiple of 4 in ``[v_min, v_max]``, ascending."""
    if v_min < 4:
        raise TrihexError(
            f"vertex range below minimum: v_min={v_min} (need v_min >= 4)",
            category=ErrorCategory.VALIDATION,
            details={"v_min": v_min},
        )
    start = v_min + (-v_min) % 4
    values = list(range(start, v_max + 1, 4))
    if workers > 1 and len(values) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(census_row, values, chunksize=8))
    else:
        rows = [census_row(v) for v in values]
    logger.info("Census computed", v_min=v_min, v_max=v_max, rows=len(rows), workers=workers)
    return rows


def write_csv(rows: Iterable[CensusRow], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.as_csv_fields())


# ---------------------------------------------------------------- statistics
@dataclass(frozen=True)
class ConjectureStats:
    """Gap and ratio statistics of alpha and beta against their lower bounds.

    The exceedance fractions divide by the multiples of 4 in range
    (``rows``). The ``_even`` variants divide the same counts by every even
    ``v`` between the first and last row.
    """

    v_min: int
    v_max: int
    rows: int
    alpha_gap_max: int
    alpha_gap_exceed: Fraction
    beta_gap_max: int
    beta_gap_exceed: Fraction
    alpha_ratio_max: Fraction
    beta_ratio_max: Fraction
    even_values: int
    alpha_gap_exceed_even: Fraction
    beta_gap_exceed_even: Fraction

    def to_dict(self, places: int = 3) -> dict:
        def render(value: Fraction) -> dict:
            return {"exact": f"{value.numerator}/{value.denominator}", "decimal": f"{float(value):.{places}f}"}

        return {
            "v_min": self.v_min,
            "v_max": self.v_max,
            "rows": self.rows,
            "alpha_gap_max": self.alpha_gap_max,
            "alpha_gap_exceed": render(self.alpha_gap_exceed),
            "beta_gap_max": self.beta_gap_max,
            "beta_gap_exceed": render(self.beta_gap_exceed),
            "alpha_ratio_max": render(self.alpha_ratio_max),
            "beta_ratio_max": render(self.beta_ratio_max),
            "even_values": self.even_values,
            "alpha_gap_exceed_even": render(self.alpha_gap_exceed_even),
            "beta_gap_exceed_even": render(self.beta_gap_exceed_even),
        }


def summarize(rows: Sequence[CensusRow]) -> ConjectureStats:
    if not rows:
        raise TrihexError("statistics need at least one multiple of 4 in range", category=ErrorCategory.VALIDATION)
    n = len(rows)
    evens = (rows[-1].v - rows[0].v) // 2 + 1
    alpha_exceed = sum(1 for row in rows if row.alpha_gap > 1)
    beta_exceed = sum(1 for row in rows if row.beta_gap > 1)
    return ConjectureStats(
        v_min=rows[0].v,
        v_max=rows[-1].v,
        rows=n,
        alpha_gap_max=max(row.alpha_gap for row in rows),
        alpha_gap_exceed=Fraction(alpha_exceed, n),
        beta_gap_max=max(row.beta_gap for row in rows),
        beta_gap_exceed=Fraction(beta_exceed, n),
        alpha_ratio_max=max(Fraction(3 * row.alpha, row.sigma) for row in rows),
        beta_ratio_max=max(Fraction(6 * row.beta, row.sigma) for row in rows),
        even_values=evens,
        alpha_gap_exceed_even=Fraction(alpha_exceed, evens),
        beta_gap_exceed_even=Fraction(beta_exceed, evens),
    )


def conjecture_stats(v_min: int, v_max: int, workers: int = 1) -> ConjectureStats:
    """Statistics over the multiples of 4 in ``[v_min, v_max]`` (both ends inclusive)."""
    return summarize(census(v_min, v_max, workers=workers))
