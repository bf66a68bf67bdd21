import io
from fractions import Fraction

import pytest

from conftest import quotient_map
from tables import CENSUS_TABLE
from trihex.core.analysis import canonical_code
from trihex.core.census import (
    CensusRow,
    alpha,
    beta,
    census,
    conjecture_stats,
    factorize,
    sigma,
    signatures_for_vertices,
    write_csv,
)
from trihex.core.signature import Signature
from trihex.utils.error_handler import ConsistencyError, TrihexError, VertexCountError


def naive_divisor_sum(n):
    return sum(d for d in range(1, n + 1) if n % d == 0)


@pytest.mark.parametrize("v, expected", [(48, 28), (4, 1), (28, 8), (200, 93)])
def test_sigma(v, expected):
    assert sigma(v) == expected


@pytest.mark.parametrize("v", [0, -4, 6, 10, 3])
def test_sigma_rejects_bad_vertex_counts(v):
    with pytest.raises(VertexCountError):
        sigma(v)


def test_sigma_matches_brute_force():
    for quarter in range(1, 1001):
        assert sigma(4 * quarter) == naive_divisor_sum(quarter), quarter


def test_factorization_reconstructs_input():
    for n in (1, 2, 12, 97, 360, 1001, 65536, 999983, 1000000):
        factors = factorize(n)
        assert factors.value == n
        primes = [p for p, _ in factors.factors]
        assert primes == sorted(set(primes))
        assert factors.divisor_sum() == sum(factors.divisors())


def test_signatures_for_small_v():
    assert signatures_for_vertices(4) == [Signature(0, 0, 0)]
    assert [s.text for s in signatures_for_vertices(8)] == ["0,1,0", "1,0,0", "1,0,1"]
    assert [s.text for s in signatures_for_vertices(12)] == ["0,2,0", "2,0,0", "2,0,1", "2,0,2"]


def test_signature_count_equals_sigma():
    for v in range(4, 401, 4):
        listed = signatures_for_vertices(v)
        assert len(listed) == sigma(v)
        assert len(set(listed)) == len(listed)
        assert listed == sorted(listed)
        assert all(s.vertices == v for s in listed)


@pytest.mark.parametrize("v, expected", [(28, 4), (4, 1), (96, 20)])
def test_alpha(v, expected):
    assert alpha(v) == expected


@pytest.mark.parametrize("v, expected", [(24, 3), (4, 1), (192, 28)])
def test_beta(v, expected):
    assert beta(v) == expected


def test_census_table_reproduced():
    rows = census(4, 200)
    assert len(rows) == 50
    for row in rows:
        assert (row.alpha, row.ceil_sigma_3, row.beta, row.ceil_sigma_6) == CENSUS_TABLE[row.v], row.v


def test_census_small_range_and_empty_range():
    assert [row.alpha for row in census(4, 12)] == [1, 1, 2]
    assert census(5, 7) == []
    (row,) = census(200, 200)
    assert (row.alpha, row.beta) == (31, 17)


def test_census_rejects_start_below_four():
    with pytest.raises(TrihexError, match="below minimum"):
        census(3, 12)


def test_rows_respect_bounds():
    for row in census(4, 400):
        row.check()
        assert row.beta >= 1
        assert row.convex == row.beta - 1


def test_row_check_raises_on_broken_bounds():
    with pytest.raises(ConsistencyError):
        CensusRow(v=24, sigma=10, alpha=1, beta=1).check()


def test_csv_layout():
    buffer = io.StringIO()
    write_csv(census(4, 8), buffer)
    assert buffer.getvalue() == "v,sigma,alpha,beta,ceil_sigma_3,ceil_sigma_6\n4,1,1,1,1,1\n8,3,1,1,1,1\n"


def test_parallel_census_matches_serial():
    assert census(4, 120, workers=2) == census(4, 120)


def test_stats_single_tetrahedron():
    stats = conjecture_stats(4, 4)
    assert stats.alpha_gap_max == 0
    assert stats.beta_gap_max == 0
    assert stats.alpha_gap_exceed == Fraction(0)
    assert stats.to_dict()["alpha_gap_exceed"] == {"exact": "0/1", "decimal": "0.000"}
    assert stats.even_values == 1


def test_stats_even_denominator():
    stats = conjecture_stats(4, 40)
    assert stats.rows == 10
    assert stats.even_values == 19
    assert stats.alpha_gap_exceed_even * 19 == stats.alpha_gap_exceed * 10
    assert stats.beta_gap_exceed_even * 19 == stats.beta_gap_exceed * 10
    assert set(stats.to_dict()["beta_gap_exceed_even"]) == {"exact", "decimal"}


def test_stats_reject_empty_range():
    with pytest.raises(TrihexError):
        conjecture_stats(5, 7)


@pytest.mark.slow
def test_gap_statistics_from_200_to_4000():
    stats = conjecture_stats(200, 4000)
    assert stats.rows == 951
    assert stats.alpha_gap_max == 4
    assert stats.beta_gap_max == 22
    assert stats.alpha_gap_exceed == Fraction(16, 317)
    assert stats.beta_gap_exceed == Fraction(234, 317)
    assert stats.alpha_ratio_max == Fraction(15, 14)
    assert stats.beta_ratio_max == Fraction(162, 127)
    assert stats.even_values == 1901
    assert stats.alpha_gap_exceed_even == Fraction(48, 1901)
    assert stats.beta_gap_exceed_even == Fraction(702, 1901)


def test_ratio_maxima_are_attained_where_expected():
    assert Fraction(3 * alpha(364), sigma(364)) == Fraction(15, 14)
    assert Fraction(6 * beta(256), sigma(256)) == Fraction(162, 127)


def isomorphism_class_counts(v):
    """Alpha and beta counted from the maps themselves rather than the signature arithmetic."""
    codes = []
    for s in signatures_for_vertices(v):
        m = quotient_map(s.text)
        codes.append((canonical_code(m), canonical_code(m.mirrored())))
    return len({code for code, _ in codes}), len({min(pair) for pair in codes})


@pytest.mark.slow
@pytest.mark.parametrize("v", [244, 256])
def test_counts_agree_with_map_isomorphism(v):
    assert isomorphism_class_counts(v) == (alpha(v), beta(v))


def test_counts_agree_with_map_isomorphism_small():
    for v in range(4, 61, 4):
        assert isomorphism_class_counts(v) == (alpha(v), beta(v)), v
