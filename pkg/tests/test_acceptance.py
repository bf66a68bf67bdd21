"""End-to-end checks of the census tables and structural properties."""

import pytest

from conftest import quotient_map, signatures_up_to, spine_map
from trihex.core.analysis import (
    Chirality,
    IsomorphismRelation,
    curvature_graph,
    find_belts,
    identify_signature,
    is_isomorphic,
)
from trihex.core.census import alpha, beta, classes_at, signatures_for_vertices
from trihex.core.signature import (
    all_members_beltless,
    equivalent_signatures,
    is_tight,
    merged_class,
    mirror_signature,
)
from trihex.core.trihex_map import validate
from trihex.core.verification import run_verification


def test_classification_matches_isomorphism_at_fixed_size():
    for v in range(4, 49, 4):
        listed = signatures_for_vertices(v)
        for i, first in enumerate(listed):
            cls, _ = equivalent_signatures(first)
            mirror_members = equivalent_signatures(mirror_signature(first))[0].members
            for second in listed[i:]:
                relation = is_isomorphic(quotient_map(first.text), quotient_map(second.text))
                if second in cls:
                    expected = IsomorphismRelation.ORIENTATION_PRESERVING
                elif second in mirror_members:
                    expected = IsomorphismRelation.MIRROR_ONLY
                else:
                    expected = IsomorphismRelation.NONE
                assert relation is expected, (first, second)

        chiral = sum(1 for cls in classes_at(v) if merged_class(cls.canonical).chiral) // 2
        assert chiral == alpha(v) - beta(v), v


def test_both_constructions_identify_as_built():
    for s in signatures_up_to(48):
        for m in (quotient_map(s.text), spine_map(s.text)):
            assert validate(m).passed
            cls, chirality = identify_signature(m)
            assert s in cls, s
            assert chirality is Chirality.AS_BUILT


def test_verification_passes_on_small_signatures():
    summary = run_verification(32)
    assert summary.passed, summary.failures
    assert summary.checks["chirality"] == 8
    assert summary.signatures == sum(len(signatures_for_vertices(v)) for v in range(4, 33, 4))


@pytest.mark.slow
def test_tightness_triple_agreement_up_to_200():
    for s in signatures_up_to(200):
        belt_free = not find_belts(quotient_map(s.text))
        assert is_tight(s) == all_members_beltless(s) == belt_free, s
        if belt_free:
            assert curvature_graph(quotient_map(s.text)).is_complete, s


@pytest.mark.slow
def test_constructors_validate_and_agree_up_to_96():
    for s in signatures_up_to(96):
        quotient, spines = quotient_map(s.text), spine_map(s.text)
        assert validate(quotient).passed and validate(spines).passed, s
        assert is_isomorphic(quotient, spines) is IsomorphismRelation.ORIENTATION_PRESERVING, s
