"""Shared fixtures for the trihex test suite."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, List

import pytest

from trihex.core.census import signatures_for_vertices
from trihex.core.construction import build_by_quotient, build_by_spines
from trihex.core.signature import Signature
from trihex.core.trihex_map import CombinatorialMap


def sig(text: str) -> Signature:
    return Signature.parse(text)


@lru_cache(maxsize=None)
def quotient_map(text: str) -> CombinatorialMap:
    return build_by_quotient(sig(text))


@lru_cache(maxsize=None)
def spine_map(text: str) -> CombinatorialMap:
    return build_by_spines(sig(text))


def signatures_up_to(vmax: int) -> List[Signature]:
    result: List[Signature] = []
    for v in range(4, vmax + 1, 4):
        result.extend(signatures_for_vertices(v))
    return result


@pytest.fixture
def build_quotient():
    """Cached quotient builds keyed by signature text."""
    return quotient_map


@pytest.fixture
def build_spines():
    return spine_map


@pytest.fixture
def tetrahedron() -> CombinatorialMap:
    return quotient_map("0,0,0")


@pytest.fixture
def run_cli(capsys) -> Iterator:
    """Invoke the CLI in-process and return (exit code, stdout, stderr)."""
    from trihex.main import main

    def invoke(*argv: str):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    yield invoke
