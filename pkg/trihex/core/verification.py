"""
Cross-checks between the arithmetic, the two constructors and the analysis
routines, run over every signature up to a vertex bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from trihex.core.analysis import (
    ConnectivityGrade,
    IsomorphismRelation,
    connectivity_grade,
    find_belts,
    find_spines,
    is_isomorphic,
)
from trihex.core.census import census_row, classes_at, signatures_for_vertices
from trihex.core.construction import build_by_quotient, build_by_spines
from trihex.core.hexlattice import lattice_signatures, rotocenter_lattice
from trihex.core.signature import (
    Signature,
    all_members_beltless,
    equivalent_signatures,
    is_godseye,
    is_tight,
    mirror_signature,
)
from trihex.core.trihex_map import CombinatorialMap, validate
from trihex.monitoring.run_monitor import RunMonitor
from trihex.utils.error_handler import ConsistencyError, ErrorTracker
from trihex.utils.logger import get_logger, log_execution_time

logger = get_logger("trihex.verify")


@dataclass
class VerificationSummary:
    vmax: int
    signatures: int = 0
    checks: Dict[str, int] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "vmax": self.vmax,
            "signatures": self.signatures,
            "checks": dict(sorted(self.checks.items())),
            "failures": list(self.failures),
            "passed": self.passed,
        }


def _check_map(sig: Signature, m: CombinatorialMap, method: str) -> Optional[str]:
    report = validate(m)
    if not report.passed:
        return f"{method} build of {sig} fails {report.first_failure}"
    expected = (sig.vertices, 3 * sig.vertices // 2, sig.vertices // 2 + 2, sig.hexagons)
    observed = (report.vertex_count, report.edge_count, report.face_count, report.hexagon_count)
    if observed != expected:
        return f"{method} build of {sig} has counts {observed}, expected {expected}"
    return None


def _signature_checks(sig: Signature) -> Dict[str, Callable[[], Optional[str]]]:
    cls, _ = equivalent_signatures(sig)

    def closure() -> Optional[str]:
        for member in cls.members:
            if equivalent_signatures(member)[0].members != cls.members:
                return f"class of {sig} is not closed at {member}"
        return None

    def lattice_oracle() -> Optional[str]:
        if lattice_signatures(sig) != cls.members:
            return f"rotated lattices of {sig} disagree with its class"
        if rotocenter_lattice(sig).mirrored().signature() != mirror_signature(sig):
            return f"mirrored lattice of {sig} disagrees with its mirror signature"
        return None

    def tightness() -> Optional[str]:
        if is_tight(sig) != all_members_beltless(sig):
            return f"tightness criteria disagree for {sig}"
        return None

    return {"closure": closure, "lattice": lattice_oracle, "tightness": tightness}


def _map_checks(sig: Signature, quotient: CombinatorialMap, spines: CombinatorialMap) -> Dict[str, Callable[[], Optional[str]]]:
    cls, _ = equivalent_signatures(sig)

    def agreement() -> Optional[str]:
        relation = is_isomorphic(quotient, spines)
        if relation is not IsomorphismRelation.ORIENTATION_PRESERVING:
            return f"constructors disagree for {sig}: {relation.value}"
        return None

    def belts() -> Optional[str]:
        if is_tight(sig) != (not find_belts(quotient)):
            return f"belt search contradicts tightness for {sig}"
        return None

    def spine_lengths() -> Optional[str]:
        allowed = {member.s for member in cls.members}
        lengths = {spine.length for spine in find_spines(quotient)}
        if not lengths <= allowed:
            return f"spine lengths {sorted(lengths)} of {sig} outside {sorted(allowed)}"
        return None

    def connectivity() -> Optional[str]:
        two_connected = connectivity_grade(quotient) is ConnectivityGrade.TWO_CONNECTED
        if two_connected != is_godseye(sig):
            return f"connectivity of {sig} contradicts the godseye rule"
        return None

    return {"agreement": agreement, "belts": belts, "spines": spine_lengths, "connectivity": connectivity}


def _chiral_pairs(v: int) -> Optional[str]:
    row = census_row(v)
    chiral = sum(1 for cls in classes_at(v) if cls.chiral)
    if chiral != 2 * row.chiral_pairs:
        return f"v={v} has {chiral} chiral classes but alpha - beta = {row.chiral_pairs}"
    return None


@log_execution_time(logger)
def run_verification(
    vmax: int,
    tracker: Optional[ErrorTracker] = None,
    monitor: Optional[RunMonitor] = None,
) -> VerificationSummary:
    """Run every check for every signature with at most ``vmax`` vertices."""
    tracker = tracker or ErrorTracker()
    monitor = monitor or RunMonitor()
    summary = VerificationSummary(vmax=vmax)

    def run(name: str, check: Callable[[], Optional[str]], subject: str) -> None:
        try:
            problem = check()
        except ConsistencyError as exc:
            problem = exc.message
        summary.checks[name] = summary.checks.get(name, 0) + 1
        monitor.record_check(problem is None)
        if problem is not None:
            summary.failures.append(problem)
            tracker.record(ConsistencyError(problem), subject=subject, check=name)
            logger.error("Check failed", check=name, subject=subject, problem=problem)

    for v in range(4, vmax + 1, 4):
        run("chirality", lambda: _chiral_pairs(v), f"v={v}")
        for sig in signatures_for_vertices(v):
            summary.signatures += 1
            for name, check in _signature_checks(sig).items():
                run(name, check, sig.text)
            try:
                quotient = build_by_quotient(sig)
                spines = build_by_spines(sig)
            except ConsistencyError as exc:
                run("build", lambda: exc.message, sig.text)
                continue
            monitor.record_build(2)
            run("validate", lambda: _check_map(sig, quotient, "quotient") or _check_map(sig, spines, "spines"), sig.text)
            for name, check in _map_checks(sig, quotient, spines).items():
                run(name, check, sig.text)

    logger.info("Verification finished", vmax=vmax, signatures=summary.signatures, failures=len(summary.failures))
    return summary
