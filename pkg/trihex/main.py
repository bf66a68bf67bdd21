"""
Command-line interface for trihex.

Data goes to stdout (or ``--out``), diagnostics to stderr. Exit codes:
0 success, 1 I/O failure, 2 usage or parse error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from trihex.core.analysis import identify_signature
from trihex.core.census import CSV_HEADER, census, classes_at, summarize, write_csv
from trihex.core.construction import METHODS, build
from trihex.core.signature import (
    Signature,
    all_members_beltless,
    derivation_order,
    equivalent_signatures,
    is_tight,
    mirror_signature,
)
from trihex.core.trihex_map import validate
from trihex.core.verification import run_verification
from trihex.export.document import GraphDocument, to_dot, to_graph6
from trihex.export.svg import render_map_svg, render_tiling_svg
from trihex.monitoring.run_monitor import RunMonitor
from trihex.utils.config import LOG_FORMATS, LOG_LEVELS, Config, load_config
from trihex.utils.error_handler import (
    ConsistencyError,
    DocumentError,
    ErrorCategory,
    ErrorTracker,
    TrihexError,
)
from trihex.utils.logger import configure_logging, get_logger

logger = get_logger("trihex.cli")


# --------------------------------------------------------------------------
# helpers
# --------------------------------------------------------------------------


def _signature(text: str) -> Signature:
    return Signature.parse(text)


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise TrihexError(
            f"cannot write {out}: {exc.strerror or exc}",
            category=ErrorCategory.IO,
            details={"path": out},
        ) from exc
    logger.info("Wrote output", path=out, bytes=len(text))


def _json(payload: object) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def cmd_equiv(args: argparse.Namespace, config: Config) -> int:
    sig = _signature(args.signature)
    cls, derivation = equivalent_signatures(sig)
    if args.format == "json":
        payload = {"class": cls.to_dict(), "order": [m.text for m in derivation_order(sig)]}
        if args.verbose:
            payload["derivation"] = derivation.to_dict()
        _emit(_json(payload), args.out)
        return 0
    lines = [" ".join(str(member) for member in derivation_order(sig))]
    if args.verbose:
        lines.append(f"h={derivation.h}")
        lines.append(f"j2={derivation.j2} p2={derivation.p2} sig2={derivation.sig2}")
        lines.append(f"j3={derivation.j3} p3={derivation.p3} sig3={derivation.sig3}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_mirror(args: argparse.Namespace, config: Config) -> int:
    _emit(f"{mirror_signature(_signature(args.signature))}\n", args.out)
    return 0


def cmd_tight(args: argparse.Namespace, config: Config) -> int:
    sig = _signature(args.signature)
    arithmetic = is_tight(sig)
    members = all_members_beltless(sig)
    if arithmetic != members:
        raise ConsistencyError(f"tightness criteria disagree for {sig}", signature=sig.text)
    verdict = "tight" if arithmetic else "not tight"
    lines = [f"{sig} {verdict}"]
    if args.verbose:
        lines.append(f"b=0 and f, f+1, s+1 pairwise coprime: {str(arithmetic).lower()}")
        lines.append(f"every class member has b=0: {str(members).lower()}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_classes(args: argparse.Namespace, config: Config) -> int:
    classes = classes_at(args.v)
    if args.format == "json":
        _emit(_json([dict(cls.to_dict(), hexagons=cls.hexagons, vertices=cls.vertices) for cls in classes]), args.out)
        return 0
    lines = []
    for cls in classes:
        row = " ".join(str(sig) for sig in cls.table_row())
        suffix = " chiral" if cls.chiral else ""
        lines.append(f"{row} {cls.hexagons} {cls.vertices}{suffix}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_census(args: argparse.Namespace, config: Config) -> int:
    monitor = RunMonitor()
    rows = census(4, args.vmax, workers=config.workers)
    monitor.record_census_rows(len(rows))

    if args.format == "json":
        payload = [dict(zip(CSV_HEADER, row.as_csv_fields())) for row in rows]
        text = _json(payload)
    else:
        buffer = io.StringIO()
        write_csv(rows, buffer)
        text = buffer.getvalue()
    _emit(text, args.out)

    summary = f"census: {len(rows)} rows, v=4..{rows[-1].v if rows else 4}\n"
    (sys.stdout if args.out else sys.stderr).write(summary)
    logger.info("Census run", **monitor.get_metrics())
    return 0


_STATS_KEYS = (
    "alpha_gap_max",
    "alpha_gap_exceed",
    "alpha_gap_exceed_even",
    "beta_gap_max",
    "beta_gap_exceed",
    "beta_gap_exceed_even",
    "alpha_ratio_max",
    "beta_ratio_max",
)


def cmd_stats(args: argparse.Namespace, config: Config) -> int:
    if args.v_from < 4 or args.v_from > args.v_to:
        raise TrihexError(
            f"invalid range {args.v_from}..{args.v_to}: need 4 <= from <= to",
            category=ErrorCategory.VALIDATION,
        )
    monitor = RunMonitor()
    rows = census(args.v_from, args.v_to, workers=config.workers)
    monitor.record_census_rows(len(rows))
    stats = summarize(rows)
    payload = stats.to_dict(places=config.stats_places)
    if args.format == "json":
        _emit(_json(payload), args.out)
    else:
        lines = [f"range: {stats.v_min}..{stats.v_max} ({stats.rows} values of v)"]
        for key in _STATS_KEYS:
            value = payload[key]
            if isinstance(value, dict):
                value = f"{value['decimal']} ({value['exact']})"
            lines.append(f"{key}: {value}")
        _emit("\n".join(lines) + "\n", args.out)
    logger.info("Stats run", **monitor.get_metrics())
    return 0


def cmd_build(args: argparse.Namespace, config: Config) -> int:
    sig = _signature(args.signature)
    m = build(sig, args.method)
    report = validate(m)
    if not report.passed:
        raise ConsistencyError(f"built map for {sig} fails {report.first_failure}", signature=sig.text)
    cls, _ = equivalent_signatures(sig)

    if args.format == "json":
        text = GraphDocument.from_map(m, cls, method=args.method).to_json()
    elif args.format == "dot":
        text = to_dot(m, cls)
    elif args.format == "graph6":
        text = to_graph6(m) + "\n"
    else:
        text = render_map_svg(m, canvas=config.svg_canvas, tolerance=config.tutte_tolerance, title=f"trihex {sig.text}")
    _emit(text, args.out)
    return 0


def cmd_identify(args: argparse.Namespace, config: Config) -> int:
    try:
        text = Path(args.path).read_text(encoding="utf-8")
    except OSError as exc:
        raise TrihexError(
            f"cannot read {args.path}: {exc.strerror or exc}",
            category=ErrorCategory.IO,
            details={"path": args.path},
        ) from exc
    m = GraphDocument.from_json(text).to_map()
    report = validate(m)
    if not report.passed:
        raise DocumentError(f"document is not a trihex: fails {report.first_failure}", report=report.to_dict())
    cls, chirality = identify_signature(m)
    if args.format == "json":
        _emit(_json({"class": cls.to_dict(), "chirality": chirality.value}), args.out)
    else:
        members = " ".join(str(sig) for sig in cls.ordered())
        _emit(f"{members} {chirality.value}\n", args.out)
    return 0


def cmd_verify(args: argparse.Namespace, config: Config) -> int:
    vmax = args.vmax or config.verify_vmax
    tracker = ErrorTracker()
    monitor = RunMonitor()
    summary = run_verification(vmax, tracker=tracker, monitor=monitor)
    if args.format == "json":
        _emit(_json(dict(summary.to_dict(), metrics=monitor.get_metrics())), args.out)
    else:
        checks = sum(summary.checks.values())
        lines = [f"verified {summary.signatures} signatures up to v={vmax}: {checks} checks, {len(summary.failures)} failures"]
        lines.extend(f"FAIL {problem}" for problem in summary.failures)
        _emit("\n".join(lines) + "\n", args.out)
    if not summary.passed:
        logger.warning("Verification found failures", vmax=vmax, failures=len(summary.failures))
    logger.info("Verify run", **monitor.get_metrics())
    return tracker.worst_exit_code()


def cmd_tiling(args: argparse.Namespace, config: Config) -> int:
    sig = _signature(args.signature)
    _emit(render_tiling_svg(sig, args.columns, args.rows, radius=config.svg_hex_radius), args.out)
    return 0


COMMANDS: Dict[str, Callable[[argparse.Namespace, Config], int]] = {
    "equiv": cmd_equiv,
    "mirror": cmd_mirror,
    "tight": cmd_tight,
    "classes": cmd_classes,
    "census": cmd_census,
    "stats": cmd_stats,
    "build": cmd_build,
    "identify": cmd_identify,
    "verify": cmd_verify,
    "tiling": cmd_tiling,
}


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _vertex_bound(text: str) -> int:
    value = int(text)
    if value < 4:
        raise argparse.ArgumentTypeError(f"below minimum: {value} < 4")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trihex", description="Classify, build and count trihexes")
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, help="Logging level override")
    parser.add_argument("--log-format", choices=LOG_FORMATS, help="Log record format on stderr")
    parser.add_argument("--log-file", type=str, help="Also write JSON log records to this file")
    parser.add_argument("--workers", type=_positive, help="Processes used by census sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str, formats: List[str], verbose: bool = False) -> argparse.ArgumentParser:
        child = sub.add_parser(name, help=help_text)
        child.add_argument("--format", choices=formats, default=formats[0], help="Output format")
        child.add_argument("--out", type=str, help="Write output to this path instead of stdout")
        if verbose:
            child.add_argument("--verbose", action="store_true", help="Show intermediate quantities")
        return child

    equiv = command("equiv", "List the equivalent signatures", ["text", "json"], verbose=True)
    equiv.add_argument("signature", help="Signature as s,b,f")

    mirror = command("mirror", "Signature of the mirror image", ["text"])
    mirror.add_argument("signature")

    tight = command("tight", "Whether the trihex has no belts", ["text"], verbose=True)
    tight.add_argument("signature")

    classes = command("classes", "All classes with v vertices", ["text", "json"])
    classes.add_argument("v", type=int)

    census_cmd = command("census", "Census table for v = 4..VMAX", ["csv", "json"])
    census_cmd.add_argument("vmax", type=_vertex_bound)

    stats = command("stats", "Gap statistics over a range of v", ["text", "json"])
    stats.add_argument("v_from", type=int, metavar="FROM")
    stats.add_argument("v_to", type=int, metavar="TO")

    build_cmd = command("build", "Build the trihex of a signature", ["json", "dot", "graph6", "svg"])
    build_cmd.add_argument("signature")
    build_cmd.add_argument("--method", choices=METHODS, default="quotient", help="Construction")

    identify = command("identify", "Identify the signature class of a graph document", ["text", "json"])
    identify.add_argument("path")

    verify = command("verify", "Run the consistency checks", ["text", "json"])
    verify.add_argument("--vmax", type=_vertex_bound, help="Largest vertex count checked")

    tiling = command("tiling", "SVG of the tiling with rotocentres marked", ["svg"])
    tiling.add_argument("signature")
    tiling.add_argument("columns", type=_positive)
    tiling.add_argument("rows", type=_positive)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        config = load_config(
            log_level=args.log_level,
            log_format=args.log_format,
            log_file=args.log_file,
            workers=args.workers,
        )
        configure_logging(config.log_level, config.log_format, config.log_file)
        with logger.run_context():
            return COMMANDS[args.command](args, config)
    except TrihexError as exc:
        logger.debug("Command failed", command=args.command, error=exc.to_dict())
        sys.stderr.write(f"error: {exc.message}\n")
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
