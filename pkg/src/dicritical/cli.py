"""Command-line driver.

Reports go to stdout (or ``--out``); progress and summaries go to stderr.
Exit status: 0 success, 1 mismatch against the expected counts under
``--strict``, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from . import pipelines as pl
from .catalog import FIGURE_ONE, load_golden, reversed_tt8_family, standard_obstructions
from .density import check_arc_bound, check_digon_forest, verify_dearth_lower_bound, verify_matchpath_lemma
from .dicolour import is_three_dicritical, is_two_dicolourable
from .digraph import DmatParseError, canonical_code, parse_dmat

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

COMMANDS = ("sweep-f", "f-plus", "f-completions", "enumerate", "classify", "check", "density-suite")

log = logging.getLogger("dicritical")


@dataclass
class RunConfig:
    command: str
    threads: int = 1
    output_path: Optional[Path] = None
    verify_max_acyclic: bool = False
    input_path: Optional[Path] = None
    max_acyclic: Optional[int] = None
    strict: bool = False
    progress: bool = False

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.threads < 1:
            raise ValueError("--threads must be at least 1")
        if self.command == "enumerate" and (self.max_acyclic is None or not 1 <= self.max_acyclic <= 7):
            raise ValueError("enumerate needs --max-acyclic in [1, 7]")
        if self.command == "check" and self.input_path is None:
            raise ValueError("check needs an input file")


def load_expected() -> dict[str, dict[str, int]]:
    text = resources.files("dicritical").joinpath("data", "expected_counts.txt").read_text()
    table = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, *pairs = line.split()
        table[name] = {k: int(v) for k, v in (p.split("=") for p in pairs)}
    return table


def _compare(name: str, observed: dict[str, int], mismatches: list[str]) -> None:
    expected = load_expected()[name]
    for key, want in expected.items():
        got = observed.get(key)
        if got != want:
            mismatches.append(f"{name}: {key} expected {want}, got {got}")


def _enumeration_counts(res: pl.EnumerationResult) -> dict[str, int]:
    obs = {str(n): c for n, c in res.counts}
    obs["dicritical"] = len(res.dicritical)
    return obs


# -- subcommands -------------------------------------------------------------------


def _sweep_f(cfg: RunConfig, mismatches: list[str]) -> str:
    found = pl.sweep_f_family(progress=cfg.progress)
    report = pl.PipelineReport("sweep-f", [pl.Generation("survivors", found, None)])
    _compare("sweep-f", {"survivors": len(found)}, mismatches)
    goldens = [load_golden(f"T{i}") for i in range(1, 5)]
    if found != goldens:
        mismatches.append("sweep-f: survivors differ from T1..T4")
    return report.render()


def _f_plus(cfg: RunConfig, mismatches: list[str]) -> str:
    res = pl.check_f_plus_extensions()
    report = pl.PipelineReport("f-plus", [pl.Generation("survivors", res.survivors, None)], [f"examined={res.examined}"])
    _compare("f-plus", {"examined": res.examined, "survivors": len(res.survivors)}, mismatches)
    return report.render()


def _f_completions(cfg: RunConfig, mismatches: list[str]) -> str:
    report = pl.f_completion_pipeline(cfg.threads, cfg.progress)
    observed = {g.label: g.count for g in report.generations}
    observed["dicritical"] = sum(len(g.dicritical) for g in report.generations)
    _compare("f-completions", observed, mismatches)
    return report.render()


def _enumerate(cfg: RunConfig, mismatches: list[str]) -> str:
    res = pl.enumerate_by_max_acyclic(cfg.max_acyclic, cfg.threads, cfg.progress, cfg.verify_max_acyclic)
    _compare(f"enumerate-{cfg.max_acyclic}", _enumeration_counts(res), mismatches)
    return res.report.render()


def _classify(cfg: RunConfig, mismatches: list[str]) -> str:
    parts = [_sweep_f(cfg, mismatches), _f_plus(cfg, mismatches), _f_completions(cfg, mismatches)]

    def seen(res: pl.EnumerationResult) -> None:
        log.info("enumerate-%d: %s", res.max_acyclic, res.counts)

    result = pl.classify(cfg.threads, cfg.progress, seen)
    for res in result.enumerations:
        _compare(f"enumerate-{res.max_acyclic}", _enumeration_counts(res), mismatches)
        parts.append(res.report.render())
    _compare("classify", {"classes": len(result.classes), "tournaments": len(result.tournaments)}, mismatches)
    golden = {canonical_code(load_golden(stem)): stem for stem, _ in FIGURE_ONE}
    found = {canonical_code(d) for d in result.classes}
    if found != set(golden):
        mismatches.append("classify: classes differ from the eight golden digraphs")
    for d in result.classes:
        if not is_three_dicritical(d):
            mismatches.append("classify: a reported class is not 3-dicritical")
    final = pl.PipelineReport("classify", [pl.Generation("final", result.classes)])
    final.generations[0].dicritical = list(result.classes)
    names = [golden.get(canonical_code(d), "?") for d in result.classes]
    final.notes.append(f"classes={len(result.classes)} tournaments={len(result.tournaments)}")
    final.notes.append("names=" + ",".join(names))
    parts.append(final.render())
    return "".join(parts)


def _check(cfg: RunConfig, mismatches: list[str]) -> str:
    d = parse_dmat(Path(cfg.input_path).read_text())
    flt = pl.CandidateFilter(standard_obstructions(reversed_tt8_family()))
    rows = {
        "order": d.n,
        "arcs": d.size,
        "semicomplete": d.is_semicomplete(),
        "two_dicolourable": is_two_dicolourable(d),
        "three_dicritical": is_three_dicritical(d),
        "candidate_filter": flt.check(d),
        "arc_bound": check_arc_bound(d),
        "digon_forest": check_digon_forest(d),
    }
    return "".join(f"{k}={str(v).lower() if isinstance(v, bool) else v}\n" for k, v in rows.items())


def _density_suite(cfg: RunConfig, mismatches: list[str]) -> str:
    lines = []
    matchpath = verify_matchpath_lemma()
    dearth = verify_dearth_lower_bound(10)
    lines.append(f"matchpath_lemma={str(matchpath).lower()}")
    lines.append(f"dearth_lower_bound_max_n=10 holds={str(dearth).lower()}")
    if not (matchpath and dearth):
        mismatches.append("density-suite: a brute-force verification failed")
    for stem, _ in FIGURE_ONE:
        d = load_golden(stem)
        bound, forest = check_arc_bound(d), check_digon_forest(d)
        lines.append(f"digraph={stem} arcs={d.size} arc_bound={str(bound).lower()} digon_forest={str(forest).lower()}")
        if bound != (stem not in ("K3_bidirected", "W3")):
            mismatches.append(f"density-suite: unexpected arc bound result for {stem}")
        if forest != (stem != "K3_bidirected"):
            mismatches.append(f"density-suite: unexpected digon forest result for {stem}")
    return "\n".join(lines) + "\n"


HANDLERS = {
    "sweep-f": _sweep_f,
    "f-plus": _f_plus,
    "f-completions": _f_completions,
    "enumerate": _enumerate,
    "classify": _classify,
    "check": _check,
    "density-suite": _density_suite,
}


def run(cfg: RunConfig, stdout=None) -> int:
    """Execute one subcommand; returns the exit status."""
    stdout = stdout or sys.stdout
    try:
        cfg.validate()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    mismatches: list[str] = []
    start = time.perf_counter()
    try:
        text = HANDLERS[cfg.command](cfg, mismatches)
    except DmatParseError as exc:
        print(f"error: {cfg.input_path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.output_path is not None:
        Path(cfg.output_path).write_text(text)
    else:
        stdout.write(text)
    log.info("%s finished in %.1fs", cfg.command, time.perf_counter() - start)
    for m in mismatches:
        print(f"mismatch: {m}", file=sys.stderr)
    if cfg.strict and mismatches:
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="worker processes (default 1)")
    common.add_argument("--strict", action="store_true", help="exit 1 if any count differs from the expected table")
    common.add_argument("--out", type=Path, default=None, help="write the report here instead of stdout")
    common.add_argument("--progress", action="store_true", help="progress bars on stderr")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="dicritical", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("sweep-f", parents=[common], help="orient the 15 missing pairs of F")
    sub.add_parser("f-plus", parents=[common], help="dominating-vertex extensions of T1..T4")
    sub.add_parser("f-completions", parents=[common], help="digon completions of T1..T4 and their extensions")
    p = sub.add_parser("enumerate", parents=[common], help="grow candidates with a given maximum acyclic set size")
    p.add_argument("--max-acyclic", type=int, required=True, metavar="I")
    p.add_argument("--verify-max-acyclic", action="store_true", help="recompute the maximum acyclic set size of every candidate")
    sub.add_parser("classify", parents=[common], help="run everything and list the 3-dicritical semi-complete digraphs")
    p = sub.add_parser("check", parents=[common], help="evaluate one .dmat digraph")
    p.add_argument("input", type=Path)
    sub.add_parser("density-suite", parents=[common], help="matching and dearth verifications")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(message)s")
    cfg = RunConfig(
        command=args.command,
        threads=args.threads,
        output_path=args.out,
        verify_max_acyclic=getattr(args, "verify_max_acyclic", False),
        input_path=getattr(args, "input", None),
        max_acyclic=getattr(args, "max_acyclic", None),
        strict=args.strict,
        progress=args.progress,
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
