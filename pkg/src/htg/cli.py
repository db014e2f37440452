"""Command-line interface: ``htg <subcommand> ...``.

Exit status: 0 when everything matched, 1 on a mismatch or laceability
counterexample, 2 on bad usage or parameters, 3 when a search ran out of
budget (and nothing mismatched).
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import oracle, predict
from .core import HtgError, HtgParams, build, export, valid_jumps, validate_params
from .hamilton import hamilton_cycle
from .predict import PROPERTIES, PropertyReport, Verdict

log = logging.getLogger("htg")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3

DEFAULT_PROPS = "girth,diameter,spectrum,aut"
SWEEP_PROPS = "girth,diameter,lemmas,hamilton"


class UsageError(Exception):
    pass


# ----------------------------------------------------------------------------
# sweep grammar


@dataclass(frozen=True)
class SweepRange:
    m: range
    n: range
    l: range | None  # None means every valid normal-form jump


_TERM = re.compile(r"^\s*([mnl])\s*=\s*(\*|-?\d+(?:\s*\.\.\s*-?\d+)?)\s*$")


def parse_sweep(text: str) -> SweepRange:
    """Parse ``m=a..b,n=c..d[,l=*|e|e..f]``; bounds are inclusive."""
    found: dict[str, range | None] = {}
    for part in text.split(","):
        match = _TERM.match(part)
        if not match:
            raise UsageError(f"bad sweep term {part!r}; expected e.g. m=1..4,n=4..12,l=*")
        key, value = match.groups()
        if key in found:
            raise UsageError(f"sweep term {key!r} given twice")
        if value == "*":
            if key != "l":
                raise UsageError(f"'*' is only allowed for l, not {key}")
            found[key] = None
            continue
        lo, _, hi = value.partition("..")
        a, b = int(lo), int(hi or lo)
        if a > b:
            raise UsageError(f"empty range {key}={value}")
        found[key] = range(a, b + 1)
    for key in "mn":
        if key not in found:
            raise UsageError(f"sweep needs a range for {key}")
    return SweepRange(found["m"], found["n"], found.get("l"))  # type: ignore[arg-type]


def expand_sweep(sweep: SweepRange) -> Iterator[HtgParams]:
    """Valid triples in (m, n, l) order. Invalid ones are logged and skipped."""
    for m in sweep.m:
        for n in sweep.n:
            if sweep.l is None:
                jumps = valid_jumps(m, n)
                if not jumps:
                    log.warning("skipping m=%d n=%d: no valid jump (%s)", m, n, _why(m, n))
                yield from (HtgParams(m, n, l) for l in jumps)
                continue
            for l in sweep.l:
                try:
                    yield validate_params(m, n, l)
                except HtgError as exc:
                    log.warning("skipping m=%d n=%d l=%d: %s", m, n, l, exc)


def _why(m: int, n: int) -> str:
    if n % 2 or n < 4:
        return "n must be even and >= 4"
    if m < 1:
        return "m must be >= 1"
    return "no jump of the right parity keeps the graph simple"


# ----------------------------------------------------------------------------
# helpers


def _params(args: argparse.Namespace) -> HtgParams:
    if args.m is None or args.n is None or args.l is None:
        raise UsageError("missing graph parameters; pass -m/-n/-l")
    return validate_params(args.m, args.n, args.l)


def _targets(args: argparse.Namespace) -> list[HtgParams]:
    if getattr(args, "sweep", None):
        if any(x is not None for x in (args.m, args.n, args.l)):
            raise UsageError("--sweep cannot be combined with -m/-n/-l")
        return list(expand_sweep(parse_sweep(args.sweep)))
    return [_params(args)]


def _checks(text: str) -> list[str]:
    props = [c.strip() for c in text.split(",") if c.strip()]
    bad = [c for c in props if c not in PROPERTIES]
    if bad or not props:
        raise UsageError(f"unknown --check {','.join(bad) or text!r}; choose from {','.join(PROPERTIES)}")
    return props


def _audit_task(task: tuple[HtgParams, tuple[str, ...], int]) -> list[PropertyReport]:
    p, props, budget = task
    return predict.audit(p, props, oracle.SearchBudget(budget))


def _run_audits(targets: Sequence[HtgParams], props: Sequence[str], budget: int, jobs: int) -> list[PropertyReport]:
    tasks = [(p, tuple(props), budget) for p in targets]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_audit_task, tasks))
    else:
        chunks = [_audit_task(t) for t in tasks]
    return [r for chunk in chunks for r in chunk]


def _status(reports: Sequence[PropertyReport]) -> int:
    verdicts = {r.verdict for r in reports}
    if Verdict.MISMATCH in verdicts:
        return EXIT_MISMATCH
    if Verdict.INCONCLUSIVE in verdicts:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _emit_reports(reports: Sequence[PropertyReport], fmt: str) -> str:
    return predict.to_json(reports) if fmt == "json" else predict.to_tsv(reports)


# ----------------------------------------------------------------------------
# subcommands


def cmd_gen(args: argparse.Namespace) -> tuple[str, int]:
    return export(build(_params(args)), args.format), EXIT_OK


def cmd_hamilton(args: argparse.Namespace) -> tuple[str, int]:
    p = _params(args)
    cycle = hamilton_cycle(p)
    ok = oracle.is_hamilton_cycle(build(p), cycle)
    code = EXIT_OK if ok else EXIT_MISMATCH
    if args.format == "json":
        body = {"params": {"m": p.m, "n": p.n, "l": p.l}, "cycle": cycle.to_json(), "valid": ok}
        return json.dumps(body) + "\n", code
    lines = [f"# {p} Hamilton cycle, {len(cycle)} vertices, {'valid' if ok else 'INVALID'}"]
    lines += [str(v) for v in cycle.vertices]
    return "".join(line + "\n" for line in lines), code


def cmd_laceable(args: argparse.Namespace) -> tuple[str, int]:
    reports = _run_audits(_targets(args), ["laceable"], args.budget, args.jobs)
    return _emit_reports(reports, args.format), _status(reports)


def cmd_props(args: argparse.Namespace) -> tuple[str, int]:
    reports = predict.audit(_params(args), _checks(args.check), oracle.SearchBudget(args.budget))
    return _emit_reports(reports, args.format), _status(reports)


def cmd_audit(args: argparse.Namespace) -> tuple[str, int]:
    reports = _run_audits(_targets(args), _checks(args.check), args.budget, args.jobs)
    return _emit_reports(reports, args.format), _status(reports)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="htg", description="Honeycomb toroidal graph toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, formats: Sequence[str], default: str) -> None:
        sp.add_argument("-m", type=int)
        sp.add_argument("-n", type=int)
        sp.add_argument("-l", type=int)
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET, help="node expansions per search")
        sp.add_argument("--out", help="write output to this file instead of stdout")

    def sweeping(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--sweep", help='parameter ranges, e.g. "m=1..4,n=4..12,l=*"')
        sp.add_argument("--jobs", type=int, default=1, help="worker processes")

    sp = sub.add_parser("gen", help="export a graph")
    common(sp, ["edges", "dot", "json"], "edges")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("hamilton", help="construct and validate a Hamilton cycle")
    common(sp, ["text", "json"], "text")
    sp.set_defaults(func=cmd_hamilton)

    sp = sub.add_parser("laceable", help="check Hamilton-laceability by search")
    common(sp, ["tsv", "json"], "tsv")
    sweeping(sp)
    sp.set_defaults(func=cmd_laceable)

    sp = sub.add_parser("props", help="predicted and observed properties of one graph")
    common(sp, ["tsv", "json"], "tsv")
    sp.add_argument("--check", default=DEFAULT_PROPS, help=f"comma list from {','.join(PROPERTIES)}")
    sp.set_defaults(func=cmd_props)

    for name, default in (("audit", DEFAULT_PROPS), ("sweep", SWEEP_PROPS)):
        sp = sub.add_parser(name, help="audit predictions over a parameter range")
        common(sp, ["tsv", "json"], "tsv")
        sweeping(sp)
        sp.add_argument("--check", default=default, help=f"comma list from {','.join(PROPERTIES)}")
        sp.set_defaults(func=cmd_audit, require_sweep=name == "sweep")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("htg: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.INFO)
    try:
        return _main(argv)
    finally:
        log.removeHandler(handler)


def _main(argv: Sequence[str] | None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "require_sweep", False) and not args.sweep:
            raise UsageError("sweep needs --sweep")
        if args.budget < 1:
            raise UsageError("--budget must be positive")
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be positive")
        text, code = args.func(args)
    except (UsageError, HtgError) as exc:
        print(f"htg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
