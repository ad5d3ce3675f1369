"""Command line front end: ``qbounds invariants|verify|hunt``.

Exit codes: 0 everything verified, 1 at least one violation (or conjecture
counterexample), 2 input errors only.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Iterator

from qbounds.bounds import CONJECTURES, TIGHT_TOL
from qbounds.graph import FAMILY_KINDS, FamilySpec, Graph6Error, generate, read_graph6_lines, to_graph6
from qbounds.harness import Summary, dump, hunt_record, invariants_record, run_pool, verify_record

log = logging.getLogger("qbounds")

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


def parse_range(text: str) -> range:
    """``"5"`` or ``"3..10"`` (inclusive)."""
    lo, _, hi = text.partition("..")
    lo = int(lo)
    hi = int(hi) if hi else lo
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def parse_parts(text: str) -> tuple[int, int]:
    a, _, b = text.partition(",")
    return int(a), int(b)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("input")
    src.add_argument("--input", metavar="PATH", help="newline-separated graph6 file ('-' for stdin)")
    src.add_argument("--g6", action="append", default=[], metavar="STRING", help="inline graph6 record (repeatable)")
    src.add_argument("--family", choices=FAMILY_KINDS)
    src.add_argument("--n", type=parse_range, metavar="A..B", help="vertex count or inclusive range")
    src.add_argument("--parts", type=parse_parts, metavar="A,B", help="part sizes for complete_bipartite")
    src.add_argument("--p", type=float, help="edge probability for gnp")
    src.add_argument("--seed", type=int, help="64-bit seed for gnp")
    src.add_argument("--samples", type=int, default=1, help="graphs per n for gnp (default 1)")
    common.add_argument("--format", choices=("json", "csv", "table"), default="json")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="qbounds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("invariants", parents=[common], help="invariants and spectra per graph")
    v = sub.add_parser("verify", parents=[common], help="evaluate every bound and conjecture")
    v.add_argument("--tol", type=float, default=TIGHT_TOL, help="relative tightness tolerance (default 1e-8)")
    v.add_argument("--allow-disconnected", action="store_true",
                   help="report disconnected graphs with all bounds skipped")
    v.add_argument("--timing", action="store_true", help="include eigensolve milliseconds (breaks byte-determinism)")
    h = sub.add_parser("hunt", parents=[common], help="minimum conjecture slack over an ensemble")
    h.add_argument("conjecture", choices=CONJECTURES)
    return parser


def iter_sources(args) -> Iterator[tuple[str, str]]:
    """Yield ``(origin, record)`` pairs; origin names the line for error messages."""
    for i, s in enumerate(args.g6, 1):
        yield f"--g6 #{i}", s
    if args.input:
        fh = sys.stdin if args.input == "-" else open(args.input, encoding="ascii", errors="replace")
        with fh:
            for lineno, rec in read_graph6_lines(fh):
                yield f"{args.input}:{lineno}", rec
    if args.family:
        for spec in family_specs(args):
            for j, g in enumerate(generate(spec)):
                yield f"{spec.kind}[n={g.n}]#{j}", to_graph6(g)


def family_specs(args) -> list[FamilySpec]:
    if args.family == "complete_bipartite":
        if args.parts is None:
            raise ValueError("complete_bipartite requires --parts A,B")
        return [FamilySpec("complete_bipartite", a=args.parts[0], b=args.parts[1])]
    if args.n is None:
        raise ValueError(f"--family {args.family} requires --n")
    if args.family == "gnp":
        return [FamilySpec("gnp", n=n, p=args.p, seed=args.seed, samples=args.samples) for n in args.n]
    return [FamilySpec(args.family, n=n) for n in args.n]


def _run(fn, sources, args, extra=()):
    """Yield ``(origin, result)`` in input order."""
    results = run_pool(fn, (rec for _, rec in sources), extra, args.jobs)
    for (origin, _), res in zip(sources, results):
        yield origin, res


def cmd_invariants(args, out) -> int:
    sources = list(iter_sources(args))
    errors = 0

    def records():
        nonlocal errors
        for origin, res in _run(invariants_record, sources, args):
            if isinstance(res, Graph6Error):
                errors += 1
                log.error("%s: %s", origin, res)
                continue
            if not res["invariants"]["connected"]:
                log.warning("%s: disconnected graph %s", origin, res["graph_id"])
            yield res

    dump(records(), out, args.format, "invariants")
    return EXIT_INPUT if errors else EXIT_OK


def cmd_verify(args, out) -> int:
    sources = list(iter_sources(args))
    summary = Summary()

    def records():
        for origin, res in _run(verify_record, sources, args, (args.tol, args.allow_disconnected, args.timing)):
            if isinstance(res, Graph6Error):
                summary.parse_errors += 1
                log.error("%s: %s", origin, res)
            elif res is None:
                summary.skipped_graphs += 1
            else:
                summary.add(res)
                yield res

    dump(records(), out, args.format, "verify")
    if summary.skipped_graphs:
        log.warning("skipped %d disconnected graph(s); use --allow-disconnected to report them",
                    summary.skipped_graphs)
    for graph_id, name, k, residual in summary.violations:
        log.error("violation: %s %s k=%s residual=%r", graph_id, name, k, residual)
    text = json.dumps(summary.to_dict())
    if args.format == "table":
        out.write("summary " + text + "\n")
    print(text, file=sys.stderr)
    if summary.violations:
        return EXIT_VIOLATION
    return EXIT_INPUT if summary.parse_errors else EXIT_OK


def cmd_hunt(args, out) -> int:
    sources = list(iter_sources(args))
    errors = graphs = 0
    best = None
    for origin, res in _run(hunt_record, sources, args, (args.conjecture,)):
        if isinstance(res, Graph6Error):
            errors += 1
            log.error("%s: %s", origin, res)
            continue
        graphs += 1
        if best is None or res[1] < best[1]:
            best = res
    witness, slack, k, limit = best if best else (None, None, None, None)
    counterexample = best is not None and slack < -1e-9 * max(1, limit)
    report = {
        "v": 1,
        "conjecture": args.conjecture,
        "graphs": graphs,
        "min_slack": slack,
        "k": k,
        "witness": witness,
        "counterexample": counterexample,
    }
    if args.format == "json":
        out.write(json.dumps(report) + "\n")
    elif args.format == "csv":
        out.write(",".join(report) + "\n")
        out.write(",".join("" if v is None else repr(v) if isinstance(v, float) else str(v)
                           for v in report.values()) + "\n")
    else:
        out.write("".join(f"{key:>16}: {val}\n" for key, val in report.items()))
    if counterexample:
        return EXIT_VIOLATION
    return EXIT_INPUT if errors else EXIT_OK


COMMANDS = {"invariants": cmd_invariants, "verify": cmd_verify, "hunt": cmd_hunt}


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    out = sys.stdout if out is None else out
    try:
        return COMMANDS[args.command](args, out)
    except (ValueError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT
