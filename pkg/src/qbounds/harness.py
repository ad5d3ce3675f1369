"""Batch evaluation of graph streams and deterministic report serialization."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from qbounds.bounds import ERRATA, BoundReport, ConjectureReport, conjecture_check, evaluate_all, prepare
from qbounds.graph import Graph6Error, from_graph6
from qbounds.spectra import energy, spectrum

SCHEMA_VERSION = 1


@dataclass
class SweepResult:
    graph_id: str
    invariants: dict
    bounds: list[BoundReport] | None = None
    conjectures: list[ConjectureReport] | None = None
    spectra: dict | None = None
    timing_ms: float | None = None

    def to_dict(self) -> dict:
        out = {"v": SCHEMA_VERSION, "graph_id": self.graph_id, "invariants": self.invariants}
        if self.spectra is not None:
            out["spectra"] = self.spectra
        if self.bounds is not None:
            out["bounds"] = [bound_dict(r) for r in self.bounds]
        if self.conjectures is not None:
            out["conjectures"] = [conjecture_dict(c) for c in self.conjectures]
        if self.timing_ms is not None:
            out["timing_ms"] = self.timing_ms
        return out


def bound_dict(r: BoundReport) -> dict:
    return {
        "name": r.name,
        "k": r.k,
        "lhs": r.lhs,
        "rhs": r.rhs,
        "residual": r.residual,
        "tight": r.tight,
        "preconditions_met": r.preconditions_met,
        "reason": r.reason,
    }


def conjecture_dict(c: ConjectureReport) -> dict:
    return {
        "conjecture": c.conjecture,
        "slack": list(c.verdicts),
        "min_slack": c.min_slack,
        "min_k": c.min_k,
        "counterexample": c.counterexample,
    }


def _invariants(d) -> dict:
    return {
        "n": d.n,
        "m": d.m,
        "max_degree": d.max_degree,
        "min_degree": d.min_degree,
        "avg_degree": 2 * d.m / d.n,
        "connected": d.connected,
        "diameter": d.diameter,
        "m1": d.m1,
        "distinct_q": d.distinct,
    }


# -- per-graph workers (top level so a process pool can pickle them) --------


def invariants_record(g6: str) -> dict:
    g = from_graph6(g6)
    d = prepare(g)
    adj = spectrum(g, "adjacency")
    avg = 2 * g.m / g.n
    spectra = {
        "adjacency": [float(x) for x in adj.values],
        "laplacian": [float(x) for x in d.lap.values],
        "signless_laplacian": [float(x) for x in d.q.values],
        "energy": energy(adj, 0.0),
        "laplacian_energy": energy(d.lap, avg),
        "signless_laplacian_energy": energy(d.q, avg),
    }
    return SweepResult(g6, _invariants(d), spectra=spectra).to_dict()


def verify_record(g6: str, tol: float, allow_disconnected: bool, timing: bool) -> dict | None:
    """One verify record, or None for a disconnected graph when those are skipped."""
    g = from_graph6(g6)
    t0 = time.perf_counter()
    d = prepare(g)
    elapsed = (time.perf_counter() - t0) * 1e3
    if not d.connected and not allow_disconnected:
        return None
    reports, conjectures = evaluate_all(d, tol=tol)
    res = SweepResult(g6, _invariants(d), reports, conjectures, timing_ms=elapsed if timing else None)
    return res.to_dict()


def hunt_record(g6: str, which: str) -> tuple[str, float, int, int]:
    c = conjecture_check(prepare(from_graph6(g6)), which)
    return g6, c.min_slack, c.min_k, c.limits[c.min_k - 1]


def _call(args):
    fn, g6, extra = args
    try:
        return fn(g6, *extra)
    except Graph6Error as exc:
        return exc


def run_pool(fn: Callable, records: Iterable[str], extra: tuple = (), jobs: int = 1) -> Iterator:
    """Apply ``fn(g6, *extra)`` to every record, yielding results in input order."""
    tasks = ((fn, g6, extra) for g6 in records)
    if jobs <= 1:
        yield from map(_call, tasks)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # Executor.map yields in submission order regardless of completion order
        yield from pool.map(_call, tasks, chunksize=64)


# -- summaries --------------------------------------------------------------


@dataclass
class Summary:
    graphs: int = 0
    skipped_graphs: int = 0
    parse_errors: int = 0
    holds: int = 0
    tight: int = 0
    violated: int = 0
    skipped: int = 0
    counterexamples: int = 0
    violations: list = field(default_factory=list)

    def add(self, rec: dict) -> None:
        self.graphs += 1
        for b in rec["bounds"]:
            if not b["preconditions_met"]:
                self.skipped += 1
            elif _is_violation(b):
                self.violated += 1
                if b["name"] not in ERRATA:
                    self.violations.append((rec["graph_id"], b["name"], b["k"], b["residual"]))
            elif b["tight"]:
                self.tight += 1
            else:
                self.holds += 1
        for c in rec["conjectures"]:
            if c["counterexample"]:
                self.counterexamples += 1
                self.violations.append((rec["graph_id"], c["conjecture"], c["min_k"], c["min_slack"]))

    def to_dict(self) -> dict:
        return {
            "v": SCHEMA_VERSION,
            "graphs": self.graphs,
            "skipped_graphs": self.skipped_graphs,
            "parse_errors": self.parse_errors,
            "holds": self.holds,
            "tight": self.tight,
            "violated": self.violated,
            "skipped": self.skipped,
            "counterexamples": self.counterexamples,
            "errata": sorted(ERRATA),
        }


def _is_violation(b: dict) -> bool:
    return b["residual"] < -1e-9 * max(1.0, abs(b["rhs"]))


# -- output formats ---------------------------------------------------------


def dump_json(records: Iterable[dict], out) -> None:
    """Top-level array, one record per line; floats use shortest round-trip repr."""
    out.write("[")
    sep = "\n"
    for rec in records:
        out.write(sep + json.dumps(rec, allow_nan=True))
        sep = ",\n"
    out.write("\n]\n" if sep != "\n" else "]\n")


CSV_BOUND_FIELDS = ("graph_id", "bound", "k", "lhs", "rhs", "residual", "tight")
CSV_INVARIANT_FIELDS = ("graph_id", "n", "m", "max_degree", "min_degree", "avg_degree",
                        "connected", "diameter", "m1", "distinct_q")


def _cell(x):
    if x is None:
        return ""
    return repr(x) if isinstance(x, float) else x


def bound_rows(rec: dict) -> Iterator[tuple]:
    for b in rec["bounds"]:
        yield (rec["graph_id"], b["name"], b["k"], b["lhs"], b["rhs"], b["residual"], b["tight"])
    for c in rec["conjectures"]:
        for k, slack in enumerate(c["slack"], 1):
            yield (rec["graph_id"], "conjecture_" + c["conjecture"], k, None, None, slack, None)


def dump_csv(records: Iterable[dict], out, kind: str) -> None:
    w = csv.writer(out, lineterminator="\n")
    if kind == "invariants":
        w.writerow(CSV_INVARIANT_FIELDS)
        for rec in records:
            inv = rec["invariants"]
            w.writerow([rec["graph_id"]] + [_cell(inv[f]) for f in CSV_INVARIANT_FIELDS[1:]])
    else:
        w.writerow(CSV_BOUND_FIELDS)
        for rec in records:
            for row in bound_rows(rec):
                w.writerow([_cell(x) for x in row])


def _fmt(x, width=14):
    if x is None:
        return "-".rjust(width)
    if isinstance(x, float):
        return f"{x:.{width - 6}g}".rjust(width)
    return str(x).rjust(width)


def dump_table(records: Iterable[dict], out, kind: str) -> None:
    if kind == "invariants":
        out.write("".join(f.rjust(12) for f in CSV_INVARIANT_FIELDS) + "\n")
        for rec in records:
            inv = rec["invariants"]
            cells = [rec["graph_id"]] + [inv[f] for f in CSV_INVARIANT_FIELDS[1:]]
            out.write("".join(_fmt(c, 12) for c in cells) + "\n")
        return
    for rec in records:
        inv = rec["invariants"]
        out.write(f"# {rec['graph_id']}  n={inv['n']} m={inv['m']} D={inv['diameter']} e={inv['distinct_q']}\n")
        for b in rec["bounds"]:
            status = "skip" if not b["preconditions_met"] else (
                "VIOLATED" if _is_violation(b) else ("tight" if b["tight"] else "holds"))
            out.write(f"  {b['name']:<28}{_fmt(b['k'], 4)}{_fmt(b['lhs'])}{_fmt(b['rhs'])}"
                      f"{_fmt(b['residual'])}  {status}\n")
        for c in rec["conjectures"]:
            flag = "COUNTEREXAMPLE" if c["counterexample"] else "holds"
            out.write(f"  conjecture_{c['conjecture']:<17}{_fmt(c['min_k'], 4)}"
                      f"{'':14}{'':14}{_fmt(c['min_slack'])}  {flag}\n")


def dump(records: Iterable[dict], out, fmt: str, kind: str) -> None:
    if fmt == "json":
        dump_json(records, out)
    elif fmt == "csv":
        dump_csv(records, out, kind)
    elif fmt == "table":
        dump_table(records, out, kind)
    else:
        raise ValueError(f"unknown format {fmt!r}")


def dumps(records: Iterable[dict], fmt: str = "json", kind: str = "verify") -> str:
    buf = io.StringIO()
    dump(records, buf, fmt, kind)
    return buf.getvalue()

