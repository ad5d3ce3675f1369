"""Zagreb-index, eigenvalue-sum, Q-index and signless Laplacian energy bounds.

Every bound is evaluated as a :class:`BoundReport`. ``residual`` is oriented so
that a nonnegative value means the inequality holds (``rhs - lhs`` for upper
bounds, ``lhs - rhs`` for lower bounds). All bounds require a connected graph
with at least two vertices; otherwise the report carries
``preconditions_met=False`` and no values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from qbounds.graph import Graph, diameter, is_connected, zagreb_m1
from qbounds.spectra import Spectrum, distinct_count, l_k, q_index, s_k, s_plus_k, spectrum

TIGHT_TOL = 1e-8
SOUND_TOL = 1e-9
RADICAND_TOL = 1e-9

# Bounds whose inequality fails on some inputs, mapped to a note. Checked against
# exact spectra and arithmetic; nothing is listed.
ERRATA: dict[str, str] = {}


@dataclass(frozen=True)
class BoundReport:
    name: str
    k: int | None
    lhs: float | None
    rhs: float | None
    residual: float | None
    tight: bool
    preconditions_met: bool
    reason: str = ""

    @property
    def violated(self) -> bool:
        return self.preconditions_met and self.residual < -SOUND_TOL * max(1.0, abs(self.rhs))


@dataclass(frozen=True)
class ConjectureReport:
    """Slack ``m + C(k+1, 2) - (sum of k largest eigenvalues)`` for every k in 1..n."""

    conjecture: str
    sums: tuple[float, ...]
    limits: tuple[int, ...]
    verdicts: tuple[float, ...]
    min_slack: float
    min_k: int

    @property
    def counterexample(self) -> bool:
        return self.min_slack < -SOUND_TOL * max(1, self.limits[self.min_k - 1])


@dataclass(frozen=True)
class GraphData:
    """A graph together with the invariants and spectra the bounds share."""

    graph: Graph
    q: Spectrum
    lap: Spectrum

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @cached_property
    def max_degree(self) -> int:
        return max(self.graph.degrees)

    @cached_property
    def min_degree(self) -> int:
        return min(self.graph.degrees)

    @cached_property
    def m1(self) -> int:
        return zagreb_m1(self.graph)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.graph)

    @cached_property
    def diameter(self) -> int | None:
        return diameter(self.graph) if self.connected else None

    @cached_property
    def distinct(self) -> int:
        return distinct_count(self.q)

    @cached_property
    def q_index(self) -> float:
        return q_index(self.q)


def prepare(g: Graph) -> GraphData:
    return GraphData(g, spectrum(g, "signless_laplacian"), spectrum(g, "laplacian"))


def _data(obj) -> GraphData:
    return obj if isinstance(obj, GraphData) else prepare(obj)


def _gate(d: GraphData, k: int | None = None) -> str:
    if d.n < 2:
        return "requires n >= 2"
    if not d.connected:
        return "requires a connected graph"
    if k is not None and not 1 <= k <= d.n:
        return f"requires 1 <= k <= {d.n}"
    return ""


def _skipped(name: str, k: int | None, reason: str) -> BoundReport:
    return BoundReport(name, k, None, None, None, False, False, reason)


def _report(name, k, lhs, rhs, tol, lower=False) -> BoundReport:
    lhs, rhs = float(lhs), float(rhs)
    residual = lhs - rhs if lower else rhs - lhs
    tight = abs(residual) <= tol * max(1.0, abs(rhs))
    return BoundReport(name, k, lhs, rhs, residual, tight, True)


def _root(x: float, scale: float) -> float:
    """sqrt with rounding-noise negatives clamped to 0; anything more negative is a formula bug."""
    if x >= 0:
        return math.sqrt(x)
    if x >= -RADICAND_TOL * max(1.0, abs(scale)):
        return 0.0
    raise ArithmeticError(f"negative radicand {x!r} (scale {scale!r})")


# -- Zagreb index -----------------------------------------------------------


def bound_m1_polarization(obj, tol: float = TIGHT_TOL) -> BoundReport:
    """M1 <= 4m^2/n + (n/4)(Delta - delta)^2."""
    name = "bound_m1_polarization"
    d = _data(obj)
    if reason := _gate(d):
        return _skipped(name, None, reason)
    n, m = d.n, d.m
    rhs = 4 * m * m / n + n / 4 * (d.max_degree - d.min_degree) ** 2
    return _report(name, None, d.m1, rhs, tol)


def bound_m1_polya_szego(obj, tol: float = TIGHT_TOL) -> BoundReport:
    """M1 <= m^2 (Delta + delta)^2 / (n Delta delta)."""
    name = "bound_m1_polya_szego"
    d = _data(obj)
    if reason := _gate(d):
        return _skipped(name, None, reason)
    hi, lo = d.max_degree, d.min_degree
    rhs = d.m**2 * (hi + lo) ** 2 / (d.n * hi * lo)
    return _report(name, None, d.m1, rhs, tol)


def bound_m1_decaen(obj, tol: float = TIGHT_TOL) -> BoundReport:
    """M1 <= m (2m/(n-1) + n - 2); tight exactly at stars and complete graphs."""
    name = "bound_m1_decaen"
    d = _data(obj)
    if reason := _gate(d):
        return _skipped(name, None, reason)
    n, m = d.n, d.m
    return _report(name, None, d.m1, m * (2 * m / (n - 1) + n - 2), tol)


# -- sums of k extreme Q-eigenvalues ---------------------------------------


def _polarization_term(d: GraphData, k: int) -> float:
    n, m = d.n, d.m
    spread = d.max_degree - d.min_degree
    return math.sqrt(k * (n - k) * (8 * m * n + n * n * spread * spread)) / (2 * n)


def _polya_szego_term(d: GraphData, k: int) -> float:
    n, m = d.n, d.m
    hi, lo = d.max_degree, d.min_degree
    inner = 2 * hi * lo * (n - 2 * m) + m * (hi + lo) ** 2
    scale = m * k * (n - k) * (2 * hi * lo * (n + 2 * m) + m * (hi + lo) ** 2)
    return _root(m * k * (n - k) * inner, scale) / (n * math.sqrt(hi * lo))


def _upper_sum(name, term, obj, k, tol):
    d = _data(obj)
    if reason := _gate(d, k):
        return _skipped(name, k, reason)
    n, m = d.n, d.m
    # k = n: both sides equal the trace 2m
    rhs = 2 * m if k == n else 2 * m * k / n + term(d, k)
    return _report(name, k, s_plus_k(d.q, k), rhs, tol)


def _lower_sum(name, term, obj, k, tol):
    d = _data(obj)
    if reason := _gate(d, k):
        return _skipped(name, k, reason)
    n, m = d.n, d.m
    rhs = 2 * m if k == n else 2 * m * k / n - term(d, k)
    return _report(name, k, l_k(d.q, k), rhs, tol, lower=True)


def bound_skplus_polarization(obj, k: int, tol: float = TIGHT_TOL) -> BoundReport:
    """S+_k <= 2mk/n + sqrt(k(n-k)(8mn + n^2 (Delta-delta)^2)) / (2n)."""
    return _upper_sum("bound_skplus_polarization", _polarization_term, obj, k, tol)


def bound_lk_polarization(obj, k: int, tol: float = TIGHT_TOL) -> BoundReport:
    """L_k >= 2mk/n - sqrt(k(n-k)(8mn + n^2 (Delta-delta)^2)) / (2n)."""
    return _lower_sum("bound_lk_polarization", _polarization_term, obj, k, tol)


def bound_skplus_polya_szego(obj, k: int, tol: float = TIGHT_TOL) -> BoundReport:
    """S+_k <= 2mk/n + sqrt(mk(n-k)(2 Delta delta (n-2m) + m(Delta+delta)^2)) / (n sqrt(Delta delta))."""
    return _upper_sum("bound_skplus_polya_szego", _polya_szego_term, obj, k, tol)


def bound_lk_polya_szego(obj, k: int, tol: float = TIGHT_TOL) -> BoundReport:
    return _lower_sum("bound_lk_polya_szego", _polya_szego_term, obj, k, tol)


# -- Q-index ----------------------------------------------------------------


def bound_qindex_polarization(obj, tol: float = TIGHT_TOL) -> BoundReport:
    name = "bound_qindex_polarization"
    d = _data(obj)
    if reason := _gate(d):
        return _skipped(name, None, reason)
    return _report(name, None, d.q_index, 2 * d.m / d.n + _polarization_term(d, 1), tol)


def bound_qindex_polya_szego(obj, tol: float = TIGHT_TOL) -> BoundReport:
    name = "bound_qindex_polya_szego"
    d = _data(obj)
    if reason := _gate(d):
        return _skipped(name, None, reason)
    return _report(name, None, d.q_index, 2 * d.m / d.n + _polya_szego_term(d, 1), tol)


def bound_qindex_hong(obj, tol: float = TIGHT_TOL) -> BoundReport:
    """q(G) <= 2m/(n-1) + n - 2."""
    name = "bound_qindex_hong"
    d = _data(obj)
    if reason := _gate(d):
        return _skipped(name, None, reason)
    return _report(name, None, d.q_index, 2 * d.m / (d.n - 1) + d.n - 2, tol)


# -- signless Laplacian energy ---------------------------------------------


def _qe(d: GraphData) -> float:
    avg = 2 * d.m / d.n
    return float(sum(abs(v - avg) for v in d.q.values))


def bound_qe_polarization(obj, tol: float = TIGHT_TOL) -> BoundReport:
    name = "bound_qe_polarization"
    d = _data(obj)
    if reason := _gate(d):
        return _skipped(name, None, reason)
    n, m = d.n, d.m
    excess = (d.q_index - 2 * m / n) ** 2
    spread = n / 4 * (d.max_degree - d.min_degree) ** 2
    root = _root((n - 1) * (2 * m + spread - excess), (n - 1) * (2 * m + spread + excess))
    return _report(name, None, _qe(d), 2 * m / (n * (n - 1)) + n - 2 + root, tol)


def bound_qe_decaen(obj, tol: float = TIGHT_TOL) -> BoundReport:
    name = "bound_qe_decaen"
    d = _data(obj)
    if reason := _gate(d):
        return _skipped(name, None, reason)
    n, m = d.n, d.m
    excess = (d.q_index - 2 * m / n) ** 2
    base = m * n + 2 * m * m * (2 - n) / (n * (n - 1))
    root = _root((n - 1) * (base - excess), (n - 1) * (m * n + 2 * m * m + excess))
    return _report(name, None, _qe(d), 2 * m / (n * (n - 1)) + n - 2 + root, tol)


# -- structural statements --------------------------------------------------


def check_diameter_eigs(obj, tol: float = TIGHT_TOL) -> BoundReport:
    """D <= e(G) - 1 where e(G) is the number of distinct Q-eigenvalues."""
    name = "check_diameter_eigs"
    d = _data(obj)
    if reason := _gate(d):
        return _skipped(name, None, reason)
    return _report(name, None, d.diameter, d.distinct - 1, tol)


def check_two_eigs_complete(obj, tol: float = TIGHT_TOL) -> BoundReport:
    """e(G) = 2 exactly when G is complete.

    lhs is 1 when there are two distinct Q-eigenvalues, rhs is 1 when every
    pair is adjacent; residual is 0 when they agree and -1 otherwise.
    """
    name = "check_two_eigs_complete"
    d = _data(obj)
    if reason := _gate(d):
        return _skipped(name, None, reason)
    two = float(d.distinct == 2)
    complete = float(d.graph.is_complete())
    agree = two == complete
    return BoundReport(name, None, two, complete, 0.0 if agree else -1.0, agree, True)


# -- conjectures ------------------------------------------------------------


def conjecture_check(obj, which: str) -> ConjectureReport:
    """Slack of S_k <= m + C(k+1,2) (brouwer, Laplacian) or S+_k <= m + C(k+1,2) (ashraf, Q)."""
    d = _data(obj)
    if which == "brouwer":
        spec, partial = d.lap, s_k
    elif which == "ashraf":
        spec, partial = d.q, s_plus_k
    else:
        raise ValueError(f"unknown conjecture {which!r}")
    sums = tuple(partial(spec, k) for k in range(1, d.n + 1))
    limits = tuple(d.m + k * (k + 1) // 2 for k in range(1, d.n + 1))
    slack = tuple(lim - s for lim, s in zip(limits, sums))
    i = min(range(d.n), key=slack.__getitem__)
    return ConjectureReport(which, sums, limits, slack, slack[i], i + 1)


# -- registry ---------------------------------------------------------------

SCALAR_BOUNDS: dict[str, Callable[..., BoundReport]] = {
    "bound_m1_polarization": bound_m1_polarization,
    "bound_m1_polya_szego": bound_m1_polya_szego,
    "bound_m1_decaen": bound_m1_decaen,
    "bound_qindex_polarization": bound_qindex_polarization,
    "bound_qindex_polya_szego": bound_qindex_polya_szego,
    "bound_qindex_hong": bound_qindex_hong,
    "bound_qe_polarization": bound_qe_polarization,
    "bound_qe_decaen": bound_qe_decaen,
    "check_diameter_eigs": check_diameter_eigs,
    "check_two_eigs_complete": check_two_eigs_complete,
}
K_BOUNDS: dict[str, Callable[..., BoundReport]] = {
    "bound_skplus_polarization": bound_skplus_polarization,
    "bound_lk_polarization": bound_lk_polarization,
    "bound_skplus_polya_szego": bound_skplus_polya_szego,
    "bound_lk_polya_szego": bound_lk_polya_szego,
}
CONJECTURES = ("brouwer", "ashraf")


def registered_count(n: int) -> int:
    return len(SCALAR_BOUNDS) + len(K_BOUNDS) * n


def evaluate_all(obj, tol: float = TIGHT_TOL) -> tuple[list[BoundReport], list[ConjectureReport]]:
    """Every bound (k-parameterized ones for k = 1..n) and both conjectures, sharing one solve per matrix."""
    d = _data(obj)
    reports = [fn(d, tol=tol) for fn in SCALAR_BOUNDS.values()]
    for fn in K_BOUNDS.values():
        reports.extend(fn(d, k, tol=tol) for k in range(1, d.n + 1))
    return reports, [conjecture_check(d, c) for c in CONJECTURES]
