"""Adjacency, Laplacian and signless Laplacian spectra via cyclic Jacobi rotations."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from qbounds.graph import Graph, zagreb_m1

KINDS = ("adjacency", "laplacian", "signless_laplacian")

JACOBI_REL_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
DISTINCT_REL_GAP = 1e-8


class ConvergenceError(RuntimeError):
    def __init__(self, residual: float, sweeps: int):
        super().__init__(f"Jacobi did not converge after {sweeps} sweeps (off-diagonal norm {residual:.3e})")
        self.residual = residual
        self.sweeps = sweeps


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted nonincreasing, with the off-diagonal residual of the solve."""

    kind: str
    values: np.ndarray
    tol: float

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown spectrum kind {self.kind!r}")
        self.values.setflags(write=False)

    def __len__(self):
        return len(self.values)


def build_matrix(g: Graph, kind: str) -> np.ndarray:
    """A, L = D - A or Q = D + A as an int64 matrix."""
    a = g.adjacency.astype(np.int64)
    if kind == "adjacency":
        return a
    d = np.diag(np.asarray(g.degrees, dtype=np.int64))
    if kind == "laplacian":
        return d - a
    if kind == "signless_laplacian":
        return d + a
    raise ValueError(f"unknown matrix kind {kind!r}")


@njit(cache=True)
def _offdiag_norm(a):
    n = a.shape[0]
    s = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            s += a[p, q] * a[p, q]
    return math.sqrt(2.0 * s)


@njit(cache=True)
def _jacobi(a, rel_tol, max_sweeps):
    # In-place cyclic Jacobi on a symmetric float64 matrix.
    # Returns (off-diagonal Frobenius norm, sweeps used); sweeps = -1 on failure.
    n = a.shape[0]
    target = rel_tol * (1.0 + math.sqrt(np.sum(a * a)))
    off = _offdiag_norm(a)
    sweep = 0
    while off > target:
        if sweep == max_sweeps:
            return off, -1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for r in range(n):
                    arp = a[r, p]
                    arq = a[r, q]
                    a[r, p] = c * arp - s * arq
                    a[r, q] = s * arp + c * arq
                for r in range(n):
                    apr = a[p, r]
                    aqr = a[q, r]
                    a[p, r] = c * apr - s * aqr
                    a[q, r] = s * apr + c * aqr
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweep += 1
        off = _offdiag_norm(a)
    return off, sweep


def eigenvalues(matrix, kind: str = "signless_laplacian") -> Spectrum:
    """All eigenvalues of a real symmetric matrix.

    Sweeps run until the off-diagonal Frobenius norm is at most
    ``1e-12 * (1 + ||matrix||_F)``; ConvergenceError after 100 sweeps.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be symmetric")
    off, sweeps = _jacobi(a, JACOBI_REL_TOL, JACOBI_MAX_SWEEPS)
    if sweeps < 0:
        raise ConvergenceError(off, JACOBI_MAX_SWEEPS)
    values = np.sort(np.diag(a).copy())[::-1].copy()
    return Spectrum(kind, values, float(off))


def spectrum(g: Graph, kind: str = "signless_laplacian") -> Spectrum:
    return eigenvalues(build_matrix(g, kind), kind)


def distinct_count(s: Spectrum) -> int:
    """Number of clusters of sorted eigenvalues, adjacent gaps <= 1e-8 * max(1, |values[0]|) merged."""
    v = s.values
    if len(v) == 0:
        return 0
    tau = DISTINCT_REL_GAP * max(1.0, abs(float(v[0])))
    return 1 + int(np.count_nonzero(-np.diff(v) > tau))


def _check(s: Spectrum, k: int, kind: str) -> None:
    if s.kind != kind:
        raise ValueError(f"expected a {kind} spectrum, got {s.kind}")
    if not 1 <= k <= len(s.values):
        raise ValueError(f"k={k} outside 1..{len(s.values)}")


def s_plus_k(s: Spectrum, k: int) -> float:
    """Sum of the k largest signless Laplacian eigenvalues."""
    _check(s, k, "signless_laplacian")
    return float(np.sum(s.values[:k]))


def l_k(s: Spectrum, k: int) -> float:
    """Sum of the k smallest signless Laplacian eigenvalues."""
    _check(s, k, "signless_laplacian")
    return float(np.sum(s.values[-k:]))


def s_k(s: Spectrum, k: int) -> float:
    """Sum of the k largest Laplacian eigenvalues."""
    _check(s, k, "laplacian")
    return float(np.sum(s.values[:k]))


def q_index(s: Spectrum) -> float:
    if s.kind != "signless_laplacian":
        raise ValueError(f"expected a signless_laplacian spectrum, got {s.kind}")
    return float(s.values[0])


def energy(s: Spectrum, avg_degree: float) -> float:
    """Sum of |value - avg_degree|; pass 0 with an adjacency spectrum for the ordinary graph energy."""
    return float(np.sum(np.abs(s.values - avg_degree)))


def moment_identities(g: Graph, s: Spectrum) -> tuple[float, float]:
    """Residuals |sum q - 2m| and |sum q^2 - (2m + M1)|."""
    if s.kind != "signless_laplacian":
        raise ValueError(f"expected a signless_laplacian spectrum, got {s.kind}")
    v = s.values
    return (
        abs(float(np.sum(v)) - 2 * g.m),
        abs(float(np.dot(v, v)) - (2 * g.m + zagreb_m1(g))),
    )
