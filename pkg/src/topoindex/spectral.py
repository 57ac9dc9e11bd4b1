"""Symmetric eigensolver and spectral invariants of graphs.

The eigensolver is a cyclic Jacobi iteration. It is slow compared to LAPACK but
deterministic and adequate for the graph sizes used here (n <= 64).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .degree_indices import degree_index
from .generators import complete, subdivision
from .graph import Graph, GraphError

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
CHARPOLY_MAX_N = 64


@dataclass(frozen=True)
class SpectralSummary:
    eigenvalues: np.ndarray  # non-increasing
    eigenvectors: np.ndarray = field(repr=False)  # column j belongs to eigenvalues[j]
    sweeps: int = 0

    @property
    def energy(self) -> float:
        return float(np.sum(np.abs(self.eigenvalues)))

    @property
    def frobenius_norm(self) -> float:
        return float(math.sqrt(np.sum(self.eigenvalues**2)))

    @property
    def spread(self) -> float:
        return float(self.eigenvalues[0] - self.eigenvalues[-1])

    @property
    def weights(self) -> np.ndarray:
        """``p[i, j] = U[i, j]**2``; rows and columns sum to one."""
        return self.eigenvectors**2


def eigen_symmetric(m: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS) -> SpectralSummary:
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Iterates until the off-diagonal Frobenius norm drops below
    ``tol * max(1, ||M||_F)``.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise GraphError(f"need a square matrix, got shape {a.shape}")
    n = a.shape[0]
    asym = np.abs(a - a.T)
    if n and asym.max() > 1e-12:
        i, j = np.unravel_index(int(np.argmax(asym)), asym.shape)
        raise GraphError(f"matrix is not symmetric: |M[{i},{j}] - M[{j},{i}]| = {asym[i, j]:.3g}")
    a = (a + a.T) / 2
    v = np.eye(n)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    sweeps = 0
    while sweeps < max_sweeps:
        off = _off_norm(a)
        if off <= threshold:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                app, aqq = a[p, p], a[q, q]
                g = 100.0 * abs(apq)
                if g == 0.0 or (sweeps > 4 and abs(app) + g == abs(app) and abs(aqq) + g == abs(aqq)):
                    a[p, q] = a[q, p] = 0.0
                    continue
                h = aqq - app
                if abs(h) + g == abs(h):
                    t = apq / h
                else:
                    theta = h / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, :] = a[:, p]
                a[q, :] = a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                v[:, p] = c * vp - s * v[:, q]
                v[:, q] = s * vp + c * v[:, q]
    else:
        off = _off_norm(a)
        if off > threshold:
            raise GraphError(f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal {off:.3g})")
    vals = np.diag(a).copy()
    order = np.argsort(-vals, kind="stable")
    return SpectralSummary(vals[order], v[:, order], sweeps)


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def adjacency_spectrum(g: Graph) -> SpectralSummary:
    return eigen_symmetric(g.adjacency_matrix())


def energy(g: Graph) -> float:
    return adjacency_spectrum(g).energy


def vertex_energies(g: Graph, spectrum: SpectralSummary | None = None) -> np.ndarray:
    """Per-vertex energies ``sum_j p_ij |lambda_j|``; they add up to the graph energy."""
    s = spectrum or adjacency_spectrum(g)
    return s.weights @ np.abs(s.eigenvalues)


def closed_walk_moment(g: Graph, v: int, k: int, spectrum: SpectralSummary | None = None) -> float:
    """Spectral count of closed ``k``-walks at ``v``: ``sum_j p_vj lambda_j^k``."""
    if k < 0:
        raise GraphError("walk length must be non-negative")
    s = spectrum or adjacency_spectrum(g)
    return float(s.weights[v] @ s.eigenvalues**k)


def closed_walk_count(g: Graph, v: int, k: int) -> int:
    """Exact count of closed ``k``-walks at ``v`` from integer matrix powers."""
    if k < 0:
        raise GraphError("walk length must be non-negative")
    a = np.zeros((g.n, g.n), dtype=object)
    for x, y in g.edges:
        a[x, y] = a[y, x] = 1
    row = np.zeros(g.n, dtype=object)
    row[v] = 1
    for _ in range(k):
        row = row.dot(a)
    return int(row[v])


def char_poly(g: Graph | np.ndarray) -> list:
    """Coefficients of ``det(x I - A)``, highest power first, by Faddeev-LeVerrier.

    Computed in floating point; coefficients within 1e-6 of an integer are
    returned as ``int``.
    """
    a = g.adjacency_matrix() if isinstance(g, Graph) else np.asarray(g, dtype=float)
    n = a.shape[0]
    if n > CHARPOLY_MAX_N:
        raise GraphError(f"char_poly is limited to n <= {CHARPOLY_MAX_N} (got {n})")
    coeffs = [1.0]
    mk = np.zeros_like(a)
    eye = np.eye(n)
    for k in range(1, n + 1):
        mk = a @ mk + coeffs[-1] * eye
        coeffs.append(-float(np.trace(a @ mk)) / k)
    return [_maybe_int(c) for c in coeffs]


def _maybe_int(c: float):
    r = round(c)
    return int(r) if abs(c - r) <= 1e-6 else c


def _poly_mul(p: Sequence, q: Sequence) -> list:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


@dataclass(frozen=True)
class CharPolyCheck:
    direct: list
    predicted: list

    @property
    def max_deviation(self) -> float:
        return max(abs(float(x) - float(y)) for x, y in zip(self.direct, self.predicted))


def subdivision_charpoly_check(g: Graph) -> CharPolyCheck:
    """Compare ``phi(S(G); x)`` with ``x^(m-n) phi(G; x^2 - r)`` for an r-regular G."""
    if not g.is_regular() or g.n == 0:
        raise GraphError("subdivision char-poly identity needs a regular graph")
    r = g.degrees[0]
    phi = char_poly(g)
    # Horner in x^2 - r, coefficient lists highest power first
    shift = [1, 0, -r]
    expanded = [0]
    for c in phi:
        expanded = _poly_mul(expanded, shift)
        expanded[-1] += c
    expanded = _strip_leading_zeros(expanded)
    e = g.m - g.n
    if e >= 0:
        predicted = expanded + [0] * e
    else:
        tail = expanded[len(expanded) + e:]
        if any(abs(float(t)) > 1e-6 for t in tail):
            raise GraphError("predicted polynomial is not divisible by x^(n-m)")
        predicted = expanded[: len(expanded) + e]
    direct = char_poly(subdivision(g))
    if len(direct) != len(predicted):
        raise GraphError(f"degree mismatch: {len(direct) - 1} vs {len(predicted) - 1}")
    return CharPolyCheck(direct, predicted)


def _strip_leading_zeros(p: list) -> list:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def skn_vertex_energy(n: int) -> tuple[float, float]:
    """Closed-form vertex energies of the subdivided complete graph ``S(K_n)``.

    Returns the value at an original vertex and at a subdividing vertex.
    """
    if n < 2:
        raise GraphError("need n >= 2")
    core = (n - 1) * math.sqrt(n - 2) + math.sqrt(2 * (n - 1))
    return core / n, 2 * core / (n * (n - 1))


def skn_vertex_energy_numeric(n: int) -> tuple[np.ndarray, np.ndarray]:
    g = subdivision(complete(n))
    e = vertex_energies(g)
    return e[:n], e[n:]


def sombor_matrix(g: Graph) -> np.ndarray:
    deg = g.degrees
    s = np.zeros((g.n, g.n))
    for u, v in g.edges:
        s[u, v] = s[v, u] = math.hypot(deg[u], deg[v])
    return s


@dataclass(frozen=True)
class SomborSummary:
    mu: np.ndarray
    sombor_energy: float
    spread: float
    frobenius_norm: float
    forgotten: int
    cs: float  # adjacency irregularity lambda_1 - 2m/n

    @property
    def mu1_bound(self) -> float:
        """``mu_1 + sqrt(2F - mu_1^2)``."""
        mu1 = float(self.mu[0])
        return mu1 + math.sqrt(max(0.0, 2 * self.forgotten - mu1 * mu1))


def sombor_spectrum(g: Graph) -> SomborSummary:
    s = eigen_symmetric(sombor_matrix(g))
    lam1 = float(adjacency_spectrum(g).eigenvalues[0]) if g.n else 0.0
    return SomborSummary(
        mu=s.eigenvalues,
        sombor_energy=s.energy,
        spread=s.spread,
        frobenius_norm=s.frobenius_norm,
        forgotten=int(degree_index(g, "F")),
        cs=lam1 - 2 * g.m / g.n if g.n else 0.0,
    )


def collatz_sinogowitz(g: Graph) -> float:
    """``CS(G) = lambda_1 - 2m/n``; zero exactly for regular graphs."""
    return float(adjacency_spectrum(g).eigenvalues[0]) - 2 * g.m / g.n
