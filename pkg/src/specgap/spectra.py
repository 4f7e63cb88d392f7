"""Laplacian spectra, Fiedler vectors, Rayleigh quotients and relaxation times."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import TOL
from .errors import Disconnected, LengthMismatch, NoConvergence, NotSymmetric, ZeroVector
from .graph import Graph, is_connected


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def laplacian_matrix(g: Graph) -> np.ndarray:
    a = adjacency_matrix(g)
    return np.diag(a.sum(axis=1)) - a


def _as_vector(g: Graph, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise LengthMismatch(f"weighting has length {x.size}, graph has {g.n} vertices")
    return x


def laplacian_quadratic(g: Graph, x) -> float:
    """x^T L x evaluated as the edge sum of squared differences."""
    x = _as_vector(g, x)
    e = np.asarray(g.edges(), dtype=int).reshape(-1, 2)
    return float(np.sum((x[e[:, 0]] - x[e[:, 1]]) ** 2))


def rayleigh_quotient(g: Graph, x) -> float:
    x = _as_vector(g, x)
    nrm = float(x @ x)
    if nrm == 0.0:
        raise ZeroVector("Rayleigh quotient of the zero vector")
    return laplacian_quadratic(g, x) / nrm


# ---------------------------------------------------------------------------
# eigensolvers

def jacobi_eigh(m, tol: float = TOL.eig, max_sweeps: int = 100):
    """Cyclic Jacobi eigenvalue iteration for a dense symmetric matrix.

    Sweeps the strictly upper triangle row by row, annihilating each entry
    with a plane rotation, until the off-diagonal Frobenius norm drops below
    ``tol * ||m||_F``.  Returns ascending eigenvalues and the matching
    orthonormal eigenvectors as columns.
    """
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric("matrix must be square")
    scale = np.linalg.norm(a)
    if np.max(np.abs(a - a.T), initial=0.0) > TOL.symmetric * max(scale, 1.0):
        raise NotSymmetric("matrix is not symmetric")
    a = (a + a.T) / 2
    n = a.shape[0]
    v = np.eye(n)
    target = tol * scale
    def off_norm() -> float:
        return math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))

    for _ in range(max_sweeps):
        if off_norm() <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-150 * abs(diff):
                    t = apq / diff  # theta would overflow; tan ~ 1 / (2 theta)
                else:
                    theta = diff / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap = a[:, p].copy()
                aq = a[:, q]
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap = a[p, :].copy()
                aq = a[q, :]
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                v[:, p] = c * vp - s * v[:, q]
                v[:, q] = s * vp + c * v[:, q]
    else:
        if off_norm() > target:
            raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def eigen_symmetric(m, method: str = "jacobi"):
    """Ascending eigenvalues and orthonormal eigenvectors of a symmetric matrix.

    ``method="jacobi"`` runs the in-package cyclic Jacobi solver;
    ``method="lapack"`` delegates to ``numpy.linalg.eigh`` (used for the
    larger dense problems).
    """
    if method == "jacobi":
        return jacobi_eigh(m)
    if method == "lapack":
        a = np.asarray(m, dtype=float)
        if np.max(np.abs(a - a.T), initial=0.0) > TOL.symmetric * max(np.linalg.norm(a), 1.0):
            raise NotSymmetric("matrix is not symmetric")
        return np.linalg.eigh(a)
    raise ValueError(f"unknown eigen method {method!r}")


# ---------------------------------------------------------------------------
# reports

@dataclass
class SpectralReport:
    mu: float
    laplacian_spectrum: np.ndarray
    fiedler: np.ndarray
    adj_lambda2: float
    tau: float
    degenerate_fiedler: bool = False

    @property
    def tau_is_infinite(self) -> bool:
        return math.isinf(self.tau)


def normalize_sign(x: np.ndarray) -> np.ndarray:
    """Flip so the first entry of (numerically) largest magnitude is positive."""
    mags = np.abs(x)
    i = int(np.argmax(mags >= mags.max() - 1e-9))
    return -x if x[i] < 0 else x


def spectral_report(g: Graph, method: str = "lapack") -> SpectralReport:
    if not is_connected(g):
        raise Disconnected("spectral report requires a connected graph")
    if g.n == 1:
        return SpectralReport(0.0, np.zeros(1), np.zeros(1), 0.0, math.inf, True)
    w, vecs = eigen_symmetric(laplacian_matrix(g), method)
    fiedler = normalize_sign(vecs[:, 1] / np.linalg.norm(vecs[:, 1]))
    degenerate = g.n > 2 and (w[2] - w[1]) < TOL.degenerate
    aw, _ = eigen_symmetric(adjacency_matrix(g), method)
    return SpectralReport(
        mu=float(w[1]),
        laplacian_spectrum=w,
        fiedler=fiedler,
        adj_lambda2=float(aw[-2]),
        tau=relaxation_time(g, method),
        degenerate_fiedler=bool(degenerate),
    )


def algebraic_connectivity(g: Graph) -> float:
    """Second-smallest Laplacian eigenvalue (0 for disconnected graphs)."""
    if g.n == 1:
        return 0.0
    return float(np.linalg.eigvalsh(laplacian_matrix(g))[1])


def path_mu_closed_form(h: int) -> float:
    if h < 2:
        raise ValueError("path needs at least 2 vertices")
    return 2.0 * (1.0 - math.cos(math.pi / h))


def transition_eta2(g: Graph, method: str = "lapack") -> float:
    """Second-largest eigenvalue of D^-1 A, via the similar matrix D^-1/2 A D^-1/2."""
    a = adjacency_matrix(g)
    d = a.sum(axis=1)
    s = 1.0 / np.sqrt(d)
    w, _ = eigen_symmetric(a * s[:, None] * s[None, :], method)
    return float(w[-2])


def relaxation_time(g: Graph, method: str = "lapack") -> float:
    if not is_connected(g):
        raise Disconnected("relaxation time requires a connected graph")
    if g.n < 2:
        raise ValueError("relaxation time needs at least 2 vertices")
    gap = 1.0 - transition_eta2(g, method)
    if abs(gap) < TOL.infinite_tau:
        return math.inf
    return 1.0 / gap
