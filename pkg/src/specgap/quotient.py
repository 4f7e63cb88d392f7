"""Equitable partitions, divisor matrices and quotient-based algebraic connectivity.

For the path-like families the column partition is equitable and the
Fiedler vector is constant on columns, so mu is an eigenvalue of the
(small, banded) symmetrised quotient Laplacian.  Large quotients are
handled by bisection on an LDL^T inertia count, which is O(k * w^2) per
probe for bandwidth w.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .config import TOL
from .errors import BadPartition, NotEquitable
from .graph import Graph

DENSE_LIMIT = 2000  # quotient orders above this use banded bisection


@dataclass(frozen=True)
class Partition:
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(tuple(int(v) for v in c) for c in self.cells))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(tuple((v,) for v in range(n)))

    def cell_index(self, n: int) -> np.ndarray:
        """Cell id per vertex; raises BadPartition unless the cells tile range(n)."""
        idx = np.full(n, -1, dtype=int)
        for i, c in enumerate(self.cells):
            if not c:
                raise BadPartition(f"cell {i} is empty")
            for v in c:
                if not 0 <= v < n:
                    raise BadPartition(f"vertex {v} outside 0..{n - 1}")
                if idx[v] >= 0:
                    raise BadPartition(f"vertex {v} appears in two cells")
                idx[v] = i
        if (idx < 0).any():
            raise BadPartition(f"vertex {int(np.argmax(idx < 0))} is in no cell")
        return idx


@dataclass
class QuotientMatrix:
    """Divisor matrix kept sparse: ``entries[(i, j)]`` = neighbours in C_j of a
    vertex of C_i.  Dense views are built on demand."""

    k: int
    entries: dict[tuple[int, int], int]
    sizes: np.ndarray
    degrees: np.ndarray  # per-cell vertex degree

    @property
    def b(self) -> np.ndarray:
        m = np.zeros((self.k, self.k))
        for (i, j), c in self.entries.items():
            m[i, j] = c
        return m

    @property
    def symmetrized(self) -> np.ndarray:
        r = np.sqrt(self.sizes)
        return self.b * r[:, None] / r[None, :]

    @property
    def laplacian(self) -> np.ndarray:
        """L_B = D - B (row form, not symmetric)."""
        return np.diag(self.degrees) - self.b

    @property
    def sym_laplacian(self) -> np.ndarray:
        s = np.diag(self.degrees) - self.symmetrized
        return (s + s.T) / 2

    def sym_laplacian_band(self) -> list[list[float]]:
        """Upper band rows of the symmetrised Laplacian quotient."""
        w = max((abs(i - j) for i, j in self.entries), default=0)
        w = max(w, 1)
        rows = [[0.0] * (w + 1) for _ in range(self.k)]
        for i in range(self.k):
            rows[i][0] = float(self.degrees[i])
        for (i, j), c in self.entries.items():
            if j < i:
                continue
            # S_ij = sqrt(B_ij * B_ji) for an equitable partition
            val = math.sqrt(c * self.entries[(j, i)])
            rows[i][j - i] -= val
        return rows


def _counts(g: Graph, p: Partition) -> tuple[dict[tuple[int, int], int], bool]:
    idx = p.cell_index(g.n)
    entries: dict[tuple[int, int], int] = {}
    ok = True
    for i, cell in enumerate(p.cells):
        ref = None
        for v in cell:
            row: dict[int, int] = {}
            for u in g.adj[v]:
                j = int(idx[u])
                row[j] = row.get(j, 0) + 1
            if ref is None:
                ref = row
                for j, c in row.items():
                    entries[(i, j)] = c
            elif row != ref:
                ok = False
    return entries, ok


def is_equitable(g: Graph, p: Partition) -> bool:
    return _counts(g, p)[1]


def quotient_matrix(g: Graph, p: Partition) -> QuotientMatrix:
    entries, ok = _counts(g, p)
    if not ok:
        raise NotEquitable("partition is not equitable")
    k = len(p)
    deg = np.zeros(k)
    for (i, _), c in entries.items():
        deg[i] += c
    return QuotientMatrix(k, entries, np.asarray(p.sizes, dtype=float), deg)


def _bandwidth(m: np.ndarray) -> int:
    nz = np.argwhere(np.abs(m) > 0)
    return int(np.max(np.abs(nz[:, 0] - nz[:, 1]), initial=0))


def _band_rows(m: np.ndarray, w: int) -> list[list[float]]:
    """Upper band storage: rows[i][j] = m[i, i + j] for j in 0..w."""
    k = m.shape[0]
    return [[float(m[i, i + j]) if i + j < k else 0.0 for j in range(w + 1)] for i in range(k)]


def count_below(band: list[list[float]], sigma: float) -> int:
    """Number of eigenvalues of the banded symmetric matrix strictly below sigma.

    Sylvester inertia of M - sigma*I through an unpivoted LDL^T
    factorisation restricted to the band; exact zero pivots are nudged
    as in the classical Sturm recurrence.
    """
    k = len(band)
    w = len(band[0]) - 1
    tiny = 1e-300
    neg = 0
    if w == 1:
        d_prev = 1.0
        e_prev = 0.0
        for i in range(k):
            d = band[i][0] - sigma - e_prev * e_prev / d_prev
            if d == 0.0:
                d = -tiny
            if d < 0.0:
                neg += 1
            d_prev = d
            e_prev = band[i][1]
        return neg
    # general band: sliding window holding rows i..i+w of the Schur complement
    win = [list(r) for r in band[: w + 1]]
    nxt = w + 1
    for _ in range(k):
        row = win.pop(0)
        d = row[0] - sigma
        if d == 0.0:
            d = -tiny
        if d < 0.0:
            neg += 1
        for a in range(1, min(w, len(win)) + 1):
            la = row[a]
            if la == 0.0:
                continue
            f = la / d
            r = win[a - 1]
            for b in range(a, w + 1):
                r[b - a] -= f * row[b]
        if nxt < k:
            win.append(list(band[nxt]))
            nxt += 1
    return neg


def count_below_laplacian_path(left: Sequence[float], right: Sequence[float], sigma: float) -> int:
    """Eigenvalues below sigma of a tridiagonal Laplacian quotient.

    Rows are ``[-l_i, l_i + r_i, -r_i]`` in divisor (row) form, where
    l_i/r_i count neighbours in the previous/next cell.  Writing each LDL^T
    pivot as d_i = r_i + e_i gives e_i = l_i e_(i-1) / d_(i-1) - sigma, which
    never forms the catastrophic difference (l_i + r_i) - l_i r_(i-1) / d
    and so keeps relative accuracy for eigenvalues of order 1e-10.
    """
    tiny = 1e-300
    neg = 0
    e = -sigma
    for i in range(len(right)):
        if i:
            e = left[i] * e / d - sigma
        d = right[i] + e
        if d == 0.0:
            d = -tiny
        if d < 0.0:
            neg += 1
    return neg


def _bisect(count, kth: int, hi: float, lo: float = 0.0) -> float:
    """k-th smallest (0-based) eigenvalue in [lo, hi] from an eigenvalue-count
    oracle.

    The stopping rule is relative so tiny eigenvalues (mu ~ n^-2) keep
    full precision.  With lo = 0 (positive semidefinite input) the upper
    end is first pulled down by factors of 4 towards the target.
    """
    while count(hi) <= kth:
        hi = 2.0 * hi if hi > 0 else hi + 1.0
    if lo == 0.0:
        while hi > 1e-280 and count(hi / 4) > kth:
            hi /= 4
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if count(mid) > kth:
            hi = mid
        else:
            lo = mid
        if hi - lo <= TOL.bisection * 1e-3 * max(abs(hi), abs(lo)):
            break
    return 0.5 * (lo + hi)


def _sturm_kth(band: list[list[float]], kth: int, hi: float, lo: float = 0.0) -> float:
    return _bisect(lambda s: count_below(band, s), kth, hi, lo)


def second_smallest_banded(m: np.ndarray) -> float:
    """Second-smallest eigenvalue of a general symmetric banded matrix."""
    w = max(_bandwidth(m), 1)
    bound = float(np.max(np.sum(np.abs(m), axis=1)))  # Gershgorin
    return _sturm_kth(_band_rows(m, w), 1, bound + 1.0, -bound - 1.0)


def mu_from_quotient(g: Graph, p: Partition, method: str = "auto") -> float:
    """Second-smallest eigenvalue of the symmetrised quotient Laplacian.

    ``method``: "dense" (LAPACK), "banded" (Sturm bisection) or "auto"
    (dense up to DENSE_LIMIT cells).
    """
    q = quotient_matrix(g, p)
    if q.k < 2:
        raise NotEquitable("quotient has a single cell; mu is not carried by it")
    if method == "dense" or (method == "auto" and q.k <= DENSE_LIMIT):
        return float(np.linalg.eigvalsh(q.sym_laplacian)[1])
    if all(abs(i - j) <= 1 for i, j in q.entries):
        left = [float(q.entries.get((i, i - 1), 0)) for i in range(q.k)]
        right = [float(q.entries.get((i, i + 1), 0)) for i in range(q.k)]
        bound = 2.0 * float(np.max(q.degrees))
        return _bisect(lambda s: count_below_laplacian_path(left, right, s), 1, bound + 1.0)
    band = q.sym_laplacian_band()
    bound = 2.0 * float(np.max(q.degrees))  # Gershgorin
    return _sturm_kth(band, 1, bound + 1.0)


# ---------------------------------------------------------------------------
# asymptotics

@dataclass(frozen=True)
class AsymptoticsRow:
    n: int
    mu: float
    mu_ratio: float
    tau_ratio: float


def asymptotics_row(n: int, family: str = "cubic-gn", dense_limit: int = 2000) -> AsymptoticsRow:
    from .families import family_graph, family_partition
    from .spectra import algebraic_connectivity

    g = family_graph(family, n)
    k = g.degree(0)
    if n > dense_limit:
        mu = mu_from_quotient(g, family_partition(family, n))
    else:
        mu = algebraic_connectivity(g)
    scale = 2.0 * math.pi ** 2 / n ** 2
    tau = k / mu  # regular graphs: 1 - eta_2 = mu / k
    return AsymptoticsRow(n, mu, mu / scale, tau * 2.0 * math.pi ** 2 / (3.0 * n ** 2))


def asymptotics_table(n_list: Iterable[int], family: str = "cubic-gn", jobs: int = 1) -> list[AsymptoticsRow]:
    ns = list(n_list)
    if jobs > 1 and len(ns) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(asymptotics_row, ns, [family] * len(ns)))
    return [asymptotics_row(n, family) for n in ns]


def fmt12(x: float) -> str:
    return f"{x:#.12g}"


def asymptotics_csv(rows: Sequence[AsymptoticsRow]) -> str:
    out = ["n,mu,mu_ratio,tau_ratio"]
    out += [f"{r.n},{fmt12(r.mu)},{fmt12(r.mu_ratio)},{fmt12(r.tau_ratio)}" for r in rows]
    return "\n".join(out) + "\n"
