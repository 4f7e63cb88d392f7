"""Elementary edge switches, properness w.r.t. a Fiedler weighting, and a
mu-descent that only ever applies proper, connectivity-preserving moves.

A switch sw(a, b, c, d) trades the edges ab, cd for ac, bd.  For any
weighting rho the quadratic form drops by exactly
2 (rho_a - rho_d)(rho_c - rho_b), so a move with rho_a >= rho_d and
rho_c >= rho_b (a *proper* move) cannot raise the Rayleigh quotient of the
Fiedler vector and hence cannot raise mu.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .config import TOL
from .errors import Disconnected, InvalidMove
from .graph import Graph, is_connected
from .spectra import spectral_report


@dataclass(frozen=True, order=True)
class SwitchMove:
    a: int
    b: int
    c: int
    d: int
    predicted_delta: float = field(default=0.0, compare=False)

    @property
    def quad(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def representations(self) -> list[tuple[int, int, int, int]]:
        """The four quadruples describing the same edge exchange."""
        a, b, c, d = self.quad
        return [(a, b, c, d), (c, d, a, b), (b, a, d, c), (d, c, b, a)]


@dataclass
class ProperLabeling:
    order: list[int]
    rho: np.ndarray

    def rank(self) -> list[int]:
        r = [0] * len(self.order)
        for i, v in enumerate(self.order):
            r[v] = i
        return r


def is_valid_move(g: Graph, m: SwitchMove) -> bool:
    a, b, c, d = m.quad
    if len({a, b, c, d}) < 4 or not all(0 <= v < g.n for v in m.quad):
        return False
    return g.has_edge(a, b) and g.has_edge(c, d) and not g.has_edge(a, c) and not g.has_edge(b, d)


def elementary_move(g: Graph, m: SwitchMove) -> Graph:
    if not is_valid_move(g, m):
        raise InvalidMove(f"sw{m.quad} needs ab, cd in E and ac, bd not in E")
    a, b, c, d = m.quad
    masks = list(g.masks)
    for u, v in ((a, b), (c, d)):
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
    for u, v in ((a, c), (b, d)):
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph.from_masks(masks)


def proper_labeling(g: Graph, rho=None) -> ProperLabeling:
    """Vertices sorted by Fiedler value descending, ties by id."""
    if rho is None:
        if not is_connected(g):
            raise Disconnected("proper labelling needs a connected graph")
        rho = spectral_report(g).fiedler
    rho = np.asarray(rho, dtype=float)
    order = sorted(range(g.n), key=lambda v: (-rho[v], v))
    return ProperLabeling(order, rho)


def is_proper(rho, m: SwitchMove, tol: float = 0.0) -> bool:
    return bool(rho[m.a] >= rho[m.d] - tol and rho[m.c] >= rho[m.b] - tol)


def rayleigh_delta(rho, m: SwitchMove) -> float:
    """rho^T L(G) rho - rho^T L(G') rho for G' = sw(a, b, c, d)(G)."""
    return 2.0 * (float(rho[m.a]) - float(rho[m.d])) * (float(rho[m.c]) - float(rho[m.b]))


def all_valid_moves(g: Graph) -> list[SwitchMove]:
    """Every valid edge exchange once, as its lexicographically least quadruple."""
    edges = g.edges()
    seen = set()
    out = []
    for i, (x, y) in enumerate(edges):
        for u, v in edges[i + 1:]:
            for a, b in ((x, y), (y, x)):
                m = SwitchMove(a, b, u, v)
                if not is_valid_move(g, m):
                    continue
                key = min(m.representations())
                if key not in seen:
                    seen.add(key)
                    out.append(SwitchMove(*key))
    return out


def find_proper_switches(g: Graph, rho=None, tol: float = 0.0) -> list[SwitchMove]:
    """All valid moves that are proper for the Fiedler weighting ``rho``.

    Each edge exchange is listed once, in its least proper representation.
    ``tol`` widens ties: values within ``tol`` of each other count as equal,
    which absorbs eigensolver noise inside symmetric cells.
    """
    if not is_connected(g):
        raise Disconnected("find_proper_switches needs a connected graph")
    if rho is None:
        rho = spectral_report(g).fiedler
    out = []
    for m in all_valid_moves(g):
        reps = [SwitchMove(*q) for q in m.representations()]
        ok = [r for r in reps if is_proper(rho, r, tol)]
        if ok:
            best = min(ok)
            out.append(replace(best, predicted_delta=rayleigh_delta(rho, best)))
    out.sort(key=lambda m: (-m.predicted_delta, m.quad))
    return out


@dataclass(frozen=True)
class TraceStep:
    step: int
    move: SwitchMove
    delta: float
    mu_before: float
    mu_after: float


def trace_csv(trace: list[TraceStep]) -> str:
    f = lambda x: f"{x:#.12g}"  # noqa: E731
    lines = ["step,a,b,c,d,delta,mu_before,mu_after"]
    for t in trace:
        a, b, c, d = t.move.quad
        lines.append(f"{t.step},{a},{b},{c},{d},{f(t.delta)},{f(t.mu_before)},{f(t.mu_after)}")
    return "\n".join(lines) + "\n"


def minimize_by_switching(
    g: Graph,
    max_steps: int = 1000,
    seed: int = 0,
    plateau_moves: int = 50,
    max_plateaus: int = 20,
    tol: float | None = None,
) -> tuple[Graph, list[TraceStep]]:
    """Greedy proper-switch descent on mu.

    Each step applies the proper move with the largest strictly positive
    predicted delta that keeps the graph connected.  With no such move the
    search wanders over zero-delta proper moves (seeded), at most
    ``plateau_moves`` per plateau and ``max_plateaus`` plateaus overall.
    """
    tol = TOL.compare if tol is None else tol
    if not is_connected(g):
        raise Disconnected("descent starts from a connected graph")
    rng = np.random.default_rng(seed)
    trace: list[TraceStep] = []
    plateaus = 0
    on_plateau = False
    plateau_len = 0
    rep = spectral_report(g)
    for step in range(max_steps):
        moves = find_proper_switches(g, rho=rep.fiedler, tol=tol)
        applied = None
        for m in (x for x in moves if x.predicted_delta > tol):
            h = elementary_move(g, m)
            if not is_connected(h):
                continue
            hrep = spectral_report(h)
            if hrep.mu <= rep.mu + tol:
                applied = (m, h, hrep)
                break
        if applied is not None:
            on_plateau = False
        elif not rep.degenerate_fiedler:
            flat = [x for x in moves if abs(x.predicted_delta) <= tol]
            if not flat:
                break
            if not on_plateau:
                plateaus += 1
                plateau_len = 0
                on_plateau = True
            if plateaus > max_plateaus or plateau_len >= plateau_moves:
                break
            for i in rng.permutation(len(flat)):
                h = elementary_move(g, flat[i])
                if is_connected(h):
                    hrep = spectral_report(h)
                    if hrep.mu <= rep.mu + tol:
                        applied = (flat[i], h, hrep)
                        break
            if applied is None:
                break
            plateau_len += 1
        else:
            break
        m, h, hrep = applied
        trace.append(TraceStep(step, m, m.predicted_delta, rep.mu, hrep.mu))
        g, rep = h, hrep
    return g, trace
