"""Simple undirected graphs: construction, connectivity, blocks,
canonical forms and the graph6 / DOT / edge-list text formats."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    DuplicateEdge,
    MalformedGraph6,
    SelfLoop,
    VertexOutOfRange,
)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``.  Bitmask rows are
    kept alongside for the hot loops (refinement, switching, enumeration).
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    masks: tuple[int, ...] = field(repr=False, compare=False, hash=False, default=())

    def __post_init__(self):
        if not self.masks:
            object.__setattr__(
                self, "masks", tuple(sum(1 << u for u in nb) for nb in self.adj)
            )

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Trusted constructor from symmetric bitmask rows (no validation)."""
        n = len(masks)
        adj = tuple(tuple(u for u in range(n) if m >> u & 1) for m in masks)
        return cls(n, adj, tuple(masks))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return new_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertex ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[v])
            for u in vertices
            for v in self.adj[u]
            if v in index and u < v
        ]
        return new_graph(len(vertices), edges)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 1:
        raise VertexOutOfRange(f"vertex count must be >= 1, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        if v in nbrs[u]:
            raise DuplicateEdge(f"edge ({u},{v}) given twice")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def degree_profile(g: Graph) -> tuple[int, int, int | None]:
    """(min degree, max degree, k if the graph is k-regular else None)."""
    degs = [len(nb) for nb in g.adj]
    lo, hi = min(degs), max(degs)
    return lo, hi, (lo if lo == hi else None)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    # bitmask flood fill; used in the switching inner loop
    masks = g.masks
    reached = frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~reached
        reached |= frontier
    return reached == (1 << g.n) - 1


# ---------------------------------------------------------------------------
# blocks

@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    block_edges: tuple[tuple[tuple[int, int], ...], ...]
    cut_vertices: frozenset[int]
    block_tree_is_path: bool

    @property
    def bridges(self) -> list[tuple[int, int]]:
        return [e[0] for e in self.block_edges if len(e) == 1]

    @property
    def nontrivial(self) -> list[tuple[int, ...]]:
        return [b for b, e in zip(self.blocks, self.block_edges) if len(e) > 1]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Biconnected components by the lowpoint method (iterative DFS)."""
    if not is_connected(g):
        raise Disconnected("block decomposition needs a connected graph")
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[tuple[int, ...]] = []
    bedges: list[tuple[tuple[int, int], ...]] = []
    cuts: set[int] = set()
    if n == 1:
        return BlockDecomposition(((0,),), ((),), frozenset(), True)

    disc[0] = low[0] = 0
    counter = 1
    estack: list[tuple[int, int]] = []
    root_children = 0
    stack = [(0, -1, iter(g.adj[0]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                disc[w] = low[w] = counter
                counter += 1
                estack.append((v, w))
                stack.append((w, v, iter(g.adj[w])))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                estack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] >= disc[parent]:
            if parent == 0:
                root_children += 1
            else:
                cuts.add(parent)
            comp = []
            while True:
                e = estack.pop()
                comp.append(tuple(sorted(e)))
                if e == (parent, v):
                    break
            verts = sorted({x for e in comp for x in e})
            blocks.append(tuple(verts))
            bedges.append(tuple(sorted(comp)))
    if root_children > 1:
        cuts.add(0)

    membership = {c: 0 for c in cuts}
    path_ok = True
    for b in blocks:
        k = sum(1 for v in b if v in membership)
        if k > 2:
            path_ok = False
        for v in b:
            if v in membership:
                membership[v] += 1
    if any(c != 2 for c in membership.values()):
        path_ok = False
    return BlockDecomposition(tuple(blocks), tuple(bedges), frozenset(cuts), path_ok)


def block_path(bd: BlockDecomposition) -> list[int]:
    """Indices of ``bd.blocks`` in path order (requires a path block tree)."""
    if not bd.block_tree_is_path:
        raise ValueError("block tree is not a path")
    nb = len(bd.blocks)
    if nb == 1:
        return [0]
    owner: dict[int, list[int]] = {c: [] for c in bd.cut_vertices}
    for i, b in enumerate(bd.blocks):
        for v in b:
            if v in owner:
                owner[v].append(i)
    links: dict[int, list[int]] = {i: [] for i in range(nb)}
    for a, b in owner.values():
        links[a].append(b)
        links[b].append(a)
    ends = sorted(i for i in range(nb) if len(links[i]) == 1)
    order = [ends[0]]
    prev = -1
    while len(order) < nb:
        cur = order[-1]
        nxt = [j for j in links[cur] if j != prev][0]
        prev = cur
        order.append(nxt)
    return order


# ---------------------------------------------------------------------------
# canonical form: colour refinement + individualisation search

def _refine(masks: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; sub-cells ordered by count signature."""
    while True:
        cmasks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                m = masks[v]
                sig = tuple((m & cm).bit_count() for cm in cmasks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _trace(masks: Sequence[int], cells: list[list[int]]) -> tuple:
    cmasks = [sum(1 << v for v in c) for c in cells]
    quot = tuple((masks[c[0]] & cm).bit_count() for c in cells for cm in cmasks)
    return (tuple(len(c) for c in cells), quot)


def canonical_labeling(g: Graph, colors: Sequence | None = None) -> list[int]:
    """Vertex order (position -> vertex) of the canonical relabelling.

    The search tree branches on the first non-singleton cell of the refined
    partition.  Leaves are ranked by the sequence of node invariants followed
    by the relabelled adjacency rows; the maximal leaf wins.  Branches on
    twins (vertices with equal neighbourhoods apart from each other) are
    skipped, since their transposition is an automorphism fixing the path.
    """
    masks = g.masks
    n = g.n
    if colors is None:
        cells = [list(range(n))]
    else:
        by: dict = {}
        for v in range(n):
            by.setdefault(colors[v], []).append(v)
        cells = [by[c] for c in sorted(by)]

    best: dict = {"key": None, "order": None}

    def cert_of(order: list[int]) -> tuple[int, ...]:
        pos = [0] * n
        for p, v in enumerate(order):
            pos[v] = p
        rows = []
        for v in order:
            r = 0
            for u in g.adj[v]:
                r |= 1 << (n - 1 - pos[u])
            rows.append(r)
        return tuple(rows)

    def search(cells: list[list[int]], key: list):
        cells = _refine(masks, cells)
        key = key + [(0, _trace(masks, cells))]
        if best["key"] is not None and key < best["key"][: len(key)]:
            return
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            key = key + [(1, cert_of(order))]
            if best["key"] is None or key > best["key"]:
                best["key"], best["order"] = key, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            mv = masks[v]
            if any((mv & ~(1 << u)) == (masks[u] & ~(1 << v)) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:], key)

    search(cells, [])
    return best["order"]


def canonical_form(g: Graph, colors: Sequence | None = None) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic
    (respecting ``colors`` when given)."""
    order = canonical_labeling(g, colors)
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v] = p
    h = to_graph6(g.relabel(pos)).rstrip("\n").encode()
    if colors is not None:
        h += b"|" + repr([colors[v] for v in order]).encode()
    return h


def are_isomorphic(g1: Graph, g2: Graph, colors1=None, colors2=None) -> bool:
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return False
    if sorted(map(len, g1.adj)) != sorted(map(len, g2.adj)):
        return False
    return canonical_form(g1, colors1) == canonical_form(g2, colors2)


# ---------------------------------------------------------------------------
# text formats

def _n_header(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = [
        1 if g.masks[i] >> j & 1 else 0 for j in range(1, g.n) for i in range(j)
    ]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k: k + 6])), 2))
        for k in range(0, len(bits), 6)
    )
    return _n_header(g.n) + body + "\n"


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s or any(not 63 <= ord(ch) <= 126 for ch in s):
        raise MalformedGraph6(f"bad graph6 characters in {text!r}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            if len(vals) < 8:
                raise MalformedGraph6("truncated size field")
            n = 0
            for v in vals[2:8]:
                n = (n << 6) | v
            vals = vals[8:]
        else:
            if len(vals) < 4:
                raise MalformedGraph6("truncated size field")
            n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
            vals = vals[4:]
    else:
        n = vals[0]
        vals = vals[1:]
    if n < 1:
        raise MalformedGraph6("graph6 with zero vertices")
    nbits = n * (n - 1) // 2
    if len(vals) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes, got {len(vals)}")
    bits = []
    for v in vals:
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise MalformedGraph6("non-zero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return new_graph(n, edges)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    n, m = int(rows[0][0]), int(rows[0][1])
    edges = [(int(a), int(b)) for a, b in rows[1:]]
    if len(edges) != m:
        raise ValueError(f"edge list header says {m} edges, found {len(edges)}")
    return new_graph(n, edges)
