"""Constructors for the extremal cubic and quartic graph families.

Every block is transcribed once as a literal edge table whose vertex order
is the drawing's reading order: columns left to right, top before bottom.
Blocks carry their column cells and their attachment vertices so that
path-like assemblies inherit an ordered cell partition for free.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import BadOrder, GrammarViolation, UnknownFamily
from .graph import Graph, new_graph
from .quotient import Partition


def path_graph(h: int) -> Graph:
    return new_graph(h, [(i, i + 1) for i in range(h - 1)])


def cycle_graph(n: int) -> Graph:
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return new_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# ---------------------------------------------------------------------------
# labelled pieces

@dataclass(frozen=True)
class Piece:
    """A block or brick with its drawing metadata.

    ``left``/``right`` are degree-2 attachment vertices (cut vertices once
    assembled); ``lports``/``rports`` are (top, bottom) pairs of open
    degree-3 vertices used to chain bricks.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    cells: tuple[tuple[int, ...], ...]
    left: int | None = None
    right: int | None = None
    lports: tuple[int, int] | None = None
    rports: tuple[int, int] | None = None

    @property
    def graph(self) -> Graph:
        return new_graph(self.n, self.edges)

    def mirror(self) -> "Piece":
        f = lambda v: self.n - 1 - v  # noqa: E731
        fp = lambda p: None if p is None else (f(p[0]), f(p[1]))  # noqa: E731
        return Piece(
            self.n,
            tuple(sorted(tuple(sorted((f(u), f(v)))) for u, v in self.edges)),
            tuple(tuple(sorted(f(v) for v in c)) for c in reversed(self.cells)),
            left=None if self.right is None else f(self.right),
            right=None if self.left is None else f(self.left),
            lports=fp(self.rports),
            rports=fp(self.lports),
        )

    def remove(self, drop: Sequence[int], left=None, right=None, lports=None, rports=None) -> "Piece":
        """Delete ``drop``; attachment/port arguments use the *old* indices."""
        keep = [v for v in range(self.n) if v not in drop]
        idx = {v: i for i, v in enumerate(keep)}
        one = lambda v: None if v is None else idx[v]  # noqa: E731
        two = lambda p: None if p is None else (idx[p[0]], idx[p[1]])  # noqa: E731
        cells = tuple(tuple(idx[v] for v in c if v in idx) for c in self.cells)
        return Piece(
            len(keep),
            tuple((idx[u], idx[v]) for u, v in self.edges if u in idx and v in idx),
            tuple(c for c in cells if c),
            left=one(left), right=one(right), lports=two(lports), rports=two(rports),
        )


def _piece(order: str, edges: str, cells: str, left=None, right=None) -> Piece:
    """Build a Piece from whitespace-separated vertex names.

    ``edges`` is a list of ``a-b`` tokens and ``cells`` groups names with
    commas, cells separated by ``|``.
    """
    names = order.split()
    ix = {nm: i for i, nm in enumerate(names)}
    es = []
    for tok in edges.split():
        a, b = tok.split("-")
        es.append(tuple(sorted((ix[a], ix[b]))))
    cs = tuple(tuple(ix[nm] for nm in c.split(",")) for c in cells.split("|"))
    return Piece(
        len(names),
        tuple(sorted(es)),
        cs,
        left=None if left is None else ix[left],
        right=None if right is None else ix[right],
    )


# short blocks, transcribed from the drawings
_SHORT = {
    "M": _piece(
        "r r1 r2 r3 r4 r5 r6",
        "r-r1 r-r2 r1-r2 r1-r3 r1-r4 r2-r3 r2-r5 r3-r4 r3-r5 r5-r4 r6-r5 r6-r4",
        "r|r1,r2|r3|r4,r5|r6", left="r", right="r6"),
    "M1": _piece(
        "r r1 r2 r3 r4 r5",
        "r-r1 r-r2 r1-r2 r1-r3 r1-r4 r2-r3 r2-r4 r3-r4 r3-r5 r4-r5",
        "r|r1,r2|r3,r4|r5", left="r", right="r5"),
    "M2": _piece(
        "r r1 r2 r3 r4 r5 r6 r7",
        "r-r1 r-r2 r5-r6 r1-r2 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r5 r5-r3 r4-r6 r5-r7 r7-r6",
        "r|r1,r2|r3,r4|r5,r6|r7", left="r", right="r7"),
    "M3": _piece(
        "r r1 r2 r3 r4 r5 r6 r7 r8",
        "r-r2 r1-r r1-r2 r1-r3 r1-r4 r2-r3 r2-r5 r3-r4 r3-r5 r6-r4 r5-r7 r5-r6 "
        "r4-r7 r6-r7 r6-r8 r7-r8",
        "r|r1,r2|r3|r4,r5|r6,r7|r8", left="r", right="r8"),
    "D1": _piece(
        "r1 r3 r2 r4 r5 r6 r7",
        "r5-r2 r1-r2 r1-r5 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r3 r4-r6 r5-r6 r7-r6 r5-r7",
        "r1,r3,r2,r4|r5,r6|r7", right="r7"),
    "D2": _piece(
        "r2 r1 r3 r4 r5 r6 r7 r8",
        "r5-r2 r1-r2 r1-r5 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r3 r4-r7 r5-r7 r5-r6 "
        "r6-r7 r7-r8 r6-r8",
        "r2,r1|r3,r4|r5|r6,r7|r8", right="r8"),
    "D3": _piece(
        "r1 r3 r2 r4 r5 r6 r7 r8 r9",
        "r5-r2 r1-r2 r1-r5 r1-r3 r1-r4 r2-r3 r2-r4 r3-r6 r4-r3 r4-r6 r5-r8 r5-r7 "
        "r6-r8 r6-r7 r7-r8 r9-r7 r9-r8",
        "r1,r3,r2,r4|r5,r6|r7,r8|r9", right="r9"),
    "D4": _piece(
        "r r1 r2 r3 r4 r5",
        "r-r1 r-r2 r-r3 r-r4 r1-r2 r1-r3 r1-r4 r2-r3 r2-r4 r5-r3 r5-r4",
        "r,r1,r2|r3,r4|r5", right="r5"),
    "D5": _piece(
        "r1 r3 r2 r5 r4 r7 r6 r9 r8 r10",
        "r1-r2 r1-r3 r1-r4 r1-r5 r2-r3 r2-r4 r2-r5 r3-r4 r3-r5 r6-r4 r5-r7 r6-r7 "
        "r6-r8 r6-r9 r8-r7 r7-r9 r8-r9 r8-r10 r9-r10",
        "r1,r3,r2|r5,r4|r7,r6|r9,r8|r10", right="r10"),
}

SHORT_ORDERS = {"M": 7, "M1": 6, "M2": 8, "M3": 9, "D1": 7, "D2": 8, "D3": 9, "D4": 6, "D5": 10}
END_TAGS = ("D1", "D2", "D3", "D4", "D5")
MIDDLE_TAGS = ("M", "M1", "M2", "M3")


def _brick_pieces() -> dict[str, Piece]:
    s = _SHORT
    # indices refer to the reading order of the parent block
    m1, m2, m3, d3, d4 = s["M1"], s["M2"], s["M3"], s["D3"], s["D4"]
    return {
        "M1p": m1.remove([5], left=0, rports=(3, 4)),
        "M2p": m2.remove([7], left=0, rports=(5, 6)),
        "M3p": m3.remove([8], left=0, rports=(6, 7)),
        "D3p": d3.remove([8], rports=(6, 7)),
        "D4p": d4.remove([5], rports=(3, 4)),
        "M1pp": m1.remove([0, 5], lports=(1, 2), rports=(3, 4)),
        "M2pp": m2.remove([0, 7], lports=(1, 2), rports=(5, 6)),
    }


_BRICKS: dict[str, Piece] = {}


def _bricks() -> dict[str, Piece]:
    if not _BRICKS:
        _BRICKS.update(_brick_pieces())
    return _BRICKS


BRICK_ORDERS = {"M1p": 5, "M2p": 7, "M3p": 8, "D3p": 8, "D4p": 5, "M1pp": 4, "M2pp": 6}


# ---------------------------------------------------------------------------
# kinds

@dataclass(frozen=True)
class Brick:
    tag: str
    mirrored: bool = False

    def __post_init__(self):
        if self.tag not in BRICK_ORDERS:
            raise GrammarViolation(f"unknown brick {self.tag!r}")

    def __str__(self) -> str:
        return ("~" if self.mirrored else "") + self.tag


@dataclass(frozen=True)
class BlockKind:
    tag: str
    mirrored: bool = False
    bricks: tuple[Brick, ...] = ()
    flavor: str | None = None

    def __post_init__(self):
        if self.tag == "LONG":
            if self.flavor not in ("end", "middle", "complete"):
                raise GrammarViolation(f"bad long-block flavor {self.flavor!r}")
        elif self.tag not in _SHORT:
            raise GrammarViolation(f"unknown block kind {self.tag!r}")

    @property
    def is_long(self) -> bool:
        return self.tag == "LONG"

    def __str__(self) -> str:
        base = self.tag if not self.is_long else (
            f"LONG[{self.flavor}:" + ",".join(map(str, self.bricks)) + "]")
        return ("~" if self.mirrored else "") + base


def mirrored(kind: BlockKind) -> BlockKind:
    return BlockKind(kind.tag, not kind.mirrored, kind.bricks, kind.flavor)


@dataclass(frozen=True)
class PathLikeSpec:
    blocks: tuple[BlockKind, ...] = field(default_factory=tuple)

    def __str__(self) -> str:
        return " | ".join(map(str, self.blocks))


def parse_block_kind(token: str) -> BlockKind:
    """``D4``, ``~D4``, ``M3~`` style tokens (a leading or trailing ``~`` mirrors)."""
    tok = token.strip()
    mir = tok.startswith("~") or tok.endswith("~") or tok.endswith("-mirrored")
    tok = tok.strip("~").removesuffix("-mirrored")
    if tok.endswith("_mirror"):
        tok, mir = tok[: -len("_mirror")], True
    return BlockKind(tok, mir)


def parse_brick(token: str) -> Brick:
    tok = token.strip()
    mir = tok.startswith("~")
    return Brick(tok.lstrip("~").replace("''", "pp").replace("'", "p"), mir)


# ---------------------------------------------------------------------------
# assembly

def _piece_for(kind: BlockKind) -> Piece:
    if kind.is_long:
        p = _long_piece(kind.bricks, kind.flavor)
    else:
        p = _SHORT[kind.tag]
    return p.mirror() if kind.mirrored else p


def block_piece(kind: BlockKind) -> Piece:
    """The block with its attachment vertices and column cells."""
    return _piece_for(kind)


def short_block(kind: BlockKind | str) -> Graph:
    if isinstance(kind, str):
        kind = parse_block_kind(kind)
    if kind.is_long:
        raise GrammarViolation("short_block expects a short tag")
    return _piece_for(kind).graph


def brick(kind: Brick | str) -> Graph:
    if isinstance(kind, str):
        kind = parse_brick(kind)
    p = _bricks()[kind.tag]
    return (p.mirror() if kind.mirrored else p).graph


def _check_grammar(bricks: Sequence[Brick], flavor: str) -> None:
    if len(bricks) < 2:
        raise GrammarViolation("a long block needs at least two bricks")
    first, last, inner = bricks[0], bricks[-1], bricks[1:-1]
    d_set, m_set, mid_set = {"D3p", "D4p"}, {"M1p", "M2p", "M3p"}, {"M1pp", "M2pp"}
    if flavor == "end":
        ok = first.tag in d_set and not first.mirrored and last.tag in m_set and last.mirrored
    elif flavor == "middle":
        ok = first.tag in m_set and not first.mirrored and last.tag in m_set and last.mirrored
    elif flavor == "complete":
        ok = first.tag in d_set and not first.mirrored and last.tag in d_set and last.mirrored
    else:
        raise GrammarViolation(f"bad long-block flavor {flavor!r}")
    if not ok or any(b.tag not in mid_set for b in inner):
        raise GrammarViolation(
            f"brick sequence {','.join(map(str, bricks))} is not a long {flavor} block")


def _long_piece(bricks: Sequence[Brick], flavor: str) -> Piece:
    _check_grammar(bricks, flavor)
    table = _bricks()
    n = 0
    edges: list[tuple[int, int]] = []
    cells: list[tuple[int, ...]] = []
    left = right = None
    prev_ports = None
    for i, b in enumerate(bricks):
        p = table[b.tag].mirror() if b.mirrored else table[b.tag]
        off = n
        edges += [(u + off, v + off) for u, v in p.edges]
        cells += [tuple(v + off for v in c) for c in p.cells]
        if i == 0 and p.left is not None:
            left = p.left + off
        if prev_ports is not None:
            lp = p.lports
            edges.append((prev_ports[0], lp[0] + off))
            edges.append((prev_ports[1], lp[1] + off))
        if p.rports is not None:
            prev_ports = (p.rports[0] + off, p.rports[1] + off)
        if i == len(bricks) - 1 and p.right is not None:
            right = p.right + off
        n += p.n
    return Piece(n, tuple(sorted(tuple(sorted(e)) for e in edges)), tuple(cells), left, right)


def long_block(bricks: Sequence[Brick | str], flavor: str) -> Graph:
    bs = [parse_brick(b) if isinstance(b, str) else b for b in bricks]
    return _long_piece(bs, flavor).graph


def _assemble(spec: PathLikeSpec) -> Piece:
    blocks = list(spec.blocks)
    pieces = [_piece_for(k) for k in blocks]
    if len(pieces) == 1:
        p = pieces[0]
        if p.left is not None or p.right is not None:
            raise GrammarViolation("a single-block assembly must be a closed block")
        return p
    if not blocks:
        raise GrammarViolation("empty path-like spec")
    if pieces[0].left is not None or pieces[0].right is None:
        raise GrammarViolation(f"first block {blocks[0]} is not a left end block")
    if pieces[-1].right is not None or pieces[-1].left is None:
        raise GrammarViolation(f"last block {blocks[-1]} is not a right end block")
    for k, p in zip(blocks[1:-1], pieces[1:-1]):
        if p.left is None or p.right is None:
            raise GrammarViolation(f"interior block {k} is not a middle block")

    edges: list[tuple[int, int]] = []
    cells: list[tuple[int, ...]] = []
    n = 0
    glue = None
    for p in pieces:
        if glue is None:
            mp = list(range(p.n))
            n = p.n
        else:
            mp = [0] * p.n
            nxt = n
            for v in range(p.n):
                if v == p.left:
                    mp[v] = glue
                else:
                    mp[v] = nxt
                    nxt += 1
            n = nxt
        edges += [(mp[u], mp[v]) for u, v in p.edges]
        for c in p.cells:
            cc = tuple(mp[v] for v in c)
            if glue is not None and cc == (glue,):
                continue
            cells.append(cc)
        glue = None if p.right is None else mp[p.right]
    return Piece(n, tuple(sorted(tuple(sorted(e)) for e in edges)), tuple(cells))


def assemble_path_like(spec: PathLikeSpec | Sequence[BlockKind | str]) -> Graph:
    return _assemble(_as_spec(spec)).graph


def _as_spec(spec) -> PathLikeSpec:
    if isinstance(spec, PathLikeSpec):
        return spec
    return PathLikeSpec(tuple(parse_block_kind(k) if isinstance(k, str) else k for k in spec))


def assembly_partition(spec: PathLikeSpec | Sequence[BlockKind | str]) -> Partition:
    p = _assemble(_as_spec(spec))
    return Partition(tuple(p.cells))


# ---------------------------------------------------------------------------
# cubic families

def _cubic_pieces(n: int, left7: bool) -> Piece:
    """Left end (5 or 7 vertices), diamonds joined by bridges, right end.

    G_n uses the 7-vertex right end exactly when 4 | n; H uses it on both
    sides.
    """
    if n % 2 or n < 10:
        raise BadOrder(f"G_n needs even n >= 10, got {n}")
    right7 = left7 or n % 4 == 0
    edges: list[tuple[int, int]] = []
    cells: list[tuple[int, ...]] = []
    if left7:
        # top/bottom pairs (0,1), (2,3), (4,5), apex 6
        edges += [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5), (4, 5), (4, 6), (5, 6)]
        cells += [(0, 1), (2, 3), (4, 5), (6,)]
        v = 7
    else:
        edges += [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)]
        cells += [(0, 1), (2, 3), (4,)]
        v = 5
    tail = 7 if right7 else 5
    m, rem = divmod(n - v - tail, 4)
    if rem or m < 0:
        raise BadOrder(f"no cubic path-like graph of this shape on {n} vertices")
    prev = v - 1
    for _ in range(m):
        a, t, b, c = v, v + 1, v + 2, v + 3
        edges += [(prev, a), (a, t), (a, b), (t, b), (t, c), (b, c)]
        cells += [(a,), (t, b), (c,)]
        prev = c
        v += 4
    apex = v
    edges.append((prev, apex))
    if right7:
        p, q, r, s, x, y = range(v + 1, v + 7)
        edges += [(apex, p), (apex, q), (p, q), (p, r), (q, s), (r, x), (r, y), (s, x), (s, y), (x, y)]
        cells += [(apex,), (p, q), (r, s), (x, y)]
    else:
        p, q, r, s = range(v + 1, v + 5)
        edges += [(apex, p), (apex, q), (p, r), (p, s), (q, r), (q, s), (r, s)]
        cells += [(apex,), (p, q), (r, s)]
    return Piece(n, tuple(edges), tuple(cells))


def cubic_gn(n: int) -> Graph:
    """The cubic graph with a 5-vertex left end block and diamond middles."""
    return _cubic_pieces(n, left7=False).graph


def cubic_h(n: int) -> Graph:
    """The (n+2)-vertex companion of G_n for n divisible by 4: both end
    blocks are the 7-vertex block."""
    if n % 4 or n < 12:
        raise BadOrder(f"H_(n+2) needs n divisible by 4 and n >= 12, got {n}")
    return _cubic_pieces(n + 2, left7=True).graph


def cosine_test_vector(n: int) -> np.ndarray:
    """Test vector on G_n (n = 4m + 10) built from x_i = cos((2i-1)pi/4m).

    End blocks carry x_1 and x_2m, diamond i carries x_(2i-1) on its left
    vertex, x_(2i) on its right vertex and their mean on the middle pair.
    """
    if n % 4 != 2 or n < 14:
        raise BadOrder(f"cosine test vector needs n = 4m+10 with m >= 1, got {n}")
    m = (n - 10) // 4
    x = np.cos((2 * np.arange(1, 2 * m + 1) - 1) * math.pi / (4 * m))
    w = np.empty(n)
    w[0:5] = x[0]
    for i in range(m):
        base = 5 + 4 * i
        lo, hi = x[2 * i], x[2 * i + 1]
        w[base] = lo
        w[base + 1] = w[base + 2] = (lo + hi) / 2
        w[base + 3] = hi
    w[n - 5:] = x[-1]
    return w


# ---------------------------------------------------------------------------
# quartic minimisers

def _small(n: int, edges: str) -> Graph:
    es = []
    for tok in edges.split():
        a, b = tok.split("-")
        es.append((int(a) - 1, int(b) - 1))
    return new_graph(n, sorted(set(tuple(sorted(e)) for e in es)))


_SMALL_QUARTIC = {
    5: [("G5", _small(5, "1-2 1-3 1-4 1-5 2-3 2-4 2-5 3-4 3-5 4-5"))],
    6: [("G6", _small(6, "1-2 1-3 1-4 1-5 2-3 2-4 2-6 3-5 3-6 4-6 5-6 5-4"))],
    7: [("G7", _small(7, "1-2 1-3 1-4 1-5 2-3 2-4 2-5 3-6 3-7 4-6 4-7 5-6 5-7 6-7"))],
    8: [
        ("G8", _small(8, "1-2 1-3 1-4 1-5 2-3 2-4 2-6 3-4 3-7 4-8 5-6 5-7 5-8 6-7 6-8 7-8")),
        ("G8'", _small(8, "1-2 1-3 1-4 1-5 2-3 2-4 2-5 3-6 3-8 4-6 4-7 5-8 5-7 6-8 6-7 8-7")),
    ],
    9: [("G9", _small(9, "1-2 1-3 1-4 1-5 2-3 2-4 2-5 3-4 3-6 4-7 5-8 5-9 6-9 8-6 8-7 6-7 7-9 8-9"))],
}

G10_BRICKS = (Brick("D4p"), Brick("D4p", True))


def small_quartic_named(n: int) -> list[tuple[str, Graph]]:
    if n == 10:
        return [("G10", long_block(G10_BRICKS, "complete"))]
    if n not in _SMALL_QUARTIC:
        raise BadOrder(f"small quartic minimisers are listed for 5 <= n <= 10, got {n}")
    return list(_SMALL_QUARTIC[n])


def small_quartic_min(n: int) -> list[Graph]:
    return [g for _, g in small_quartic_named(n)]


_CONJ_ENDS = {0: ("D4", "D4"), 1: ("D4", "D1"), 2: ("D1", "D1"), 3: ("D1", "D2"), 4: ("D4", "D5")}


def conjectured_quartic_spec(n: int) -> PathLikeSpec:
    if n < 11:
        raise BadOrder(f"the conjectured quartic minimiser is defined for n >= 11, got {n}; "
                       "use the small-quartic family")
    q, r = divmod(n - 11, 5)
    left, right = _CONJ_ENDS[r]
    blocks = [BlockKind(left)] + [BlockKind("M1")] * q + [BlockKind(right, True)]
    return PathLikeSpec(tuple(blocks))


def conjectured_quartic_min(n: int) -> Graph:
    return assemble_path_like(conjectured_quartic_spec(n))


# ---------------------------------------------------------------------------
# cells

FAMILIES = ("cubic-gn", "cubic-h", "quartic-min")


def family_partition(family: str, n: int) -> Partition:
    """Column partition of a family member with ``n`` vertices."""
    if family == "cubic-gn":
        return Partition(_cubic_pieces(n, left7=False).cells)
    if family == "cubic-h":
        return Partition(_cubic_pieces(n, left7=True).cells)
    if family == "quartic-min":
        return assembly_partition(conjectured_quartic_spec(n))
    raise UnknownFamily(f"no column partition known for family {family!r}")


def family_graph(family: str, n: int) -> Graph:
    if family == "cubic-gn":
        return cubic_gn(n)
    if family == "cubic-h":
        return _cubic_pieces(n, left7=True).graph
    if family == "quartic-min":
        return conjectured_quartic_min(n)
    raise UnknownFamily(f"unknown family {family!r}")


def cell_partition(g: Graph, family) -> Partition:
    """Ordered column cells of ``g``, which must be the family member
    (label-exact) named by the hint: a family name or a PathLikeSpec."""
    if family is None:
        raise UnknownFamily("a family hint is required for cell_partition")
    if isinstance(family, (PathLikeSpec, list, tuple)):
        spec = _as_spec(family)
        piece = _assemble(spec)
        ref, part = piece.graph, Partition(tuple(piece.cells))
    else:
        try:
            ref, part = family_graph(family, g.n), family_partition(family, g.n)
        except BadOrder as exc:
            raise UnknownFamily(str(exc)) from exc
    if ref != g:
        raise UnknownFamily(f"graph is not the {family} member on {g.n} vertices")
    return part


# ---------------------------------------------------------------------------
# random regular graphs (test inputs and descent starting points)

def random_regular_graph(n: int, k: int, rng=None, connected: bool = True, max_tries: int = 10000) -> Graph:
    """Uniform-ish simple k-regular graph from the pairing model, by rejection."""
    from .graph import is_connected

    if n * k % 2 or k >= n:
        raise BadOrder(f"no {k}-regular graph on {n} vertices")
    rng = np.random.default_rng(rng)
    for _ in range(max_tries):
        points = np.repeat(np.arange(n), k)
        rng.shuffle(points)
        pairs = points.reshape(-1, 2)
        if np.any(pairs[:, 0] == pairs[:, 1]):
            continue
        es = {tuple(sorted(map(int, p))) for p in pairs}
        if len(es) < len(pairs):
            continue
        g = new_graph(n, sorted(es))
        if not connected or is_connected(g):
            return g
    raise BadOrder(f"failed to sample a {k}-regular graph on {n} vertices")
