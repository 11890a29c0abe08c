"""Cotrees, the cotree text format, cograph recognition and balanced cotrees.

A cotree is stored as a flat arena of nodes numbered in preorder, so node ``0``
is the root, every child has a larger id than its parent, and leaves appear in
left-to-right order when ids are scanned upwards.  Each leaf carries the graph
vertex it stands for; cotrees built from text number their leaves ``0..n-1``
from left to right.

Text format (whitespace is ignored)::

    expr := "L" [index] | "(" ("J" | "U") expr expr+ ")"

``J`` is a join node, ``U`` a disjoint-union node.  The optional leaf index is
only written when the leaves are not numbered left to right, which happens for
cotrees produced by :func:`recognize_cograph`.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence, Union


class Kind(str, Enum):
    UNION = "U"
    JOIN = "J"
    LEAF = "L"

    @property
    def opposite(self) -> "Kind":
        if self is Kind.LEAF:
            raise ValueError("leaves have no opposite kind")
        return Kind.JOIN if self is Kind.UNION else Kind.UNION


class CotreeError(ValueError):
    """Base class for malformed cotrees and cotree input."""


class CotreeParseError(CotreeError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class CotreeStructureError(CotreeError):
    pass


class NotACograph(ValueError):
    """The graph contains an induced path on four vertices."""

    def __init__(self, vertices: Sequence[int]):
        super().__init__(
            f"not a cograph: the subgraph on {len(vertices)} vertices "
            f"{list(vertices)[:12]}{'...' if len(vertices) > 12 else ''} is connected "
            "and has a connected complement"
        )
        self.vertices = tuple(vertices)


class InvalidParams(ValueError):
    pass


# nested construction form: a leaf is "L" (numbered by position) or an int
# (explicit vertex); an interior node is (Kind, [child, ...])
Nested = Union[str, int, tuple]


@dataclass(frozen=True)
class Cotree:
    kinds: tuple[Kind, ...]
    children: tuple[tuple[int, ...], ...]
    labels: tuple[int | None, ...]

    root = 0

    @classmethod
    def from_nested(cls, nested: Nested, *, validate: bool = True) -> "Cotree":
        kinds: list[Kind] = []
        children: list[list[int]] = []
        raw_labels: list[int | None] = []
        leaf_pos: list[int] = []
        stack = [(nested, -1)]
        while stack:
            item, parent = stack.pop()
            node = len(kinds)
            if parent >= 0:
                children[parent].append(node)
            if isinstance(item, tuple):
                kind, kids = item
                kind = Kind(kind)
                if kind is Kind.LEAF:
                    raise CotreeStructureError("interior node cannot be of kind L")
                kinds.append(kind)
                children.append([])
                raw_labels.append(None)
                for kid in reversed(list(kids)):
                    stack.append((kid, node))
            else:
                if isinstance(item, str) and item != "L":
                    raise CotreeStructureError(f"unknown leaf token {item!r}")
                kinds.append(Kind.LEAF)
                children.append([])
                raw_labels.append(None if isinstance(item, str) else int(item))
                leaf_pos.append(node)

        explicit = [raw_labels[v] for v in leaf_pos]
        if all(lab is None for lab in explicit):
            for i, v in enumerate(leaf_pos):
                raw_labels[v] = i
        elif any(lab is None for lab in explicit):
            raise CotreeStructureError("either all leaves carry a vertex index or none does")
        elif sorted(explicit) != list(range(len(explicit))):
            raise CotreeStructureError("leaf vertex indices must be a permutation of 0..n-1")

        tree = cls(tuple(kinds), tuple(tuple(c) for c in children), tuple(raw_labels))
        if validate:
            tree.check()
        return tree

    def check(self) -> None:
        """Raise :class:`CotreeStructureError` unless every interior node has >= 2 children."""
        for v, kind in enumerate(self.kinds):
            if kind is not Kind.LEAF and len(self.children[v]) < 2:
                raise CotreeStructureError(
                    f"interior node {v} ({kind.value}) has {len(self.children[v])} child(ren); at least 2 required"
                )

    @cached_property
    def parent(self) -> tuple[int | None, ...]:
        par: list[int | None] = [None] * len(self.kinds)
        for v, kids in enumerate(self.children):
            for c in kids:
                par[c] = v
        return tuple(par)

    @cached_property
    def level(self) -> tuple[int, ...]:
        lev = [0] * len(self.kinds)
        for v, kids in enumerate(self.children):
            for c in kids:
                lev[c] = lev[v] + 1
        return tuple(lev)

    @cached_property
    def leaves(self) -> tuple[int, ...]:
        """Leaf node ids in left-to-right order."""
        return tuple(v for v, k in enumerate(self.kinds) if k is Kind.LEAF)

    @property
    def n(self) -> int:
        return len(self.leaves)

    @property
    def root_kind(self) -> Kind:
        return self.kinds[0]

    @cached_property
    def depth(self) -> int:
        return max(self.level)

    @cached_property
    def vertex_order(self) -> tuple[int, ...]:
        """Vertex index of each leaf, left to right."""
        return tuple(self.labels[v] for v in self.leaves)

    @property
    def has_identity_labels(self) -> bool:
        return self.vertex_order == tuple(range(self.n))

    def leaf_vertices(self, node: int) -> list[int]:
        """Vertex indices of all leaves below ``node``."""
        out = []
        stack = [node]
        while stack:
            v = stack.pop()
            if self.kinds[v] is Kind.LEAF:
                out.append(self.labels[v])
            else:
                stack.extend(reversed(self.children[v]))
        return out

    def to_nested(self, *, with_labels: bool | None = None) -> Nested:
        if with_labels is None:
            with_labels = not self.has_identity_labels
        return _iterative_build(self, with_labels)

    def interior_counts_by_level(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for v, kind in enumerate(self.kinds):
            if kind is not Kind.LEAF:
                counts[self.level[v]] = counts.get(self.level[v], 0) + 1
        return counts

    def __str__(self) -> str:
        return serialize_cotree(self)


def _iterative_build(tree: Cotree, with_labels: bool) -> Nested:
    # children have larger ids than parents, so a reverse sweep sees every
    # child before its parent
    built: list[Nested | None] = [None] * len(tree.kinds)
    for v in range(len(tree.kinds) - 1, -1, -1):
        if tree.kinds[v] is Kind.LEAF:
            built[v] = tree.labels[v] if with_labels else "L"
        else:
            built[v] = (tree.kinds[v], [built[c] for c in tree.children[v]])
    return built[0]


# ---------------------------------------------------------------------------
# text format

def parse_cotree(text: str) -> Cotree:
    """Parse the cotree text format and return the normalized cotree."""
    pos = 0
    size = len(text)

    def skip_ws() -> None:
        nonlocal pos
        while pos < size and text[pos].isspace():
            pos += 1

    def parse_expr() -> Nested:
        nonlocal pos
        skip_ws()
        if pos >= size:
            raise CotreeParseError("unexpected end of input", pos)
        ch = text[pos]
        if ch == "L":
            pos += 1
            start = pos
            while pos < size and text[pos].isdigit():
                pos += 1
            return int(text[start:pos]) if pos > start else "L"
        if ch != "(":
            raise CotreeParseError(f"unexpected character {ch!r}", pos)
        open_at = pos
        pos += 1
        skip_ws()
        if pos >= size:
            raise CotreeParseError("unexpected end of input", pos)
        if text[pos] not in "JU":
            raise CotreeParseError(f"expected 'J' or 'U', found {text[pos]!r}", pos)
        kind = Kind(text[pos])
        pos += 1
        kids = []
        while True:
            skip_ws()
            if pos >= size:
                raise CotreeParseError(f"unbalanced parenthesis opened at offset {open_at}", pos)
            if text[pos] == ")":
                pos += 1
                break
            kids.append(parse_expr())
        if len(kids) < 2:
            raise CotreeStructureError(
                f"node opened at offset {open_at} has {len(kids)} child(ren); at least 2 required"
            )
        return (kind, kids)

    # deep inputs would exhaust the interpreter stack
    import sys

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * size + 100))
    try:
        nested = parse_expr()
    finally:
        sys.setrecursionlimit(limit)
    skip_ws()
    if pos != size:
        raise CotreeParseError(f"trailing input {text[pos:pos + 10]!r}", pos)
    return normalize(Cotree.from_nested(nested))


def serialize_cotree(t: Cotree) -> str:
    labelled = not t.has_identity_labels
    parts: list[str] = []
    stack: list = [0]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
            continue
        v = item
        if t.kinds[v] is Kind.LEAF:
            parts.append(f"L{t.labels[v]}" if labelled else "L")
            continue
        parts.append(f"({t.kinds[v].value}")
        stack.append(")")
        for c in reversed(t.children[v]):
            stack.append(c)
            stack.append(" ")
    return "".join(parts)


def cotree_to_json(t: Cotree) -> dict:
    """Nested ``{"kind", "children"}`` objects; leaves carry their ``vertex``."""
    built: list = [None] * len(t.kinds)
    for v in range(len(t.kinds) - 1, -1, -1):
        if t.kinds[v] is Kind.LEAF:
            built[v] = {"kind": "leaf", "vertex": t.labels[v]}
        else:
            name = "join" if t.kinds[v] is Kind.JOIN else "union"
            built[v] = {"kind": name, "children": [built[c] for c in t.children[v]]}
    return built[0]


def cotree_from_json(obj: dict) -> Cotree:
    def conv(o: dict) -> Nested:
        if o["kind"] == "leaf":
            return int(o["vertex"])
        kind = {"join": Kind.JOIN, "union": Kind.UNION}[o["kind"]]
        return (kind, [conv(c) for c in o["children"]])

    return Cotree.from_nested(conv(obj))


# ---------------------------------------------------------------------------
# normalization

def normalize(t: Cotree) -> Cotree:
    """Splice out unary interior nodes and merge same-kind parent/child pairs."""
    # each entry: None (empty subtree), a leaf label, or (kind, [kids])
    built: list = [None] * len(t.kinds)
    for v in range(len(t.kinds) - 1, -1, -1):
        kind = t.kinds[v]
        if kind is Kind.LEAF:
            built[v] = t.labels[v]
            continue
        kids: list = []
        for c in t.children[v]:
            sub = built[c]
            if sub is None:
                continue
            if isinstance(sub, tuple) and sub[0] is kind:
                kids.extend(sub[1])
            else:
                kids.append(sub)
            built[c] = None
        if not kids:
            built[v] = None
        elif len(kids) == 1:
            built[v] = kids[0]
        else:
            built[v] = (kind, kids)
    root = built[0]
    if root is None:
        raise CotreeStructureError("cotree has no leaves")
    return Cotree.from_nested(root)


# ---------------------------------------------------------------------------
# graphs

@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        edges = set()
        for u, v in pairs:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            edges.add((min(u, v), max(u, v)))
        return cls(n, frozenset(edges))

    @cached_property
    def neighbors(self) -> tuple[frozenset, ...]:
        adj: list[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, with ``vertices[i]`` renumbered to ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            ((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Read ``u v`` pairs, one per line, 0-indexed; ``#`` starts a comment.

    The vertex count is one more than the largest index seen unless ``n`` is
    given.
    """
    pairs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: vertex indices must be integers") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex index")
        pairs.append((u, v))
    top = max((max(p) for p in pairs), default=-1) + 1
    if n is None:
        n = top
    elif n < top:
        raise ValueError(f"edge list mentions vertex {top - 1} but n = {n}")
    return Graph.from_edges(n, pairs)


def format_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in sorted(g.edges))


def expand_to_graph(t: Cotree) -> Graph:
    """Two leaves are adjacent iff their lowest common ancestor is a join."""
    below: list[list[int] | None] = [None] * len(t.kinds)
    edges = set()
    for v in range(len(t.kinds) - 1, -1, -1):
        if t.kinds[v] is Kind.LEAF:
            below[v] = [t.labels[v]]
            continue
        groups = [below[c] for c in t.children[v]]
        if t.kinds[v] is Kind.JOIN:
            for i, gi in enumerate(groups):
                for gj in groups[i + 1:]:
                    for a in gi:
                        for b in gj:
                            edges.add((a, b) if a < b else (b, a))
        merged: list[int] = []
        for g in groups:
            merged.extend(g)
        below[v] = merged
        for c in t.children[v]:
            below[c] = None
    return Graph(t.n, frozenset(edges))


def _components(vertices: list[int], adjacent) -> list[list[int]]:
    remaining = set(vertices)
    comps = []
    for s in vertices:
        if s not in remaining:
            continue
        remaining.discard(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            found = [w for w in remaining if adjacent(u, w)]
            for w in found:
                remaining.discard(w)
                comp.append(w)
                queue.append(w)
        comps.append(sorted(comp))
    return comps


def recognize_cograph(g: Graph) -> Cotree:
    """Build the cotree of ``g`` by repeated component / co-component splits.

    Worst case O(n^3); raises :class:`NotACograph` when a connected piece
    also has a connected complement.
    """
    if g.n == 0:
        raise CotreeStructureError("empty graph has no cotree")
    nbr = g.neighbors

    def adj(u, w):
        return w in nbr[u]

    def nonadj(u, w):
        return w not in nbr[u]

    # explicit stack of (vertices, slot) where slot receives the subtree
    root: list = [None]
    work = [(list(range(g.n)), root, 0)]
    while work:
        verts, slot, idx = work.pop()
        if len(verts) == 1:
            slot[idx] = verts[0]
            continue
        parts = _components(verts, adj)
        kind = Kind.UNION
        if len(parts) == 1:
            parts = _components(verts, nonadj)
            kind = Kind.JOIN
            if len(parts) == 1:
                raise NotACograph(verts)
        kids: list = [None] * len(parts)
        slot[idx] = (kind, kids)
        for i, part in enumerate(parts):
            work.append((part, kids, i))
    return Cotree.from_nested(root[0])


# ---------------------------------------------------------------------------
# balanced cotrees

@dataclass(frozen=True)
class BalancedParams:
    """Branching sequence ``(a_1, ..., a_r)`` of a balanced cotree.

    Level ``i`` has ``a_1 * ... * a_i`` nodes and every leaf sits at level
    ``r``.  A single entry ``(a_1,)`` is the complete graph on ``a_1``
    vertices.
    """

    a: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if not a:
            raise InvalidParams("balanced parameters need at least one entry")
        if len(a) == 1:
            if a[0] < 1:
                raise InvalidParams(f"a_1 must be >= 1 for depth 1, got {a[0]}")
        elif any(x < 2 for x in a):
            raise InvalidParams(f"every a_i must be >= 2 when r >= 2, got {a}")

    @classmethod
    def parse(cls, text: str) -> "BalancedParams":
        try:
            return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x))
        except ValueError as exc:
            if isinstance(exc, InvalidParams):
                raise
            raise InvalidParams(f"cannot parse balanced parameters {text!r}") from None

    @property
    def r(self) -> int:
        return len(self.a)

    @property
    def order(self) -> int:
        return math.prod(self.a)

    def __iter__(self):
        return iter(self.a)

    def __len__(self):
        return len(self.a)

    def __getitem__(self, i):
        return self.a[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.a))


def balanced_cotree(p: BalancedParams | Sequence[int]) -> Cotree:
    """The depth-``r`` cotree with join root and uniform branching ``a_i`` per level."""
    if not isinstance(p, BalancedParams):
        p = BalancedParams(tuple(p))
    if p.r == 1 and p.a[0] == 1:
        return Cotree.from_nested("L")

    def build(level: int) -> Nested:
        if level == p.r:
            return "L"
        kind = Kind.JOIN if level % 2 == 0 else Kind.UNION
        sub = build(level + 1)
        return (kind, [sub] * p.a[level])

    return Cotree.from_nested(build(0))


class Completion(NamedTuple):
    params: BalancedParams
    completed: Cotree
    embedding: tuple[int, ...]  # embedding[v] = vertex of `completed` hosting vertex v


def leaf_position(params: BalancedParams, path: Sequence[int]) -> int:
    """Left-to-right index of the leaf reached by child indices ``path``."""
    idx = 0
    for radix, step in zip(params.a, path):
        idx = idx * radix + step
    return idx


def balance_completion(t: Cotree) -> Completion:
    """Embed a connected cograph's cotree into the smallest balanced cotree of equal depth.

    Leaves above the last level are pushed down through chains of alternating
    one-child nodes, ``a_i`` becomes the largest child count among level
    ``i - 1`` nodes, and missing children are filled with copies, which makes
    the added vertices duplicates or coduplicates of existing ones.
    """
    if t.root_kind is not Kind.JOIN:
        raise CotreeStructureError(
            "balance completion needs a join root (connected cograph); "
            "handle the components of a disconnected cograph separately"
        )
    normal = normalize(t)
    if normal != t:
        raise CotreeStructureError("balance completion needs a normalized cotree")
    r = t.depth
    width = [0] * r
    for v, kind in enumerate(t.kinds):
        if kind is not Kind.LEAF:
            width[t.level[v]] = max(width[t.level[v]], len(t.children[v]))
    params = BalancedParams(tuple(width))
    completed = balanced_cotree(params)

    embedding = [0] * t.n
    stack: list[tuple[int, tuple[int, ...]]] = [(0, ())]
    while stack:
        v, path = stack.pop()
        if t.kinds[v] is Kind.LEAF:
            full = path + (0,) * (r - len(path))
            embedding[t.labels[v]] = leaf_position(params, full)
            continue
        for j, c in enumerate(t.children[v]):
            stack.append((c, path + (j,)))
    return Completion(params, completed, tuple(embedding))
