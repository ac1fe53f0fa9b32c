"""Simple undirected graphs and complete multipartite recognition.

Vertices are the integers ``0..n-1``.  A graph is immutable once built.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple

from .errors import ParseError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = frozenset()
    adj: Tuple[frozenset, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            norm.add((min(u, v), max(u, v)))
        nbrs = [set() for _ in range(self.n)]
        for u, v in norm:
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, u: int) -> frozenset:
        return self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def edge_list(self) -> list:
        return sorted(self.edges)

    def components(self) -> list:
        """Connected components as sorted tuples, ordered by least vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def to_text(self) -> str:
        lines = [f"{self.n} {len(self.edges)}"]
        lines += [f"{u} {v}" for u, v in self.edge_list()]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class MultipartitePartition:
    """Parts in canonical order: by size, then by least member."""

    parts: Tuple[Tuple[int, ...], ...]

    @classmethod
    def canonical(cls, parts: Iterable[Iterable[int]]) -> "MultipartitePartition":
        ps = [tuple(sorted(p)) for p in parts]
        ps.sort(key=lambda p: (len(p), p[0]))
        return cls(tuple(ps))

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def part_of(self, v: int) -> int:
        for i, p in enumerate(self.parts):
            if v in p:
                return i
        raise ValueError(f"vertex {v} not in partition")


class Recognition(NamedTuple):
    """Outcome of :func:`recognize_multipartite`.

    Exactly one of ``partition`` and ``witness`` is set.  A witness
    ``(u, v, w)`` has ``vw`` an edge with ``u`` adjacent to neither end.
    """

    partition: Optional[MultipartitePartition]
    witness: Optional[Tuple[int, int, int]]

    @property
    def ok(self) -> bool:
        return self.partition is not None


def build_multipartite(sizes: Sequence[int]):
    """Return ``(graph, partition)`` for K_{sizes}.

    Vertices are numbered part by part in the order given.
    """
    sizes = list(sizes)
    if not sizes:
        raise ValueError("need at least one part")
    if any(s < 1 for s in sizes):
        raise ValueError(f"part sizes must be positive: {sizes}")
    parts = []
    start = 0
    for s in sizes:
        parts.append(tuple(range(start, start + s)))
        start += s
    edges = set()
    for i, p in enumerate(parts):
        for q in parts[i + 1:]:
            edges.update((u, v) for u in p for v in q)
    return Graph(start, frozenset(edges)), MultipartitePartition.canonical(parts)


def recognize_multipartite(G: Graph) -> Recognition:
    # u ~ v iff u == v or uv is a non-edge; G is complete multipartite
    # exactly when ~ is transitive.
    n = G.n
    for u in range(n):
        non_nbrs = [x for x in range(n) if x != u and not G.has_edge(u, x)]
        for i, v in enumerate(non_nbrs):
            for w in non_nbrs[i + 1:]:
                if G.has_edge(v, w):
                    return Recognition(None, (u, v, w))
    parts = []
    assigned = [False] * n
    for u in range(n):
        if assigned[u]:
            continue
        cls = [u] + [x for x in range(u + 1, n) if not G.has_edge(u, x)]
        for x in cls:
            assigned[x] = True
        parts.append(cls)
    return Recognition(MultipartitePartition.canonical(parts), None)


def is_complete(G: Graph) -> bool:
    return len(G.edges) == G.n * (G.n - 1) // 2


def is_complete_bipartite(G: Graph) -> bool:
    rec = recognize_multipartite(G)
    return rec.ok and len(rec.partition.parts) == 2


def is_star(G: Graph) -> bool:
    """K_{1,k} with k >= 1."""
    rec = recognize_multipartite(G)
    return rec.ok and len(rec.partition.parts) == 2 and rec.partition.sizes[0] == 1


def classify_family(G: Graph) -> str:
    """Most specific of: complete, star, complete_bipartite,
    complete_multipartite, not_multipartite.

    K_2 is reported as ``complete``.
    """
    rec = recognize_multipartite(G)
    if not rec.ok:
        return "not_multipartite"
    sizes = rec.partition.sizes
    if all(s == 1 for s in sizes):
        return "complete"
    if len(sizes) == 2:
        return "star" if sizes[0] == 1 else "complete_bipartite"
    return "complete_multipartite"


def _is_tree_component(G: Graph, comp: Sequence[int]) -> bool:
    members = set(comp)
    m = sum(1 for u, v in G.edges if u in members)
    return m == len(comp) - 1


def has_travel_groupoid(G: Graph) -> bool:
    """Whether any travel groupoid lives on ``G``.

    True for connected graphs; a disconnected graph qualifies only when no
    component is a tree (an isolated vertex counts as a tree).
    """
    comps = G.components()
    if len(comps) == 1:
        return True
    return not any(_is_tree_component(G, c) for c in comps)


def maximal_cliques(G: Graph) -> list:
    """All inclusion-maximal cliques as sorted tuples, in sorted order.

    Bron-Kerbosch with Tomita pivoting.  Exponential in the worst case;
    meant for graphs of at most a few dozen vertices.
    """
    out = []

    def expand(R, P, X):
        if not P and not X:
            out.append(tuple(sorted(R)))
            return
        pivot = max(P | X, key=lambda x: len(G.adj[x] & P))
        for v in sorted(P - G.adj[pivot]):
            expand(R | {v}, P & G.adj[v], X & G.adj[v])
            P = P - {v}
            X = X | {v}

    if G.n:
        expand(frozenset(), frozenset(range(G.n)), frozenset())
    return sorted(out)


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        yield lineno, raw


def _ints(lineno: int, raw: str) -> list:
    vals = []
    for m in re.finditer(r"\S+", raw):
        try:
            vals.append(int(m.group()))
        except ValueError:
            raise ParseError(
                f"expected an integer, got {m.group()!r}", lineno, m.start() + 1
            ) from None
    return vals


def parse_graph(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based)."""
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError("empty graph file", 1)
    lineno, raw = lines[0]
    head = _ints(lineno, raw)
    if len(head) != 2:
        raise ParseError("header must be 'n m'", lineno, 1)
    n, m = head
    if n < 1 or m < 0:
        raise ParseError("need n >= 1 and m >= 0", lineno, 1)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno) + 1
        raise ParseError(f"expected {m} edge lines, found {len(body)}", where)
    edges = set()
    for lineno, raw in body:
        vals = _ints(lineno, raw)
        if len(vals) != 2:
            raise ParseError("edge line must be 'u v'", lineno, 1)
        u, v = vals
        for col, x in enumerate((u, v)):
            if not 0 <= x < n:
                raise ParseError(f"vertex {x} out of range 0..{n - 1}", lineno, col + 1)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno, 1)
        e = (min(u, v), max(u, v))
        if e in edges:
            raise ParseError(f"duplicate edge {u} {v}", lineno, 1)
        edges.add(e)
    return Graph(n, frozenset(edges))
