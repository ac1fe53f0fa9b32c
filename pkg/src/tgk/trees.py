"""v-spanning trees and the tree-family <-> groupoid correspondence.

A v-spanning tree is a spanning tree that keeps every edge at ``v``.  We
store it as a parent array pointing toward the root, so ``parent[u]`` is
the next hop from ``u`` to the root.  One such tree per vertex (a tree
family) determines a non-confusing travel groupoid via
``u*v = next hop from u toward v in the tree rooted at v``, and back.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from .errors import DisconnectedGraphError, InvalidTreeError, ParseError
from .graph import Graph
from .groupoid import Groupoid, associated_graph, require_non_confusing


@dataclass(frozen=True)
class RootedSpanningTree:
    root: int
    parent: Tuple[int, ...]  # parent[root] == root

    @property
    def n(self) -> int:
        return len(self.parent)

    def edges(self) -> frozenset:
        return frozenset(
            (min(u, p), max(u, p)) for u, p in enumerate(self.parent) if u != self.root
        )

    def validate(self, G: Graph) -> None:
        """Raise :class:`InvalidTreeError` unless this is a root-spanning
        tree of ``G``."""
        n, v = self.n, self.root
        if n != G.n:
            raise InvalidTreeError(f"tree has {n} vertices, graph has {G.n}")
        if not 0 <= v < n or self.parent[v] != v:
            raise InvalidTreeError(f"root {v} must be its own parent")
        for u, p in enumerate(self.parent):
            if u != v and not G.has_edge(u, p):
                raise InvalidTreeError(f"parent edge {u}-{p} is not in the graph")
        for u in range(n):
            x, steps = u, 0
            while x != v:
                x = self.parent[x]
                steps += 1
                if steps > n:
                    raise InvalidTreeError(f"vertex {u} does not reach root {v}")
        for w in G.neighbors(v):
            if self.parent[w] != v:
                raise InvalidTreeError(f"root edge {v}-{w} missing from tree")

    def to_text(self) -> str:
        lines = [f"root {self.root}"]
        lines += [f"{u} {p}" for u, p in enumerate(self.parent) if u != self.root]
        return "\n".join(lines) + "\n"


def next_hop(T: RootedSpanningTree, u: int) -> int:
    """Neighbour of ``u`` on the unique path from ``u`` to the root."""
    if u == T.root:
        raise ValueError("the root has no next hop")
    return T.parent[u]


def parse_trees(text: str) -> List[RootedSpanningTree]:
    """Read concatenated ``root v`` blocks; the order ``n`` is inferred
    from the largest vertex mentioned in each block."""
    trees = []
    block: Optional[Tuple[int, Dict[int, int]]] = None

    def close():
        if block is None:
            return
        root, par = block
        n = max([root, *par, *par.values()]) + 1
        if set(par) != set(range(n)) - {root}:
            raise ParseError(f"tree rooted at {root} does not list every vertex")
        trees.append(RootedSpanningTree(root, tuple(par.get(u, root) for u in range(n))))

    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0].startswith("#"):
            continue
        try:
            if tok[0] == "root":
                close()
                block = (int(tok[1]), {})
            elif block is not None and len(tok) == 2:
                block[1][int(tok[0])] = int(tok[1])
            else:
                raise ParseError("expected 'root v' or 'u parent'", lineno, 1)
        except (ValueError, IndexError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"bad tree line {raw.strip()!r}", lineno, 1) from None
    close()
    return trees


def _require_connected(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise IndexError(f"root {v} out of range for {G.n} vertices")
    if not G.is_connected():
        raise DisconnectedGraphError("v-spanning trees need a connected graph")


def _contracted(G: Graph, v: int):
    """Contract the closed neighbourhood of ``v`` into one node.

    Returns ``(nodes, edges)`` where nodes are the representatives (``v``
    stands for the super-node) and each edge is ``(a, b, original_edge)``.
    Edges inside the super-node become loops and are dropped.
    """
    star = set(G.neighbors(v)) | {v}
    rep = {u: (v if u in star else u) for u in range(G.n)}
    edges = []
    for a, b in G.edge_list():
        ra, rb = rep[a], rep[b]
        if ra != rb:
            edges.append((ra, rb, (a, b)))
    nodes = sorted(set(rep.values()))
    return nodes, edges


def _connected(nodes, edges) -> bool:
    if len(nodes) <= 1:
        return True
    adj = {x: [] for x in nodes}
    for a, b, _ in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(nodes)


def _spanning_trees(nodes, edges) -> Iterator[list]:
    # Contraction/deletion on a loopless multigraph.  Edge labels keep
    # parallel edges apart so each tree lifts back unambiguously.
    if len(nodes) == 1:
        yield []
        return
    if not edges:
        return
    (a, b, label), rest = edges[0], edges[1:]
    merged = []
    for x, y, lab in rest:
        x = a if x == b else x
        y = a if y == b else y
        if x != y:
            merged.append((x, y, lab))
    remaining = [x for x in nodes if x != b]
    for t in _spanning_trees(remaining, merged):
        yield [label] + t
    if _connected(nodes, rest):
        yield from _spanning_trees(nodes, rest)


def _orient(n: int, root: int, edges) -> Tuple[int, ...]:
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    parent = [-1] * n
    parent[root] = root
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if parent[y] == -1:
                parent[y] = x
                queue.append(y)
    return tuple(parent)


def enumerate_v_trees(G: Graph, v: int) -> List[RootedSpanningTree]:
    """Every spanning tree of ``G`` containing all edges at ``v``.

    Sorted by parent array, i.e. by the parent choices in vertex order.
    """
    _require_connected(G, v)
    nodes, edges = _contracted(G, v)
    star = [(min(v, w), max(v, w)) for w in sorted(G.neighbors(v))]
    out = []
    for chosen in _spanning_trees(nodes, edges):
        out.append(RootedSpanningTree(v, _orient(G.n, v, star + chosen)))
    out.sort(key=lambda t: t.parent)
    return out


def _bareiss_det(M: List[List[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    A = [row[:] for row in M]
    k = len(A)
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(k - 1):
        if A[i][i] == 0:
            swap = next((r for r in range(i + 1, k) if A[r][i] != 0), None)
            if swap is None:
                return 0
            A[i], A[swap] = A[swap], A[i]
            sign = -sign
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                A[r][c] = (A[r][c] * A[i][i] - A[r][i] * A[i][c]) // prev
        prev = A[i][i]
    return sign * A[k - 1][k - 1]


def count_v_trees(G: Graph, v: int) -> int:
    """Number of v-spanning trees, by the matrix-tree theorem on the graph
    with ``v``'s star contracted (reduced Laplacian at the super-node)."""
    _require_connected(G, v)
    nodes, edges = _contracted(G, v)
    others = [x for x in nodes if x != v]
    index = {x: i for i, x in enumerate(others)}
    L = [[0] * len(others) for _ in others]
    for a, b, _ in edges:
        for x, y in ((a, b), (b, a)):
            if x in index:
                L[index[x]][index[x]] += 1
                if y in index:
                    L[index[x]][index[y]] -= 1
    return _bareiss_det(L)


@dataclass(frozen=True)
class TreeFamily:
    """One v-spanning tree per vertex, ``trees[v].root == v``."""

    trees: Tuple[RootedSpanningTree, ...]

    def __post_init__(self):
        n = len(self.trees)
        for v, t in enumerate(self.trees):
            if t.root != v or t.n != n:
                raise InvalidTreeError(f"slot {v} holds a tree rooted at {t.root} on {t.n} vertices")

    @property
    def n(self) -> int:
        return len(self.trees)

    def __getitem__(self, v: int) -> RootedSpanningTree:
        return self.trees[v]

    def host_graph(self) -> Graph:
        """Union of the root stars, which is the host graph for a valid family."""
        return Graph(self.n, frozenset(
            (min(v, w), max(v, w))
            for v, t in enumerate(self.trees)
            for w, p in enumerate(t.parent)
            if w != v and p == v
        ))

    def validate(self, G: Optional[Graph] = None) -> Graph:
        G = self.host_graph() if G is None else G
        for t in self.trees:
            t.validate(G)
        return G


def groupoid_from_family(F: TreeFamily) -> Groupoid:
    """``u*v`` is the next hop from ``u`` toward ``v`` in the tree rooted at ``v``."""
    F.validate()
    cols = [t.parent for t in F.trees]
    return Groupoid._trusted(tuple(zip(*cols)))


def family_from_groupoid(g: Groupoid) -> TreeFamily:
    """Trees ``T_v`` with ``parent(u) = u*v``; needs a non-confusing travel groupoid."""
    require_non_confusing(g, "family_from_groupoid")
    G = associated_graph(g)
    trees = []
    for v in range(g.n):
        t = RootedSpanningTree(v, tuple(row[v] for row in g.table))
        t.validate(G)
        trees.append(t)
    return TreeFamily(tuple(trees))


def _path_in(edges, u: int, v: int) -> bool:
    adj: Dict[int, list] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            return True
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return False


def simple_family_violation(F: TreeFamily) -> Optional[Tuple[int, int]]:
    """First ``(u, v)``, ``u < v``, with no u-v path inside ``T_u`` and ``T_v``
    both; ``None`` if every pair is connected there."""
    edge_sets = [t.edges() for t in F.trees]
    for u in range(F.n):
        for v in range(u + 1, F.n):
            if not _path_in(edge_sets[u] & edge_sets[v], u, v):
                return (u, v)
    return None


def is_simple_family(F: TreeFamily) -> bool:
    return simple_family_violation(F) is None


def tree_counts(G: Graph) -> List[int]:
    return [count_v_trees(G, v) for v in range(G.n)]


__all__ = [
    "RootedSpanningTree", "TreeFamily", "enumerate_v_trees", "count_v_trees",
    "next_hop", "groupoid_from_family", "family_from_groupoid",
    "is_simple_family", "simple_family_violation", "parse_trees", "tree_counts",
]
