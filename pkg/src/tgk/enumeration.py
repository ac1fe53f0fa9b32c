"""Exhaustive generation of travel groupoids on a fixed graph.

Two independent routes:

* :func:`enumerate_nonconfusing` walks the Cartesian product of the
  v-spanning tree lists, one tree per root.  This is the main path.
* :func:`enumerate_bruteforce` fills the operation table cell by cell and
  prunes with the travel axioms.  It is slow and exists as an oracle, and
  for graphs where confusing travel groupoids also occur.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from itertools import islice, product
from math import prod
from typing import Iterable, Iterator, List, Optional, Sequence

from .errors import CensusTooLarge, DisconnectedGraphError
from .graph import Graph
from .groupoid import PREDICATES, Groupoid, holds, is_travel
from .trees import count_v_trees, enumerate_v_trees

DEFAULT_CEILING = 10**7
BRUTEFORCE_MAX_ORDER = 6
FILTERS = ("simple", "smooth", "semi_smooth", "tcb", "associative", "has_left_unit")


def default_ceiling() -> int:
    """The census ceiling, overridable through ``TGK_MAX_CENSUS``."""
    raw = os.environ.get("TGK_MAX_CENSUS")
    return int(raw) if raw else DEFAULT_CEILING


def census_size(G: Graph) -> int:
    """Number of non-confusing travel groupoids on connected ``G``."""
    if not G.is_connected():
        raise DisconnectedGraphError("the tree census needs a connected graph")
    return prod(count_v_trees(G, v) for v in range(G.n))


def enumerate_nonconfusing(
    G: Graph,
    ceiling: Optional[int] = None,
    force: bool = False,
    start: int = 0,
    stop: Optional[int] = None,
) -> Iterator[Groupoid]:
    """Yield every non-confusing travel groupoid on ``G`` exactly once.

    The k-th groupoid is the k-th tuple of the product of per-root tree
    lists, root 0 varying slowest.  ``start``/``stop`` select a contiguous
    slice of that order so workers can split the census.
    """
    total = census_size(G)
    ceiling = default_ceiling() if ceiling is None else ceiling
    if total > ceiling and not force:
        raise CensusTooLarge(total, ceiling)
    columns = [[t.parent for t in enumerate_v_trees(G, v)] for v in range(G.n)]
    for cols in islice(product(*columns), start, stop):
        yield Groupoid._trusted(tuple(zip(*cols)))


def enumerate_bruteforce(G: Graph, max_order: int = BRUTEFORCE_MAX_ORDER) -> Iterator[Groupoid]:
    """Every travel groupoid whose associated graph is ``G``, by table search.

    Edge cells are forced to ``u*v = v`` and the diagonal to ``u*u = u``.
    A non-edge cell ``u*v`` ranges over neighbours of ``u``.  (t1) and (t2)
    are checked as soon as both cells they mention are filled.
    """
    n = G.n
    if n > max_order:
        raise ValueError(f"brute force is limited to order {max_order}, got {n}")
    T = [[-1] * n for _ in range(n)]
    free = []
    for u in range(n):
        T[u][u] = u
        for v in range(n):
            if u == v:
                continue
            if G.has_edge(u, v):
                T[u][v] = v
            else:
                free.append((u, v))
    domains = {(u, v): sorted(G.neighbors(u)) for u, v in free}

    def consistent(u, v):
        w = T[u][v]
        # (t1) at (u, v) and (t2) at (u, v)
        if T[w][u] != -1 and T[w][u] != u:
            return False
        if T[w][v] != -1 and T[w][v] == u:
            return False
        # (u, v) as the second cell of (t1) at (v, x): v*x = u needs u*v = v
        # and of (t2) at (x, v): x*v = u needs u*v != x
        for x in range(n):
            if T[v][x] == u and w != v:
                return False
            if x != v and T[x][v] == u and w == x:
                return False
        return True

    def search(i):
        if i == len(free):
            g = Groupoid._trusted(tuple(tuple(r) for r in T))
            if is_travel(g):
                yield g
            return
        u, v = free[i]
        for w in domains[(u, v)]:
            if w == v:
                continue
            T[u][v] = w
            if consistent(u, v):
                yield from search(i + 1)
        T[u][v] = -1

    yield from search(0)


def filter_enumeration(stream: Iterable[Groupoid], *names: str) -> Iterator[Groupoid]:
    """Keep the groupoids satisfying every named predicate."""
    for name in names:
        if name not in PREDICATES:
            raise ValueError(f"unknown predicate {name!r}; try one of {', '.join(FILTERS)}")
    for g in stream:
        if all(holds(g, name) for name in names):
            yield g


def split_ranges(total: int, parts: int) -> List[range]:
    """Cut ``range(total)`` into at most ``parts`` contiguous nonempty slices."""
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    out = []
    lo = 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append(range(lo, hi))
        lo = hi
    return out


def _census_chunk(args):
    G, filters, lo, hi = args
    stream = enumerate_nonconfusing(G, force=True, start=lo, stop=hi)
    return [(lo + i, g.table) for i, g in enumerate(stream) if all(holds(g, f) for f in filters)]


def parallel_census(
    G: Graph,
    filters: Sequence[str] = (),
    workers: int = 2,
    ceiling: Optional[int] = None,
    force: bool = False,
) -> List[tuple]:
    """``(index, table)`` pairs for the filtered census, computed in chunks.

    Results are gathered in index order, so the output matches a
    single-threaded run.
    """
    for name in filters:
        if name not in PREDICATES:
            raise ValueError(f"unknown predicate {name!r}")
    total = census_size(G)
    ceiling = default_ceiling() if ceiling is None else ceiling
    if total > ceiling and not force:
        raise CensusTooLarge(total, ceiling)
    jobs = [(G, tuple(filters), r.start, r.stop) for r in split_ranges(total, workers)]
    out = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for chunk in pool.map(_census_chunk, jobs):
            out.extend(chunk)
    return out
