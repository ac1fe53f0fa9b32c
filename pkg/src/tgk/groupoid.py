"""Finite groupoids as operation tables, and the axiom predicates on them.

A :class:`Groupoid` is just a square table; no axiom is enforced on
construction, so non-examples can be built and explained.  Every predicate
comes in two flavours: ``satisfies_x(g)`` / ``is_x(g)`` returning a bool,
and ``find_violation(g, "x")`` returning the lexicographically first
violating tuple (or ``None``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, Optional, Sequence, Tuple

from .errors import ConfusingError, NotTravelError, ParseError
from .graph import Graph, maximal_cliques

Row = Tuple[int, ...]


@dataclass(frozen=True)
class Groupoid:
    """Operation table over ``0..n-1``; ``table[u][v]`` is ``u*v``."""

    table: Tuple[Row, ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.table)
        n = len(rows)
        if n == 0:
            raise ValueError("a groupoid needs a nonempty carrier")
        for u, r in enumerate(rows):
            if len(r) != n:
                raise ValueError(f"row {u} has {len(r)} entries, expected {n}")
            for v, x in enumerate(r):
                if not 0 <= x < n:
                    raise ValueError(f"entry ({u},{v}) = {x} out of range 0..{n - 1}")
        object.__setattr__(self, "table", rows)

    @classmethod
    def _trusted(cls, rows: Tuple[Row, ...]) -> "Groupoid":
        # Skips validation; callers guarantee a well-formed tuple-of-tuples.
        g = object.__new__(cls)
        object.__setattr__(g, "table", rows)
        return g

    @classmethod
    def from_function(cls, n: int, op: Callable[[int, int], int]) -> "Groupoid":
        return cls(tuple(tuple(op(u, v) for v in range(n)) for u in range(n)))

    @classmethod
    def right_projection(cls, n: int) -> "Groupoid":
        """The table ``u*v = v``: the only travel groupoid on K_n."""
        return cls._trusted(tuple(tuple(range(n)) for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.table)

    def op(self, u: int, v: int) -> int:
        return self.table[u][v]

    def restrict(self, subset: Sequence[int]) -> Optional["Groupoid"]:
        """Subgroupoid on ``subset`` relabelled to ``0..k-1``, or ``None``
        if ``subset`` is not closed under the operation."""
        members = sorted(subset)
        index = {x: i for i, x in enumerate(members)}
        rows = []
        for u in members:
            row = []
            for v in members:
                w = self.table[u][v]
                if w not in index:
                    return None
                row.append(index[w])
            rows.append(tuple(row))
        return Groupoid._trusted(tuple(rows))

    def to_text(self) -> str:
        return format_table(self)


def format_table(g: Groupoid) -> str:
    lines = [str(g.n)] + [" ".join(map(str, r)) for r in g.table]
    return "\n".join(lines) + "\n"


def _table_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if s and not s.startswith("#"):
            yield lineno, raw


def _parse_ints(lineno, raw):
    out = []
    for m in re.finditer(r"\S+", raw):
        try:
            out.append(int(m.group()))
        except ValueError:
            raise ParseError(
                f"expected an integer, got {m.group()!r}", lineno, m.start() + 1
            ) from None
    return out, [m.start() + 1 for m in re.finditer(r"\S+", raw)]


def iter_tables(text: str) -> Iterator[Groupoid]:
    """Parse one or more concatenated tables (``n`` then ``n`` rows each)."""
    lines = list(_table_lines(text))
    i = 0
    while i < len(lines):
        lineno, raw = lines[i]
        head, _ = _parse_ints(lineno, raw)
        if len(head) != 1 or head[0] < 1:
            raise ParseError("expected the order n >= 1 on its own line", lineno, 1)
        n = head[0]
        rows = []
        for j in range(n):
            if i + 1 + j >= len(lines):
                raise ParseError(f"table truncated: expected {n} rows", lineno + j + 1)
            rl, rraw = lines[i + 1 + j]
            vals, cols = _parse_ints(rl, rraw)
            if len(vals) != n:
                col = cols[n] if len(vals) > n else len(rraw) + 1
                raise ParseError(f"expected {n} entries, found {len(vals)}", rl, col)
            for x, c in zip(vals, cols):
                if not 0 <= x < n:
                    raise ParseError(f"entry {x} out of range 0..{n - 1}", rl, c)
            rows.append(tuple(vals))
        i += 1 + n
        yield Groupoid._trusted(tuple(rows))


def parse_table(text: str) -> Groupoid:
    """Parse exactly one operation table."""
    tables = list(iter_tables(text))
    if not tables:
        raise ParseError("no table found", 1)
    if len(tables) > 1:
        raise ParseError(f"expected one table, found {len(tables)}")
    return tables[0]


def iterate(g: Groupoid, u: int, v: int, i: int) -> int:
    """``u *^i v``: start at ``u`` and right-multiply by ``v`` ``i`` times."""
    n = g.n
    if not (0 <= u < n and 0 <= v < n):
        raise IndexError(f"vertex out of range for order {n}")
    if i < 0:
        raise ValueError("iteration count must be non-negative")
    col = [row[v] for row in g.table]
    x = u
    for _ in range(i):
        x = col[x]
    return x


# Violation generators.  Each yields offending tuples in lexicographic order.

def _v_idempotent(g):
    for u, row in enumerate(g.table):
        if row[u] != u:
            yield (u,)


def _v_t1(g):
    T = g.table
    for u, row in enumerate(T):
        for v, x in enumerate(row):
            if T[x][u] != u:
                yield (u, v)


def _v_t2(g):
    T = g.table
    for u, row in enumerate(T):
        for v, x in enumerate(row):
            if u != v and T[x][v] == u:
                yield (u, v)


def _v_simple(g):
    # (t3): v*u != u  =>  u*(v*u) = u*v
    T = g.table
    n = g.n
    for u in range(n):
        ru = T[u]
        for v in range(n):
            vu = T[v][u]
            if vu != u and ru[vu] != ru[v]:
                yield (u, v)


def _v_smooth(g):
    # (t4): u*v = u*w  =>  u*(w*v) = u*v
    T = g.table
    n = g.n
    for u in range(n):
        ru = T[u]
        for v in range(n):
            uv = ru[v]
            for w in range(n):
                if ru[w] == uv and ru[T[w][v]] != uv:
                    yield (u, v, w)


def _v_semi_smooth(g):
    # (t5): u*v = u*w  =>  u*(v*w) = u*v  or  u*((v*w)*w) = u*v
    T = g.table
    n = g.n
    for u in range(n):
        ru = T[u]
        for v in range(n):
            uv = ru[v]
            rv = T[v]
            for w in range(n):
                if ru[w] != uv:
                    continue
                vw = rv[w]
                if ru[vw] != uv and ru[T[vw][w]] != uv:
                    yield (u, v, w)


def _distinct_triples(n):
    for u in range(n):
        for v in range(n):
            if v == u:
                continue
            for w in range(n):
                if w != u and w != v:
                    yield u, v, w


def _v_tcm(g):
    # v*w = w  =>  v*u = u  or  w*u = u, for pairwise distinct u, v, w
    T = g.table
    for u, v, w in _distinct_triples(g.n):
        if T[v][w] == w and T[v][u] != u and T[w][u] != u:
            yield (u, v, w)


def _v_tcb(g):
    # exclusive variant of tcm: exactly one of v*u = u, w*u = u
    T = g.table
    for u, v, w in _distinct_triples(g.n):
        if T[v][w] == w and (T[v][u] == u) == (T[w][u] == u):
            yield (u, v, w)


def _v_associative(g):
    T = g.table
    n = g.n
    for u in range(n):
        ru = T[u]
        for v in range(n):
            ruv = T[ru[v]]
            rv = T[v]
            for w in range(n):
                if ruv[w] != ru[rv[w]]:
                    yield (u, v, w)


def _v_left_unit(g):
    # existence condition: the only possible witness is the empty tuple
    if not left_units(g):
        yield ()


def _v_travel(g):
    for t in _v_t1(g):
        yield ("t1",) + t
    for t in _v_t2(g):
        yield ("t2",) + t


def _v_non_confusing(g):
    _require_travel(g, "confusing-pair detection")
    yield from confusing_pairs(g)


def _v_exchange(g):
    partners = exchange_partners(g)
    for W in sorted(partners, key=sorted):
        for v, ws in sorted(partners[W].items()):
            if not ws:
                yield (tuple(sorted(W)), v)


_VIOLATIONS: Dict[str, Callable] = {
    "idempotent": _v_idempotent,
    "t1": _v_t1,
    "t2": _v_t2,
    "travel": _v_travel,
    "non_confusing": _v_non_confusing,
    "simple": _v_simple,
    "smooth": _v_smooth,
    "semi_smooth": _v_semi_smooth,
    "tcm": _v_tcm,
    "tcb": _v_tcb,
    "associative": _v_associative,
    "has_left_unit": _v_left_unit,
    "exchange": _v_exchange,
}

PREDICATES = tuple(_VIOLATIONS)


def find_violation(g: Groupoid, name: str) -> Optional[tuple]:
    """First tuple violating the named condition, or ``None`` if it holds."""
    try:
        gen = _VIOLATIONS[name]
    except KeyError:
        raise ValueError(f"unknown predicate {name!r}; known: {', '.join(PREDICATES)}") from None
    return next(gen(g), None)


def holds(g: Groupoid, name: str) -> bool:
    return find_violation(g, name) is None


def satisfies_t1(g: Groupoid) -> bool:
    return holds(g, "t1")


def satisfies_t2(g: Groupoid) -> bool:
    return holds(g, "t2")


def is_travel(g: Groupoid) -> bool:
    return holds(g, "t1") and holds(g, "t2")


def is_idempotent(g: Groupoid) -> bool:
    return holds(g, "idempotent")


def is_simple(g: Groupoid) -> bool:
    return holds(g, "simple")


def is_smooth(g: Groupoid) -> bool:
    return holds(g, "smooth")


def is_semi_smooth(g: Groupoid) -> bool:
    return holds(g, "semi_smooth")


def satisfies_tcm(g: Groupoid) -> bool:
    return holds(g, "tcm")


def satisfies_tcb(g: Groupoid) -> bool:
    return holds(g, "tcb")


def is_associative(g: Groupoid) -> bool:
    return holds(g, "associative")


def _require_travel(g, what):
    bad = find_violation(g, "travel")
    if bad is not None:
        raise NotTravelError(f"{what} needs a travel groupoid; {bad[0]} fails at {bad[1:]}")


def confusing_pairs(g: Groupoid) -> list:
    """Ordered pairs ``(u, v)``, ``u != v``, whose orbit under ``x -> x*v``
    returns to ``u``.

    For a travel groupoid a return can only happen after three or more
    steps, so any return at all makes the pair confusing.
    """
    _require_travel(g, "confusing-pair detection")
    T = g.table
    n = g.n
    out = []
    for v in range(n):
        col = [row[v] for row in T]
        for u in range(n):
            if u == v:
                continue
            seen = {u}
            x = u
            for _ in range(n):
                x = col[x]
                if x == u:
                    out.append((u, v))
                    break
                if x in seen:
                    break
                seen.add(x)
    out.sort()
    return out


def is_non_confusing(g: Groupoid) -> bool:
    return not confusing_pairs(g)


def path_sequence(g: Groupoid, u: int, v: int) -> list:
    """``u, u*v, u*^2 v, ...`` up to ``v`` or the first repeated vertex."""
    _require_travel(g, "path_sequence")
    if u == v:
        return [u]
    seq = [u]
    seen = {u}
    x = u
    while True:
        x = g.table[x][v]
        if x in seen:
            return seq
        seq.append(x)
        if x == v:
            return seq
        seen.add(x)


def associated_graph(g: Groupoid) -> Graph:
    """Edge ``{u, v}`` whenever ``u != u*v == v``."""
    edges = {
        (min(u, v), max(u, v))
        for u, row in enumerate(g.table)
        for v, x in enumerate(row)
        if u != v and x == v
    }
    return Graph(g.n, frozenset(edges))


def left_units(g: Groupoid) -> frozenset:
    ident = tuple(range(g.n))
    return frozenset(e for e, row in enumerate(g.table) if row == ident)


def maximal_associative_subgroupoids(g: Groupoid) -> list:
    """Maximal closed subsets on which the operation is associative.

    These are read off as the maximal cliques of the associated graph; each
    is re-checked for closure and associativity.
    """
    _require_travel(g, "maximal_associative_subgroupoids")
    out = []
    for clique in maximal_cliques(associated_graph(g)):
        sub = g.restrict(clique)
        assert sub is not None and is_associative(sub), clique
        out.append(clique)
    return out


def exchange_partners(g: Groupoid) -> Dict[frozenset, Dict[int, Tuple[int, ...]]]:
    """For each maximal associative subgroupoid ``W`` and ``v`` outside it,
    the ``w`` in ``W`` for which ``(W - {w}) | {v}`` is again maximal."""
    maximal = {frozenset(c) for c in maximal_associative_subgroupoids(g)}
    out = {}
    for W in maximal:
        per_v = {}
        for v in range(g.n):
            if v in W:
                continue
            per_v[v] = tuple(w for w in sorted(W) if (W - {w}) | {v} in maximal)
        out[W] = per_v
    return out


def check_exchange_property(g: Groupoid) -> bool:
    return holds(g, "exchange")


def exchange_partners_unique(g: Groupoid) -> bool:
    """Whether every exchange, where one exists, has exactly one partner."""
    return all(
        len(ws) <= 1 for per_v in exchange_partners(g).values() for ws in per_v.values()
    )


_FLAGS = (
    "idempotent", "t1", "t2", "travel", "non_confusing", "simple",
    "smooth", "semi_smooth", "tcm", "tcb", "associative",
)


@dataclass(frozen=True)
class PropertyReport:
    idempotent: bool
    t1: bool
    t2: bool
    travel: bool
    non_confusing: Optional[bool]
    simple: bool
    smooth: bool
    semi_smooth: bool
    tcm: bool
    tcb: bool
    associative: bool
    left_units: Tuple[int, ...]
    confusing_pairs: Optional[Tuple[Tuple[int, int], ...]]
    witnesses: Dict[str, tuple] = field(default_factory=dict)

    def flags(self) -> Dict[str, Optional[bool]]:
        return {k: getattr(self, k) for k in _FLAGS}

    def to_dict(self) -> dict:
        d = dict(self.flags())
        d["left_units"] = list(self.left_units)
        d["confusing_pairs"] = (
            None if self.confusing_pairs is None else [list(p) for p in self.confusing_pairs]
        )
        d["witnesses"] = {k: list(v) for k, v in self.witnesses.items()}
        return d


def classify(g: Groupoid) -> PropertyReport:
    """Evaluate every predicate.  ``non_confusing`` is ``None`` for tables
    that are not travel groupoids, where the notion is undefined."""
    witnesses = {}
    flags = {}
    for name in _FLAGS:
        if name == "non_confusing":
            continue
        w = find_violation(g, name)
        flags[name] = w is None
        if w is not None:
            witnesses[name] = w
    if flags["travel"]:
        pairs = tuple(confusing_pairs(g))
        flags["non_confusing"] = not pairs
        if pairs:
            witnesses["non_confusing"] = pairs[0]
    else:
        pairs = None
        flags["non_confusing"] = None
    return PropertyReport(
        left_units=tuple(sorted(left_units(g))),
        confusing_pairs=pairs,
        witnesses=witnesses,
        **flags,
    )


def require_non_confusing(g: Groupoid, what: str) -> None:
    _require_travel(g, what)
    pairs = confusing_pairs(g)
    if pairs:
        raise ConfusingError(f"{what} needs a non-confusing travel groupoid; {pairs[0]} is confusing")
