"""Exact counts of travel groupoids on complete multipartite graphs.

Part sizes ``(n_1, ..., n_l)`` describe K_{n_1,...,n_l}.  For a vertex in
part ``p`` the number of its v-spanning trees is a sum of multinomial
coefficients over compositions of ``n_p - 1`` indexed by the vertices
outside part ``p``; these sums are evaluated literally, term by term, and
the power forms they collapse to are provided separately as cross-checks.
"""

from __future__ import annotations

from math import factorial, prod
from typing import Iterator, Sequence, Tuple

from .errors import NoTravelGroupoidError


def multinomial(n: int, parts: Sequence[int]) -> int:
    """``n! / (parts[0]! * parts[1]! * ...)``."""
    if n < 0 or any(k < 0 for k in parts):
        raise ValueError("multinomial arguments must be non-negative")
    if sum(parts) != n:
        raise ValueError(f"parts {list(parts)} do not sum to {n}")
    out = factorial(n)
    for k in parts:
        out //= factorial(k)
    return out


def compositions(total: int, slots: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of ``total`` into ``slots`` parts, colex order."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    for last in range(total + 1):
        for head in compositions(total - last, slots - 1):
            yield head + (last,)


def _check_sizes(sizes: Sequence[int]) -> Tuple[int, ...]:
    sizes = tuple(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError(f"part sizes must be a nonempty list of positive integers: {sizes}")
    return sizes


def _check_part(sizes, p):
    if not 1 <= p <= len(sizes):
        raise IndexError(f"part index {p} out of range 1..{len(sizes)}")


def _composition_sum(total: int, slots: int) -> int:
    return sum(multinomial(total, m) for m in compositions(total, slots))


def count_S(sizes: Sequence[int], p: int) -> int:
    """Number of v-spanning trees at a vertex of part ``p`` (1-based).

    Each of the other ``n_p - 1`` vertices of part ``p`` hangs off one of
    the ``n - n_p`` vertices outside it; ``m`` records how many hang off
    each, and the multinomial counts the ways to pick them.
    """
    sizes = _check_sizes(sizes)
    _check_part(sizes, p)
    n_p = sizes[p - 1]
    outside = sum(sizes) - n_p
    return _composition_sum(n_p - 1, outside)


def count_S_closed(sizes: Sequence[int], p: int) -> int:
    sizes = _check_sizes(sizes)
    _check_part(sizes, p)
    n_p = sizes[p - 1]
    return (sum(sizes) - n_p) ** (n_p - 1)


def _reject_edgeless(sizes):
    if len(sizes) == 1 and sizes[0] > 1:
        raise NoTravelGroupoidError(
            f"K_{{{sizes[0]}}} is edgeless with more than one vertex and carries no travel groupoid"
        )


def count_travel_groupoids(sizes: Sequence[int]) -> int:
    """All travel groupoids on K_{sizes} (every one is non-confusing there)."""
    sizes = _check_sizes(sizes)
    _reject_edgeless(sizes)
    return prod(count_S(sizes, p) ** n_p for p, n_p in enumerate(sizes, 1))


def count_simple_travel_groupoids(sizes: Sequence[int]) -> int:
    """Simple travel groupoids on K_{sizes}.

    Inside part ``p`` the k-th vertex's tree must agree with those already
    chosen, leaving ``n_p - k`` free vertices to hang.
    """
    sizes = _check_sizes(sizes)
    _reject_edgeless(sizes)
    n = sum(sizes)
    out = 1
    for n_p in sizes:
        for k in range(1, n_p + 1):
            out *= _composition_sum(n_p - k, n - n_p)
    return out


def count_travel_closed(sizes: Sequence[int]) -> int:
    sizes = _check_sizes(sizes)
    _reject_edgeless(sizes)
    n = sum(sizes)
    return prod((n - s) ** (s * (s - 1)) for s in sizes)


def count_simple_closed(sizes: Sequence[int]) -> int:
    sizes = _check_sizes(sizes)
    _reject_edgeless(sizes)
    n = sum(sizes)
    return prod((n - s) ** (s * (s - 1) // 2) for s in sizes)
