from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tgk.counting import (
    compositions,
    count_S,
    count_S_closed,
    count_simple_closed,
    count_simple_travel_groupoids,
    count_travel_closed,
    count_travel_groupoids,
    multinomial,
)
from tgk.errors import NoTravelGroupoidError

sizes_upto_20 = st.lists(st.integers(1, 10), min_size=1, max_size=6).filter(
    lambda s: sum(s) <= 20 and not (len(s) == 1 and s[0] > 1))


def sequential_binomials(n, parts):
    # choose parts[0] of n, then parts[1] of the rest, ...
    out, left = 1, n
    for k in parts:
        out *= comb(left, k)
        left -= k
    return out


class TestMultinomial:
    @pytest.mark.parametrize("n, parts, expected", [
        (2, [1, 1], 2), (4, [2, 1, 1], 12), (0, [], 1), (5, [5], 1), (6, [0, 6], 1)])
    def test_values(self, n, parts, expected):
        assert multinomial(n, parts) == expected

    def test_sum_mismatch(self):
        with pytest.raises(ValueError):
            multinomial(3, [1, 1])

    @given(st.lists(st.integers(0, 8), max_size=6))
    def test_matches_sequential_binomials(self, parts):
        assert multinomial(sum(parts), parts) == sequential_binomials(sum(parts), parts)


class TestCompositions:
    @given(st.integers(0, 7), st.integers(0, 5))
    def test_count_and_uniqueness(self, total, slots):
        comps = list(compositions(total, slots))
        expected = comb(total + slots - 1, slots - 1) if slots else int(total == 0)
        assert len(comps) == len(set(comps)) == expected
        assert all(sum(c) == total and len(c) == slots for c in comps)

    def test_colex_order(self):
        comps = list(compositions(2, 3))
        assert comps == sorted(comps, key=lambda c: c[::-1])


class TestCountS:
    def test_k23(self):
        assert count_S([2, 3], 1) == 3
        assert count_S([2, 3], 2) == 4

    def test_complete_graph(self):
        assert all(count_S([1] * 5, p) == 1 for p in range(1, 6))

    def test_bad_index(self):
        with pytest.raises(IndexError):
            count_S([2, 3], 3)
        with pytest.raises(IndexError):
            count_S([2, 3], 0)

    @settings(max_examples=80, deadline=None)
    @given(sizes_upto_20, st.data())
    def test_literal_sum_equals_power(self, sizes, data):
        p = data.draw(st.integers(1, len(sizes)))
        n_p = sizes[p - 1]
        assert count_S(sizes, p) == (sum(sizes) - n_p) ** (n_p - 1) == count_S_closed(sizes, p)


class TestTravelCounts:
    @pytest.mark.parametrize("sizes, travel, simple", [
        ((2, 3), 576, 24), ((2, 2), 16, 4), ((1, 1, 1, 1), 1, 1), ((1,), 1, 1), ((1, 3), 1, 1),
    ])
    def test_values(self, sizes, travel, simple):
        assert count_travel_groupoids(sizes) == travel
        assert count_simple_travel_groupoids(sizes) == simple

    def test_edgeless_rejected(self):
        with pytest.raises(NoTravelGroupoidError):
            count_travel_groupoids([3])
        with pytest.raises(NoTravelGroupoidError):
            count_simple_travel_groupoids([2])

    def test_big_integers(self):
        assert count_travel_groupoids([10, 10]) > 10**85
        assert count_travel_groupoids([10, 10]) == 10 ** 180

    @pytest.mark.slow
    @settings(max_examples=60, deadline=None)
    @given(sizes_upto_20)
    def test_against_power_forms(self, sizes):
        travel = count_travel_groupoids(sizes)
        simple = count_simple_travel_groupoids(sizes)
        assert travel == count_travel_closed(sizes)
        assert simple == count_simple_closed(sizes)
        assert simple <= travel
        # equal exactly when each part is a single vertex or faces a single vertex
        n = sum(sizes)
        assert (simple == travel) == all(s == 1 or n - s == 1 for s in sizes)

    def test_star_counts_coincide(self):
        assert count_travel_groupoids([1, 3]) == count_simple_travel_groupoids([1, 3]) == 1
