import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyconvex import EmptyPolygon, NotLocallyOrdinary, Polygon, classify, classify_bruteforce
from polyconvex.monotone import ALL_TRUE, classify_sequence, classify_sequence_bruteforce
from polyconvex.transforms import cyclic_shift

from .conftest import polygons


def cmp(a, b):
    return (a > b) - (a < b)


def weak_orders(n):
    """Every sequence of length n up to order isomorphism (values are dense ranks)."""
    for seq in itertools.product(range(n), repeat=n):
        if set(seq) == set(range(max(seq) + 1)):
            yield seq


def test_weak_order_counts_are_fubini_numbers():
    assert [sum(1 for _ in weak_orders(n)) for n in range(1, 6)] == [1, 3, 13, 75, 541]


@pytest.mark.parametrize("n", range(1, 7))
def test_descent_rule_matches_bruteforce_on_every_pattern(n):
    for seq in weak_orders(n):
        assert classify_sequence(seq, cmp) == classify_sequence_bruteforce(seq, cmp), seq


class TestExamples:
    def test_square(self, square):
        mc = classify(square)
        assert mc.increasing and mc.c_increasing and mc.c_nondecreasing
        assert not mc.c_decreasing

    def test_shifted_square(self, square):
        mc = classify(cyclic_shift(square, 2))
        assert mc.c_increasing and not mc.increasing

    def test_collinear_run(self):
        mc = classify(Polygon([(0, 0), (1, 0), (2, 0)]))
        assert mc.nondecreasing and mc.c_nondecreasing
        assert not mc.c_increasing

    def test_two_gon_is_both(self):
        for poly in (Polygon([(0, 0), (1, 0)]), Polygon([(3, 1), (-2, 5)])):
            for mc in (classify(poly), classify_bruteforce(poly)):
                assert mc.c_increasing and mc.c_decreasing

    def test_one_gon_all_true(self):
        assert classify(Polygon([(1, 2)])) == ALL_TRUE

    def test_empty_rejected(self):
        with pytest.raises(EmptyPolygon):
            classify(Polygon())

    def test_not_locally_ordinary(self):
        with pytest.raises(NotLocallyOrdinary):
            classify(Polygon([(0, 0), (0, 0), (1, 0)]))

    def test_derived_flags(self, square):
        d = classify(square).as_dict()
        assert d["c_strictly_monotone"] and d["c_monotone"]
        assert len(d) == 10


def _locally_ordinary(poly):
    v = poly.vertices
    return len(v) >= 2 and all(v[i] != v[(i + 1) % len(v)] for i in range(len(v)))


@settings(max_examples=300)
@given(polygons(min_n=2, max_n=9, bound=2))
def test_classify_matches_bruteforce_on_polygons(poly):
    if not _locally_ordinary(poly):
        return
    assert classify(poly) == classify_bruteforce(poly)


@given(polygons(min_n=2, max_n=8, bound=3), st.integers(-20, 20))
def test_flags_survive_cyclic_shift(poly, k):
    if not _locally_ordinary(poly):
        return
    assert classify(cyclic_shift(poly, k)).cyclic_flags() == classify(poly).cyclic_flags()


@given(polygons(min_n=2, max_n=8, bound=3))
def test_flag_implications(poly):
    if not _locally_ordinary(poly):
        return
    mc = classify(poly)
    assert not mc.increasing or mc.c_increasing
    assert not mc.c_increasing or mc.c_nondecreasing
    assert not mc.decreasing or mc.c_decreasing
    assert not mc.c_decreasing or mc.c_nonincreasing


def test_mirrored_swaps_sides(square):
    mc = classify(square)
    m = mc.mirrored()
    assert (m.c_increasing, m.c_decreasing) == (mc.c_decreasing, mc.c_increasing)
    assert m.mirrored() == mc
