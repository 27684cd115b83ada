from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

import oracles
from latagg.distributions import (box_distribution, box_distribution_2d, growth_count_pmf,
                                  growth_direction_prob, moment, orient, unit_box_distribution,
                                  unit_mean_directions)
from latagg.geometry import IncompatibleBoxes
from latagg.symfunc import OrientationError
from strategies import box_pairs

BOX_13_12 = {(2, 5): F(2, 7), (2, 4): F(2, 7), (2, 3): F(2, 7), (1, 5): F(1, 7)}
BOX_13_21 = {(3, 4): F(2, 7), (3, 3): F(3, 7), (2, 4): F(2, 7)}


def test_1x3_with_1x2():
    d = box_distribution((1, 3), (1, 2))
    assert d.entries == BOX_13_12
    assert d.total_attachments == 14


def test_1x3_with_2x1():
    assert box_distribution((1, 3), (2, 1)).entries == BOX_13_21


def test_unit_square_pair():
    assert box_distribution((1, 1), (1, 1)).entries == {(2, 2): F(1, 2), (2, 1): F(1, 4), (1, 2): F(1, 4)}


def test_keys_are_canonical():
    d = box_distribution((2, 3, 1), (1, 2, 2))
    keys = list(d.entries)
    assert keys == sorted(keys, reverse=True)


def test_mismatch():
    with pytest.raises(IncompatibleBoxes):
        box_distribution((1, 2), (1,))


@given(box_pairs())
def test_matches_placement_oracle(pair):
    x, y = pair
    assert box_distribution(*pair).entries == oracles.distribution(x, y)


@given(box_pairs())
def test_basic_properties(pair):
    x, y = pair
    d = box_distribution(x, y)
    assert sum(d.entries.values()) == 1
    assert d == box_distribution(y, x)
    for z in d:
        assert all(max(a, b) <= c <= a + b for a, b, c in zip(x, y, z))


@given(box_pairs(), st.data())
def test_swap_of_sides(pair, data):
    x, y = map(list, pair)
    i = data.draw(st.integers(0, len(x) - 1))
    x2, y2 = x[:], y[:]
    x2[i], y2[i] = y[i], x[i]
    assert box_distribution(x, y) == box_distribution(x2, y2)
    assert box_distribution(x, y) == box_distribution(*orient(x, y))


def test_closed_form_1x3_with_1x2():
    assert box_distribution_2d((1, 3), (1, 2)).entries == BOX_13_12


def test_closed_form_square_flush_rows():
    d = box_distribution_2d((2, 2), (2, 2))
    assert d[(4, 2)] == d[(2, 4)] == F(2, 16)
    assert sum(d.entries.values()) == 1


def test_closed_form_needs_rectangles():
    with pytest.raises(ValueError):
        box_distribution_2d((1, 2, 3), (1, 2, 3))


@given(box_pairs(max_dim=2, max_side=8).filter(lambda p: len(p[0]) == 2))
def test_closed_form_matches_enumeration(pair):
    assert box_distribution_2d(*pair) == box_distribution(*pair)


def test_growth_direction_example():
    # 4 of the 16 attachments of (3,2)+(2,1) lengthen side 1 only
    assert growth_direction_prob((3, 2), (2, 1), {0}) == F(1, 4)
    assert oracles.growth_classes((3, 2), (2, 1))[frozenset({0})] == F(1, 4)


def test_growth_requires_orientation():
    with pytest.raises(OrientationError):
        growth_direction_prob((1, 3), (2, 1), {0})
    with pytest.raises(OrientationError):
        growth_count_pmf((1, 3), (2, 1))
    with pytest.raises(ValueError):
        growth_direction_prob((3, 2), (2, 1), set())


@given(box_pairs())
def test_growth_direction_probs(pair):
    x, y = orient(*pair)
    l = len(x)
    classes = oracles.growth_classes(x, y)
    pmf = growth_count_pmf(x, y)
    total = F(0)
    for k in range(1, l + 1):
        level = F(0)
        for dirs in combinations(range(l), k):
            p = growth_direction_prob(x, y, dirs)
            assert p == classes.get(frozenset(dirs), 0)
            level += p
        assert pmf[k] == level
        total += level
    assert total == 1
    assert pmf[0] == 0


def test_growth_pmf_example():
    assert growth_count_pmf((3, 2), (2, 1)) == oracles.growth_pmf((3, 2), (2, 1))


@given(st.lists(st.integers(1, 6), min_size=1, max_size=4))
def test_growth_pmf_unit_box(x):
    from latagg.symfunc import elementary_symmetric
    from latagg.geometry import attachment_count
    ones = (1,) * len(x)
    pmf = growth_count_pmf(x, ones)
    total = attachment_count(x, ones)
    for k in range(1, len(x) + 1):
        assert pmf[k] == F(2 ** k) * elementary_symmetric(x, len(x) - k) / total


def test_moment_zero():
    assert moment((3, 2), (2, 1), 0) == 1


@pytest.mark.parametrize("x1, x2", [(1, 1), (2, 5), (7, 3), (10, 10)])
def test_moment_unit_rectangle(x1, x2):
    assert moment((x1, x2), (1, 1), 1) == 1 + F(2, x1 + x2 + 2)


@given(box_pairs(), st.integers(1, 3))
def test_moment_matches_direct_expectation(pair, p):
    x, y = orient(*pair)
    pmf = oracles.growth_pmf(x, y)
    assert moment(x, y, p) == sum(k ** p * q for k, q in enumerate(pmf))


def test_unit_box_rectangle_closed_form():
    x1, x2 = 4, 7
    d = unit_box_distribution((x1, x2))
    per = x1 + x2 + 2
    assert d.entries == {(5, 8): F(2, per), (5, 7): F(x2, per), (4, 8): F(x1, per)}


def test_unit_box_11():
    assert unit_box_distribution((1, 1)) == box_distribution((1, 1), (1, 1))


@given(st.lists(st.integers(1, 4), min_size=1, max_size=3))
def test_unit_box_matches_enumeration(x):
    d = unit_box_distribution(x)
    assert sum(d.entries.values()) == 1
    assert d == box_distribution(x, (1,) * len(x))


def l3_mean(x1, x2, x3):
    e2 = x1 * x2 + x1 * x3 + x2 * x3
    e1 = x1 + x2 + x3
    return F(e2 + 4 * e1 + 12, e2 + 2 * e1 + 4)


def test_mean_directions_unit_cube():
    assert unit_mean_directions((1, 1, 1)) == F(27, 13) == l3_mean(1, 1, 1)


@given(st.integers(1, 50), st.integers(1, 50))
def test_mean_directions_rectangle(x1, x2):
    m = unit_mean_directions((x1, x2))
    assert m == 1 + F(2, x1 + x2 + 2)
    assert m < 2


@given(st.tuples(st.integers(1, 30), st.integers(1, 30), st.integers(1, 30)))
def test_mean_directions_box(x):
    m = unit_mean_directions(x)
    assert m == l3_mean(*x) == moment(x, (1, 1, 1), 1)
    if x != (1, 1, 1):
        assert m < 2


def test_mean_directions_large_boxes_grow_in_one_direction():
    n = 10 ** 6
    assert 0 < unit_mean_directions((n, n)) - 1 < F(1, 10 ** 5)
    assert 0 < unit_mean_directions((n, n, n)) - 1 < F(1, 10 ** 5)
