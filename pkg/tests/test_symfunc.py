from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, strategies as st

import oracles
from latagg.geometry import attachment_count
from latagg.symfunc import (OrientationError, Polynomial, big_r, big_r_all, elementary_symmetric,
                            elementary_symmetric_all, moment_polynomial, r_product, u_ddu)
from strategies import box_pairs

fracs = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=0, max_size=6)


def test_e0_is_one():
    assert elementary_symmetric([7, 3], 0) == 1
    assert elementary_symmetric([], 0) == 1


def test_e2_of_123():
    assert elementary_symmetric([1, 2, 3], 2) == 11


def test_e_top_is_product():
    assert elementary_symmetric([2, 3, 5], 3) == 30


def test_e_out_of_range():
    with pytest.raises(ValueError):
        elementary_symmetric([1, 2], 3)


@given(fracs)
def test_e_matches_subset_sums(values):
    e = elementary_symmetric_all(values)
    assert e == [oracles.esym(values, k) for k in range(len(values) + 1)]


@given(fracs.filter(bool), st.integers(min_value=0, max_value=6))
def test_e_pascal_recurrence(values, k):
    *head, last = values
    if k > len(values):
        return
    lhs = elementary_symmetric(values, k)
    rhs = (elementary_symmetric(head, k) if k <= len(head) else 0)
    if k >= 1:
        rhs += last * elementary_symmetric(head, k - 1)
    assert lhs == rhs


def test_r_product():
    assert r_product((2, 3), (5, 7), set()) == 6
    assert r_product((2, 3), (5, 7), {0, 1}) == 35
    assert r_product((2, 3), (5, 7), {1}) == 14
    with pytest.raises(IndexError):
        r_product((2, 3), (5, 7), {2})


def test_big_r_examples():
    assert big_r((1, 2), (3, 4), 1) == 10
    assert big_r((1, 2), (3, 4), 0) == 2
    assert sum(big_r_all((1, 2), (3, 4))) == (1 + 3) * (2 + 4)


@given(st.integers(min_value=1, max_value=4).flatmap(
    lambda l: st.tuples(*(st.tuples(st.integers(0, 5), st.integers(0, 5)) for _ in range(l)))))
def test_generating_identity(pairs):
    a = [p for p, _ in pairs]
    b = [q for _, q in pairs]
    r = big_r_all(a, b)
    assert r == [oracles.big_r(a, b, k) for k in range(len(a) + 1)]
    for u in (Fraction(-2), Fraction(1, 3), Fraction(2)):
        assert sum(c * u ** k for k, c in enumerate(r)) == prod(p + u * q for p, q in zip(a, b))


@given(st.lists(st.integers(1, 5), min_size=1, max_size=4),
       st.lists(st.integers(1, 5), min_size=4, max_size=4), st.integers(0, 4))
def test_big_r_through_e(a, b, k):
    b = b[:len(a)]
    if k > len(a):
        return
    fb = [Fraction(p, q) for p, q in zip(a, b)]
    fa = [Fraction(q, p) for p, q in zip(a, b)]
    assert big_r(a, b, k) == prod(b) * elementary_symmetric(fb, len(a) - k)
    assert big_r(a, b, k) == prod(a) * elementary_symmetric(fa, k)


def test_moment_polynomial_unit_y():
    x = (3, 5, 2)
    expected = Polynomial.product_of_linear((1, Fraction(1, v)) for v in x) - Polynomial((1,))
    assert moment_polynomial(x, (1, 1, 1)) == expected


def test_moment_polynomial_1x1():
    assert moment_polynomial((1,), (1,)).coeffs == (0, 1)


def test_moment_polynomial_by_hand():
    # (1 + u)(1 + u/2) - (1 + u/2)(1 + 0u) = u + u^2/2
    assert moment_polynomial((3, 2), (2, 1)).coeffs == (0, 1, Fraction(1, 2))


def test_moment_polynomial_needs_orientation():
    with pytest.raises(OrientationError, match="orient"):
        moment_polynomial((1, 3), (2, 1))


@given(box_pairs())
def test_moment_polynomial_at_two_counts_attachments(pair):
    x, y = (tuple(map(max, zip(*pair))), tuple(map(min, zip(*pair))))
    m = moment_polynomial(x, y)
    assert m.coeffs[0] == 0
    assert m(2) * prod(a - b + 1 for a, b in zip(x, y)) == attachment_count(x, y)


def test_u_ddu():
    assert u_ddu(Polynomial((1,))) == Polynomial(())
    assert u_ddu(Polynomial((0, 1, 3))) == Polynomial((0, 1, 6))


@given(st.lists(st.fractions(max_denominator=5), max_size=5), st.integers(0, 4))
def test_u_ddu_power_at_two(coeffs, p):
    q = Polynomial(tuple(coeffs))
    for _ in range(p):
        q = u_ddu(q)
    assert q(2) == sum(k ** p * c * 2 ** k for k, c in enumerate(coeffs))
