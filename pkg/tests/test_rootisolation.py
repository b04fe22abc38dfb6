"""Descartes-certified isolation of the largest non-negative root."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from overpoly.polynomials import Poly, product_gap_poly
from overpoly.rootisolation import (
    cauchy_root_bound,
    isolate_max_root,
    no_roots_above,
    sign_variations,
    squarefree_part,
    taylor_shift,
    variations_in_interval,
)

F = Fraction
WIDTH = F(1, 10**4)


def test_sign_variations():
    assert sign_variations([]) == 0
    assert sign_variations([1, 2, 3]) == 0
    assert sign_variations([1, -1, 1]) == 2
    assert sign_variations([1, 0, -1, 0, 0, 2]) == 2


def test_taylor_shift():
    p = Poly([-1, 0, 1])  # x^2 - 1
    assert taylor_shift(p, 1) == Poly([0, 2, 1])
    assert taylor_shift(p, -1) == Poly([0, -2, 1])
    q = Poly([3, -2, 5, 1])
    assert taylor_shift(taylor_shift(q, F(7, 3)), F(-7, 3)) == q


def test_cauchy_bound_exceeds_roots():
    # (x-2)(x+3)(x-1/2) has roots 2, -3, 1/2
    p = Poly([3, F(5, 2), -F(1, 2), 1]) * 2
    bound = cauchy_root_bound(p)
    assert bound > 3
    assert sign_variations(taylor_shift(p, bound).coeffs) == 0


def test_squarefree_part_collapses_multiplicity():
    p = Poly([-1, 1])  # x - 1
    q = Poly([2, 1])  # x + 2
    assert squarefree_part(p * p * q) in (p * q, (p * q) * F(1, 1))
    collapsed = squarefree_part(p * p * q * q * q)
    assert collapsed.degree == 2
    assert collapsed(1) == 0 and collapsed(-2) == 0


def test_variations_in_interval_counts():
    p = Poly([-1, 0, 1])  # roots at 1 and -1
    assert variations_in_interval(p, 0, 2) == 1
    assert variations_in_interval(p, F(3, 2), 2) == 0
    assert variations_in_interval(p, 0, F(1, 2)) == 0


def test_no_roots_above():
    p = Poly([-1, 0, 1])
    assert no_roots_above(p, 1)  # root exactly at 1, none beyond
    assert no_roots_above(p, 2)
    assert not no_roots_above(p, F(1, 2))


def test_exact_rational_roots():
    bracket = isolate_max_root(Poly([0, -2, 2]), WIDTH)  # 2x(x-1)
    assert bracket.has_root and bracket.lo == bracket.hi == 1
    bracket = isolate_max_root(Poly([0, F(-8, 3), 0, F(8, 3)]), WIDTH)  # (8/3)x(x^2-1)
    assert bracket.has_root and bracket.lo == bracket.hi == 1


def test_no_nonnegative_root():
    bracket = isolate_max_root(Poly([1, 0, 1]), WIDTH)  # x^2 + 1
    assert not bracket.has_root and bracket.lo == bracket.hi == 0
    bracket = isolate_max_root(Poly([1, 1]), WIDTH)  # x + 1, root -1
    assert not bracket.has_root


def test_root_at_zero_only():
    bracket = isolate_max_root(Poly([0, 0, 0, 1]), WIDTH)  # x^3
    assert bracket.has_root and bracket.lo == bracket.hi == 0
    bracket = isolate_max_root(Poly([0, 1, 1]), WIDTH)  # x(x+1)
    assert bracket.has_root and bracket.lo == bracket.hi == 0


def test_gap_polynomial_bracket():
    p = product_gap_poly(2, 2)
    bracket = isolate_max_root(p, WIDTH)
    assert bracket.has_root
    assert bracket.hi - bracket.lo <= WIDTH
    assert p(bracket.lo) < 0 < p(bracket.hi)
    assert no_roots_above(p, bracket.hi)
    mid = float((bracket.lo + bracket.hi) / 2)
    assert abs(mid - 0.84) < 0.01


def test_constant_rejected():
    with pytest.raises(ValueError):
        isolate_max_root(Poly([3]), WIDTH)
    with pytest.raises(ValueError):
        isolate_max_root(Poly([0, 1]), 0)


def test_negative_leading_coefficient_normalized():
    bracket = isolate_max_root(Poly([0, 2, -2]), WIDTH)  # -2x(x-1), largest root 1
    assert bracket.has_root and bracket.lo <= 1 <= bracket.hi


root_lists = st.lists(
    st.fractions(max_denominator=4, min_value=F(-3), max_value=F(3)),
    min_size=1,
    max_size=5,
)


@given(root_lists)
def test_bracket_contains_known_max_root(roots):
    poly = Poly([1])
    for r in roots:
        poly = poly * Poly([-r, 1])
    bracket = isolate_max_root(poly, WIDTH)
    nonneg = [r for r in roots if r >= 0]
    if not nonneg:
        assert not bracket.has_root
        return
    top = max(nonneg)
    assert bracket.has_root
    assert bracket.lo <= top <= bracket.hi
    assert bracket.hi - bracket.lo <= WIDTH
