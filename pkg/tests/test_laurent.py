"""Tests for exact Laurent polynomial arithmetic and determinants.

Frozen oracle values: the right trefoil and figure-eight knots have
genus-1 Seifert matrices [[-1, 1], [0, -1]] and [[1, 1], [0, -1]]; the
classical determinant formula det(V - t V^T) gives their Alexander
polynomials, worked out by hand below.
"""

from fractions import Fraction

import pytest

from knotcert.laurent import LaurentPoly, poly_matrix_det


def seifert_alexander(v):
    n = len(v)
    t = LaurentPoly.t()
    m = [[LaurentPoly.term(v[i][j]) - t * v[j][i] for j in range(n)] for i in range(n)]
    return poly_matrix_det(m).normalize_alexander()


def test_basic_arithmetic():
    t = LaurentPoly.t()
    p = t + 1
    q = t - 1
    assert p * q == LaurentPoly({2: 1, 0: -1})
    assert p - p == LaurentPoly.zero()
    assert not (p - p)
    assert (p * q).divexact(q) == p
    assert 2 * t == LaurentPoly({1: 2})
    assert (t + 2) * 0 == LaurentPoly.zero()


def test_shift_and_mirror():
    p = LaurentPoly({2: 3, 0: -1})
    assert p.shift(-2) == LaurentPoly({0: 3, -2: -1})
    assert p.mirror() == LaurentPoly({-2: 3, 0: -1})
    assert p.mirror().mirror() == p


def test_units():
    assert LaurentPoly.t(5).is_unit()
    assert LaurentPoly.term(-1, -3).is_unit()
    assert not LaurentPoly.term(2).is_unit()
    assert not (LaurentPoly.t() + 1).is_unit()


def test_divexact_rejects_inexact():
    t = LaurentPoly.t()
    with pytest.raises(ArithmeticError):
        (t + 1).divexact(LaurentPoly.term(2))


def test_evaluation():
    p = LaurentPoly({1: 1, 0: -1, -1: 1})  # t - 1 + 1/t
    assert p(1) == 1
    assert p(-1) == -3
    assert p(2) == Fraction(3, 2)
    assert p(Fraction(1, 2)) == Fraction(3, 2)


def test_trefoil_alexander_from_seifert_matrix():
    # Right trefoil: Delta = t - 1 + 1/t, determinant |Delta(-1)| = 3.
    delta = seifert_alexander([[-1, 1], [0, -1]])
    assert delta == LaurentPoly({1: 1, 0: -1, -1: 1})
    assert abs(delta(-1)) == 3


def test_figure_eight_alexander_from_seifert_matrix():
    # Figure eight: Delta = -t + 3 - 1/t, determinant 5.
    delta = seifert_alexander([[1, 1], [0, -1]])
    assert delta == LaurentPoly({1: -1, 0: 3, -1: -1})
    assert abs(delta(-1)) == 5


def test_t25_alexander_from_seifert_matrix():
    # (2,5) torus knot from the standard genus-2 band matrix.
    v = [[-1, 1, 0, 0], [0, -1, 1, 0], [0, 0, -1, 1], [0, 0, 0, -1]]
    delta = seifert_alexander(v)
    assert delta == LaurentPoly({2: 1, 1: -1, 0: 1, -1: -1, -2: 1})
    assert abs(delta(-1)) == 5


def test_unknot_alexander():
    assert poly_matrix_det([]).normalize_alexander() == LaurentPoly.one()


def test_normalize_rejects_asymmetric():
    with pytest.raises(AssertionError):
        LaurentPoly({1: 1, 0: 1}).normalize_alexander()


def test_poly_matrix_det_matches_cofactor_expansion():
    # A 3x3 matrix with no unit entries exercises the Bareiss stage.
    t = LaurentPoly.t()
    two = LaurentPoly.term(2)
    m = [
        [two * t, two, LaurentPoly.zero()],
        [two, two * t, two],
        [LaurentPoly.zero(), two, two * t],
    ]
    # det = 2t(4t^2 - 4) - 2(4t) = 8t^3 - 16t
    assert poly_matrix_det(m) == LaurentPoly({3: 8, 1: -16})


def test_poly_matrix_det_singular():
    t = LaurentPoly.t()
    m = [[t, t], [t, t]]
    assert poly_matrix_det(m).is_zero()
