"""Tests for exact integer matrix tools.

Signature oracles come from the symmetrized Seifert matrices of the
trefoil (signature -2), figure eight (0) and the (2,5) torus knot (-4),
all computable by hand from 2x2 and 4x4 matrices.
"""

import random

from knotcert.intmat import (
    cokernel_invariants,
    int_det,
    smith_normal_form,
    sym_rank_nullity,
    sym_signature,
)


def symmetrize(v):
    n = len(v)
    return [[v[i][j] + v[j][i] for j in range(n)] for i in range(n)]


def test_int_det():
    assert int_det([]) == 1
    assert int_det([[7]]) == 7
    assert int_det([[1, 2], [3, 4]]) == -2
    assert int_det([[0, 1], [1, 0]]) == -1
    assert int_det([[2, 4], [1, 2]]) == 0
    assert int_det([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3


def test_smith_normal_form_diagonal():
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    assert smith_normal_form([[4, 0], [0, 6]]) == [2, 12]
    assert smith_normal_form([[0, 0], [0, 0]]) == []
    assert smith_normal_form([[2, 4], [4, 8]]) == [2]
    assert smith_normal_form([[1]]) == [1]


def test_smith_normal_form_divisibility():
    random.seed(7)
    for _ in range(50):
        nr = random.randint(1, 5)
        nc = random.randint(1, 5)
        m = [[random.randint(-9, 9) for _ in range(nc)] for _ in range(nr)]
        f = smith_normal_form(m)
        for a, b in zip(f, f[1:]):
            assert b % a == 0
        if nr == nc:
            prod = 1
            for d in f:
                prod *= d
            assert (abs(int_det(m)) == prod) or (len(f) < nr and int_det(m) == 0)


def test_cokernel_invariants():
    assert cokernel_invariants([[3]], 1) == ([3], 0)
    assert cokernel_invariants([[0]], 1) == ([], 1)
    assert cokernel_invariants([[2, 0], [0, 1]], 2) == ([2], 0)
    assert cokernel_invariants([], 3) == ([], 3)


def test_signature_small():
    assert sym_signature([]) == 0
    assert sym_signature([[5]]) == 1
    assert sym_signature([[-5]]) == -1
    assert sym_signature([[0, 1], [1, 0]]) == 0
    assert sym_signature([[0, 2], [2, 0]]) == 0
    assert sym_signature([[1, 0, 0], [0, -1, 0], [0, 0, 5]]) == 1
    assert sym_signature([[0, 0], [0, 0]]) == 0


def test_signature_zero_diagonal_block():
    m = [
        [0, 1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, 3],
        [0, 0, 3, 0],
    ]
    assert sym_signature(m) == 0


def test_signature_knot_oracles():
    assert sym_signature(symmetrize([[-1, 1], [0, -1]])) == -2  # right trefoil
    assert sym_signature(symmetrize([[1, 1], [0, -1]])) == 0  # figure eight
    v25 = [[-1, 1, 0, 0], [0, -1, 1, 0], [0, 0, -1, 1], [0, 0, 0, -1]]
    assert sym_signature(symmetrize(v25)) == -4


def test_signature_random_congruence_invariance():
    # Signature is invariant under congruence M -> A^T M A with A unimodular.
    random.seed(11)
    for _ in range(25):
        n = random.randint(1, 5)
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = random.randint(-4, 4)
        base = sym_signature(m)
        a = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for _ in range(6):  # random elementary row operations keep det = +-1
            i, j = random.randrange(n), random.randrange(n)
            if i != j:
                c = random.randint(-2, 2)
                for k in range(n):
                    a[i][k] += c * a[j][k]
        am = [[sum(a[k][i] * m[k][l] for k in range(n)) for l in range(n)] for i in range(n)]
        ama = [[sum(am[i][k] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        assert sym_signature(ama) == base


def test_rank_nullity():
    assert sym_rank_nullity([[1, 0], [0, 0]]) == (1, 1)
    assert sym_rank_nullity([[0, 1], [1, 0]]) == (2, 0)
    assert sym_rank_nullity([[0, 0], [0, 0]]) == (0, 2)
