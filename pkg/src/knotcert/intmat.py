"""Exact integer matrix tools: Smith normal form, determinants and
signatures of symmetric matrices.

All computations are exact (integers and Fractions); the signature
routine uses symmetric congruence and never falls back to floating
point, so zero diagonals and torsion-heavy presentations are safe.
"""

from __future__ import annotations

from fractions import Fraction


def int_det(rows):
    """Determinant of a square integer matrix by fraction-free Bareiss."""
    m = [list(map(int, r)) for r in rows]
    n = len(m)
    for r in m:
        assert len(r) == n, "matrix must be square"
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                q, rem = divmod(num, prev)
                assert rem == 0
                m[i][j] = q
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_normal_form(rows):
    """Diagonal invariant factors d_1 | d_2 | ... of an integer matrix.

    Returns the nonzero invariant factors as a list of positive ints
    (trailing zero factors are implicit in the rank deficit).  The empty
    matrix has no invariant factors.
    """
    m = [list(map(int, r)) for r in rows]
    if not m or not m[0]:
        return []
    nr, nc = len(m), len(m[0])
    factors = []
    top = 0
    while top < nr and top < nc:
        # Find a nonzero pivot of minimal absolute value.
        best = None
        for i in range(top, nr):
            for j in range(top, nc):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[top], m[bi] = m[bi], m[top]
        for r in m:
            r[top], r[bj] = r[bj], r[top]
        # Clear the pivot row and column; restart whenever a remainder
        # smaller than the pivot appears (terminates since |pivot| drops).
        while True:
            p = m[top][top]
            dirty = False
            for i in range(top + 1, nr):
                if m[i][top]:
                    q = m[i][top] // p
                    for j in range(top, nc):
                        m[i][j] -= q * m[top][j]
                    if m[i][top]:
                        m[top], m[i] = m[i], m[top]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(top + 1, nc):
                if m[top][j]:
                    q = m[top][j] // p
                    for i in range(top, nr):
                        m[i][j] -= q * m[i][top]
                    if m[top][j]:
                        for r in m:
                            r[top], r[j] = r[j], r[top]
                        dirty = True
                        break
            if not dirty:
                break
        # Enforce divisibility of the remaining block by the pivot.
        p = m[top][top]
        offender = None
        for i in range(top + 1, nr):
            for j in range(top + 1, nc):
                if m[i][j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(top, nc):
                m[top][j] += m[offender][j]
            continue
        factors.append(abs(p))
        top += 1
    return factors


def cokernel_invariants(rows, ambient_rank):
    """Invariant factors of Z^ambient_rank / (column span of the matrix).

    Returns (torsion, free_rank) where torsion lists the invariant
    factors > 1 and free_rank counts the Z summands.
    """
    if not rows or not rows[0]:
        return [], ambient_rank
    assert len(rows) == ambient_rank
    factors = smith_normal_form(rows)
    torsion = [d for d in factors if d > 1]
    return torsion, ambient_rank - len(factors)


def sym_signature(rows):
    """Signature (n_+ minus n_-) of a symmetric integer or Fraction
    matrix, computed by exact symmetric congruence.

    When every live diagonal entry is zero but some off-diagonal entry
    m[a][b] = p is not, the congruence e_a -> e_a + e_b manufactures the
    diagonal entry 2p, so plain 1x1 pivoting always suffices.
    """
    n = len(rows)
    m = [[Fraction(rows[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            assert m[i][j] == m[j][i], "matrix must be symmetric"
    sig = 0
    live = list(range(n))
    while live:
        pick = next((i for i in live if m[i][i] != 0), None)
        if pick is None:
            pair = None
            for a in live:
                for b in live:
                    if b > a and m[a][b] != 0:
                        pair = (a, b)
                        break
                if pair:
                    break
            if pair is None:
                break  # remaining block is zero
            a, b = pair
            for j in range(n):  # row a += row b, then column a += column b
                m[a][j] += m[b][j]
            for i in range(n):
                m[i][a] += m[i][b]
            continue
        p = m[pick][pick]
        sig += 1 if p > 0 else -1
        live = [i for i in live if i != pick]
        for i in live:
            c = m[i][pick] / p
            if c:
                for j in live:
                    m[i][j] -= c * m[pick][j]
        continue
    return sig


def sym_rank_nullity(rows):
    """(rank, nullity) of a symmetric matrix over the rationals."""
    n = len(rows)
    m = [[Fraction(rows[i][j]) for j in range(n)] for i in range(n)]
    rank = 0
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, n) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        for i in range(n):
            if i != row and m[i][col] != 0:
                c = m[i][col] / pv
                for j in range(n):
                    m[i][j] -= c * m[row][j]
        row += 1
        rank += 1
    return rank, n - rank
