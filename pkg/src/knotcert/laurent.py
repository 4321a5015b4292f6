"""Exact integer Laurent polynomials in one variable.

Alexander polynomials of knots live in Z[t, 1/t].  Everything here is
exact integer arithmetic: no floats, no modular shortcuts.  Polynomials
are kept as sparse {exponent: coefficient} dicts with nonzero values.
"""

from __future__ import annotations


class LaurentPoly:
    """A Laurent polynomial with integer coefficients.

    Instances are immutable in practice: all operations return fresh
    objects.  The zero polynomial has an empty coefficient dict.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for e, c in dict(coeffs).items():
                if c:
                    d[int(e)] = int(c)
        self.coeffs = d

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def term(cls, coeff, exp=0):
        return cls({exp: coeff})

    @classmethod
    def t(cls, exp=1):
        return cls({exp: 1})

    def is_zero(self):
        return not self.coeffs

    def is_unit(self):
        """True for +-t^k, the units of Z[t, 1/t]."""
        return len(self.coeffs) == 1 and abs(next(iter(self.coeffs.values()))) == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = d.get(e, 0) + c
            if v:
                d[e] = v
            else:
                d.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = d
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            d = {e: c * other for e, c in self.coeffs.items()}
            out = LaurentPoly.__new__(LaurentPoly)
            out.coeffs = d
            return out
        d = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                v = d.get(e, 0) + c1 * c2
                if v:
                    d[e] = v
                else:
                    d.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = d
        return out

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by t^k."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return out

    def divexact(self, other):
        """Exact division; raises ArithmeticError if the division has a
        remainder.  Used by fraction-free (Bareiss) elimination."""
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        rem = dict(self.coeffs)
        lead_e = max(other.coeffs)
        lead_c = other.coeffs[lead_e]
        q = {}
        while rem:
            e = max(rem)
            c = rem[e]
            if c % lead_c:
                raise ArithmeticError("inexact coefficient division")
            qe = e - lead_e
            qc = c // lead_c
            q[qe] = qc
            for oe, oc in other.coeffs.items():
                te = oe + qe
                v = rem.get(te, 0) - oc * qc
                if v:
                    rem[te] = v
                else:
                    rem.pop(te, None)
        return LaurentPoly(q)

    def __call__(self, value):
        """Evaluate at an integer or Fraction value (must be invertible
        if negative exponents are present)."""
        from fractions import Fraction

        total = Fraction(0)
        for e, c in self.coeffs.items():
            total += Fraction(c) * (Fraction(value) ** e)
        if total.denominator == 1:
            return int(total)
        return total

    def min_exp(self):
        return min(self.coeffs) if self.coeffs else 0

    def max_exp(self):
        return max(self.coeffs) if self.coeffs else 0

    def mirror(self):
        """Substitute t -> 1/t."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {-e: c for e, c in self.coeffs.items()}
        return out

    def normalize_alexander(self):
        """Normalize up to units so the result is symmetric under
        t -> 1/t and evaluates to +1 at t = 1.

        This is the standard normal form for knot Alexander polynomials;
        raises AssertionError if the input cannot be symmetrized on the
        integer grid (never happens for genuine knot polynomials).
        """
        if self.is_zero():
            raise ValueError("zero polynomial cannot be an Alexander polynomial of a knot")
        span = self.max_exp() + self.min_exp()
        assert span % 2 == 0, "Alexander polynomial has odd exponent span"
        p = self.shift(-span // 2)
        assert p == p.mirror(), "polynomial is not symmetric after centering"
        at1 = p(1)
        assert at1 in (1, -1), "Alexander polynomial of a knot must evaluate to +-1 at t=1"
        if at1 == -1:
            p = -p
        return p

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(f"{c:+d}")
            elif e == 1:
                parts.append(f"{c:+d}*t")
            else:
                parts.append(f"{c:+d}*t^{e}")
        return "".join(parts).lstrip("+") or "0"

    def to_sorted_pairs(self):
        """JSON-friendly [[exp, coeff], ...] sorted by exponent."""
        return [[e, self.coeffs[e]] for e in sorted(self.coeffs)]


def poly_matrix_det(rows):
    """Determinant, up to multiplication by a unit +-t^k, of a square
    matrix of LaurentPoly entries.

    First eliminates with unit pivots (units of the Laurent ring cost
    nothing and keep entries small), then finishes with fraction-free
    Bareiss elimination on whatever remains.  Wirtinger matrices are
    full of +-1 and +-t entries, so the unit stage usually does nearly
    all of the work.
    """
    m = [list(r) for r in rows]
    n = len(m)
    for r in m:
        assert len(r) == n, "matrix must be square"
    if n == 0:
        return LaurentPoly.one()
    sign = 1

    # Unit-pivot stage.  The determinant is only tracked up to units, so
    # unit pivot scaling may be dropped (each pivot is +-t^k).
    size = n
    while size:
        pivot = None
        for i in range(size):
            for j in range(size):
                if m[i][j].is_unit():
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != size - 1:
            m[pi], m[size - 1] = m[size - 1], m[pi]
            sign = -sign
        if pj != size - 1:
            for r in m:
                r[pj], r[size - 1] = r[size - 1], r[pj]
            sign = -sign
        p = m[size - 1][size - 1]
        for i in range(size - 1):
            q = m[i][size - 1]
            if q.is_zero():
                continue
            factor = q.divexact(p)
            for j in range(size - 1):
                if m[size - 1][j]:
                    m[i][j] = m[i][j] - factor * m[size - 1][j]
            m[i][size - 1] = LaurentPoly()
        size -= 1

    if size == 0:
        return LaurentPoly.term(sign)

    # Bareiss stage on the remaining size x size block.
    prev = LaurentPoly.one()
    for k in range(size - 1):
        if m[k][k].is_zero():
            swap = None
            for i in range(k + 1, size):
                if not m[i][k].is_zero():
                    swap = i
                    break
            if swap is None:
                return LaurentPoly()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.divexact(prev)
            m[i][k] = LaurentPoly()
        prev = m[k][k]
    det = m[size - 1][size - 1]
    return det * sign if sign == 1 else -det
