"""Alexander polynomials of knots from Wirtinger presentations.

Generators are the over-arcs of the diagram (maximal chains of edges
joined through over-passages).  At each crossing the Wirtinger relation
is differentiated by Fox calculus and abelianized, every generator
mapping to t.  Deleting one row and one column of the resulting square
matrix and taking the determinant gives the Alexander polynomial up to
a unit; it is returned in the symmetric normal form with value +1 at
t = 1.
"""

from __future__ import annotations

from knotcert.laurent import LaurentPoly, poly_matrix_det


def over_arc_classes(diagram):
    """Map each edge to its over-arc representative.

    Over-arcs are the equivalence classes of edges merged through every
    over-passage; a knot diagram with c crossings has exactly c of them.
    """
    parent = {x: x for x in diagram.succ}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in range(diagram.n_crossings):
        oin = diagram.crossings[k][diagram.over_in[k]]
        oout = diagram.crossings[k][4 - diagram.over_in[k]]
        ra, rb = find(oin), find(oout)
        if ra != rb:
            parent[ra] = rb
    return {x: find(x) for x in parent}


def alexander_matrix(diagram):
    """The abelianized Fox Jacobian of the Wirtinger presentation.

    Returns (rows, generators): one row of LaurentPoly per crossing,
    columns indexed by the over-arc generators in a fixed order.  At a
    positive crossing with over-generator O and under generators A -> C
    the relation C = O A O^-1 contributes (1-t) to O, t to A and -1 to
    C; a negative crossing uses the inverse conjugation, contributing
    (1 - 1/t) to O, 1/t to A and -1 to C.  Coefficients accumulate when
    generators coincide.
    """
    cls = over_arc_classes(diagram)
    gens = sorted(set(cls.values()))
    col = {g: i for i, g in enumerate(gens)}
    one = LaurentPoly.one()
    t = LaurentPoly.t()
    tinv = LaurentPoly.t(-1)
    rows = []
    for k, (a, b, c, d) in enumerate(diagram.crossings):
        row = [LaurentPoly.zero() for _ in gens]
        over = diagram.crossings[k][diagram.over_in[k]]
        if diagram.signs[k] > 0:
            contrib = [(over, one - t), (a, t), (c, -one)]
        else:
            contrib = [(over, one - tinv), (a, tinv), (c, -one)]
        for edge, coeff in contrib:
            j = col[cls[edge]]
            row[j] = row[j] + coeff
        rows.append(row)
    return rows, gens


def alexander_polynomial(diagram):
    """Alexander polynomial of a knot diagram, symmetric with value 1
    at t = 1.  The diagram must have a single component."""
    assert diagram.n_components == 1, "alexander_polynomial expects a knot diagram"
    if diagram.n_crossings == 0:
        return LaurentPoly.one()
    rows, gens = alexander_matrix(diagram)
    assert len(gens) == diagram.n_crossings, "a knot diagram has one over-arc per crossing"
    minor = [row[:-1] for row in rows[:-1]]
    det = poly_matrix_det(minor)
    return det.normalize_alexander()


def knot_determinant(diagram):
    """|Delta(-1)|, the determinant of the knot."""
    return abs(alexander_polynomial(diagram)(-1))


def component_alexander_polynomials(diagram):
    """Alexander polynomial of each component taken as a knot on its
    own (all other components erased)."""
    return [alexander_polynomial(diagram.component_subdiagram(i))
            for i in range(diagram.n_components)]
