"""Signature through the checkerboard (Goeritz) route.

The faces of a connected diagram are two-colored so that faces sharing
an edge get opposite colors.  The Goeritz matrix over one color class,
corrected by the count of orientation-incoherent crossings, computes
the knot signature without building a Seifert surface.  This gives a
cheap second route, independent of the closed-braid one in seifert.py.
"""

from .diagram import DiagramError
from .intmat import int_det, sym_signature
from .moves import _face_darts


def checkerboard_coloring(diagram):
    """Two-color the faces; returns a 0/1 list indexed like faces().

    Faces that share an arc edge get opposite colors.  Color 0 is the
    class of face 0, making the choice deterministic.
    """
    faces = diagram.faces()
    lookup = _face_darts(diagram)
    color = [None] * len(faces)
    for root in range(len(faces)):
        if color[root] is not None:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            f = queue.pop()
            for a in diagram.arc_start:
                fr = lookup[diagram.arc_start[a]]
                fl = lookup[diagram.arc_end[a]]
                if f not in (fr, fl):
                    continue
                other = fl if f == fr else fr
                if color[other] is None:
                    color[other] = 1 - color[f]
                    queue.append(other)
                else:
                    assert color[other] != color[f] or fr == fl, \
                        "faces are not checkerboard colorable"
    return color


# Calibration bits for the crossing-local data.  Swept over all eight
# assignments against torus-knot and connected-sum signature oracles,
# knot determinants, and closed-braid route agreement on scrambled
# random diagrams; exactly one assignment survives, for both color
# classes at once.
_ETA_ON_ODD_DIAGONAL = -1
_INCOHERENT_ON_SIGN_MATCH = False
_MATRIX_SIGN = -1


def goeritz_matrix(diagram, matrix_color, color=None):
    """Reduced Goeritz matrix and correction term for one color class.

    Returns (G, mu) where G is the symmetric integer matrix over the
    chosen color's faces with one face deleted, and mu is the signed
    count of orientation-incoherent crossings.  The signature of the
    knot is sig(G) - mu for either color class.
    """
    faces = diagram.faces()
    if color is None:
        color = checkerboard_coloring(diagram)
    corner_face = {c: fi for fi, cs in enumerate(faces) for c in cs}
    mine = [f for f in range(len(faces)) if color[f] == matrix_color]
    index = {f: i for i, f in enumerate(mine)}
    n = len(mine)
    full = [[0] * n for _ in range(n)]
    mu = 0
    for k, sign in enumerate(diagram.signs):
        c0 = color[corner_face[(k, 0)]]
        # Quadrants alternate around the crossing, so each diagonal
        # pair is monochrome.
        assert color[corner_face[(k, 2)]] == c0
        assert color[corner_face[(k, 1)]] == 1 - c0
        odd_diagonal = c0 != matrix_color
        eta = _ETA_ON_ODD_DIAGONAL if odd_diagonal else -_ETA_ON_ODD_DIAGONAL
        if (odd_diagonal == (sign > 0)) == _INCOHERENT_ON_SIGN_MATCH:
            mu += eta
        qa, qb = (1, 3) if odd_diagonal else (0, 2)
        fa, fb = index[corner_face[(k, qa)]], index[corner_face[(k, qb)]]
        if fa != fb:
            full[fa][fb] += _MATRIX_SIGN * eta
            full[fb][fa] += _MATRIX_SIGN * eta
    for i in range(n):
        full[i][i] = -sum(full[i])
    reduced = [row[1:] for row in full[1:]]
    return reduced, mu


def goeritz_determinant(diagram):
    """|det G|; equals the knot determinant for either color class."""
    if diagram.n_crossings == 0:
        return 1
    G, _ = goeritz_matrix(diagram, 0)
    return abs(int_det(G))


def goeritz_signature(diagram):
    """Knot signature via the corrected Goeritz form."""
    if diagram.n_components != 1:
        raise DiagramError("signature is computed for knots")
    if diagram.n_crossings == 0:
        return 0
    G, mu = goeritz_matrix(diagram, 0)
    return sym_signature(G) - mu
