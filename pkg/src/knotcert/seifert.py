"""Seifert surfaces through the closed-braid form.

Smoothing every crossing of an oriented diagram along its orientation
splits it into disjoint simple circles.  Vogel's observation is that a
poke (R2) across any face bordered by like-oriented arcs of two
different circles brings the circle family closer to a coherent nest,
and that once no such face remains the diagram is a closed braid.  The
braid word is read off the nest, and the Seifert matrix of the
disk-and-band surface is assembled from the word: consecutive bands
between the same two disks carry a basis loop, and two loops pair only
when they share a band or their spans interleave on a common disk.
"""

from .diagram import DiagramError, LinkDiagram, braid_closure
from .intmat import int_det, sym_signature
from .laurent import LaurentPoly, poly_matrix_det
from .moves import _face_darts, _side_dart, r2_add


def seifert_smoothing(diagram):
    """The orientation-respecting smoothing, as a successor map on arcs
    together with the crossing passed at each step."""
    nxt, via = {}, {}
    for k, t in enumerate(diagram.crossings):
        a, _b, c, _d = t
        oi = diagram.over_in[k]
        o_in, o_out = t[oi], t[4 - oi]
        nxt[a], via[a] = o_out, k
        nxt[o_in], via[o_in] = c, k
    return nxt, via


def seifert_circles(diagram):
    """Arc cycles of the smoothing; free loops count as their own
    circles."""
    nxt, _via = seifert_smoothing(diagram)
    circles, seen = [], set()
    for start in sorted(diagram.succ):
        if start in seen:
            continue
        if start not in nxt:
            circles.append([start])
            seen.add(start)
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = nxt[x]
        circles.append(cyc)
    return circles


def _circle_of(circles):
    return {x: i for i, cyc in enumerate(circles) for x in cyc}


def smoothed_regions(diagram):
    """Face index -> region id after smoothing.

    Opening a crossing merges the two faces in the corridor between
    the parallel smoothed strands: the NE/SW quadrant pair at a
    positive crossing, the SE/NW pair at a negative one.
    """
    faces = diagram.faces()
    corner_face = {c: fi for fi, cs in enumerate(faces) for c in cs}
    parent = list(range(len(faces)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for k, sign in enumerate(diagram.signs):
        qa, qb = (1, 3) if sign > 0 else (0, 2)
        ra, rb = find(corner_face[(k, qa)]), find(corner_face[(k, qb)])
        if ra != rb:
            parent[ra] = rb
    return [find(i) for i in range(len(faces))]


def _admissible_poke(diagram, circle_of):
    """A face bordered by like-oriented arcs of two distinct circles,
    reported as (push, push_side, target, target_side); None when the
    nest is coherent."""
    lookup = _face_darts(diagram)
    per_face = {}
    for dart, fi in lookup.items():
        per_face.setdefault(fi, []).append(dart)
    for fi in sorted(per_face):
        entries = []
        for k, s in sorted(per_face[fi]):
            arc = diagram.crossings[k][s]
            forward = diagram.arc_start[arc] == (k, s)
            entries.append((arc, forward))
        for i, (a1, f1) in enumerate(entries):
            for a2, f2 in entries[i + 1:]:
                if f1 == f2 and circle_of[a1] != circle_of[a2]:
                    side1 = "right" if f1 else "left"
                    side2 = "right" if f2 else "left"
                    return a1, side1, a2, side2
    return None


def braided_form(diagram):
    """Vogel's algorithm: poke like-oriented pairs until the Seifert
    circles nest coherently.  The circle count never changes and the
    move count is quadratically bounded."""
    if diagram.free_loops or len(set(diagram._connected_parts())) != 1:
        raise DiagramError("braiding needs a connected diagram")
    d = diagram
    n_circles = len(seifert_circles(d))
    for _step in range(n_circles * n_circles + 4):
        circles = seifert_circles(d)
        assert len(circles) == n_circles
        mv = _admissible_poke(d, _circle_of(circles))
        if mv is None:
            return d
        push, push_side, target, target_side = mv
        d = r2_add(d, push, target, push_over=True,
                   side=target_side, push_side=push_side)
    raise DiagramError("braiding did not terminate within its bound")


def _strand_chain(diagram, circles):
    """Order the circles of a coherent nest from one end of the region
    chain to the other."""
    regions = smoothed_regions(diagram)
    lookup = _face_darts(diagram)

    def side_region(arc, side):
        return regions[lookup[_side_dart(diagram, arc, side)]]

    adj = {}
    for ci, cyc in enumerate(circles):
        pairs = {(side_region(a, "left"), side_region(a, "right")) for a in cyc}
        if len(pairs) != 1:
            raise DiagramError("diagram is not coherently nested")
        rl, rr = pairs.pop()
        if rl == rr:
            raise DiagramError("diagram is not coherently nested")
        adj.setdefault(rl, []).append((ci, rr))
        adj.setdefault(rr, []).append((ci, rl))
    ends = sorted(r for r, nbrs in adj.items() if len(nbrs) == 1)
    if len(ends) != 2 or any(len(n) > 2 for n in adj.values()):
        raise DiagramError("nested circles do not form a single chain")
    order, cur, seen = [], ends[0], set()
    while len(order) < len(circles):
        seen.add(cur)
        step = [(ci, ro) for ci, ro in adj[cur] if ro not in seen]
        assert len(step) == 1
        ci, cur = step[0]
        order.append(ci)
    return order


def _word_for_chain(diagram, circles, order):
    """The cyclic letter sequence of a coherent nest, cut so that the
    smallest crossing label comes first."""
    circle_of = _circle_of(circles)
    _nxt, via = seifert_smoothing(diagram)
    pos = {ci: i + 1 for i, ci in enumerate(order)}
    letters = {}
    for k in range(diagram.n_crossings):
        c1 = circle_of[diagram.crossings[k][0]]
        c2 = circle_of[diagram.crossings[k][diagram.over_in[k]]]
        i, j = sorted((pos[c1], pos[c2]))
        if j != i + 1:
            raise DiagramError("a crossing joins non-adjacent strands")
        letters[k] = i if diagram.signs[k] > 0 else -i

    ring = {ci: [via[a] for a in circles[ci]] for ci in range(len(circles))}
    glob = ring[order[0]]
    if not glob:
        raise DiagramError("braiding produced an unused strand")
    shift = glob.index(min(glob))
    glob = glob[shift:] + glob[:shift]
    placed = {k: idx for idx, k in enumerate(glob)}
    for ci in order[1:]:
        lst = ring[ci]
        anchors = [k for k in lst if k in placed]
        if not anchors:
            raise DiagramError("braiding produced an unused strand")
        r = lst.index(anchors[0])
        lst = lst[r:] + lst[:r]
        # The anchors must occur in the same cyclic order on both sides.
        ga = sorted(anchors, key=lambda k: placed[k])
        la = [k for k in lst if k in placed]
        rr = la.index(ga[0])
        assert la[rr:] + la[:rr] == ga, "incompatible cyclic orders"
        buckets, cur = {}, None
        for k in lst:
            if k in placed:
                cur = k
            else:
                buckets.setdefault(cur, []).append(k)
        out = []
        for k in glob:
            out.append(k)
            out.extend(buckets.get(k, ()))
        glob = out
        placed = {k: idx for idx, k in enumerate(glob)}
    assert len(glob) == diagram.n_crossings
    return [letters[k] for k in glob]


def braid_word_of(diagram):
    """Read a braid word off a coherently nested diagram.

    Returns (word, strands) with closure equal to the diagram; the
    reconstruction is checked, trying both ends of the nest as strand
    one.
    """
    circles = seifert_circles(diagram)
    order = _strand_chain(diagram, circles)
    for cand in (order, order[::-1]):
        word = _word_for_chain(diagram, circles, cand)
        if braid_closure(word, len(circles)).same_diagram(diagram):
            return word, len(circles)
    raise DiagramError("failed to reconstruct the nest as a braid closure")


# Pairing table for basis loops of the closed-braid band surface.  Each
# entry records which triangle of the matrix a unit lands in and its sign.
# The choice is pinned so the right trefoil gives the textbook matrix
# [[-1, 1], [0, -1]]; the remaining freedom is a diagonal or permutation
# change of basis, which leaves every derived invariant unchanged.
_SHARED_POS = ("ij", 1)
_SHARED_NEG = ("ji", -1)
_INTERLEAVE_EARLY = ("ij", 1)
_INTERLEAVE_LATE = ("ij", -1)


def braid_seifert_matrix(word, strands):
    """Seifert matrix of the closed-braid band surface.

    Basis loops join consecutive occurrences of the same letter index.
    A loop's self-pairing is minus half the sum of its two band signs;
    two loops pair exactly when they share a band or sit on
    neighbouring strand pairs with interleaved spans.
    """
    occ = {}
    for p, letter in enumerate(word):
        assert letter != 0 and abs(letter) < strands
        occ.setdefault(abs(letter), []).append((p, 1 if letter > 0 else -1))
    basis = []
    for gen in sorted(occ):
        lst = occ[gen]
        for a in range(len(lst) - 1):
            (p, ep), (q, eq) = lst[a], lst[a + 1]
            basis.append((gen, p, q, ep, eq))
    n = len(basis)
    V = [[0] * n for _ in range(n)]

    def put(i, j, rule):
        side, val = rule
        if side == "ij":
            V[i][j] = val
        else:
            V[j][i] = val

    for i, (_g, _p, _q, ep, eq) in enumerate(basis):
        V[i][i] = -(ep + eq) // 2
    for i in range(n):
        gi, p, q, _epi, eqi = basis[i]
        for j in range(i + 1, n):
            gj, r, s, _epj, _eqj = basis[j]
            if gi == gj and q == r:
                put(i, j, _SHARED_POS if eqi > 0 else _SHARED_NEG)
            elif gj - gi == 1:
                if p < r < q < s:
                    put(i, j, _INTERLEAVE_EARLY)
                elif r < p < s < q:
                    put(i, j, _INTERLEAVE_LATE)
    return V


class SeifertData:
    """A Seifert surface presented by a braid word.

    Carries the word and strand count of the braided form, the circle
    count of the input diagram, the component count, the surface genus,
    and the Seifert matrix.  The symplectic pairing det(V - V^T) = 1 is
    asserted on construction.
    """

    def __init__(self, word, strands, circles, components):
        if components != 1:
            # The pairing is degenerate on surfaces with more than one
            # boundary circle; all downstream uses are for knots.
            raise DiagramError("Seifert data is only built for knots")
        self.word = list(word)
        self.strands = strands
        self.circles = circles
        self.components = components
        self.matrix = braid_seifert_matrix(self.word, strands)
        n = len(self.matrix)
        skew = [[self.matrix[i][j] - self.matrix[j][i] for j in range(n)]
                for i in range(n)]
        assert abs(int_det(skew)) == 1, "degenerate symplectic pairing"
        two_g = len(self.word) - strands + 2 - components
        assert two_g >= 0 and two_g % 2 == 0
        self.genus = two_g // 2

    @classmethod
    def from_diagram(cls, diagram):
        """Build the surface data for a connected diagram."""
        circles = len(seifert_circles(diagram))
        if diagram.n_crossings == 0:
            if diagram.n_components != 1:
                raise DiagramError("Seifert data needs a connected diagram")
            return cls([], 1, 1, 1)
        braided = braided_form(diagram)
        word, strands = braid_word_of(braided)
        return cls(word, strands, circles, diagram.n_components)


def alexander_seifert(sd):
    """The Alexander polynomial as the normalized determinant of
    V - t V^T; knots only."""
    if sd.components != 1:
        raise DiagramError("Seifert-route Alexander needs a knot")
    V = sd.matrix
    n = len(V)
    if n == 0:
        return LaurentPoly.one()
    M = [[LaurentPoly({0: V[i][j], 1: -V[j][i]}) for j in range(n)]
         for i in range(n)]
    return LaurentPoly.normalize_alexander(poly_matrix_det(M))


def seifert_signature(diagram):
    """Signature of the symmetrized Seifert form V + V^T."""
    sd = SeifertData.from_diagram(diagram)
    V = sd.matrix
    n = len(V)
    sym = [[V[i][j] + V[j][i] for j in range(n)] for i in range(n)]
    return sym_signature(sym)
