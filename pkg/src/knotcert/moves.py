"""Reidemeister moves on PD diagrams.

Each move returns a new LinkDiagram (diagrams are immutable) and is
legality-checked before any surgery: removals verify the local kink or
bigon pattern, additions verify that the arcs involved cobound a face,
and the triangle move verifies the over-relation of the three strands
is acyclic.  The rebuilt diagram is then revalidated from scratch, so
a bug here fails loudly rather than corrupting invariants.

Site enumeration helpers list every legal application of each move, so
randomized invariance tests can walk the move graph.
"""

from __future__ import annotations

from knotcert.diagram import DiagramError, LinkDiagram


class MoveError(ValueError):
    """Raised when a requested move is not legal at the given site."""


def _fresh_labels(diagram, n):
    m = max(diagram.succ) + 1
    return list(range(m, m + n))


def _patch_end(crossings, diagram, arc, new_label):
    """Relabel arc at its incoming end (used when splitting arcs)."""
    k, s = diagram.arc_end[arc]
    t = list(crossings[k])
    assert t[s] == arc
    t[s] = new_label
    crossings[k] = tuple(t)


def _split_cycle(components, comp_idx, arc, inserted):
    comps = [list(c) for c in components]
    cyc = comps[comp_idx]
    at = cyc.index(arc)
    comps[comp_idx] = cyc[:at + 1] + inserted + cyc[at + 1:]
    return comps


def _face_darts(diagram):
    """Map exit-dart -> face index over the cached face orbits."""
    lookup = {}
    for fi, corners in enumerate(diagram.faces()):
        # Reconstruct the orbit's darts: the dart arriving at corner
        # (k, r) exits along slot r+1 of k.
        for k, r in corners:
            lookup[(k, (r + 1) % 4)] = fi
    return lookup


def _side_dart(diagram, arc, side):
    """The exit-dart lying on the given side of the oriented arc, or
    None for a free loop.  Faces keep the walked arc on their right, so
    the forward dart borders the right face and the backward dart the
    left face."""
    if arc not in diagram.arc_start:
        return None
    return diagram.arc_start[arc] if side == "right" else diagram.arc_end[arc]


# -- twist (R1) ----------------------------------------------------------


def r1_add(diagram, arc, sign=1, over_first=False):
    """Add a kink on the given arc.  sign is the new crossing's sign;
    over_first picks which of the two same-sign curl shapes is used
    (whether the strand crosses over on its first pass through the new
    crossing)."""
    assert sign in (1, -1)
    free = len(diagram.components[diagram.comp_of[arc]]) == 1
    if free:
        (u,) = _fresh_labels(diagram, 1)
        v = arc
    else:
        u, v = _fresh_labels(diagram, 2)
    x = arc
    if sign > 0:
        tup = (u, u, v, x) if over_first else (x, v, u, u)
    else:
        tup = (u, x, v, u) if over_first else (x, u, u, v)
    crossings = list(diagram.crossings)
    comps = [list(c) for c in diagram.components]
    if free:
        comps[diagram.comp_of[arc]] = [x, u]
    else:
        _patch_end(crossings, diagram, x, v)
        comps = _split_cycle(comps, diagram.comp_of[arc], x, [u, v])
    return LinkDiagram(crossings + [tup], comps, signs=diagram.signs + [sign])


def r1_remove_sites(diagram):
    """Crossings that carry a kink (two cyclically adjacent slots hold
    the same arc)."""
    out = []
    for k, t in enumerate(diagram.crossings):
        if any(t[i] == t[(i + 1) % 4] for i in range(4)):
            out.append(k)
    return out


def _delete_and_merge(diagram, dead):
    """Remove the crossings in dead, merging each strand through them.

    This is pure plumbing: callers must have verified the site pattern
    (kink or parallel bigon), otherwise this would smooth the diagram
    into a different link.
    """
    parent = {x: x for x in diagram.succ}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in dead:
        a, _, c, _ = diagram.crossings[k]
        oin = diagram.crossings[k][diagram.over_in[k]]
        oout = diagram.crossings[k][4 - diagram.over_in[k]]
        parent[find(a)] = find(c)
        parent[find(oin)] = find(oout)
    crossings = []
    hints = []
    for k, t in enumerate(diagram.crossings):
        if k not in dead:
            crossings.append(tuple(find(x) for x in t))
            hints.append(diagram.signs[k])
    comps = []
    for comp in diagram.components:
        cyc = []
        for x in comp:
            r = find(x)
            if not cyc or (cyc[-1] != r and cyc[0] != r):
                cyc.append(r)
        comps.append(cyc)
    return LinkDiagram(crossings, comps, signs=hints)


def r1_remove(diagram, k):
    """Remove the kink at crossing k."""
    t = diagram.crossings[k]
    if not any(t[i] == t[(i + 1) % 4] for i in range(4)):
        raise MoveError(f"crossing {k} is not a kink")
    return _delete_and_merge(diagram, {k})


# -- poke (R2) -----------------------------------------------------------


def r2_add(diagram, push, target, push_over=True, side="left", push_side=None):
    """Push a bulge of arc push across arc target.

    side names the side of the oriented target arc the bulge comes
    from; the two arcs must cobound the face on that side (free loops
    are exempt, having no recorded position).  push_side picks which
    side of push faces that face when both do.  Returns a diagram with
    two extra crossings of opposite signs.

    The order of the two new crossings along the target is not free:
    the bulge is embedded, so its legs may not cross, which forces the
    poke-in crossing to come second along the target exactly when push
    and target run the same way around the shared face (equal side
    labels).
    """
    if push == target:
        raise MoveError("cannot poke an arc across itself")
    if side not in ("left", "right"):
        raise MoveError(f"bad side {side!r}")
    p_free = len(diagram.components[diagram.comp_of[push]]) == 1
    q_free = len(diagram.components[diagram.comp_of[target]]) == 1
    if not p_free and not q_free:
        lookup = _face_darts(diagram)
        qd = _side_dart(diagram, target, side)
        face = lookup[qd]
        avail = [ps for ps in ("left", "right")
                 if lookup[_side_dart(diagram, push, ps)] == face]
        if not avail:
            raise MoveError("push and target arcs do not cobound the chosen face")
        if push_side is None:
            push_side = avail[0]
        elif push_side not in avail:
            raise MoveError(f"side {push_side!r} of the push arc does not face the shared face")
        poke_in_second = push_side == side
    else:
        poke_in_second = False

    p, q = push, target
    if p_free:
        (p2,) = _fresh_labels(diagram, 1)
        p3 = p
        fresh_used = [p2]
    else:
        p2, p3 = _fresh_labels(diagram, 2)
        fresh_used = [p2, p3]
    nxt = max(max(diagram.succ), max(fresh_used)) + 1
    if q_free:
        q2, q3 = nxt, q
        q_fresh = [q2]
    else:
        q2, q3 = nxt, nxt + 1
        q_fresh = [q2, q3]

    # Arcs of target at the two new crossings, ordered along target.
    first, second = ((q, q2), (q2, q3))
    if poke_in_second:
        (qi2, qo2), (qi1, qo1) = first, second
    else:
        (qi1, qo1), (qi2, qo2) = first, second

    if push_over:
        if side == "left":
            p1 = (qi1, p2, qo1, p)
            p2t = (qi2, p2, qo2, p3)
            s1, s2 = 1, -1
        else:
            p1 = (qi1, p, qo1, p2)
            p2t = (qi2, p3, qo2, p2)
            s1, s2 = -1, 1
    else:
        if side == "left":
            p1 = (p, qi1, p2, qo1)
            p2t = (p2, qo2, p3, qi2)
            s1, s2 = -1, 1
        else:
            p1 = (p, qo1, p2, qi1)
            p2t = (p2, qi2, p3, qo2)
            s1, s2 = 1, -1

    crossings = list(diagram.crossings)
    comps = [list(c) for c in diagram.components]
    if p_free:
        comps[diagram.comp_of[p]] = [p, p2]
    else:
        _patch_end(crossings, diagram, p, p3)
        comps = _split_cycle(comps, diagram.comp_of[p], p, [p2, p3])
    if q_free:
        comps[diagram.comp_of[q]] = [q, q2]
    else:
        _patch_end(crossings, diagram, q, q3)
        comps = _split_cycle(comps, diagram.comp_of[q], q, q_fresh)
    return LinkDiagram(crossings + [p1, p2t], comps,
                       signs=diagram.signs + [s1, s2])


def r2_remove_sites(diagram):
    """Bigon faces that admit the reverse poke: two corners at distinct
    crossings, with one strand over at both."""
    out = []
    for corners in diagram.faces():
        if len(corners) != 2:
            continue
        (k1, q1), (k2, q2) = corners
        if k1 == k2:
            continue
        e1 = {diagram.crossings[k1][q1], diagram.crossings[k1][(q1 + 1) % 4]}
        e2 = {diagram.crossings[k2][q2], diagram.crossings[k2][(q2 + 1) % 4]}
        if e1 != e2 or len(e1) != 2:
            continue
        arcs = sorted(e1)
        roles = []
        for arc in arcs:
            r1 = arc in (diagram.crossings[k1][0], diagram.crossings[k1][2])
            r2 = arc in (diagram.crossings[k2][0], diagram.crossings[k2][2])
            roles.append((r1, r2))
        if roles[0][0] == roles[0][1] and roles[1][0] == roles[1][1]:
            out.append((k1, k2))
    return out


def r2_remove(diagram, k1, k2):
    """Undo a poke: remove the bigon cobounded by crossings k1, k2."""
    if (k1, k2) not in r2_remove_sites(diagram) and (k2, k1) not in r2_remove_sites(diagram):
        raise MoveError(f"crossings {k1},{k2} do not cobound a removable bigon")
    return _delete_and_merge(diagram, {k1, k2})


# -- slide (R3) ----------------------------------------------------------


def r3_sites(diagram):
    """Triangle faces admitting the slide move: three corners at three
    distinct crossings whose strand over-relation is acyclic."""
    out = []
    for fi, corners in enumerate(diagram.faces()):
        if len(corners) != 3:
            continue
        ks = [k for k, _ in corners]
        if len(set(ks)) != 3:
            continue
        edge_count = {}
        for k, q in corners:
            for arc in (diagram.crossings[k][q], diagram.crossings[k][(q + 1) % 4]):
                edge_count[arc] = edge_count.get(arc, 0) + 1
        edges = [a for a, n in edge_count.items() if n == 2]
        if len(edges) != 3 or len(edge_count) != 3:
            continue
        # Acyclic over-relation: some edge passes over at both of its
        # corners' crossings and some edge under at both.
        over_counts = {}
        for k, q in corners:
            for arc in (diagram.crossings[k][q], diagram.crossings[k][(q + 1) % 4]):
                role = arc in (diagram.crossings[k][1], diagram.crossings[k][3])
                over_counts.setdefault(arc, []).append(role)
        tops = [a for a in edges if all(over_counts[a])]
        bottoms = [a for a in edges if not any(over_counts[a])]
        if tops and bottoms:
            out.append(fi)
    return out


def r3(diagram, face_index):
    """Slide the triangle at the given face through itself.

    Every strand keeps its orientation and its over/under relation to
    the other two; the three crossings are rebuilt with the order of
    encounters along each strand reversed.  Component cycles are
    unchanged.
    """
    if face_index not in r3_sites(diagram):
        raise MoveError(f"face {face_index} does not admit the slide move")
    corners = diagram.faces()[face_index]
    edge_at = {}
    for k, q in corners:
        for arc in (diagram.crossings[k][q], diagram.crossings[k][(q + 1) % 4]):
            edge_at.setdefault(arc, set()).add(k)
    edges = [a for a, ks in edge_at.items() if len(ks) == 2]

    info = {}
    for m in edges:
        ks, _ = diagram.arc_start[m]
        ke, _ = diagram.arc_end[m]
        # s_in enters the strand's first triangle crossing; s_out
        # leaves its second.
        if m == diagram.crossings[ks][2]:
            s_in = diagram.crossings[ks][0]
        else:
            s_in = diagram.crossings[ks][diagram.over_in[ks]]
        if m == diagram.crossings[ke][0]:
            s_out = diagram.crossings[ke][2]
        else:
            s_out = diagram.crossings[ke][4 - diagram.over_in[ke]]
        info[m] = (ks, ke, s_in, s_out)

    new_cross = {}
    for k, _q in corners:
        pair = [m for m in edges if k in (info[m][0], info[m][1])]
        assert len(pair) == 2
        arcs = {}
        for m in pair:
            ks, ke, s_in, s_out = info[m]
            # The encounter order along each strand reverses.
            arcs[m] = (m, s_out) if k == ks else (s_in, m)
        over_m = next(m for m in pair
                      if m in (diagram.crossings[k][1], diagram.crossings[k][3]))
        under_m = next(m for m in pair if m != over_m)
        u_in, u_out = arcs[under_m]
        o_in, o_out = arcs[over_m]
        if diagram.signs[k] > 0:
            new_cross[k] = (u_in, o_out, u_out, o_in)
        else:
            new_cross[k] = (u_in, o_in, u_out, o_out)

    crossings = [new_cross.get(k, t) for k, t in enumerate(diagram.crossings)]
    return LinkDiagram(crossings, diagram.components, signs=diagram.signs)


# -- move scripts --------------------------------------------------------


def apply_move(diagram, record):
    """Apply one serialized move record."""
    op = record["op"]
    if op == "r1_add":
        return r1_add(diagram, record["arc"], record.get("sign", 1),
                      record.get("over_first", False))
    if op == "r1_remove":
        return r1_remove(diagram, record["crossing"])
    if op == "r2_add":
        return r2_add(diagram, record["push"], record["target"],
                      record.get("push_over", True), record.get("side", "left"),
                      record.get("push_side"))
    if op == "r2_remove":
        return r2_remove(diagram, record["k1"], record["k2"])
    if op == "r3":
        return r3(diagram, record["face"])
    raise MoveError(f"unknown move {op!r}")


def replay(diagram, script):
    """Apply a list of move records in order."""
    for record in script:
        diagram = apply_move(diagram, record)
    return diagram


def r2_add_sites(diagram):
    """All legal (push, target, side) triples for the poke move."""
    lookup = _face_darts(diagram)
    by_face = {}
    for arc in diagram.succ:
        for side in ("left", "right"):
            d = _side_dart(diagram, arc, side)
            if d is not None:
                by_face.setdefault(lookup[d], []).append((arc, side))
    sites = []
    for members in by_face.values():
        arcs = {a for a, _ in members}
        for p in arcs:
            for q, side in members:
                if p != q:
                    sites.append((p, q, side))
    free = [comp[0] for comp in diagram.components
            if len(comp) == 1 and comp[0] not in diagram.arc_start]
    for f in free:
        for q in diagram.succ:
            if q != f:
                for side in ("left", "right"):
                    sites.append((f, q, side))
                    sites.append((q, f, side))
    return sites


def random_move(diagram, rng, max_crossings=60):
    """Apply one random legal move, preferring shrinking moves when the
    diagram is large.  Returns (new_diagram, record)."""
    candidates = []
    if diagram.n_crossings < max_crossings:
        arcs = sorted(diagram.succ)
        candidates += [("r1_add", a) for a in arcs]
        candidates += [("r2_add", s) for s in r2_add_sites(diagram)]
    candidates += [("r1_remove", k) for k in r1_remove_sites(diagram)] * 3
    candidates += [("r2_remove", b) for b in r2_remove_sites(diagram)] * 3
    candidates += [("r3", f) for f in r3_sites(diagram)]
    if not candidates:
        raise MoveError("no legal moves")
    kind, payload = candidates[rng.randrange(len(candidates))]
    if kind == "r1_add":
        record = {"op": kind, "arc": payload,
                  "sign": rng.choice([1, -1]), "over_first": rng.random() < 0.5}
    elif kind == "r1_remove":
        record = {"op": kind, "crossing": payload}
    elif kind == "r2_add":
        p, q, side = payload
        record = {"op": kind, "push": p, "target": q, "side": side,
                  "push_over": rng.random() < 0.5}
    elif kind == "r2_remove":
        record = {"op": kind, "k1": payload[0], "k2": payload[1]}
    else:
        record = {"op": kind, "face": payload}
    return apply_move(diagram, record), record
