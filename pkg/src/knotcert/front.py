"""Front-diagram calculus for Legendrian knots.

A front is a word of left-to-right events on a stack of live strands:
L_i opens a left cusp creating strands at heights i and i+1, R_i closes
a right cusp merging heights i and i+1, and X_i crosses heights i and
i+1.  At a crossing the strand descending from height i+1 is the
over-strand; under this convention the classical invariants are
tb = writhe - #right cusps and rot = (#down cusps - #up cusps) / 2,
and resolving cusps smoothly turns a front into a PD diagram of the
same knot.

Stabilizations, vertically shifted copies, and full-twist insertions
are implemented as word splices, so larger fronts are assembled by
composing gadgets.
"""

import json
import math

from .diagram import LinkDiagram


class FrontError(Exception):
    pass


_KINDS = ("L", "R", "X")


def _check_events(events):
    """Validate bookkeeping; returns live strand count before each event."""
    live = 0
    before = []
    for n, (kind, i) in enumerate(events):
        before.append(live)
        if kind not in _KINDS or not isinstance(i, int):
            raise FrontError(f"bad event {events[n]!r}")
        if kind == "L":
            if not 1 <= i <= live + 1:
                raise FrontError(f"event {n}: left cusp height {i} out of range")
            live += 2
        else:
            if not 1 <= i <= live - 1:
                raise FrontError(f"event {n}: height {i} needs two live strands")
            if kind == "R":
                live -= 2
    if live != 0:
        raise FrontError("front does not close up")
    return before


class FrontWord:
    """An immutable front, with a traversal orientation per component."""

    def __init__(self, events, orientation=None):
        self.events = tuple((kind, int(i)) for kind, i in events)
        self.live_before = _check_events(self.events)
        self._walk = _resolve(self.events)
        n_comp = len(self._walk)
        if orientation is None:
            orientation = (1,) * n_comp
        self.orientation = tuple(orientation)
        if len(self.orientation) != n_comp or \
                any(o not in (1, -1) for o in self.orientation):
            raise FrontError(f"orientation must be ±1 for each of {n_comp} components")

    @property
    def n_components(self):
        return len(self._walk)

    def __eq__(self, other):
        return isinstance(other, FrontWord) and self.events == other.events \
            and self.orientation == other.orientation

    def __repr__(self):
        return f"FrontWord({front_to_text(self)!r})"


def _resolve(events):
    """Trace the curve through the front.

    Returns one step list per component.  Steps are
    ('x', crossing_index, diagonal, direction) for a transit through a
    crossing (diagonal 'asc' for the under-strand rising from height i,
    'desc' for the over-strand) and ('cusp', kind, vertical) for a cusp
    passage, with vertical 'down' or 'up'.  Directions are for the
    as-traced traversal; orientations are applied by the callers.
    """
    pieces = 0
    live = []
    conn = {}
    joint = {}  # glued end -> ('cusp', kind, lower?) | ('x', k, diag)
    n_x = 0
    for kind, i in events:
        if kind == "L":
            p, q = pieces, pieces + 1
            pieces += 2
            conn[(p, "l")] = (q, "l")
            conn[(q, "l")] = (p, "l")
            joint[(p, "l")] = ("cusp", "L", True)
            joint[(q, "l")] = ("cusp", "L", False)
            live[i - 1:i - 1] = [p, q]
        elif kind == "R":
            a, b = live[i - 1], live[i]
            conn[(a, "r")] = (b, "r")
            conn[(b, "r")] = (a, "r")
            joint[(a, "r")] = ("cusp", "R", True)
            joint[(b, "r")] = ("cusp", "R", False)
            del live[i - 1:i + 1]
        else:
            a, b = live[i - 1], live[i]
            a2, b2 = pieces, pieces + 1
            pieces += 2
            conn[(a, "r")] = (a2, "l")
            conn[(a2, "l")] = (a, "r")
            conn[(b, "r")] = (b2, "l")
            conn[(b2, "l")] = (b, "r")
            joint[(a, "r")] = ("x", n_x, "asc")
            joint[(b, "r")] = ("x", n_x, "desc")
            live[i - 1], live[i] = b2, a2
            n_x += 1

    components = []
    seen = set()
    for seed in range(pieces):
        if seed in seen:
            continue
        steps = []
        pos = (seed, 1)
        while True:
            pid, dr = pos
            seen.add(pid)
            end = (pid, "r" if dr > 0 else "l")
            e2 = conn[end]
            kind = joint.get(end) or joint.get(e2)
            if kind[0] == "x":
                steps.append(("x", kind[1], kind[2], dr))
            else:
                _, ck, arrived_lower = joint[end]
                # Passing from the lower branch to the upper reads as
                # an upward turn through the cusp.
                steps.append(("cusp", ck, "up" if arrived_lower else "down"))
            pid2, side2 = e2
            pos = (pid2, 1 if side2 == "l" else -1)
            if pos == (seed, 1):
                break
        components.append(steps)
    return components


def _oriented_steps(front):
    """Per-component steps with the stored orientation applied."""
    out = []
    for steps, o in zip(front._walk, front.orientation):
        if o > 0:
            out.append(list(steps))
            continue
        rev = []
        for step in reversed(steps):
            if step[0] == "x":
                _, k, diag, dr = step
                rev.append(("x", k, diag, -dr))
            else:
                _, ck, vert = step
                rev.append(("cusp", ck, "down" if vert == "up" else "up"))
        out.append(rev)
    return out


class FrontStats:
    def __init__(self, tb, rot, cusps_up, cusps_down, writhe):
        self.tb = tb
        self.rot = rot
        self.ad = tb - 1 + abs(rot)
        self.cusps_up = cusps_up
        self.cusps_down = cusps_down
        self.writhe = writhe

    def __repr__(self):
        return (f"FrontStats(tb={self.tb}, rot={self.rot}, ad={self.ad}, "
                f"writhe={self.writhe})")


def stats(front):
    """Classical front invariants: tb, rot, ad, cusp counts, writhe."""
    dirs = {}
    up = down = 0
    for steps in _oriented_steps(front):
        for step in steps:
            if step[0] == "x":
                dirs.setdefault(step[1], {})[step[2]] = step[3]
            elif step[2] == "up":
                up += 1
            else:
                down += 1
    writhe = sum(1 if d["asc"] == d["desc"] else -1 for d in dirs.values())
    right_cusps = sum(1 for kind, _ in front.events if kind == "R")
    assert (down - up) % 2 == 0
    return FrontStats(writhe - right_cusps, (down - up) // 2, up, down, writhe)


def front_to_pd(front):
    """Resolve the front into a smooth diagram.

    Cusps smooth out; each X event becomes a crossing with the
    descending strand on top.  The writhe of the result equals
    tb + #right cusps by construction.
    """
    components = []
    transits = {}
    next_arc = 1
    for steps in _oriented_steps(front):
        xs = [n for n, s in enumerate(steps) if s[0] == "x"]
        if not xs:
            components.append([next_arc])
            next_arc += 1
            continue
        # Rotate so the component ends on a transit: arcs then align
        # with the gaps between consecutive transits.
        cut = xs[-1] + 1
        steps = steps[cut:] + steps[:cut]
        arcs = [next_arc + n for n in range(len(xs))]
        next_arc += len(xs)
        components.append(arcs)
        at = 0
        for step in steps:
            if step[0] != "x":
                continue
            _, k, diag, dr = step
            incoming = arcs[at]
            outgoing = arcs[(at + 1) % len(arcs)]
            transits.setdefault(k, {})[diag] = (incoming, outgoing, dr)
            at += 1

    crossings = []
    signs = []
    for k in sorted(transits):
        asc_in, asc_out, da = transits[k]["asc"]
        desc_in, desc_out, dd = transits[k]["desc"]
        ul, lr = (desc_in, desc_out) if dd > 0 else (desc_out, desc_in)
        if da > 0:
            crossings.append((asc_in, lr, asc_out, ul))
        else:
            crossings.append((asc_in, ul, asc_out, lr))
        signs.append(1 if da == dd else -1)
    return LinkDiagram(crossings, components, signs=signs)


def stabilize(front, site, sign):
    """Add a zig-zag on a live strand: tb drops by 1, rot moves by sign.

    site is (event_position, height).  Returns (front', script) where
    script is the (empty) move list relating the resolutions: smoothing
    a zig-zag is a planar isotopy, so the diagrams are equal as PD
    codes.
    """
    pos, h = site
    if not 0 <= pos <= len(front.events):
        raise FrontError(f"no event slot {pos}")
    liveat = front.live_before[pos] if pos < len(front.events) else 0
    if pos == len(front.events):
        liveat = 0
    if not 1 <= h <= liveat:
        raise FrontError(f"no live strand {h} at slot {pos}")
    if sign not in (1, -1):
        raise FrontError("stabilization sign must be ±1")
    old = stats(front)
    for splice in ((("L", h), ("R", h + 1)), (("L", h + 1), ("R", h))):
        events = front.events[:pos] + splice + front.events[pos:]
        cand = FrontWord(events, front.orientation)
        new = stats(cand)
        if new.tb == old.tb - 1 and new.rot == old.rot + sign:
            return cand, []
    raise AssertionError("neither zig-zag realized the requested sign")


def legendrian_copy(front, k):
    """k vertically shifted copies of the front.

    Each strand becomes a parallel k-bundle: crossings turn into k^2
    crossings, cusps into k nested cusps with the exchange crossings
    that parallel push-offs force.  The 2-copy resolves to the
    tb-framed push-off: inter-component linking equals tb(front).
    """
    if k <= 0:
        raise FrontError("copy count must be positive")
    if k == 1:
        return front
    out = []
    for kind, i in front.events:
        base = (i - 1) * k + 1
        if kind == "X":
            for r in range(k):
                out.extend(("X", base + k - 1 - r + c) for c in range(k))
        elif kind == "L":
            out.extend(("L", base + 2 * j) for j in range(k))
            # Sort [0l,0u,1l,1u,...] into [0l,1l,...,0u,1u,...]: a lower
            # strand of a later copy descends past an earlier upper.
            order = [(j, br) for j in range(k) for br in ("l", "u")]
            while True:
                t = next((t for t in range(len(order) - 1)
                          if order[t][1] == "u" and order[t + 1][1] == "l"), None)
                if t is None:
                    break
                order[t], order[t + 1] = order[t + 1], order[t]
                out.append(("X", base + t))
        else:
            order = [(j, br) for br in ("l", "u") for j in range(k)]
            while True:
                t = next((t for t in range(len(order) - 1)
                          if order[t][1] == "l" and order[t + 1][1] == "u"
                          and order[t][0] > order[t + 1][0]), None)
                if t is None:
                    break
                order[t], order[t + 1] = order[t + 1], order[t]
                out.append(("X", base + t))
            out.extend(("R", base) for _ in range(k))
    return FrontWord(out, list(front.orientation) * k)


def _mirror_swap(h):
    """Crossing gadget where the rising strand passes over: a zig-zag
    routes the lower strand above the upper one, giving one negative
    crossing between co-oriented strands at the cost of a cusp pair."""
    return [("L", h + 2), ("X", h + 1), ("R", h)]


def insert_full_twist(front, site, count, hand):
    """Splice count full twists over a width-w slice of live strands.

    site is (event_position, height, width).  Right-handed twists are
    plain crossing rows; left-handed ones use the cusped gadget, one
    negative crossing per row entry.
    """
    pos, h, width = site
    if not 0 <= pos <= len(front.events):
        raise FrontError(f"no event slot {pos}")
    liveat = front.live_before[pos] if pos < len(front.events) else 0
    if width < 2 or not 1 <= h <= liveat - width + 1:
        raise FrontError(f"slice ({h}, width {width}) not live at slot {pos}")
    if hand not in ("left", "right"):
        raise FrontError("hand must be 'left' or 'right'")
    if count < 0:
        raise FrontError("count must be nonnegative")
    gadget = []
    for _ in range(width):
        for j in range(h, h + width - 1):
            if hand == "right":
                gadget.append(("X", j))
            else:
                gadget.extend(_mirror_swap(j))
    events = front.events[:pos] + tuple(gadget) * count + front.events[pos:]
    return FrontWord(events, front.orientation)


def g4_lower_bound(front):
    """Slice-genus lower bound from the adjusted invariant: for any
    front of a knot, g4 >= (ad + 2) / 2."""
    if front.n_components != 1:
        raise FrontError("slice-genus bound needs a knot front")
    return max(0, math.ceil((stats(front).ad + 2) / 2))


def max_tb_torus_front(p, q):
    """Maximal-tb front of the positive (p,q) torus knot.

    p nested left cusps feed a (sigma_1 ... sigma_{p-1})^q braid block
    whose strands are co-oriented, so all q(p-1) crossings are
    positive; tb = pq - p - q and rot = 0.
    """
    if p < 2 or q < 2 or math.gcd(p, q) != 1:
        raise FrontError("need coprime p, q >= 2")
    events = [("L", j) for j in range(1, p + 1)]
    events += [("X", j) for _ in range(q) for j in range(1, p)]
    events += [("R", j) for j in range(p, 0, -1)]
    return FrontWord(events)


# -- serialization ----------------------------------------------------

def front_to_text(front):
    header = "orientation: " + " ".join("+" if o > 0 else "-"
                                        for o in front.orientation)
    word = " ".join(f"{kind}{i}" for kind, i in front.events)
    return header + "\n" + word + "\n"


def front_from_text(text):
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    orientation = None
    tokens = []
    for ln in lines:
        if ln.startswith("orientation:"):
            orientation = [1 if t == "+" else -1 for t in ln.split()[1:]]
        else:
            tokens.extend(ln.split())
    events = []
    for tok in tokens:
        kind, num = tok[0], tok[1:]
        if kind not in _KINDS or not num.isdigit():
            raise FrontError(f"bad token {tok!r}")
        events.append((kind, int(num)))
    return FrontWord(events, orientation)


def front_to_json(front):
    return json.dumps({
        "orientation": list(front.orientation),
        "events": [f"{kind}{i}" for kind, i in front.events],
    })


def front_from_json(text):
    data = json.loads(text)
    events = [(tok[0], int(tok[1:])) for tok in data["events"]]
    return FrontWord(events, data.get("orientation"))
