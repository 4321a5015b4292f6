"""Satellite knots assembled from Morse words.

A Morse word reads a link diagram left to right as events on a stack
of live strands: ('min', i) opens two strands at heights i, i+1 joined
on the left, ('max', i) joins heights i, i+1 on the right, and
('xu', i) / ('xo', i) cross heights i and i+1 with the rising strand
passing under or over.  Orientations are not part of the word; the
resolver walks the closed curves and derives directions and crossing
signs.

The satellite of a companion knot K is built by presenting K as a
braid closure (through the Vogel machinery), replacing every event by
its k-strand parallel bundle, inserting the framing-correction full
twists, and splicing the pattern's tangle word into the bundle.
Winding-number bookkeeping is verified against an explicit meridian
circle rather than trusted.

Two pattern families ship as versioned data files: P carries a clasp
whose designated crossing switch turns it into the core of the solid
torus, and Q is a band sum of the core with a split unknot.  Both take
a twisting number n (full twists on the three strands) and a
half-integer m (half twists at a marked site).  Their transcriptions
are never trusted: winding certificates, the crossing-switch test, the
band witness, and the Legendrian front increments re-verify them, and
any failure raises TranscriptionError.
"""

import json
from fractions import Fraction
from importlib import resources

from .alexander import (alexander_polynomial,
                        component_alexander_polynomials)
from .diagram import DiagramError, LinkDiagram, braid_closure
from .front import FrontError, FrontWord, legendrian_copy, stats, _mirror_swap
from .seifert import braid_word_of, braided_form


class TranscriptionError(DiagramError):
    """A built-in pattern failed one of its self-consistency checks."""


def _check_morse(events, start=0, end=0):
    live = start
    for n, (kind, i) in enumerate(events):
        if kind == "min":
            if not 1 <= i <= live + 1:
                raise DiagramError(f"event {n}: min height {i} out of range")
            live += 2
        elif kind in ("max", "xu", "xo"):
            if not 1 <= i <= live - 1:
                raise DiagramError(f"event {n}: height {i} needs two live strands")
            if kind == "max":
                live -= 2
        else:
            raise DiagramError(f"bad event kind {kind!r}")
    if live != end:
        raise DiagramError(f"word ends with {live} live strands, expected {end}")


def resolve_morse(events):
    """Resolve a closed Morse word into a LinkDiagram."""
    _check_morse(events)
    pieces = 0
    live = []
    conn = {}
    transit = {}  # glued end on the entry side -> (crossing, diagonal)
    bits = []
    for kind, i in events:
        if kind == "min":
            p, q = pieces, pieces + 1
            pieces += 2
            conn[(p, "l")] = (q, "l")
            conn[(q, "l")] = (p, "l")
            live[i - 1:i - 1] = [p, q]
        elif kind == "max":
            a, b = live[i - 1], live[i]
            conn[(a, "r")] = (b, "r")
            conn[(b, "r")] = (a, "r")
            del live[i - 1:i + 1]
        else:
            a, b = live[i - 1], live[i]
            a2, b2 = pieces, pieces + 1
            pieces += 2
            conn[(a, "r")] = (a2, "l")
            conn[(a2, "l")] = (a, "r")
            conn[(b, "r")] = (b2, "l")
            conn[(b2, "l")] = (b, "r")
            transit[(a, "r")] = (len(bits), "asc")
            transit[(b, "r")] = (len(bits), "desc")
            live[i - 1], live[i] = b2, a2
            bits.append(kind)

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
            hit = transit.get(end) or transit.get(e2)
            if hit:
                steps.append((hit[0], hit[1], dr))
            pid2, side2 = e2
            pos = (pid2, 1 if side2 == "l" else -1)
            if pos == (seed, 1):
                break
        components.append(steps)

    arc_lists = []
    passes = {}
    next_arc = 1
    for steps in components:
        if not steps:
            arc_lists.append([next_arc])
            next_arc += 1
            continue
        arcs = [next_arc + n for n in range(len(steps))]
        next_arc += len(steps)
        arc_lists.append(arcs)
        for at, (k, diag, dr) in enumerate(steps):
            passes.setdefault(k, {})[diag] = (arcs[at], arcs[(at + 1) % len(arcs)], dr)

    crossings = []
    signs = []
    for k, bit in enumerate(bits):
        asc_in, asc_out, da = passes[k]["asc"]
        desc_in, desc_out, dd = passes[k]["desc"]
        if bit == "xu":
            ul, lr = (desc_in, desc_out) if dd > 0 else (desc_out, desc_in)
            if da > 0:
                crossings.append((asc_in, lr, asc_out, ul))
            else:
                crossings.append((asc_in, ul, asc_out, lr))
            signs.append(1 if da == dd else -1)
        else:
            ll, ur = (asc_in, asc_out) if da > 0 else (asc_out, asc_in)
            if dd > 0:
                crossings.append((desc_in, ll, desc_out, ur))
            else:
                crossings.append((desc_in, ur, desc_out, ll))
            signs.append(1 if da != dd else -1)
    return LinkDiagram(crossings, arc_lists, signs=signs)


def braid_morse(word, strands):
    """Morse word of a braid closure: nested returns around the letters.

    Writing the braid horizontally turns column i into height
    strands - i, so generator +-i becomes a crossing at that height
    with the rising strand under (+) or over (-).
    """
    events = [("min", j) for j in range(1, strands + 1)]
    events += [("xu" if g > 0 else "xo", strands - abs(g)) for g in word]
    events += [("max", j) for j in range(strands, 0, -1)]
    return events


def cable_events(events, k):
    """Replace every strand by a parallel k-bundle.

    Crossings become k^2 crossings with the same over bit; turnbacks
    nest with no new crossings.
    """
    out = []
    for kind, i in events:
        base = (i - 1) * k + 1
        if kind in ("xu", "xo"):
            for r in range(k):
                out.extend((kind, base + k - 1 - r + c) for c in range(k))
        elif kind == "min":
            out.extend(("min", base + t) for t in range(k))
        else:
            out.extend(("max", base + k - 1 - t) for t in range(k))
    return out


def full_twist_events(k, count, base=1):
    """|count| full twists on the k strands at heights base..base+k-1,
    right-handed for positive count."""
    bit = "xu" if count > 0 else "xo"
    row = [(bit, j) for j in range(base, base + k - 1)]
    return row * (k * abs(count))


def meridian_events(k):
    """A circle encircling the k strands at heights 1..k: one side
    crosses over the bundle, the other under."""
    events = [("min", 1)]
    events += [("xo", j) for j in range(2, k + 2)]
    events += [("xu", j) for j in range(1, k + 1)]
    events.append(("max", k + 1))
    return events


def _braid_presentation(diagram):
    """Braid word, strand count and closure writhe for a knot diagram."""
    if diagram.n_components != 1:
        raise DiagramError("companion must be a knot")
    if diagram.n_crossings == 0:
        return [], 1, 0
    word, strands = braid_word_of(braided_form(diagram))
    writhe = sum(1 if g > 0 else -1 for g in word)
    return word, strands, writhe


class Pattern:
    """A knot in the solid torus, cut open into a tangle word.

    The box word starts and ends with `strands` live strands (the cut
    meridian disk); `eps` records each strand's direction through the
    disk, so the winding number is sum(eps).  `switch_site` optionally
    names a box crossing whose switch turns the pattern into the core;
    `band_site` names a max/min saddle pair whose removal splits off
    the band-summed unknot.
    """

    def __init__(self, name, strands, eps, box, switch_site=None,
                 band_site=None):
        self.name = name
        self.strands = strands
        self.eps = tuple(eps)
        self.box = tuple((kind, int(i)) for kind, i in box)
        self.switch_site = switch_site
        self.band_site = band_site
        if len(self.eps) != strands or any(e not in (1, -1) for e in self.eps):
            raise DiagramError("eps must be ±1 per strand")
        _check_morse(self.box, start=strands, end=strands)

    def with_box(self, box, **kw):
        return Pattern(kw.pop("name", self.name), self.strands, self.eps,
                       box, **kw)

    def __repr__(self):
        return f"Pattern({self.name!r}, strands={self.strands})"


CORE = Pattern("core", 1, (1,), ())


def winding_number(pattern):
    """Signed count of meridian-disk crossings."""
    return sum(pattern.eps)


def _satellite_events(pattern, word, strands, twists):
    k = pattern.strands
    events = cable_events([("min", j) for j in range(1, strands + 1)], k)
    events += full_twist_events(k, twists) if twists else []
    events += list(pattern.box)
    letters = [("xu" if g > 0 else "xo", strands - abs(g)) for g in word]
    closers = [("max", j) for j in range(strands, 0, -1)]
    events += cable_events(letters + closers, k)
    return events


def pattern_closure(pattern):
    """The pattern viewed in S^3: satellite with unknot companion."""
    return resolve_morse(_satellite_events(pattern, [], 1, 0))


def satellite(pattern, companion, n, check=True):
    """n-twisted satellite of the companion with the given pattern.

    The companion neighborhood is identified with the solid torus by
    the n-framing, realized as n - writhe full twists on the cable.
    For winding-one patterns the Alexander factorization
    delta(satellite) = delta(pattern closure) * delta(companion) is
    verified on the output unless check=False.
    """
    word, strands, writhe = _braid_presentation(companion)
    events = _satellite_events(pattern, word, strands, n - writhe)
    result = resolve_morse(events)
    if result.n_components != 1:
        raise DiagramError("satellite did not close to a knot")
    if check and winding_number(pattern) == 1:
        want = alexander_polynomial(pattern_closure(pattern)) * \
            alexander_polynomial(companion)
        assert alexander_polynomial(result) == want, \
            "satellite Alexander factorization failed"
    return result


def cable(companion, k, n):
    """k-strand parallel of the companion with the n-framing: the
    blackboard copies plus n - writhe correcting full twists."""
    if k < 1:
        raise DiagramError("cable needs k >= 1")
    word, strands, writhe = _braid_presentation(companion)
    trivial = Pattern("parallel", k, (1,) * k, ())
    events = _satellite_events(trivial, word, strands, n - writhe)
    return resolve_morse(events)


def pattern_winding_certificate(pattern):
    """Linking number of the pattern closure with an explicit meridian;
    must equal winding_number(pattern)."""
    k = pattern.strands
    events = cable_events([("min", 1)], k) + meridian_events(k) + \
        list(pattern.box) + cable_events([("max", 1)], k)
    d = resolve_morse(events)
    if d.n_components != 2:
        raise DiagramError("winding certificate needs pattern closure to be a knot")
    return d.linking_number(0, 1)


def half_twist_count(m):
    """Validate a half-integer twisting parameter; returns 2m as an int.

    Accepts ints, Fractions, floats and strings like '1/2'.
    """
    try:
        doubled = 2 * Fraction(m)
    except (ValueError, TypeError) as err:
        raise DiagramError(f"bad half-twist parameter {m!r}") from err
    if doubled.denominator != 1:
        raise DiagramError(f"m must be an integer or half-integer, got {m!r}")
    return int(doubled)


def _pattern_data(name):
    path = resources.files("knotcert").joinpath(f"data/pattern_{name}.json")
    data = json.loads(path.read_text())
    if data.get("format") != 1:
        raise TranscriptionError(f"unsupported pattern data format in {name}")
    return data


def _builtin_pattern(name, n, m):
    """Assemble a stored pattern: m half twists spliced at the marked
    site, then n full twists on the whole bundle ahead of the box."""
    data = _pattern_data(name)
    twom = half_twist_count(m)
    box = [tuple(e) for e in data["box"]]
    site = data["anchors"]["half_twist_site"]
    pos, height = site["position"], site["height"]
    # half twists keep tb because the site's strands are anti-parallel;
    # the mirror bit realizes the opposite-handed twists for m < 0
    bit = "xo" if twom >= 0 else "xu"
    box[pos:pos] = [(bit, height)] * abs(twom)
    twist = full_twist_events(data["strands"], n) if n else []

    def shifted(index):
        return index + len(twist) + (abs(twom) if pos <= index else 0)

    kw = {}
    anchors = data["anchors"]
    if "switch" in anchors:
        kw["switch_site"] = shifted(anchors["switch"]["index"])
    if "band" in anchors:
        kw["band_site"] = tuple(shifted(i) for i in anchors["band"]["indices"])
    label = f"{data['name']}({n},{Fraction(m)})"
    return Pattern(label, data["strands"], tuple(data["eps"]),
                   twist + box, **kw)


def pattern_P(n=0, m=0):
    """The clasp pattern: winding one, and switching the designated
    crossing (switch_site) makes it the core of the solid torus."""
    return _builtin_pattern("p", n, m)


def pattern_Q(n=0, m=0):
    """The band pattern: a band sum of the core with a split unknot;
    band_site names the saddle pair that undoes the band."""
    return _builtin_pattern("q", n, m)


def switched_pattern(pattern):
    """The pattern with its designated crossing switched."""
    if pattern.switch_site is None:
        raise DiagramError("pattern has no designated crossing to switch")
    box = list(pattern.box)
    kind, i = box[pattern.switch_site]
    if kind not in ("xu", "xo"):
        raise DiagramError("switch site does not name a crossing")
    box[pattern.switch_site] = ("xo" if kind == "xu" else "xu", i)
    return pattern.with_box(box, name=pattern.name + "/switched",
                            switch_site=pattern.switch_site,
                            band_site=pattern.band_site)


def _reference_companions():
    trefoil = braid_closure([1, 1, 1], 2)
    figure_eight = braid_closure([1, -2, 1, -2], 3)
    return (trefoil, figure_eight)


def crossing_switch_certificate(pattern, companions=None):
    """Verify that switching the designated crossing gives the core.

    The switched pattern must close to a knot with trivial Alexander
    polynomial, and its satellites must keep each test companion's
    Alexander polynomial (a core pattern changes nothing).  Raises
    TranscriptionError otherwise.
    """
    sw = switched_pattern(pattern)
    closure = pattern_closure(sw)
    one = alexander_polynomial(braid_closure([], 1))
    if closure.n_components != 1 or alexander_polynomial(closure) != one:
        raise TranscriptionError(
            f"{pattern.name}: switched closure is not unknot-like")
    for companion in companions or _reference_companions():
        got = alexander_polynomial(satellite(sw, companion, 0, check=False))
        if got != alexander_polynomial(companion):
            raise TranscriptionError(
                f"{pattern.name}: switched satellite changed the companion")
    return True


class BandPresentation:
    """A band move on a pattern: removing the saddle pair at band_site
    splits off the banded unknot and leaves the core."""

    def __init__(self, pattern):
        if pattern.band_site is None:
            raise DiagramError("pattern has no designated band")
        self.pattern = pattern
        self.band_site = tuple(pattern.band_site)
        box = [e for k, e in enumerate(pattern.box)
               if k not in set(self.band_site)]
        self.cut_pattern = pattern.with_box(box, name=pattern.name + "/cut")

    def cut_satellite(self, companion, n=0):
        """The satellite link after the band move: companion copy plus
        a split unknot, certified by component count, linking number
        and componentwise Alexander polynomials."""
        word, strands, writhe = _braid_presentation(companion)
        events = _satellite_events(self.cut_pattern, word, strands, n - writhe)
        link = resolve_morse(events)
        one = alexander_polynomial(braid_closure([], 1))
        expected = sorted([str(one), str(alexander_polynomial(companion))])
        found = sorted(str(p) for p in component_alexander_polynomials(link))
        if (link.n_components != 2 or link.linking_number(0, 1) != 0
                or found != expected):
            raise TranscriptionError(
                f"{self.pattern.name}: band cut is not companion + split unknot")
        return link


def concordance_witness_Q(n=0, m=0):
    """Band presentation certifying that the Q satellite and its
    companion cobound an annulus-with-one-band, hence have equal
    4-genus upper bounds.

    Validated at the pattern level: cutting the band must leave two
    unlinked unknot-like components.  Raises TranscriptionError if the
    stored tangle fails that check.
    """
    bp = BandPresentation(pattern_Q(n, m))
    bp.cut_satellite(braid_closure([], 1), 0)
    return bp


def _front_gadget_events(box, base=1):
    """Front events realizing a Morse box on the legs of a bundled
    front copy: minima and maxima become cusps, an under-crossing is a
    plain front crossing, and an over-crossing is the cusped exchange
    that lets a front strand pass behind its neighbor."""
    events = []
    for kind, i in box:
        height = base + i - 1
        if kind == "min":
            events.append(("L", height))
        elif kind == "max":
            events.append(("R", height))
        elif kind == "xu":
            events.append(("X", height))
        else:
            events.extend(_mirror_swap(height))
    return events


def _legendrian_splice(front, box):
    """Three-copy the front and splice the box into the leg bundle."""
    copied = legendrian_copy(front, 3)
    head = 6  # the copy opens with three left cusps and three exchanges
    events = list(copied.events[:head]) + _front_gadget_events(box) \
        + list(copied.events[head:])
    return FrontWord(events)


def _front_satellite(builder, front, n, m, tb_shift):
    st = stats(front)
    if st.tb != n:
        raise FrontError(
            f"front has tb = {st.tb} but the twisting number is {n}; "
            f"stabilize the front to tb = {n} first")
    if half_twist_count(m) < 0:
        raise DiagramError("front constructions need m >= 0")
    out = _legendrian_splice(front, builder(0, m).box)
    so = stats(out)
    if out.n_components != 1 or so.tb != st.tb + tb_shift \
            or abs(so.rot) != abs(st.rot):
        raise TranscriptionError(
            "front satellite missed its invariant targets: "
            f"tb {st.tb} -> {so.tb}, rot {st.rot} -> {so.rot}")
    return out


def legendrian_satellite_P(front, n=0, m=0):
    """Front of the P satellite over a front with tb = n.

    The result gains the clasp's two positive crossings and no cusps,
    so tb goes up by exactly 2 while |rot| is unchanged.  The companion
    framing is the front's own tb; no twist gadgets are inserted.
    """
    return _front_satellite(pattern_P, front, n, m, 2)


def legendrian_satellite_Q(front, n=0, m=0):
    """Front of the Q satellite over a front with tb = n.

    The band and the split unknot cost two right cusps, so tb drops by
    exactly 2 while |rot| is unchanged.
    """
    return _front_satellite(pattern_Q, front, n, m, -2)


def _reference_front(n):
    """A front with tb = n: the sharpest torus-knot front of the right
    size, stabilized down as needed."""
    from .front import max_tb_torus_front, stabilize
    q = max(3, n + 2)
    if q % 2 == 0:
        q += 1
    front = max_tb_torus_front(2, q)
    tb = stats(front).tb
    sign = 1
    while tb > n:
        front, _ = stabilize(front, (2, 1), sign)
        sign = -sign
        tb -= 1
    return front


def verify_pattern_transcription(n=0, m=0, front=None):
    """Run the four self-checks guarding the stored pattern tangles.

    - winding: certificate linking numbers equal 1 for both patterns;
    - crossing switch: P's designated switch yields the core;
    - band: Q's band cut splits into companion plus unlinked unknot,
      at the pattern level and on a trefoil companion;
    - fronts: the Legendrian P construction gains tb exactly 2 with
      |rot| preserved (asserted inside the builder).

    Returns {check name: True}; any failure raises TranscriptionError.
    """
    if half_twist_count(m) < 0:
        raise DiagramError("transcription checks need m >= 0")
    pat_p, pat_q = pattern_P(n, m), pattern_Q(n, m)
    checks = {}
    for pat in (pat_p, pat_q):
        if not (winding_number(pat) == 1 == pattern_winding_certificate(pat)):
            raise TranscriptionError(f"{pat.name}: winding is not 1")
    checks["winding"] = True
    checks["crossing_switch"] = crossing_switch_certificate(pat_p)
    witness = concordance_witness_Q(n, m)
    witness.cut_satellite(braid_closure([1, 1, 1], 2), 0)
    checks["band"] = True
    if front is None:
        front = _reference_front(n)
    legendrian_satellite_P(front, n, m)
    checks["front_increments"] = True
    return checks
