"""Planar diagrams of oriented links, encoded as PD codes.

A diagram is a list of crossings plus explicit oriented component
cycles.  Each crossing is a 4-tuple (a, b, c, d) of arc labels listed
counterclockwise around the crossing starting at the incoming
under-strand, so the under-strand runs a -> c.  The over-strand
occupies slots 1 and 3; which of the two is incoming is not part of
the tuple but is recovered from the component cycles, and determines
the crossing sign: the crossing is positive exactly when the
over-strand runs d -> b.

Arcs are the edges of the underlying 4-valent plane graph: they break
at every passage, over or under.  Each arc label therefore occurs
exactly twice among all crossing slots (once incoming, once outgoing),
except for the arc of a crossing-free component (a free loop), which
occurs zero times.

Validation is strict: component cycles must traverse the crossings
consistently (a unique global over-strand orientation must exist), and
each connected piece of the diagram must satisfy the plane Euler count
faces = crossings + 2.  Bad transcriptions fail loudly here instead of
producing wrong invariants downstream.

One genuine blind spot of the encoding: a two-arc component [b, d]
reads the same in both directions, so when such a loop runs over at
both of its crossings the data admits two sign assignments.  Builders
that know the geometry pass the intended signs as a hint, which is
verified against the admissible assignments rather than trusted.
"""

from __future__ import annotations

import itertools
import json


class DiagramError(ValueError):
    """Raised when PD data does not describe a consistent plane diagram."""


class LinkDiagram:
    """An oriented link diagram.

    Immutable once constructed; all editing operations return new
    diagrams.  Construction validates the PD data and derives crossing
    signs, arc successors, and face data.
    """

    def __init__(self, crossings, components, signs=None):
        self.crossings = [tuple(int(x) for x in c) for c in crossings]
        self.components = [list(int(a) for a in comp) for comp in components]
        for c in self.crossings:
            if len(c) != 4:
                raise DiagramError(f"crossing {c} is not a 4-tuple")
        if not self.components:
            raise DiagramError("diagram must have at least one component")
        self._sign_hint = list(signs) if signs is not None else None
        self._validate()

    # -- validation -------------------------------------------------

    def _validate(self):
        # Arc labels must be globally distinct across component cycles.
        self.succ = {}
        self.comp_of = {}
        for ci, comp in enumerate(self.components):
            if not comp:
                raise DiagramError("empty component cycle")
            for i, x in enumerate(comp):
                if x in self.succ:
                    raise DiagramError(f"arc {x} appears twice in component cycles")
                self.succ[x] = comp[(i + 1) % len(comp)]
                self.comp_of[x] = ci
        self.pred = {y: x for x, y in self.succ.items()}

        # Slot occurrences: every arc of a component that meets
        # crossings occurs exactly twice; free loops occur zero times.
        self.arc_slots = {}
        for k, tup in enumerate(self.crossings):
            for s, x in enumerate(tup):
                if x not in self.succ:
                    raise DiagramError(f"arc {x} in crossing {k} is not in any component")
                self.arc_slots.setdefault(x, []).append((k, s))
        self.free_loops = []
        busy_total = 0
        for ci, comp in enumerate(self.components):
            occ = sum(len(self.arc_slots.get(x, ())) for x in comp)
            if occ == 0:
                if len(comp) != 1:
                    raise DiagramError(f"component {ci} has several arcs but meets no crossing")
                self.free_loops.append(ci)
            else:
                for x in comp:
                    if len(self.arc_slots.get(x, ())) != 2:
                        raise DiagramError(f"arc {x} occurs {len(self.arc_slots.get(x, ()))} times in crossings, expected 2")
                if len(comp) == 1:
                    raise DiagramError(f"component {ci} has one arc but meets a crossing")
                busy_total += len(comp)
        if busy_total != 2 * len(self.crossings):
            raise DiagramError("component lengths do not match the number of crossing passages")

        self._derive_signs()
        self._build_ends()
        self._check_euler()

    def _derive_signs(self):
        # Each consecutive arc pair (x, succ x) is consumed by exactly
        # one crossing passage.  Under-passages are forced by the tuple
        # convention; over-passages need a direction, found by search.
        consumed = set()
        for k, (a, b, c, d) in enumerate(self.crossings):
            if self.succ.get(a) != c:
                raise DiagramError(f"crossing {k}: under-strand {a}->{c} is not a component transit")
            if a in consumed:
                raise DiagramError(f"crossing {k}: under transit {a} already used")
            consumed.add(a)

        n = len(self.crossings)
        options = []
        for a, b, c, d in self.crossings:
            opts = []
            if self.succ.get(d) == b and d not in consumed:
                opts.append(1)
            if self.succ.get(b) == d and b not in consumed:
                opts.append(-1)
            options.append(opts)

        order = sorted(range(n), key=lambda k: len(options[k]))
        solutions = []

        def search(i):
            if len(solutions) >= 4:
                return
            if i == n:
                solutions.append(tuple(sign[k] for k in range(n)))
                return
            k = order[i]
            _, b, _, d = self.crossings[k]
            for s in options[k]:
                key = d if s > 0 else b
                if key in consumed:
                    continue
                consumed.add(key)
                sign[k] = s
                search(i + 1)
                consumed.remove(key)

        sign = [0] * n
        search(0)
        distinct = set(solutions)
        if not distinct:
            raise DiagramError("component cycles admit no consistent over-strand orientation")
        self.sign_hint_needed = len(distinct) > 1
        if self.sign_hint_needed:
            hint = tuple(self._sign_hint) if self._sign_hint is not None else None
            if hint is None or hint not in distinct:
                raise DiagramError("over-strand orientations are ambiguous and no valid sign hint was given")
            self.signs = list(hint)
        else:
            only = distinct.pop()
            if self._sign_hint is not None and tuple(self._sign_hint) != only:
                raise DiagramError("sign hint contradicts the derived crossing signs")
            self.signs = list(only)
        # over_in is the slot where the over-strand enters: 3 when the
        # over-strand runs d -> b (positive), 1 when b -> d (negative).
        self.over_in = [3 if s > 0 else 1 for s in self.signs]

    def _build_ends(self):
        # arc_end[x]: the (crossing, slot) where arc x terminates;
        # arc_start[x]: where it originates.  Free loop arcs have neither.
        self.arc_end = {}
        self.arc_start = {}
        for k, (a, b, c, d) in enumerate(self.crossings):
            oin = self.over_in[k]
            oout = 4 - oin
            self.arc_end[a] = (k, 0)
            self.arc_start[c] = (k, 2)
            self.arc_end[self.crossings[k][oin]] = (k, oin)
            self.arc_start[self.crossings[k][oout]] = (k, oout)

    def _dart_step(self, dart):
        # Walking out of crossing k along slot s, arrive at the other
        # end of that arc at slot r, and leave along slot r+1; the face
        # kept on the right collects the quadrant between slots r, r+1.
        k, s = dart
        arc = self.crossings[k][s]
        ends = self.arc_slots[arc]
        other = ends[1] if ends[0] == (k, s) else ends[0]
        k2, r = other
        return (k2, (r + 1) % 4), (k2, r)

    def faces(self):
        """Faces of the diagram as lists of (crossing, quadrant) corners.

        Quadrant q at crossing k is the region between slots q and q+1
        (mod 4).  Free loops bound two extra regions each, not listed
        here.  The orbit structure is cached.
        """
        if getattr(self, "_faces", None) is None:
            seen = set()
            out = []
            for k in range(len(self.crossings)):
                for s in range(4):
                    if (k, s) in seen:
                        continue
                    orbit = []
                    corners = []
                    d = (k, s)
                    while d not in seen:
                        seen.add(d)
                        orbit.append(d)
                        d, corner = self._dart_step(d)
                        corners.append(corner)
                    out.append(corners)
            self._faces = out
        return self._faces

    def _connected_parts(self):
        # Union-find on crossings joined by shared arcs.
        parent = list(range(len(self.crossings)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for ends in self.arc_slots.values():
            if len(ends) == 2:
                a, b = find(ends[0][0]), find(ends[1][0])
                if a != b:
                    parent[a] = b
        return [find(k) for k in range(len(self.crossings))]

    def _check_euler(self):
        if not self.crossings:
            self._faces = []
            return
        part = self._connected_parts()
        sizes = {}
        for p in part:
            sizes[p] = sizes.get(p, 0) + 1
        counts = {p: 0 for p in sizes}
        for corners in self.faces():
            counts[part[corners[0][0]]] += 1
        for p, c in sizes.items():
            if counts[p] != c + 2:
                raise DiagramError(
                    f"diagram piece fails the plane Euler count: {counts[p]} faces for {c} crossings")

    # -- basic invariants --------------------------------------------

    @property
    def n_crossings(self):
        return len(self.crossings)

    @property
    def n_components(self):
        return len(self.components)

    @property
    def arcs(self):
        return set(self.succ)

    def writhe(self):
        """Sum of all crossing signs."""
        return sum(self.signs)

    def strand_components(self, k):
        """(under component, over component) indices at crossing k."""
        a, b, _, _ = self.crossings[k]
        return self.comp_of[a], self.comp_of[b]

    def self_writhe(self, i):
        return sum(s for k, s in enumerate(self.signs) if self.strand_components(k) == (i, i))

    def linking_number(self, i, j):
        """Linking number of components i and j (i != j)."""
        assert i != j
        total = 0
        for k, s in enumerate(self.signs):
            u, o = self.strand_components(k)
            if {u, o} == {i, j}:
                total += s
        assert total % 2 == 0, "crossings between two closed components must be even"
        return total // 2

    def linking_matrix(self, framings=None):
        """Symmetric matrix with linking numbers off the diagonal and,
        on the diagonal, the given framings (default: self-writhes)."""
        n = self.n_components
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = framings[i] if framings is not None else self.self_writhe(i)
            for j in range(i + 1, n):
                m[i][j] = m[j][i] = self.linking_number(i, j)
        return m

    # -- editing -----------------------------------------------------

    def mirror(self):
        """Swap every crossing (reflect through the projection plane).

        All crossing signs flip; component orientations are kept.
        """
        new = []
        for k, (a, b, c, d) in enumerate(self.crossings):
            if self.signs[k] > 0:
                new.append((d, a, b, c))
            else:
                new.append((b, c, d, a))
        return LinkDiagram(new, self.components, signs=[-s for s in self.signs])

    def reverse_component(self, i):
        """Reverse the orientation of component i."""
        new = []
        hint = []
        for k, (a, b, c, d) in enumerate(self.crossings):
            if self.comp_of[a] == i:
                new.append((c, d, a, b))
            else:
                new.append((a, b, c, d))
            flip = (self.comp_of[a] == i) != (self.comp_of[b] == i)
            hint.append(-self.signs[k] if flip else self.signs[k])
        comps = [list(reversed(c)) if ci == i else c for ci, c in enumerate(self.components)]
        return LinkDiagram(new, comps, signs=hint)

    def relabeled(self, mapping=None):
        """Apply an arc relabeling; default maps arcs to 1..n in a
        deterministic order."""
        if mapping is None:
            mapping = {x: i + 1 for i, x in enumerate(sorted(self.succ))}
        cr = [tuple(mapping[x] for x in c) for c in self.crossings]
        comps = [[mapping[x] for x in comp] for comp in self.components]
        return LinkDiagram(cr, comps, signs=self.signs)

    def disjoint_union(self, other):
        """Place other next to self (split union, no new crossings)."""
        shift = (max(self.succ) + 1) - min(other.succ) if other.succ else 0
        m = {x: x + shift for x in other.succ}
        cr = self.crossings + [tuple(m[x] for x in c) for c in other.crossings]
        comps = self.components + [[m[x] for x in comp] for comp in other.components]
        return LinkDiagram(cr, comps, signs=self.signs + other.signs)

    def connected_sum(self, other, my_arc, other_arc):
        """Oriented connected sum, splicing my_arc to other_arc."""
        if len(self.components[self.comp_of[my_arc]]) == 1:
            # Summing a free loop onto other just yields other.
            return LinkDiagram(other.crossings, other.components)
        if len(other.components[other.comp_of[other_arc]]) == 1:
            return LinkDiagram(self.crossings, self.components)
        shift = max(self.succ) + 1 - min(other.succ)
        m = {x: x + shift for x in other.succ}
        o_arc = m[other_arc]
        o_cross = [tuple(m[x] for x in c) for c in other.crossings]
        o_comps = [[m[x] for x in comp] for comp in other.components]

        # New arc A = first half of my_arc + second half of o_arc keeps
        # the label my_arc; new arc B = first half of o_arc + second
        # half of my_arc gets a fresh label.
        fresh = max(max(self.succ), max(m.values())) + 1

        def patch(tuples, arc, end_slot, new_label):
            # Replace the occurrence of arc at its incoming or outgoing
            # end; end is identified by (crossing, slot).
            k, s = end_slot
            t = list(tuples[k])
            assert t[s] == arc
            t[s] = new_label
            tuples[k] = tuple(t)

        my_cross = list(self.crossings)
        patch(my_cross, my_arc, self.arc_end[my_arc], fresh)
        o_end = other.arc_end[other_arc]
        o_start = other.arc_start[other_arc]
        patch(o_cross, o_arc, (o_end[0], o_end[1]), my_arc)
        patch(o_cross, o_arc, (o_start[0], o_start[1]), fresh)

        # Splice the cycles: [..., my_arc, q, ...] + [..., u, o_arc, v, ...]
        # becomes [..., my_arc, v, ..., u, fresh, q, ...].
        me = self.comp_of[my_arc]
        oc = other.comp_of[other_arc]
        ocycle = o_comps[oc]
        at = ocycle.index(o_arc)
        tail = ocycle[at + 1:] + ocycle[:at]
        merged = []
        for x in self.components[me]:
            if x == my_arc:
                merged.extend([my_arc] + tail + [fresh])
            else:
                merged.append(x)
        comps = [merged if ci == me else comp for ci, comp in enumerate(self.components)]
        comps += [comp for cj, comp in enumerate(o_comps) if cj != oc]
        return LinkDiagram(my_cross + o_cross, comps, signs=self.signs + other.signs)

    def component_subdiagram(self, i):
        """The diagram of component i alone, with all other components
        erased.  Crossings between i and an erased component disappear
        and the strand of i is merged through them."""
        parent = {x: x for x in self.succ}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        keep = []
        hint = []
        for k, (a, b, c, d) in enumerate(self.crossings):
            iu = self.comp_of[a] == i
            io = self.comp_of[b] == i
            if iu and io:
                keep.append((a, b, c, d))
                hint.append(self.signs[k])
            elif iu:
                parent[find(a)] = find(c)
            elif io:
                oin = self.crossings[k][self.over_in[k]]
                oout = self.crossings[k][4 - self.over_in[k]]
                parent[find(oin)] = find(oout)
        if not keep:
            return LinkDiagram([], [[find(self.components[i][0])]])
        # Merged classes are consecutive runs of the original cycle, so
        # collapsing consecutive (and wraparound) duplicates is exact.
        cyc = []
        for x in self.components[i]:
            r = find(x)
            if not cyc or (cyc[-1] != r and cyc[0] != r):
                cyc.append(r)
        cr = [tuple(find(x) for x in t) for t in keep]
        return LinkDiagram(cr, [cyc], signs=hint)

    # -- equality up to relabeling ------------------------------------

    def canonical_key(self, max_candidates=200000):
        """A hashable key invariant under arc relabeling.

        Tries every component order and starting arc, relabels arcs by
        first appearance, and keeps the lexicographically least
        (crossings, component lengths) pair.  Guarded by a candidate
        budget; intended for small certificate diagrams.
        """
        comps = self.components
        orders = list(itertools.permutations(range(len(comps))))
        count = len(orders)
        for c in comps:
            count *= len(c)
        if count > max_candidates:
            raise DiagramError("diagram too large for canonical relabeling")
        best = None
        for order in orders:
            starts = [range(len(comps[ci])) for ci in order]
            for offsets in itertools.product(*starts):
                mapping = {}
                comp_key = []
                for ci, off in zip(order, offsets):
                    cyc = comps[ci]
                    rot = cyc[off:] + cyc[:off]
                    for x in rot:
                        mapping[x] = len(mapping)
                    comp_key.append(tuple(mapping[x] for x in rot))
                cr = sorted((tuple(mapping[x] for x in c), s)
                            for c, s in zip(self.crossings, self.signs))
                key = (tuple(cr), tuple(comp_key))
                if best is None or key < best:
                    best = key
        return best

    def same_diagram(self, other, max_candidates=200000):
        """True when the diagrams differ only by arc relabeling and
        component reordering."""
        if len(self.crossings) != len(other.crossings):
            return False
        if sorted(map(len, self.components)) != sorted(map(len, other.components)):
            return False
        return self.canonical_key(max_candidates) == other.canonical_key(max_candidates)

    # -- serialization -------------------------------------------------

    def to_json(self):
        data = {"crossings": [list(c) for c in self.crossings],
                "components": [list(c) for c in self.components]}
        if self.sign_hint_needed:
            data["signs"] = list(self.signs)
        return json.dumps(data, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls(data["crossings"], data["components"], signs=data.get("signs"))

    def to_text(self):
        """Line format: one 'X a b c d' per crossing, one 'C a1 a2 ...'
        per component cycle, and an 'S s1 s2 ...' sign line only when
        the signs are not recoverable from the cycles alone."""
        lines = [f"X {a} {b} {c} {d}" for a, b, c, d in self.crossings]
        lines += ["C " + " ".join(str(x) for x in comp) for comp in self.components]
        if self.sign_hint_needed:
            lines.append("S " + " ".join(str(s) for s in self.signs))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        crossings = []
        comps = []
        signs = None
        for ln in text.splitlines():
            ln = ln.strip()
            if not ln or ln.startswith("#"):
                continue
            parts = ln.split()
            if parts[0] == "X":
                if len(parts) != 5:
                    raise DiagramError(f"bad crossing line: {ln!r}")
                crossings.append(tuple(int(x) for x in parts[1:]))
            elif parts[0] == "C":
                comps.append([int(x) for x in parts[1:]])
            elif parts[0] == "S":
                signs = [int(x) for x in parts[1:]]
            else:
                raise DiagramError(f"unrecognized line: {ln!r}")
        return cls(crossings, comps, signs=signs)

    def __repr__(self):
        return (f"LinkDiagram({self.n_crossings} crossings, "
                f"{self.n_components} components, writhe {self.writhe()})")


def braid_closure(word, strands):
    """Close a braid into a LinkDiagram.

    word is a list of nonzero integers: +i is the generator where the
    strand in column i crosses over the strand in column i+1 (a
    positive crossing for upward-oriented strands), -i its inverse.
    Columns are numbered from 1.  All strands are oriented upward, and
    the closure joins each column's top back to its bottom.
    """
    assert strands >= 1
    for w in word:
        if w == 0 or abs(w) >= strands:
            raise ValueError(f"bad braid letter {w} for {strands} strands")
    nxt = itertools.count(1)
    bottom = [next(nxt) for _ in range(strands)]
    cur = list(bottom)
    crossings = []
    signs = []
    succ = {}
    for w in word:
        signs.append(1 if w > 0 else -1)
        i = abs(w) - 1
        lo, hi = cur[i], cur[i + 1]
        nl, nr = next(nxt), next(nxt)
        if w > 0:
            # (incoming under, over out, under out, incoming over)
            crossings.append((hi, nr, nl, lo))
            succ[hi] = nl
            succ[lo] = nr
        else:
            crossings.append((lo, hi, nr, nl))
            succ[lo] = nr
            succ[hi] = nl
        cur[i], cur[i + 1] = nl, nr

    # Identify top labels with bottom labels (the closure arcs).
    merge = {cur[i]: bottom[i] for i in range(strands) if cur[i] != bottom[i]}

    def m(x):
        return merge.get(x, x)

    crossings = [tuple(m(x) for x in c) for c in crossings]
    succ = {m(x): m(y) for x, y in succ.items()}
    comps = []
    seen = set()
    for i in range(strands):
        a = bottom[i]
        if a in seen:
            continue
        if a not in succ:  # untouched column closes into a free loop
            comps.append([a])
            seen.add(a)
            continue
        cyc = [a]
        seen.add(a)
        x = succ[a]
        while x != a:
            cyc.append(x)
            seen.add(x)
            x = succ[x]
        comps.append(cyc)
    return LinkDiagram(crossings, comps, signs=signs)
