"""Slice-genus interval certificates and classical invariant reports.

The classical layer wraps two independent Alexander routes (Fox
calculus on the diagram, a Seifert matrix on a braided spanning
surface) and two signature routes (the symmetrized Seifert form, the
Goeritz form), so every reported number can be confirmed by a second
computation that shares no code path with the first.

The certificate layer bounds the smooth slice genus from both sides
and keeps the witnesses.  Lower bounds come from the slice-Bennequin
inequality applied to front projections, each certified against the
diagram before use, and from half the signature.  Upper bounds come
from explicit constructions: the genus of a braided Seifert surface, a
designated crossing whose switch collapses a satellite pattern to its
core (one crossing change moves the slice genus by at most one), or a
band cut splitting a satellite into an unknot and a null-linked copy
of the companion (a concordance, along which the slice genus cannot
grow).  Two disjoint intervals prove the knots are not smoothly
concordant; overlapping intervals are reported as inconclusive, never
as evidence of concordance.

The formula reporter covers companions whose slice-Bennequin bound is
sharp, 2 g4 = ad + 2, as it is for positive torus knots.  For such a
companion the interval certificates pin the concordance invariants tau
and s of both satellites exactly: the raising pattern's front realizes
the bound on the nose one genus higher, and the null pattern is
concordant to its companion.  The same gates control the reported
n-shake genus of the framed traces.  Outside its hypotheses the
reporter refuses and names the failing inequality rather than
extrapolate.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .alexander import alexander_polynomial, knot_determinant
from .diagram import DiagramError, braid_closure
from .front import FrontWord, front_to_pd, g4_lower_bound, max_tb_torus_front, stats
from .goeritz import goeritz_signature
from .satellite import (BandPresentation, crossing_switch_certificate,
                        half_twist_count, satellite)
from .seifert import SeifertData, alexander_seifert, seifert_signature


class HypothesisError(DiagramError):
    """A reporter was asked to work outside its hypotheses; the message
    names the failing inequality."""


def alexander_fox(diagram):
    """The Alexander polynomial by Fox calculus; knots only."""
    if diagram.n_components != 1:
        raise DiagramError("the Fox facade is reserved for knots")
    return alexander_polynomial(diagram)


def alexander_dual_route(diagram):
    """The Alexander polynomial computed twice, by Fox calculus and
    from a Seifert matrix; the routes must agree."""
    fox = alexander_fox(diagram)
    surface = alexander_seifert(SeifertData.from_diagram(diagram))
    if fox != surface:
        raise DiagramError(f"Alexander routes disagree: {fox} vs {surface}")
    return fox


def signature(diagram, cross_check=True):
    """The knot signature from the symmetrized Seifert form, confirmed
    against the Goeritz form unless cross_check is off."""
    value = seifert_signature(diagram)
    if cross_check:
        other = goeritz_signature(diagram)
        if other != value:
            raise DiagramError(f"signature routes disagree: {value} vs {other}")
    return value


def determinant(diagram):
    """|Delta(-1)|; odd for every knot."""
    if diagram.n_components != 1:
        raise DiagramError("the determinant report is reserved for knots")
    value = knot_determinant(diagram)
    assert value % 2 == 1
    return value


@dataclass(frozen=True)
class GenusBounds:
    """A certified interval for the smooth slice genus.

    Both ends carry a witness record naming the route that produced
    them; status is "tight" when the interval is a single point.
    """

    lower: int
    upper: int
    lower_witness: dict
    upper_witness: dict

    def __post_init__(self):
        if not 0 <= self.lower <= self.upper:
            raise DiagramError(
                f"inconsistent genus bounds [{self.lower}, {self.upper}]")

    @property
    def status(self):
        return "tight" if self.lower == self.upper else "gap"

    def disjoint_from(self, other):
        return self.upper < other.lower or other.upper < self.lower

    def as_json(self):
        return {"lower": self.lower, "upper": self.upper,
                "status": self.status,
                "witnesses": {"lower": self.lower_witness,
                              "upper": self.upper_witness}}


@dataclass(frozen=True)
class CrossingChangeWitness:
    """Upper bound by a crossing change: the pattern's designated
    crossing collapses it to its core, so the satellite and the
    companion differ by one crossing change and the slice genus of the
    satellite is at most companion_genus + 1."""

    pattern: object
    companion: object
    companion_genus: int
    twists: int = 0


@dataclass(frozen=True)
class BandWitness:
    """Upper bound by a band cut: one band move splits the satellite
    into an unknot and a null-linked copy of the companion, exhibiting
    a concordance, so the slice genus is at most companion_genus."""

    presentation: BandPresentation
    companion: object
    companion_genus: int
    twists: int = 0


def _certified_satellite(pattern, witness, reference):
    # The witness must rebuild the knot under examination: same
    # Alexander polynomial, on the nose.
    built = satellite(pattern, witness.companion, witness.twists)
    if alexander_polynomial(built) != reference:
        raise DiagramError(
            f"{type(witness).__name__} builds a different knot")


def _upper_bound(diagram, reference, witness):
    if witness is None:
        surface = SeifertData.from_diagram(diagram)
        if alexander_seifert(surface) != reference:
            raise DiagramError("Seifert surface fails the Alexander check")
        return surface.genus, {"route": "seifert-genus",
                               "bound": surface.genus}
    if isinstance(witness, CrossingChangeWitness):
        crossing_switch_certificate(witness.pattern)
        _certified_satellite(witness.pattern, witness, reference)
        bound = witness.companion_genus + 1
        return bound, {"route": "crossing-change",
                       "companion_genus": witness.companion_genus,
                       "bound": bound}
    if isinstance(witness, BandWitness):
        witness.presentation.cut_satellite(witness.companion, witness.twists)
        _certified_satellite(witness.presentation.pattern, witness, reference)
        bound = witness.companion_genus
        return bound, {"route": "band",
                       "companion_genus": witness.companion_genus,
                       "bound": bound}
    raise DiagramError(f"unknown upper-bound witness {witness!r}")


def genus_bounds(diagram, fronts=(), upper=None):
    """A certified slice-genus interval for a knot diagram.

    fronts is a front projection of the same knot, or an iterable of
    them; each is certified against the diagram (equal Alexander
    polynomial and signature) before its slice-Bennequin bound enters
    the lower-bound pool, which also holds half the signature.  upper
    is a CrossingChangeWitness or BandWitness, validated before use,
    or None to take the genus of a braided Seifert surface.
    """
    if diagram.n_components != 1:
        raise DiagramError("genus bounds are defined for knots")
    if isinstance(fronts, FrontWord):
        fronts = (fronts,)
    reference = alexander_polynomial(diagram)
    sig = signature(diagram, cross_check=False)

    upper_value, upper_witness = _upper_bound(diagram, reference, upper)

    lower_value = max(0, -(-abs(sig) // 2))
    lower_witness = {"route": "signature", "signature": sig,
                     "bound": lower_value}
    for front in fronts:
        if front.n_components != 1:
            raise DiagramError("genus bounds need knot fronts")
        flat = front_to_pd(front)
        if alexander_polynomial(flat) != reference:
            raise DiagramError("front fails the Alexander certificate")
        if seifert_signature(flat) != sig:
            raise DiagramError("front fails the signature certificate")
        bound = g4_lower_bound(front)
        if bound > lower_value:
            st = stats(front)
            lower_value = bound
            lower_witness = {"route": "slice-bennequin", "tb": st.tb,
                             "rot": st.rot, "bound": bound}
    return GenusBounds(lower_value, upper_value, lower_witness, upper_witness)


def nonconcordance_verdict(bounds_a, bounds_b):
    """Compare two slice-genus intervals.  Disjoint intervals prove
    the knots are not smoothly concordant, since concordant knots have
    equal slice genus; anything else is INCONCLUSIVE.  The verdict
    never asserts concordance."""
    if bounds_a.disjoint_from(bounds_b):
        return "NOT_CONCORDANT"
    return "INCONCLUSIVE"


@dataclass(frozen=True)
class KnotProfile:
    """A companion knot packaged with the data the satellite reporters
    need: a diagram, a maximal-tb front, the certified slice genus,
    the maximal Thurston-Bennequin invariant, and the maximal adjusted
    invariant tb - 1 + |rot|."""

    name: str
    diagram: object
    front: FrontWord
    genus: int
    tb_max: int
    ad_max: int

    @property
    def sharp(self):
        """Whether the slice-Bennequin bound is an equality."""
        return 2 * self.genus == self.ad_max + 2


def torus_profile(p, q):
    """The profile of the positive (p, q) torus knot.

    The standard front realizes tb = pq - p - q and rot = 0, which is
    maximal, and its slice-Bennequin bound meets the Seifert genus of
    the braid closure, so the slice genus (p-1)(q-1)/2 comes out of a
    tight interval rather than a table.
    """
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise DiagramError("need coprime p, q >= 2")
    diagram = braid_closure([i for _ in range(q) for i in range(1, p)], p)
    front = max_tb_torus_front(p, q)
    st = stats(front)
    assert st.tb == p * q - p - q and st.rot == 0
    bounds = genus_bounds(diagram, front)
    genus = (p - 1) * (q - 1) // 2
    if (bounds.lower, bounds.upper) != (genus, genus):
        raise DiagramError(f"torus profile ({p},{q}) failed its certificate")
    profile = KnotProfile(f"T({p},{q})", diagram, front, genus,
                          st.tb, st.ad)
    assert profile.sharp
    return profile


def report_tau_s_shake(profile, n=0, m=0):
    """Formula-derived tau, s, and n-shake genus for the satellite
    pair over a sharp companion.

    Requires 2 g4 = ad + 2 for the companion, nonnegative twisting m,
    and framing n <= tb_max; the null-pattern shake value additionally
    needs n <= tb_max - 1 and is omitted, with the reason, when only
    that fails.  Values are consequences of the interval certificates
    (the raising pattern's front pins tau and s one genus up; the null
    pattern is concordant to its companion), not fresh computations,
    and the report is labelled accordingly.
    """
    if half_twist_count(m) < 0:
        raise HypothesisError(
            f"m = {Fraction(m)} < 0: formulas cover nonnegative twisting")
    genus = profile.genus
    if 2 * genus != profile.ad_max + 2:
        raise HypothesisError(
            f"2 g4 = {2 * genus} != ad + 2 = {profile.ad_max + 2} "
            f"for {profile.name}")
    if n > profile.tb_max:
        raise HypothesisError(
            f"n = {n} > tb_max = {profile.tb_max} for {profile.name}")
    values = {"tau_P": genus + 1, "s_P": 2 * genus + 2,
              "tau_Q": genus, "s_Q": 2 * genus,
              "shake_genus_P": genus + 1}
    notes = {}
    if n <= profile.tb_max - 1:
        values["shake_genus_Q"] = genus
    else:
        notes["shake_genus_Q"] = (f"omitted: needs n <= tb_max - 1 = "
                                  f"{profile.tb_max - 1}, got n = {n}")
    return {"companion": profile.name, "n": n, "m": str(Fraction(m)),
            "provenance": "formula",
            "hypotheses": [f"2 g4 = ad + 2 = {2 * genus}",
                           f"n = {n} <= tb_max = {profile.tb_max}"],
            "values": values, "notes": notes}


def invariant_report(diagram, cross_check=True):
    """Classical invariants of a knot diagram as a JSON-ready dict;
    with cross_check every value is confirmed by its second route."""
    if cross_check:
        delta = alexander_dual_route(diagram)
    else:
        delta = alexander_fox(diagram)
    return {"alexander": str(delta),
            "determinant": determinant(diagram),
            "signature": signature(diagram, cross_check=cross_check)}
