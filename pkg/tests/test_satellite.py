"""Tests for the satellite engine and the built-in pattern pair.

Oracle values: cable linking numbers are checked against the framing
they realize; core satellites must preserve Alexander polynomial,
signature and determinant computed by the independent routes; the
winding-one Alexander factorization is cross-checked on random braid
companions.  The built-in patterns are exercised through their four
transcription self-checks over a grid of twist parameters, including
half-integer m, plus frozen values for the trefoil satellites used in
the acceptance run.
"""

import random
from fractions import Fraction

import pytest

from knotcert.alexander import (
    alexander_polynomial,
    component_alexander_polynomials,
    knot_determinant,
)
from knotcert.diagram import DiagramError, LinkDiagram, braid_closure
from knotcert.front import (
    FrontError,
    front_to_pd,
    max_tb_torus_front,
    stabilize,
    stats,
)
from knotcert.goeritz import goeritz_signature
from knotcert.laurent import LaurentPoly
from knotcert.satellite import (
    CORE,
    BandPresentation,
    Pattern,
    TranscriptionError,
    braid_morse,
    cable,
    concordance_witness_Q,
    crossing_switch_certificate,
    full_twist_events,
    half_twist_count,
    legendrian_satellite_P,
    legendrian_satellite_Q,
    pattern_P,
    pattern_Q,
    pattern_closure,
    pattern_winding_certificate,
    resolve_morse,
    satellite,
    switched_pattern,
    verify_pattern_transcription,
    winding_number,
)
from knotcert.seifert import seifert_signature

TREFOIL = braid_closure([1, 1, 1], 2)
FIGURE_EIGHT = braid_closure([1, -2, 1, -2], 3)
UNKNOT = braid_closure([], 1)
ONE = alexander_polynomial(UNKNOT)


def random_companion(rng, letters=6, strands=3):
    word = [rng.choice([1, -1]) * rng.randrange(1, strands)
            for _ in range(letters)]
    d = braid_closure(word, strands)
    if d.n_components != 1:
        return None
    return d


def test_resolve_morse_matches_braid_closure():
    for word, strands in [([1, 1, 1], 2), ([1, -2, 1, -2], 3),
                          ([1, 2, 1, 2], 3)]:
        via_morse = resolve_morse(braid_morse(word, strands))
        via_pd = braid_closure(word, strands)
        assert via_morse.n_components == via_pd.n_components
        assert alexander_polynomial(via_morse) == alexander_polynomial(via_pd)
        assert knot_determinant(via_morse) == knot_determinant(via_pd)


def test_cable_linking_realizes_framing():
    for companion, n in [(UNKNOT, 0), (TREFOIL, 0), (TREFOIL, 6),
                         (FIGURE_EIGHT, -2)]:
        two = cable(companion, k=2, n=n)
        assert two.n_components == 2
        assert two.linking_number(0, 1) == n


def test_core_satellite_preserves_invariants():
    for companion in (TREFOIL, FIGURE_EIGHT):
        for n in (0, 2):
            result = satellite(CORE, companion, n)
            assert alexander_polynomial(result) == \
                alexander_polynomial(companion)
            assert knot_determinant(result) == knot_determinant(companion)
            assert seifert_signature(result) == seifert_signature(companion)


def test_satellite_rejects_link_companions():
    hopf = braid_closure([1, 1], 2)
    with pytest.raises(DiagramError):
        satellite(CORE, hopf, 0)


def test_alexander_factorization_on_random_companions():
    rng = random.Random(11)
    pattern = pattern_P(1, 0)
    done = 0
    while done < 8:
        companion = random_companion(rng)
        if companion is None:
            continue
        # satellite(check=True) asserts the winding-one factorization
        satellite(pattern, companion, 0)
        done += 1


def test_half_twist_count_validation():
    assert half_twist_count(2) == 4
    assert half_twist_count("1/2") == 1
    assert half_twist_count(0.5) == 1
    assert half_twist_count(Fraction(3, 2)) == 3
    assert half_twist_count(-1) == -2
    with pytest.raises(DiagramError):
        half_twist_count(0.3)
    with pytest.raises(DiagramError):
        half_twist_count("wibble")


def test_builtin_windings():
    assert winding_number(pattern_P(0, 0)) == 1
    assert pattern_winding_certificate(pattern_P(0, 0)) == 1
    for n, m in [(0, 0), (1, 0), (0, 1)]:
        q = pattern_Q(n, m)
        assert winding_number(q) == 1
        assert pattern_winding_certificate(q) == 1


def test_pattern_closures_have_trivial_alexander_at_zero_twists():
    for m in (0, "1/2", 1):
        for pat in (pattern_P(0, m), pattern_Q(0, m)):
            closure = pattern_closure(pat)
            assert closure.n_components == 1
            assert alexander_polynomial(closure) == ONE


def test_q_closure_stays_trivial_under_twisting():
    for n in (-1, 1, 2):
        closure = pattern_closure(pattern_Q(n, 0))
        assert closure.n_components == 1
        assert alexander_polynomial(closure) == ONE


def test_p_closure_is_reported_not_assumed():
    # with bundle twists the closure of P is a genuine twist knot
    closure = pattern_closure(pattern_P(1, 0))
    assert closure.n_components == 1
    assert alexander_polynomial(closure) != ONE


def test_negative_m_is_constructible():
    pat = pattern_P(0, -1)
    closure = pattern_closure(pat)
    assert closure.n_components == 1
    pat = pattern_Q(0, "-1/2")
    assert pattern_closure(pat).n_components == 1


def test_switch_turns_p_into_core():
    for n in (-1, 0, 1):
        for m in (0, "1/2", 1):
            assert crossing_switch_certificate(pattern_P(n, m))


def test_switch_certificate_has_teeth():
    # a crossing that merely makes the closure unknot-like is not the
    # core: under bundle twists its satellites drift from the companion
    box = full_twist_events(3, 1) + list(pattern_P(0, 0).box)
    fake = Pattern("fake", 3, (1, 1, -1), box, switch_site=6)
    with pytest.raises(TranscriptionError):
        crossing_switch_certificate(fake)


def test_band_witness_at_pattern_and_satellite_level():
    for n, m in [(0, 0), (1, 0), (0, "1/2"), (-1, 1)]:
        witness = concordance_witness_Q(n, m)
        link = witness.cut_satellite(TREFOIL, 0)
        assert link.n_components == 2
        parts = sorted(str(p) for p in component_alexander_polynomials(link))
        assert parts == sorted(
            [str(ONE), str(alexander_polynomial(TREFOIL))])


def test_band_presentation_requires_band_site():
    with pytest.raises(DiagramError):
        BandPresentation(pattern_P(0, 0))


def test_q_satellite_preserves_companion_alexander():
    for n, m in [(0, 0), (1, 0), (0, 1)]:
        result = satellite(pattern_Q(n, m), TREFOIL, 0)
        assert alexander_polynomial(result) == alexander_polynomial(TREFOIL)
        assert knot_determinant(result) == knot_determinant(TREFOIL)


def test_p_satellite_of_trefoil_frozen_values():
    # untwisted: closure is unknot-like, so the companion Alexander
    # polynomial survives unchanged
    p00 = satellite(pattern_P(0, 0), TREFOIL, 0)
    assert alexander_polynomial(p00) == alexander_polynomial(TREFOIL)
    # one bundle twist: frozen Fox-calculus value
    p10 = satellite(pattern_P(1, 0), TREFOIL, 0)
    frozen = LaurentPoly({-3: -1, -2: 3, -1: -4, 0: 5, 1: -4, 2: 3, 3: -1})
    assert alexander_polynomial(p10) == frozen
    assert knot_determinant(p10) == 21


def test_twists_in_box_match_framing_parameter():
    for n in (-1, 1, 2):
        for m in (0, 1):
            in_box = satellite(pattern_P(n, m), TREFOIL, 0, check=False)
            by_framing = satellite(pattern_P(0, m), TREFOIL, n, check=False)
            assert alexander_polynomial(in_box) == \
                alexander_polynomial(by_framing)
            assert knot_determinant(in_box) == knot_determinant(by_framing)


def test_legendrian_satellite_increments():
    front = max_tb_torus_front(2, 3)
    for n in (1, 0, -1):
        st = stats(front)
        assert st.tb == n
        for m in (0, "1/2", 1):
            plus = legendrian_satellite_P(front, n, m)
            minus = legendrian_satellite_Q(front, n, m)
            assert stats(plus).tb == n + 2
            assert abs(stats(plus).rot) == abs(st.rot)
            assert stats(minus).tb == n - 2
            assert abs(stats(minus).rot) == abs(st.rot)
        front, _ = stabilize(front, (2, 1), 1 if n > 0 else -1)


def test_legendrian_satellite_requires_matching_tb():
    front = max_tb_torus_front(2, 3)
    with pytest.raises(FrontError):
        legendrian_satellite_P(front, 0, 0)
    with pytest.raises(DiagramError):
        legendrian_satellite_P(front, 1, -1)


def test_front_and_smooth_routes_agree():
    front = max_tb_torus_front(2, 3)
    for m in (0, "1/2"):
        smooth_p = satellite(pattern_P(1, m), TREFOIL, 0, check=False)
        front_p = front_to_pd(legendrian_satellite_P(front, 1, m))
        assert alexander_polynomial(front_p) == alexander_polynomial(smooth_p)
        assert knot_determinant(front_p) == knot_determinant(smooth_p)
        smooth_q = satellite(pattern_Q(1, m), TREFOIL, 0, check=False)
        front_q = front_to_pd(legendrian_satellite_Q(front, 1, m))
        assert alexander_polynomial(front_q) == alexander_polynomial(smooth_q)
        assert knot_determinant(front_q) == knot_determinant(smooth_q)


def test_transcription_grid():
    for n in (-1, 0, 1):
        for m in (0, "1/2", 1):
            checks = verify_pattern_transcription(n, m)
            assert all(checks.values())
            assert set(checks) == {"winding", "crossing_switch", "band",
                                   "front_increments"}


def test_switched_pattern_bookkeeping():
    pat = pattern_P(0, 0)
    sw = switched_pattern(pat)
    assert sw.box[pat.switch_site][0] == "xo"
    assert switched_pattern(sw).box == pat.box
    with pytest.raises(DiagramError):
        switched_pattern(pattern_Q(0, 0))
