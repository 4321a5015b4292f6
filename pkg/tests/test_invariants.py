"""Tests for the invariant reports and slice-genus certificates."""

import random

import pytest

from knotcert.alexander import alexander_polynomial
from knotcert.diagram import DiagramError, braid_closure
from knotcert.front import stabilize, stats
from knotcert.invariants import (BandWitness, CrossingChangeWitness,
                                 GenusBounds, HypothesisError,
                                 alexander_dual_route, alexander_fox,
                                 determinant, genus_bounds, invariant_report,
                                 nonconcordance_verdict, report_tau_s_shake,
                                 signature, torus_profile)
from knotcert.satellite import (concordance_witness_Q, legendrian_satellite_P,
                                legendrian_satellite_Q, pattern_P, pattern_Q,
                                satellite)

TREFOIL = braid_closure([1, 1, 1], 2)
FIGURE_EIGHT = braid_closure([1, -2, 1, -2], 3)
TORUS_FAMILY = [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)]


def random_knot(rng):
    """A random braid closure, redrawn until it is a knot."""
    while True:
        strands = rng.randint(2, 3)
        word = [rng.choice([1, -1]) * rng.randint(1, strands - 1)
                for _ in range(rng.randint(3, 9))]
        diagram = braid_closure(word, strands)
        if diagram.n_components == 1:
            return diagram


def test_torus_profiles_certify_the_family():
    for p, q in TORUS_FAMILY:
        profile = torus_profile(p, q)
        st = stats(profile.front)
        assert st.tb == p * q - p - q
        assert st.rot == 0
        assert profile.genus == (p - 1) * (q - 1) // 2
        assert profile.ad_max == 2 * profile.genus - 2
        assert profile.sharp


def test_torus_profile_rejects_bad_parameters():
    with pytest.raises(DiagramError):
        torus_profile(2, 4)
    with pytest.raises(DiagramError):
        torus_profile(1, 5)


def test_dual_route_alexander_on_random_knots():
    rng = random.Random(11)
    for _ in range(12):
        diagram = random_knot(rng)
        delta = alexander_dual_route(diagram)
        assert delta == alexander_fox(diagram)
        assert delta(1) in (1, -1)
        assert delta == delta.mirror()
        assert determinant(diagram) % 2 == 1


def test_signature_routes_agree_on_random_knots():
    rng = random.Random(13)
    for _ in range(12):
        diagram = random_knot(rng)
        value = signature(diagram)
        assert value % 2 == 0


def test_signature_sees_mirrors():
    left = braid_closure([-1, -1, -1], 2)
    assert signature(TREFOIL) == -2
    assert signature(left) == 2


def test_genus_bounds_on_the_unknot():
    unknot = braid_closure([], 1)
    bounds = genus_bounds(unknot)
    assert (bounds.lower, bounds.upper) == (0, 0)
    assert bounds.status == "tight"


def test_genus_bounds_ordering_on_random_knots():
    rng = random.Random(17)
    for _ in range(8):
        diagram = random_knot(rng)
        bounds = genus_bounds(diagram)
        assert 0 <= bounds.lower <= bounds.upper
        assert bounds.as_json()["witnesses"]["lower"]["route"] in (
            "signature", "slice-bennequin")


def test_genus_bounds_examples_are_tight():
    profile = torus_profile(2, 3)
    assert (lambda b: (b.lower, b.upper))(
        genus_bounds(profile.diagram, profile.front)) == (1, 1)

    companion_front, _ = stabilize(profile.front, (2, 1), 1)
    p_sat = satellite(pattern_P(0, 0), profile.diagram, 0)
    p_front = legendrian_satellite_P(companion_front, 0, 0)
    p_bounds = genus_bounds(
        p_sat, p_front,
        CrossingChangeWitness(pattern_P(0, 0), profile.diagram, profile.genus))
    assert (p_bounds.lower, p_bounds.upper) == (2, 2)
    assert p_bounds.lower_witness["route"] == "slice-bennequin"
    assert p_bounds.upper_witness["route"] == "crossing-change"

    q_sat = satellite(pattern_Q(0, 0), profile.diagram, 0)
    q_front = legendrian_satellite_Q(companion_front, 0, 0)
    q_bounds = genus_bounds(
        q_sat, q_front,
        BandWitness(concordance_witness_Q(0, 0), profile.diagram,
                    profile.genus))
    assert (q_bounds.lower, q_bounds.upper) == (1, 1)
    assert q_bounds.lower_witness["route"] == "signature"
    assert q_bounds.upper_witness["route"] == "band"

    assert nonconcordance_verdict(p_bounds, q_bounds) == "NOT_CONCORDANT"


def test_front_certificates_have_teeth():
    profile = torus_profile(2, 3)
    wrong_knot = torus_profile(2, 5)
    with pytest.raises(DiagramError):
        genus_bounds(profile.diagram, wrong_knot.front)
    # A mirror front shares the Alexander polynomial; the signature
    # check is what refuses it.
    mirror = braid_closure([-1, -1, -1], 2)
    with pytest.raises(DiagramError):
        genus_bounds(mirror, profile.front)


def test_upper_witness_certificates_have_teeth():
    q_sat = satellite(pattern_Q(0, 0), TREFOIL, 0)
    witness = BandWitness(concordance_witness_Q(0, 0), FIGURE_EIGHT, 1)
    with pytest.raises(DiagramError):
        genus_bounds(q_sat, (), witness)
    p_sat = satellite(pattern_P(0, 0), TREFOIL, 0)
    with pytest.raises(DiagramError):
        genus_bounds(p_sat, (),
                     CrossingChangeWitness(pattern_P(0, 0), FIGURE_EIGHT, 1))


def test_bounds_reject_inverted_intervals():
    with pytest.raises(DiagramError):
        GenusBounds(2, 1, {}, {})


def test_verdict_is_sound_on_interval_geometry():
    def box(lo, hi):
        return GenusBounds(lo, hi, {}, {})

    assert nonconcordance_verdict(box(0, 1), box(2, 3)) == "NOT_CONCORDANT"
    assert nonconcordance_verdict(box(2, 3), box(0, 1)) == "NOT_CONCORDANT"
    assert nonconcordance_verdict(box(1, 2), box(2, 3)) == "INCONCLUSIVE"
    assert nonconcordance_verdict(box(0, 4), box(1, 2)) == "INCONCLUSIVE"


def test_reporter_values_for_the_trefoil():
    profile = torus_profile(2, 3)
    report = report_tau_s_shake(profile, 0, 0)
    assert report["values"] == {"tau_P": 2, "s_P": 4, "tau_Q": 1, "s_Q": 2,
                                "shake_genus_P": 2, "shake_genus_Q": 1}
    assert report["provenance"] == "formula"
    assert report["notes"] == {}
    half = report_tau_s_shake(profile, 0, "1/2")
    assert half["values"] == report["values"]
    assert half["m"] == "1/2"


def test_reporter_gates_refuse_outside_hypotheses():
    profile = torus_profile(2, 3)
    with pytest.raises(HypothesisError, match="tb_max"):
        report_tau_s_shake(profile, 2, 0)
    with pytest.raises(HypothesisError, match="nonnegative"):
        report_tau_s_shake(profile, 0, -1)
    report = report_tau_s_shake(profile, 1, 0)
    assert "shake_genus_Q" not in report["values"]
    assert "shake_genus_Q" in report["notes"]
    dull = type(profile)("dull", profile.diagram, profile.front,
                         profile.genus + 1, profile.tb_max, profile.ad_max)
    with pytest.raises(HypothesisError, match="2 g4"):
        report_tau_s_shake(dull, 0, 0)


def test_invariant_report_shape():
    report = invariant_report(TREFOIL)
    assert set(report) == {"alexander", "determinant", "signature"}
    assert report["determinant"] == 3
    assert report["signature"] == -2
    assert isinstance(report["alexander"], str)


def test_fox_facade_rejects_links():
    hopf = braid_closure([1, 1], 2)
    with pytest.raises(DiagramError):
        alexander_fox(hopf)
    with pytest.raises(DiagramError):
        genus_bounds(hopf)
