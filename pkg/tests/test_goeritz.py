"""Tests for the checkerboard signature route.

Oracles are torus-knot signatures sigma(T(2,2k+1)) = -2k and
sigma(T(3,4)) = -6, sigma(T(3,5)) = -8, plus additivity under
connected sum.  The route is also cross-checked against the
closed-braid Seifert route on random scrambled diagrams.
"""

import random

import pytest

from knotcert.alexander import knot_determinant
from knotcert.diagram import DiagramError, LinkDiagram, braid_closure
from knotcert.goeritz import (
    checkerboard_coloring,
    goeritz_determinant,
    goeritz_matrix,
    goeritz_signature,
)
from knotcert.intmat import sym_signature
from knotcert.moves import random_move
from knotcert.seifert import seifert_signature

from test_diagram import FIGURE_EIGHT, RIGHT_TREFOIL


def test_coloring_alternates_across_edges():
    d = LinkDiagram(*FIGURE_EIGHT)
    color = checkerboard_coloring(d)
    corner_face = {c: fi for fi, cs in enumerate(d.faces()) for c in cs}
    for k in range(d.n_crossings):
        cs = [color[corner_face[(k, q)]] for q in range(4)]
        assert cs[0] == cs[2] and cs[1] == cs[3] and cs[0] != cs[1]


def test_signature_oracles():
    assert goeritz_signature(LinkDiagram([], [[1]])) == 0
    assert goeritz_signature(LinkDiagram(*RIGHT_TREFOIL)) == -2
    assert goeritz_signature(LinkDiagram(*RIGHT_TREFOIL).mirror()) == 2
    assert goeritz_signature(LinkDiagram(*FIGURE_EIGHT)) == 0
    assert goeritz_signature(braid_closure([1] * 5, 2)) == -4
    assert goeritz_signature(braid_closure([1] * 7, 2)) == -6
    assert goeritz_signature(braid_closure([1, 2] * 4, 3)) == -6
    assert goeritz_signature(braid_closure([1, 2] * 5, 3)) == -8
    assert goeritz_signature(braid_closure([1, 1, 1, 2, 2, 2], 3)) == -4
    assert goeritz_signature(braid_closure([1, 1, 1, -2, -2, -2], 3)) == 0


def test_determinant_matches_alexander_route():
    for d in (LinkDiagram(*RIGHT_TREFOIL), LinkDiagram(*FIGURE_EIGHT),
              braid_closure([1] * 5, 2), braid_closure([1, 2] * 4, 3)):
        assert goeritz_determinant(d) == knot_determinant(d)


def test_color_classes_agree():
    d = braid_closure([1, -2, 1, -2], 3)
    color = checkerboard_coloring(d)
    sigs = []
    for mc in (0, 1):
        G, mu = goeritz_matrix(d, mc, color)
        sigs.append(sym_signature(G) - mu)
    assert sigs[0] == sigs[1] == 0


def test_agrees_with_seifert_route_on_random_diagrams():
    rng = random.Random(17)
    found = 0
    while found < 25:
        strands = rng.choice([2, 3, 4])
        gens = [i for i in range(-strands + 1, strands) if i != 0]
        word = [rng.choice(gens) for _ in range(rng.randrange(3, 11))]
        d = braid_closure(word, strands)
        if d.n_components != 1 or d.n_crossings == 0:
            continue
        found += 1
        for _ in range(rng.randrange(0, 12)):
            d, _ = random_move(d, rng, max_crossings=16)
        assert goeritz_signature(d) == seifert_signature(d)
        assert goeritz_determinant(d) == knot_determinant(d)


def test_rejects_links():
    hopf = braid_closure([1, 1], 2)
    with pytest.raises(DiagramError):
        goeritz_signature(hopf)
