"""Symbolic powers and the ordinary-versus-symbolic comparison."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oriented_ideals import (
    Monomial,
    WeightedOrientedGraph,
    compare_powers,
    edge_ideal,
    irreducible_decomposition,
    oriented_line,
    q_sub_p,
    random_graph,
    symbolic_power,
    symbolic_power_oracle,
)


LINE5 = oriented_line(5, (1, 2, 1, 1, 1))


def gens(ideal):
    return set(ideal.generator_strings())


def test_q_sub_p_line2():
    g = oriented_line(2, (1, 1))
    comps = irreducible_decomposition(g)
    assert gens(q_sub_p(comps, frozenset({"x1"}))) == {"x1"}
    assert gens(q_sub_p(comps, frozenset({"x2"}))) == {"x2"}
    with pytest.raises(ValueError):
        q_sub_p(comps, frozenset({"x1", "x2"}))


def test_q_sub_p_collects_nested_covers():
    # {x2, x3} contains the cover {x2}, so both components intersect
    comps = irreducible_decomposition(oriented_line(3, (1, 2, 2)))
    q = q_sub_p(comps, frozenset({"x2", "x3"}))
    assert gens(q) == {"x2", "x3^2"} or q == comps[0].ideal.intersect(comps[2].ideal)


def test_first_symbolic_power_is_edge_ideal():
    for g in (LINE5, oriented_line(3, (1, 2, 2))):
        assert symbolic_power(g, 1) == edge_ideal(g)


def test_unit_weight_line3_powers_agree():
    g = oriented_line(3, (1, 1, 1))
    expected = {"x1^2*x2^2", "x1*x2^2*x3", "x2^2*x3^2"}
    assert gens(edge_ideal(g) ** 2) == expected
    assert gens(symbolic_power(g, 2)) == expected


def test_symbolic_power_rejects_bad_exponent():
    with pytest.raises(ValueError):
        symbolic_power(LINE5, 0)
    with pytest.raises(ValueError):
        compare_powers(LINE5, 0)


def test_zero_ideal_conventions():
    g = WeightedOrientedGraph(("a", "b"), [])
    assert symbolic_power(g, 3).is_zero
    assert symbolic_power_oracle(g, 3).is_zero
    report = compare_powers(g, 2)
    assert report.all_equal


def test_line5_report_frozen():
    report = compare_powers(LINE5, 3)
    assert [c.equal for c in report.per_s] == [True, True, False]
    assert report.first_inequality == 3
    assert not report.all_equal
    last = report.per_s[-1]
    assert last.ordinary_generators == 20
    assert last.symbolic_generators == 19
    assert last.witness == Monomial({"x1": 1, "x2": 2, "x3": 2, "x4": 1})

    cube = edge_ideal(LINE5) ** 3
    assert symbolic_power(LINE5, 3).contains(last.witness)
    assert not cube.contains(last.witness)


def test_report_json_shape():
    report = compare_powers(LINE5, 3)
    data = report.to_json()
    assert data["s_max"] == 3
    assert data["all_equal"] is False
    assert data["first_inequality"] == 3
    assert data["per_s"][0] == {
        "s": 1,
        "equal": True,
        "witness": None,
        "ordinary_generators": 4,
        "symbolic_generators": 4,
    }
    assert data["per_s"][2]["witness"] == "x1*x2^2*x3^2*x4"
    assert data["graph"]["vertices"] == list(LINE5.vertices)


@st.composite
def small_graphs(draw, n_max=5):
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_graph(random.Random(seed), n_max=n_max)


@given(small_graphs(), st.integers(min_value=1, max_value=3))
@settings(max_examples=30, deadline=None)
def test_symbolic_matches_saturation_oracle(g, s):
    assert symbolic_power(g, s) == symbolic_power_oracle(g, s)


@given(small_graphs(), st.integers(min_value=1, max_value=3))
@settings(max_examples=30, deadline=None)
def test_maximal_prime_restriction_is_lossless(g, s):
    assert symbolic_power(g, s) == symbolic_power(g, s, all_primes=True)


@given(small_graphs())
@settings(max_examples=30, deadline=None)
def test_containment_chain(g):
    ideal = edge_ideal(g)
    prev = None
    for s in (1, 2, 3):
        sym = symbolic_power(g, s)
        assert ideal**s <= sym
        if prev is not None:
            assert sym <= prev
        prev = sym


def test_compare_powers_matches_direct_computation():
    rng = random.Random(77)
    for _ in range(10):
        g = random_graph(rng, n_max=5)
        report = compare_powers(g, 3)
        for row in report.per_s:
            assert row.equal == (edge_ideal(g) ** row.s == symbolic_power(g, row.s))
