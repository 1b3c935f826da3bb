"""Enumeration of every minimum-weight Roman function."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from romdom import (
    CapacityError,
    complete,
    cycle,
    enumerate_optimal_rdfs,
    from_edges,
    path,
    roman_domination_number,
    star,
    validate_rdf,
)

from bruteforce import brute_optimal_rdfs


@st.composite
def small_graphs(draw, max_n: int = 6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    picked = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edges(n, picked)


@given(small_graphs())
@settings(max_examples=120, deadline=None)
def test_enumeration_matches_oracle(g):
    got = sorted(f.labels for f in enumerate_optimal_rdfs(g))
    assert got == brute_optimal_rdfs(g.n, list(g.edges()))


@given(small_graphs())
@settings(max_examples=120, deadline=None)
def test_all_enumerated_functions_are_optimal_and_valid(g):
    target = roman_domination_number(g).value
    optima = enumerate_optimal_rdfs(g)
    assert optima
    for f in optima:
        assert f.weight == target
        assert validate_rdf(g, f)


def test_k2_has_three_optima():
    labels = sorted(f.labels for f in enumerate_optimal_rdfs(complete(2)))
    assert labels == [(0, 2), (1, 1), (2, 0)]


def test_p4_has_exactly_two():
    labels = sorted(f.labels for f in enumerate_optimal_rdfs(path(4)))
    assert labels == [(0, 2, 0, 1), (1, 0, 2, 0)]


def test_k1_single_optimum():
    assert [f.labels for f in enumerate_optimal_rdfs(complete(1))] == [(1,)]


def test_star_optima_put_two_on_the_hub():
    optima = enumerate_optimal_rdfs(star(4))
    assert [f.labels for f in optima] == [(2, 0, 0, 0, 0)]


def test_cycle5_mixed_two_set_sizes():
    sizes = {f.b2.bit_count() for f in enumerate_optimal_rdfs(cycle(5))}
    assert sizes == {1, 2}


def test_enumeration_guard():
    with pytest.raises(CapacityError):
        enumerate_optimal_rdfs(path(27))
    # explicit guard raise/lower
    assert enumerate_optimal_rdfs(path(5), guard=5)
    with pytest.raises(CapacityError):
        enumerate_optimal_rdfs(path(6), guard=5)
