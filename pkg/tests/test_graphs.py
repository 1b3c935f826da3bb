"""Graph container, products, and structural predicates."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from romdom import (
    CARTESIAN,
    STRONG,
    CapacityError,
    Graph,
    ParameterError,
    bits,
    complete,
    components,
    cycle,
    from_edges,
    is_connected,
    is_cycle_graph,
    is_path_graph,
    mask_of,
    path,
    product,
    square,
    star,
)


def test_from_edges_basic():
    g = from_edges(3, [(0, 1), (1, 2)])
    assert g.n == 3
    assert g.degree(1) == 2
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.edge_count() == 2
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_adjacency_must_be_symmetric():
    with pytest.raises(ParameterError):
        Graph(2, (0b10, 0b00))


def test_loops_rejected():
    with pytest.raises(ParameterError):
        Graph(1, (0b1,))


def test_vertex_out_of_range():
    with pytest.raises(ParameterError):
        from_edges(2, [(0, 2)])


def test_empty_graph_rejected():
    with pytest.raises(ParameterError):
        Graph(0, ())


def test_capacity_guard(monkeypatch):
    monkeypatch.setenv("ROMDOM_MAX_WIDTH", "10")
    with pytest.raises(CapacityError):
        from_edges(11, [])
    monkeypatch.setenv("ROMDOM_MAX_WIDTH", "not-a-number")
    with pytest.raises(ParameterError):
        from_edges(2, [])


def test_bits_and_mask_roundtrip():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert mask_of([1, 2, 4]) == 0b10110
    assert mask_of([]) == 0


def test_closed_neighborhood():
    g = path(3)
    assert g.closed(1) == 0b111
    assert g.closed(0) == 0b011


def test_cartesian_product_is_the_grid():
    grid = product(path(2), path(3), CARTESIAN)
    assert grid.n == 6
    # rows {0,1,2} and {3,4,5}; rungs between them
    expected = {(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)}
    assert set(grid.edges()) == expected


def test_strong_product_adds_diagonals():
    k = product(path(2), path(2), STRONG)
    assert k.n == 4
    assert k.edge_count() == 6  # K4


@given(
    st.integers(min_value=1, max_value=5),
    st.integers(min_value=1, max_value=5),
    st.randoms(use_true_random=False),
)
@settings(max_examples=60, deadline=None)
def test_product_edge_counts(n1, n2, rng):
    e1 = [(i, j) for j in range(1, n1) for i in range(j) if rng.random() < 0.5]
    e2 = [(i, j) for j in range(1, n2) for i in range(j) if rng.random() < 0.5]
    g = from_edges(n1, e1)
    h = from_edges(n2, e2)
    cart = product(g, h, CARTESIAN)
    strg = product(g, h, STRONG)
    assert cart.edge_count() == n1 * len(e2) + n2 * len(e1)
    assert strg.edge_count() == cart.edge_count() + 2 * len(e1) * len(e2)


def test_product_vertex_numbering_is_row_major():
    g = product(path(3), path(4), CARTESIAN)
    # (i, j) -> 4i + j: vertex (1, 2) = 6 neighbors (0,2)=2, (2,2)=10, (1,1)=5, (1,3)=7
    assert sorted(bits(g.adj[6])) == [2, 5, 7, 10]


def test_product_kind_validated():
    with pytest.raises(ParameterError):
        product(path(2), path(2), "tensor")


def test_square_of_path():
    sq = square(path(4))
    assert set(sq.edges()) == {(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)}


def test_components_ordering():
    g = from_edges(5, [(1, 3), (2, 4)])
    comps = components(g)
    assert comps == [0b00001, 0b01010, 0b10100]


def test_connectivity_predicates():
    assert is_connected(path(5))
    assert not is_connected(from_edges(3, [(0, 1)]))
    assert is_path_graph(path(6))
    assert is_path_graph(path(1))
    assert not is_path_graph(cycle(4))
    assert not is_path_graph(star(3))
    assert is_cycle_graph(cycle(3))
    assert not is_cycle_graph(path(3))
    assert not is_cycle_graph(complete(4))


def test_label_does_not_affect_equality():
    assert from_edges(2, [(0, 1)], "a") == from_edges(2, [(0, 1)], "b")


def test_name_falls_back_to_graph6():
    assert from_edges(1, []).name() == "@"
    assert path(4).name() == "P4"
