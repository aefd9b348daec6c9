"""Generators, corona layout, and structural invariants."""

import pytest
from hypothesis import given, strategies as st

from coronamagic import (
    CoronaSpec,
    Family,
    Graph,
    InvalidSpecError,
    corona,
    make_base,
    to_dot,
)

FAMILY_MIN = {Family.PATH: 2, Family.CYCLE: 3, Family.COMPLETE: 2}


@st.composite
def specs(draw, max_n: int = 8, max_m: int = 4):
    family = draw(st.sampled_from(list(Family)))
    n = draw(st.integers(FAMILY_MIN[family], max_n))
    m = draw(st.integers(1, max_m))
    return CoronaSpec(family, n, m)


def test_make_base_smallest_instances():
    path = make_base(Family.PATH, 2)
    assert (path.vertex_count, path.edge_count) == (2, 1)
    triangle = make_base(Family.CYCLE, 3)
    assert (triangle.vertex_count, triangle.edge_count) == (3, 3)
    k4 = make_base(Family.COMPLETE, 4)
    assert (k4.vertex_count, k4.edge_count) == (4, 6)


def test_make_base_edge_orders():
    assert make_base(Family.PATH, 4).edges == ((0, 1), (1, 2), (2, 3))
    assert make_base(Family.CYCLE, 4).edges == ((0, 1), (1, 2), (2, 3), (0, 3))
    assert make_base(Family.COMPLETE, 3).edges == ((0, 1), (0, 2), (1, 2))


def test_make_base_rejects_below_minimum():
    with pytest.raises(InvalidSpecError):
        make_base(Family.PATH, 1)
    with pytest.raises(InvalidSpecError):
        make_base(Family.CYCLE, 2)
    with pytest.raises(InvalidSpecError):
        CoronaSpec(Family.COMPLETE, 1, 1)
    with pytest.raises(InvalidSpecError):
        CoronaSpec(Family.PATH, 3, 0)


def test_corona_sizes_from_contract():
    cg = corona(CoronaSpec(Family.CYCLE, 8, 2))
    assert (cg.graph.vertex_count, cg.graph.edge_count) == (24, 24)
    cg = corona(CoronaSpec(Family.PATH, 2, 1))
    assert (cg.graph.vertex_count, cg.graph.edge_count) == (4, 3)
    # P2 with one leaf each is the 4-vertex path.
    degrees = sorted(cg.graph.degree(v) for v in range(4))
    assert degrees == [1, 1, 2, 2]
    cg = corona(CoronaSpec(Family.COMPLETE, 3, 2))
    assert (cg.graph.vertex_count, cg.graph.edge_count) == (9, 9)


def test_corona_layout_is_deterministic():
    cg = corona(CoronaSpec(Family.PATH, 3, 2))
    assert cg.spine == (0, 1, 2)
    assert cg.leaves == ((3, 4), (5, 6), (7, 8))
    assert cg.leaf_vertex(1, 0) == 5
    # Base edges first, then pendants grouped by owner.
    assert cg.graph.edges[: cg.base_edge_count] == ((0, 1), (1, 2))
    assert cg.graph.edges[cg.pendant_edge_index(0, 0)] == (0, 3)
    assert cg.graph.edges[cg.pendant_edge_index(2, 1)] == (2, 8)
    assert cg.pendant_edges[8] == cg.pendant_edge_index(2, 1)


@given(specs())
def test_corona_structure_invariants(spec):
    cg = corona(spec)
    g = cg.graph
    assert g.vertex_count == spec.n * (1 + spec.m)
    assert g.edge_count == spec.base_edge_count + spec.m * spec.n
    base = make_base(spec.family, spec.n)
    for i in range(spec.n):
        assert g.degree(i) == base.degree(i) + spec.m
    for leaves in cg.leaves:
        for leaf in leaves:
            assert g.degree(leaf) == 1
            (edge_idx,) = g.adjacency[leaf]
            u, v = g.edges[edge_idx]
            owner = u if v == leaf else v
            assert owner == cg.spine[cg.leaves.index(leaves)]
    # No bare-K2 components arise in any supported corona.
    assert not g.k2_component_edges()
    assert not g.isolated_vertices()


@given(specs())
def test_spine_induces_the_base_graph(spec):
    cg = corona(spec)
    base = make_base(spec.family, spec.n)
    induced = tuple(
        e for e in cg.graph.edges if e[0] < spec.n and e[1] < spec.n
    )
    assert induced == base.edges


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 5)])


def test_graph_adjacency_consistency():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 3)])
    assert g.adjacency[1] == (0, 1)
    assert g.neighbors(1) == (0, 2)
    assert g.degree(3) == 1
    assert g.edge_index_map()[(0, 3)] == 2


def test_k2_component_detection():
    g = Graph.from_edges(5, [(0, 1), (2, 3)])
    # Both components are bare edges; vertex 4 is isolated.
    assert g.k2_component_edges() == (0, 1)
    assert g.isolated_vertices() == (4,)
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert path.k2_component_edges() == ()


def test_dot_export_names_and_labels():
    cg = corona(CoronaSpec(Family.CYCLE, 3, 1))
    plain = to_dot(cg)
    assert "s0;" in plain and "l2_0;" in plain
    assert "s0 -- s1;" in plain and "s0 -- l0_0;" in plain
    decorated = to_dot(cg, labels=[1, 5, 2, 3, 6, 4], weights=[6, 12, 11, 3, 6, 4])
    assert 's1 -- s2 [label="5"];' in decorated
    assert 's0 [label="s0\\nw=6"];' in decorated
    assert decorated == to_dot(cg, labels=[1, 5, 2, 3, 6, 4], weights=[6, 12, 11, 3, 6, 4])
