from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

import oracles
from curvecolor import solvers
from curvecolor.kneser import (CyclicLabel, PartitionVertex, TotalColor, build_cg, build_kg,
                               build_total_cg, build_total_kg, classical_coloring,
                               classical_kneser_coloring, cyclic_labels, harmonic,
                               parse_set_label, partition_vertices, set_label, total_color_count,
                               total_coloring, total_kg_coloring, total_palette)


@pytest.mark.parametrize("n, k, verts, edges", [(5, 2, 10, 15), (2, 1, 2, 1), (6, 3, 20, 10)])
def test_kg_counts(n, k, verts, edges):
    g = build_kg(n, k)
    assert (g.n, g.num_edges) == (verts, edges)


def test_kg63_is_a_perfect_matching():
    assert build_kg(6, 3).degrees.tolist() == [1] * 20


def test_kg_labels_are_set_notation():
    assert build_kg(4, 2).labels[:2] == ("{1,2}", "{1,3}")
    assert parse_set_label("{1,3,4}") == frozenset({1, 3, 4})


@pytest.mark.parametrize("n, k", [(3, 2), (1, 1), (4, 0)])
def test_kg_rejects_small_n(n, k):
    with pytest.raises(ValueError):
        build_kg(n, k)
    with pytest.raises(ValueError):
        build_cg(n, k)


def test_cg_examples():
    assert build_cg(5, 2).degrees.tolist() == [2] * 5
    assert oracles.girth(build_cg(5, 2)) == 5
    assert build_cg(4, 2).num_edges == 2
    c61 = build_cg(6, 1)
    assert c61.n == 6 and c61.num_edges == 15


@pytest.mark.parametrize("n", range(2, 11))
def test_cg_is_induced_subgraph_of_kg(n):
    for k in range(1, n // 2 + 1):
        kg, cg = build_kg(n, k), build_cg(n, k)
        idx = [kg.index(lab) for lab in cg.labels]
        assert kg.induced_subgraph(idx) == cg


@pytest.mark.parametrize("n, verts, edges", [(2, 1, 0), (3, 3, 3), (4, 7, 18)])
def test_total_kg_small(n, verts, edges):
    g = build_total_kg(n)
    assert (g.n, g.num_edges) == (verts, edges)


def test_total_kg3_is_a_triangle():
    # any two of the partitions {i} | rest are nested: {i} sits inside the other's big part
    g = build_total_kg(3)
    assert all(oracles.nested(3, {i}, {j}) for i, j in combinations(range(1, 4), 2))
    assert g.num_edges == 3


@pytest.mark.parametrize("n", range(2, 8))
def test_total_kg_matches_containment_definition(n):
    g = build_total_kg(n)
    assert g.n == 2 ** (n - 1) - 1
    parts = [parse_set_label(lab) for lab in g.labels]
    for u, v in combinations(range(g.n), 2):
        assert g.has_edge(u, v) == oracles.nested(n, parts[u], parts[v])


def test_total_cg_examples():
    g = build_total_cg(4)
    assert g.n == 6
    g5 = build_total_cg(5)
    assert not g5.has_edge(g5.index("(1,3)"), g5.index("(2,4)"))
    assert g5.has_edge(g5.index("(1,2)"), g5.index("(3,4)"))


@pytest.mark.parametrize("n", range(4, 13))
def test_total_cg_is_induced_subgraph_of_total_kg(n):
    kg, cg = build_total_kg(n), build_total_cg(n)
    idx = [kg.index(CyclicLabel(*map(int, lab.strip("()").split(","))).partition(n).label)
           for lab in cg.labels]
    assert len(set(idx)) == cg.n
    assert (kg.adj[idx][:, idx] == cg.adj).all()


@pytest.mark.parametrize("n", range(3, 10))
def test_cyclic_label_round_trip(n):
    for lab in cyclic_labels(n):
        assert CyclicLabel.of(lab.partition(n)) == lab


def test_linked_matches_oracle():
    labels = cyclic_labels(7)
    for a, b in combinations(labels, 2):
        assert a.linked(b) == oracles.linked((a.i, a.j), (b.i, b.j)) == b.linked(a)


@given(st.integers(2, 12).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n), min_size=1, max_size=n - 1))))
def test_partition_vertex_canonical(data):
    n, subset = data
    v = PartitionVertex.of(n, subset)
    assert v == PartitionVertex.of(n, set(range(1, n + 1)) - subset)
    assert 2 * len(v.part) <= n
    if 2 * len(v.part) == n:
        assert 1 in v.part
    assert v.part in (frozenset(subset), frozenset(range(1, n + 1)) - subset)


def test_partition_vertex_validation():
    with pytest.raises(ValueError):
        PartitionVertex(4, frozenset({2, 3}))  # middle layer without 1
    with pytest.raises(ValueError):
        PartitionVertex(5, frozenset({1, 2, 3}))
    with pytest.raises(ValueError):
        PartitionVertex(3, frozenset())


# -- colorings ------------------------------------------------------------

def test_total_coloring_examples():
    assert total_coloring(15, PartitionVertex.of(15, {9})) == TotalColor(0, 9)
    assert total_coloring(15, PartitionVertex.of(15, {3, 9})) == TotalColor(1, 3)
    assert total_coloring(15, PartitionVertex.of(15, {9, 12})) == TotalColor(1, 9)
    assert total_coloring(15, PartitionVertex.of(15, {2, 9, 14})) == TotalColor(1, 14)
    assert total_coloring(15, PartitionVertex.of(15, {5, 9, 11})) == TotalColor(1, 11)
    assert total_coloring(6, PartitionVertex.of(6, {1, 2, 3})) == TotalColor(1, 3)
    assert total_coloring(8, PartitionVertex.of(8, {1, 2, 3, 4})).middle
    assert str(total_coloring(8, PartitionVertex.of(8, {1, 5, 6, 7}))) == "mid"


@given(st.integers(3, 30).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n), min_size=1, max_size=n // 2))))
def test_total_color_fields(data):
    n, subset = data
    v = PartitionVertex.of(n, subset)
    c = total_coloring(n, v)
    if c.middle:
        assert 2 * len(v.part) == n and n & (n - 1) == 0
    else:
        assert c.a in v.part
        assert 2 ** c.k <= len(v.part) <= 2 ** (c.k + 1) - 1
        assert c in set(total_palette(n))


@pytest.mark.parametrize("n, count", [(2, 1), (3, 3), (4, 5), (5, 10), (6, 12), (8, 17),
                                      (12, 36), (14, 42), (16, 49)])
def test_total_color_count_formula(n, count):
    assert total_color_count(n) == count == len(total_palette(n))


@pytest.mark.parametrize("n", range(2, 12))
def test_total_coloring_proper(n):
    g = build_total_kg(n)
    c = total_kg_coloring(n, g)
    assert solvers.is_proper(g, c)
    assert c.palette_size <= total_color_count(n)


def test_used_colors_can_fall_short_of_palette():
    # for n = 5 no 2-subset has 5 as its second largest element
    g = build_total_kg(5)
    assert total_kg_coloring(5, g).palette_size == 9
    assert TotalColor(1, 5) in total_palette(5)


def test_classical_coloring_examples():
    assert classical_kneser_coloring(5, 2, {1, 4}) == 1
    # least element 3 exceeds n-2k+1 = 2, so the set takes the shared top color n-2k+2 = 3
    assert classical_kneser_coloring(5, 2, {3, 5}) == 3
    assert classical_kneser_coloring(5, 2, {2, 5}) == 2
    with pytest.raises(ValueError):
        classical_kneser_coloring(5, 2, {1, 2, 3})


@pytest.mark.parametrize("n, k", [(n, k) for n in range(2, 10) for k in range(1, n // 2 + 1)])
def test_classical_coloring_proper_and_tight(n, k):
    g = build_kg(n, k)
    c = classical_coloring(n, k, g)
    assert solvers.is_proper(g, c)
    assert c.palette_size == n - 2 * k + 2


@pytest.mark.parametrize("n, k", [(n, k) for n in range(2, 11) for k in range(1, n // 2 + 1)])
def test_chromatic_values(n, k):
    assert solvers.chromatic_number(build_cg(n, k))[0] == -(-n // k)
    try:
        chi, _ = solvers.chromatic_number(build_kg(n, k), budget=2 * 10**5)
    except solvers.BudgetExhausted:
        pytest.skip(f"KG({n},{k}) beyond the test budget")
    assert chi == n - 2 * k + 2


@pytest.mark.parametrize("n", range(2, 13))
def test_independent_sets_of_total_cg_are_small(n):
    g = build_total_cg(n)
    labels = cyclic_labels(n)
    for s in solvers.maximal_independent_sets(g):
        members = [labels[v] for v in s]
        assert all(a.linked(b) for a, b in combinations(members, 2))
        assert len(s) <= min(len(x.partition(n).part) for x in members)


def test_harmonic():
    assert harmonic(0) == 0
    assert harmonic(1) == 1
    assert harmonic(3) == Fraction(11, 6)
    assert harmonic(4) == Fraction(25, 12)
    with pytest.raises(ValueError):
        harmonic(-1)


def test_partition_vertices_order():
    verts = partition_vertices(4)
    assert [set_label(v.part) for v in verts] == ["{1}", "{2}", "{3}", "{4}", "{1,2}", "{1,3}", "{1,4}"]
