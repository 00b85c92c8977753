import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from curvecolor.fractional import (CertificateError, FractionalClique, FractionalColoring,
                                   cg_fractional_clique, cg_total_fractional_clique,
                                   kg_fractional_coloring, kg_total_fractional_coloring,
                                   sigma4_fractional_check, sigma4_profile_values, total_sandwich,
                                   verify_fractional_clique, verify_fractional_coloring)
from curvecolor.graph import complete_graph, path_graph
from curvecolor.kneser import (build_cg, build_kg, build_total_cg, build_total_kg,
                               total_fractional_value)


def test_k2_singletons():
    fc = FractionalColoring(((frozenset({"1"}), Fraction(1)), (frozenset({"2"}), Fraction(1))))
    assert verify_fractional_coloring(complete_graph(2), fc) == 2


def test_petersen_stars():
    assert verify_fractional_coloring(build_kg(5, 2), kg_fractional_coloring(5, 2)) == Fraction(5, 2)


@pytest.mark.parametrize("n, value", [(2, 1), (5, Fraction(15, 2)), (6, 10)])
def test_total_kg_certificate_values(n, value):
    assert verify_fractional_coloring(build_total_kg(n), kg_total_fractional_coloring(n)) == value


@pytest.mark.parametrize("n, value", [(2, 1), (5, Fraction(15, 2)), (6, 10)])
def test_total_cg_certificate_values(n, value):
    assert verify_fractional_clique(build_total_cg(n), cg_total_fractional_clique(n)) == value


def test_k3_clique():
    w = FractionalClique({"1": Fraction(1), "2": Fraction(1), "3": Fraction(1)})
    assert verify_fractional_clique(complete_graph(3), w) == 3


def test_cg72_clique():
    assert verify_fractional_clique(build_cg(7, 2), cg_fractional_clique(7, 2)) == Fraction(7, 2)


@pytest.mark.parametrize("n", range(4, 13))
def test_total_sandwich(n):
    upper, lower = total_sandwich(n)
    assert upper == lower == total_fractional_value(n)


@pytest.mark.parametrize("n, k", [(n, k) for n in range(2, 11) for k in range(1, n // 2 + 1)])
def test_kneser_sandwich(n, k):
    upper = verify_fractional_coloring(build_kg(n, k), kg_fractional_coloring(n, k))
    lower = verify_fractional_clique(build_cg(n, k), cg_fractional_clique(n, k))
    assert upper == lower == Fraction(n, k)


def test_rejects_dependent_set():
    fc = FractionalColoring(((frozenset({"1", "2"}), Fraction(1)), (frozenset({"3"}), Fraction(1))))
    with pytest.raises(CertificateError) as info:
        verify_fractional_coloring(path_graph(3), fc)
    assert info.value.kind == "not-independent" and info.value.witness == ["1", "2"]


def test_rejects_uncovered_vertex():
    fc = FractionalColoring(((frozenset({"1", "3"}), Fraction(1)), (frozenset({"2"}), Fraction(1, 2))))
    with pytest.raises(CertificateError) as info:
        verify_fractional_coloring(path_graph(3), fc)
    assert info.value.kind == "uncovered" and info.value.witness == "2"


def test_rejects_heavy_independent_set():
    w = FractionalClique({"1": Fraction(1, 2), "3": Fraction(2, 3)})
    with pytest.raises(CertificateError) as info:
        verify_fractional_clique(path_graph(3), w)
    assert info.value.kind == "clique-violation" and info.value.witness == ["1", "3"]


def test_rejects_bad_weights_and_vertices():
    with pytest.raises(CertificateError, match="negative"):
        verify_fractional_clique(path_graph(3), FractionalClique({"1": Fraction(-1)}))
    with pytest.raises(CertificateError) as info:
        verify_fractional_clique(path_graph(3), FractionalClique({"9": Fraction(1)}))
    assert info.value.kind == "unknown-vertex"
    with pytest.raises(CertificateError, match="not positive"):
        verify_fractional_coloring(path_graph(3), FractionalColoring(((frozenset({"1"}), Fraction(0)),)))
    with pytest.raises(CertificateError):
        FractionalClique.from_json('{"weights": {"1": 0.5}}')


def test_total_certificate_is_not_enough_on_a_bigger_graph():
    # the n = 6 coloring does not cover KG(7)
    with pytest.raises(CertificateError):
        verify_fractional_coloring(build_total_kg(7), kg_total_fractional_coloring(6))


@given(st.dictionaries(st.sampled_from(["1", "2", "3"]),
                       st.fractions(min_value=0, max_value=2), min_size=1))
def test_clique_json_round_trip(weights):
    w = FractionalClique(weights)
    assert FractionalClique.from_json(w.to_json()) == w


def test_coloring_json_format():
    fc = kg_fractional_coloring(4, 2)
    data = json.loads(fc.to_json())
    assert data["sets"][0] == {"vertices": ["{1,2}", "{1,3}", "{1,4}"], "weight": "1/2"}
    assert FractionalColoring.from_json(fc.to_json()) == fc


def test_four_holed_sphere():
    assert sigma4_fractional_check() == Fraction(22, 3)
    values = sigma4_profile_values()
    assert values[4] == 1 and values[0] == 1
    assert all(v <= 1 for v in values)


def test_four_holed_rejects_heavier_weights():
    with pytest.raises(CertificateError):
        sigma4_fractional_check(weights=(Fraction(7, 9), Fraction(3, 9), Fraction(1, 9)))
