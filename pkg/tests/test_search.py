"""Exhaustive enumeration engine and the brute-force verification ops."""

from fractions import Fraction

import pytest

from cdt import (
    CapExceeded,
    best_up_to,
    bt_density,
    canonical_form,
    clique_count,
    clique_number,
    enumerate_all_up_to,
    enumerate_class,
    graph6_decode,
    lower_bound,
    max_degree,
    max_density,
    probe_configuration_average,
    probe_conjecture,
    turan_graph,
    verify_neighborhood_lemmas,
    verify_superadditivity,
    verify_zykov,
)

from helpers import brute_classes


KNOWN_UNCONSTRAINED = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def test_unconstrained_counts_match_catalog():
    for n, want in KNOWN_UNCONSTRAINED.items():
        assert enumerate_class(n, n, n + 1) == want


def test_all_four_vertex_graphs():
    assert enumerate_class(4, 3, 4) == 11


def test_degree_zero_leaves_only_the_edgeless_graph():
    assert enumerate_class(3, 0, 3) == 1


def test_constrained_counts_match_labeled_filter_oracle():
    # independent oracle: filter every labeled graph, dedup by
    # permutation brute force
    for n in range(1, 6):
        for dmax, omega in [(2, 3), (3, 2), (2, 2), (3, 3), (4, 2), (1, 4)]:
            want = len(
                brute_classes(
                    n,
                    lambda g: max_degree(g) <= dmax and clique_number(g) <= omega,
                )
            )
            assert enumerate_class(n, dmax, omega) == want, (n, dmax, omega)


def test_five_vertex_degree_two_class():
    want = len(
        brute_classes(5, lambda g: max_degree(g) <= 2 and clique_number(g) <= 3)
    )
    assert enumerate_class(5, 2, 3) == want


def test_enumeration_is_isomorph_free():
    forms = []
    enumerate_class(6, 3, 3, lambda g: forms.append(canonical_form(g)))
    assert len(forms) == len(set(forms))


def test_visited_graphs_satisfy_constraints():
    def check(g):
        assert max_degree(g) <= 3
        assert clique_number(g) <= 3

    enumerate_all_up_to(6, 3, 3, check)


def test_pruned_equals_catalog_filtered():
    # enumerate unconstrained once, filter by the class predicate, and
    # compare totals against the pruned enumeration
    by_level: dict[int, list] = {n: [] for n in range(1, 8)}
    enumerate_all_up_to(7, 7, 8, lambda g: by_level[g.n].append(g))
    for dmax in range(2, 7):
        for omega in range(2, 7):
            for n in range(1, 8):
                want = sum(
                    1
                    for g in by_level[n]
                    if max_degree(g) <= dmax and clique_number(g) <= omega
                )
                assert enumerate_class(n, dmax, omega) == want, (n, dmax, omega)


def test_cap_enforced():
    with pytest.raises(CapExceeded):
        enumerate_class(12, 3, 3)
    with pytest.raises(CapExceeded):
        best_up_to(12, 3, 3, 3)
    with pytest.raises(CapExceeded):
        enumerate_class(17, 3, 3, cap=17)  # hard cap wins


# -- maxima ---------------------------------------------------------------

def test_max_density_triangle_free_degree_two():
    d, wits = max_density(5, 2, 3, 3)
    assert d == Fraction(1, 5)  # a 5-cycle cannot hold a triangle; C3+2K1 can
    assert len(wits) >= 1


def test_max_density_above_clique_bound_is_zero():
    d, wits = max_density(5, 4, 2, 3)
    assert d == 0
    # every triangle-free class member is then a witness
    assert len(wits) == enumerate_class(5, 4, 2)


def test_max_density_matches_proven_value_small():
    # degree 4 = clique bound: optimum 7/5 with witness T(5,4)
    report = best_up_to(6, 4, 4, 3)
    assert report.best_density == Fraction(7, 5)
    assert report.best_n == 5
    assert report.meets_exact is True
    lv = report.level(5)
    assert lv.witnesses == (canonical_form(turan_graph(5, 4)).decode("ascii"),)


def test_best_up_to_tiny_class():
    report = best_up_to(3, 2, 3, 3)
    assert report.best_density == Fraction(1, 3)  # the triangle
    assert report.best_n == 3


def test_best_up_to_small_sizes_capped_by_lower_bound():
    # at up to dmax + a vertices nothing beats the lower bound graph
    for dmax, omega in [(3, 3), (4, 3), (5, 4)]:
        a = (dmax // (omega - 1))
        report = best_up_to(dmax + a, dmax, omega, 3)
        assert report.best_density == lower_bound(3, dmax, omega)
        assert report.meets_lower_bound is True


def test_report_levels_are_complete_and_sorted():
    report = best_up_to(6, 5, 3, 3)
    assert [lv.n for lv in report.levels] == list(range(1, 7))
    for lv in report.levels:
        assert lv.max_density == Fraction(lv.max_clique_count, lv.n)
        assert list(lv.witnesses) == sorted(lv.witnesses)
        for w in lv.witnesses:
            g = graph6_decode(w)
            assert clique_count(g, 3) == lv.max_clique_count


def test_results_identical_across_worker_counts():
    reports = [
        best_up_to(7, 5, 3, 3, thread_count=k) for k in (1, 2, 8)
    ]
    base = reports[0]
    for other in reports[1:]:
        assert [
            (lv.n, lv.graphs_enumerated, lv.max_clique_count, lv.witnesses)
            for lv in base.levels
        ] == [
            (lv.n, lv.graphs_enumerated, lv.max_clique_count, lv.witnesses)
            for lv in other.levels
        ]
        assert base.best_density == other.best_density


# -- theorem verification ----------------------------------------------------

def test_zykov_triangle_bound_six_vertices():
    assert verify_zykov(6, 3, 3)
    d, wits = max_density(6, 5, 3, 3)
    assert d * 6 == 8
    assert wits == [canonical_form(turan_graph(6, 3)).decode("ascii")]


def test_zykov_edges_seven_vertices():
    assert verify_zykov(7, 3, 2)
    assert turan_graph(7, 3).edge_count() == 16


def test_zykov_vacuous_above_clique_bound():
    assert verify_zykov(5, 2, 4)
    assert verify_zykov(4, 1, 2)


def test_zykov_sweep_small():
    for n in range(1, 7):
        for omega in range(1, 5):
            for t in range(2, 5):
                assert verify_zykov(n, omega, t), (n, omega, t)


def test_superadditivity_cases():
    assert verify_superadditivity(4, 4, 3, 8)
    assert verify_superadditivity(5, 3, 3, 8)
    assert verify_superadditivity(3, 4, 5, 7)  # all-zero case


def test_superadditive_maxima_strictly_grow_from_triangle():
    report = best_up_to(8, 5, 3, 3)
    best = {lv.n: lv.max_clique_count for lv in report.levels}
    assert best[1] == best[2] == 0
    for n in range(4, 9):
        assert best[n] > best[n - 1] >= 1


# -- neighborhood classifications ----------------------------------------------

def test_neighborhood_lemmas_small_r():
    report = verify_neighborhood_lemmas([3, 4])
    assert report.ok
    names = {(c.name, c.r) for c in report.checks}
    assert ("three-max-cliques", 3) in names
    assert ("three-covers-of-size-two", 4) in names


def test_neighborhood_lemma_expected_sets_are_two_graphs():
    report = verify_neighborhood_lemmas([4])
    for c in report.checks:
        if c.name == "three-max-cliques":
            assert len(c.expected) == 2
            assert c.found == c.expected


# -- probes -----------------------------------------------------------------------

def test_probe_bt3_small_cap():
    out = probe_conjecture("bt3", 8)
    assert out["target"] == bt_density(3) == Fraction(40, 11)
    assert out["beaten_at"] == []
    assert out["pruned"] is True


def test_probe_attainment():
    out = probe_conjecture("attainment(3,5,3)", 8)
    assert out["best"] == Fraction(15, 8)
    assert out["best_n"] == 8
    assert out["meets_exact"] is True


def test_probe_rejects_unknown_name():
    with pytest.raises(ValueError):
        probe_conjecture("nonsense", 5)


def test_probe_configuration_average_resolves_r5():
    out = probe_configuration_average(5, 8)
    assert out["claimed_bound"] == (5 + 1) * (10 - 3) == 42
    # the incident case is proven for r >= 5 and is attained exactly
    assert out["incident"]["max_total_weight"] == 42
    assert out["incident"]["within_bound"] is True
    # the non-incident case genuinely exceeds the bound at r = 5: the
    # average-weight estimate only closes from r = 6 onward
    assert out["non-incident"]["max_total_weight"] == 44
    assert out["non-incident"]["within_bound"] is False
