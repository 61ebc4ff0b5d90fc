from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings

from locrainbow import solver
from locrainbow.coloring import Coloring, check_locating_rainbow, is_rainbow_vertex_connected
from locrainbow.errors import BudgetExceededError, NotConnectedError
from locrainbow.formulas import rvc_cycle_formula
from locrainbow.graph import complete, cycle, diameter, from_edge_list, path, regular_n2, regular_n3
from locrainbow.solver import (
    CYCLE_LEMMA,
    TWIN_CLASS,
    SolveOptions,
    brute_force_rvcl,
    diameter_lower_bound,
    lower_bound,
    solve_rvc,
    solve_rvcl,
    twin_classes,
)
from oracles import connected_graphs, random_connected_graph


def brute_force_rvc(g) -> int:
    """Least number of colors (any coloring, all colors used) that is rainbow
    vertex connected; 0 when no pair needs an internal vertex."""
    if diameter(g) <= 1:
        return 0
    for k in range(1, g.n + 1):
        for colors in itertools.product(range(1, k + 1), repeat=g.n):
            if len(set(colors)) == k and is_rainbow_vertex_connected(g, Coloring(colors, k)):
                return k
    raise AssertionError("unreachable: n colors always work")


class TestLowerBound:
    def test_complete_twins(self):
        assert lower_bound(complete(7)) == (7, TWIN_CLASS)

    def test_c9(self):
        assert lower_bound(cycle(9)) == (3, CYCLE_LEMMA)
        # 2 * 4 = 8 < 9, so the diameter bound alone also reaches 3
        assert diameter_lower_bound(9, 4) == 3

    def test_p3(self):
        # v1 and v3 are twins, so two colors are forced
        assert lower_bound(path(3)) == (2, TWIN_CLASS)
        assert solve_rvcl(path(3)).value == 2

    def test_p2_and_single_vertex(self):
        assert lower_bound(path(2)) == (2, TWIN_CLASS)
        assert lower_bound(complete(1)) == (1, "trivial")

    def test_diameter_bound_source(self):
        assert lower_bound(path(6)) == (2, "diameter-bound")

    def test_disconnected(self):
        with pytest.raises(NotConnectedError):
            lower_bound(from_edge_list("4 2\n1 2\n3 4\n"))

    def test_twin_classes(self):
        assert twin_classes(complete(5)) == [[1, 2, 3, 4, 5]]
        assert sorted(map(sorted, twin_classes(regular_n2(8)))) == [[1, 5], [2, 6], [3, 7], [4, 8]]
        assert [c for c in twin_classes(path(3)) if len(c) > 1] == [[1, 3]]

    @given(connected_graphs(2, 8))
    @settings(max_examples=40)
    def test_twins_are_pairwise_twins(self, g):
        rows = g.distances.rows()
        for cls in twin_classes(g):
            for u, v in itertools.combinations(cls, 2):
                assert all(rows[u - 1][x] == rows[v - 1][x] for x in range(g.n) if x not in (u - 1, v - 1))


class TestSolveRvcl:
    @pytest.mark.parametrize(
        "g, expected",
        [(cycle(8), 4), (complete(5), 5), (cycle(10), 5), (regular_n3(9), 5)],
        ids=["C8", "K5", "C10", "R93"],
    )
    def test_values(self, g, expected):
        report = solve_rvcl(g)
        assert report.value == expected
        assert report.certificate.k == expected
        assert check_locating_rainbow(g, report.certificate)
        assert report.lower_bound <= report.value

    def test_sequential_certificate_is_reproducible(self):
        a = solve_rvcl(cycle(10)).certificate
        b = solve_rvcl(cycle(10)).certificate
        assert a == b

    def test_parallel_value_matches(self):
        for g in (cycle(10), regular_n3(9), regular_n2(8)):
            seq = solve_rvcl(g)
            par = solve_rvcl(g, SolveOptions(parallel=True, workers=2, split_depth=4))
            assert par.value == seq.value
            assert check_locating_rainbow(g, par.certificate)

    def test_node_budget(self):
        with pytest.raises(BudgetExceededError) as info:
            solve_rvcl(cycle(11), SolveOptions(node_budget=10))
        assert info.value.lower >= 3
        assert info.value.upper is None

    def test_k_max(self):
        with pytest.raises(BudgetExceededError) as info:
            solve_rvcl(cycle(10), SolveOptions(k_max=4))
        assert info.value.lower == 5

    def test_bad_options(self):
        with pytest.raises(ValueError):
            SolveOptions(node_budget=0)

    def test_single_vertex_rejected(self):
        with pytest.raises(ValueError):
            solve_rvcl(complete(1))

    def test_report_dict(self):
        d = solve_rvcl(cycle(8)).to_dict()
        assert set(d) == {"value", "lower_bound", "lower_bound_source", "nodes", "elapsed_ms"}
        assert d["value"] == 4

    @given(connected_graphs(2, 7))
    @settings(max_examples=60)
    def test_matches_brute_force(self, g):
        report = solve_rvcl(g)
        assert report.value == brute_force_rvcl(g, g.n).value
        assert check_locating_rainbow(g, report.certificate)
        assert report.certificate.k == report.value

    @given(connected_graphs(3, 8))
    @settings(max_examples=40)
    def test_diameter_bound_holds(self, g):
        r = solve_rvcl(g).value
        assert g.n <= r * diameter(g) ** (r - 1)

    def test_leaf_check_fallback(self, monkeypatch):
        # with no path systems the search must still agree with the oracle
        monkeypatch.setattr(solver, "MAX_PATHS", 0)
        rng = random.Random(7)
        for _ in range(15):
            g = random_connected_graph(rng, rng.randint(4, 7), 0.2)
            s = solver._Search(g, 2, True, None)
            assert not s.exact_paths or diameter(g) <= 2
            assert solve_rvcl(g).value == brute_force_rvcl(g, g.n).value
        assert solve_rvcl(cycle(9)).value == 4


class TestSolveRvc:
    def test_c9(self):
        assert solve_rvc(cycle(9)).value == 3

    def test_complete_convention(self):
        report = solve_rvc(complete(4))
        assert report.value == 0
        assert report.value <= 1

    def test_c8(self):
        assert solve_rvc(cycle(8)).value == 3

    def test_c11_fills_the_formula_gap(self):
        assert solve_rvc(cycle(11)).value == rvc_cycle_formula(11) == 5

    @pytest.mark.parametrize("n", range(3, 10))
    def test_cycles_match_brute_force(self, n):
        assert solve_rvc(cycle(n)).value == brute_force_rvc(cycle(n))

    @given(connected_graphs(2, 6))
    @settings(max_examples=40)
    def test_matches_brute_force(self, g):
        report = solve_rvc(g)
        assert report.value == brute_force_rvc(g)
        assert is_rainbow_vertex_connected(g, report.certificate)

    @given(connected_graphs(2, 7))
    @settings(max_examples=40)
    def test_rvc_at_most_rvcl(self, g):
        assert solve_rvc(g).value <= solve_rvcl(g).value


class TestBruteForce:
    def test_c6(self):
        assert brute_force_rvcl(cycle(6), 6).value == 3

    def test_k4(self):
        assert brute_force_rvcl(complete(4), 4).value == 4

    def test_r62(self):
        assert brute_force_rvcl(regular_n2(6), 6).value == 4

    def test_exhausted(self):
        with pytest.raises(BudgetExceededError):
            brute_force_rvcl(complete(4), 3)

    def test_enumerates_restricted_growth_strings(self):
        # Stirling numbers of the second kind S(5, k)
        assert [len(list(solver._restricted_growth(5, k))) for k in range(1, 6)] == [1, 15, 25, 10, 1]
