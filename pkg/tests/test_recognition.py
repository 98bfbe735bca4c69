import itertools

import pytest

from balcheck.graph_core import (
    Graph,
    are_isomorphic,
    complete_graph,
    cycle_graph,
    cycle_with_cliques,
)
from balcheck.matrix import ZeroOneMatrix, clique_matrix, cycle_matrix, is_balanced, verify_odd_cycle_certificate
from balcheck.multisun import graph_for_rim, recognize_multisun
from balcheck.recognition import (
    DiamondError,
    alpha_c,
    balanced_df,
    balanced_linear,
    enumerate_min_unbalanced,
    find_unbalanced_witness,
    is_clique_perfect,
    is_minimally_unbalanced_df,
    is_minimally_unbalanced_oracle,
    tau_c,
)
from balcheck.words import standard_multisun, canonicalize
from balcheck.formats import parse_word

from oracles import naive_alpha_c, naive_tau_c

FIG3B = "*a3.b2.a2.b.c2.b3.a"


def fig3b_multisun():
    return standard_multisun(canonicalize(parse_word(FIG3B)))


class TestMinimallyUnbalancedOracle:
    def test_c5(self):
        assert is_minimally_unbalanced_oracle(cycle_graph(5))

    def test_c9_triangle(self, c9_triangle):
        assert is_minimally_unbalanced_oracle(c9_triangle)

    def test_pendant_vertex_breaks_minimality(self, c9_triangle):
        g = Graph.from_edges(10, c9_triangle.edges() + [(0, 9)])
        assert not is_minimally_unbalanced_oracle(g)

    def test_balanced_graph(self):
        assert not is_minimally_unbalanced_oracle(cycle_graph(6))


class TestMinimallyUnbalancedCharacterization:
    def test_c7(self):
        v = is_minimally_unbalanced_df(cycle_graph(7))
        assert v.decision and v.witness_kind == "odd-hole"

    def test_fig3b_standard_multisun(self):
        v = is_minimally_unbalanced_df(fig3b_multisun().graph)
        assert v.decision and v.witness_kind == "sunoid"

    def test_c13_long_triangle(self):
        v = is_minimally_unbalanced_df(cycle_with_cliques(13, [[0, 3, 7]]))
        assert not v.decision
        assert not is_minimally_unbalanced_oracle(cycle_with_cliques(13, [[0, 3, 7]]))

    def test_rejects_diamond(self):
        with pytest.raises(DiamondError):
            is_minimally_unbalanced_df(
                Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
            )

    def test_agrees_with_oracle(self, small_diamond_free_graphs):
        extras = [
            cycle_graph(5),
            cycle_graph(6),
            cycle_graph(7),
            cycle_with_cliques(9, [[0, 3, 6]]),
            cycle_with_cliques(13, [[0, 3, 7]]),
            graph_for_rim(13, [[0, 3, 10], [0, 5, 8]]),
        ]
        for g in list(small_diamond_free_graphs) + extras:
            assert is_minimally_unbalanced_df(g).decision == is_minimally_unbalanced_oracle(g)


class TestBalancedDf:
    def test_c9_triangle_both_methods(self, c9_triangle):
        v = balanced_df(c9_triangle, "both")
        assert not v.decision
        assert v.certificate is not None and v.certificate.order == 9
        assert verify_odd_cycle_certificate(clique_matrix(c9_triangle), v.certificate)

    def test_algorithm_detects_at_triangle_vertex(self, c9_triangle):
        v = balanced_df(c9_triangle, "algorithm")
        assert not v.decision
        assert "column 0" in v.detail

    def test_fig3b_algorithm_detects_at_hub(self):
        m = fig3b_multisun()
        assert m.hub == 0
        v = balanced_df(m.graph, "algorithm")
        assert not v.decision and "column 0" in v.detail

    def test_tree_balanced(self):
        tree = Graph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
        assert balanced_df(tree, "both").decision

    def test_diamond_rejected(self):
        g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        with pytest.raises(DiamondError):
            balanced_df(g)

    def test_methods_agree_on_corpus(self, small_diamond_free_graphs):
        for g in small_diamond_free_graphs:
            balanced_df(g, "both")  # raises DisagreementError on mismatch


class TestBalancedLinear:
    def test_triangle_matrix(self):
        v = balanced_linear(cycle_matrix(3))
        assert not v.decision and v.certificate.order == 3

    def test_non_linear_rejected(self):
        with pytest.raises(ValueError):
            balanced_linear(ZeroOneMatrix.from_rows([[1, 1], [1, 1]]))

    def test_unit_rows_keep_balance(self):
        tree = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        cm = clique_matrix(tree)
        unit_rows = (1 << 0, 1 << 2)  # dominated single-vertex rows
        padded = ZeroOneMatrix(cm.ncols, cm.rows + unit_rows)
        v = balanced_linear(padded)
        assert v.decision

    def test_c9_triangle_matrix(self, c9_triangle):
        cm = clique_matrix(c9_triangle)
        v = balanced_linear(cm)
        assert not v.decision
        assert verify_odd_cycle_certificate(cm, v.certificate)

    def test_cycle_matrix_odd(self):
        v = balanced_linear(cycle_matrix(7))
        assert not v.decision and v.certificate.order == 7


class TestCliquePerfection:
    def test_c9_triangle_values(self, c9_triangle):
        rep = is_clique_perfect(c9_triangle)
        assert rep.tau == 5 and rep.alpha == 4
        assert not rep.clique_perfect

    def test_c5(self):
        assert tau_c(cycle_graph(5)) == 3
        assert alpha_c(cycle_graph(5)) == 2

    def test_complete_graphs(self):
        for n in (1, 2, 3, 5):
            g = complete_graph(n)
            assert tau_c(g) == 1 and alpha_c(g) == 1

    def test_matches_subset_oracles(self, small_diamond_free_graphs):
        for g in small_diamond_free_graphs:
            if g.n > 8:
                continue
            assert tau_c(g) == naive_tau_c(g)
            assert alpha_c(g) == naive_alpha_c(g)

    def test_alpha_never_exceeds_tau(self, small_diamond_free_graphs):
        for g in small_diamond_free_graphs:
            assert alpha_c(g) <= tau_c(g)

    def test_perfect_on_balanced_example(self):
        tree = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
        rep = is_clique_perfect(tree)
        assert rep.clique_perfect


class TestWitnessExtraction:
    def test_pendants_stripped_to_sunoid(self, c9_triangle):
        edges = c9_triangle.edges() + [(0, 9), (9, 10), (4, 11)]
        g = Graph.from_edges(12, edges)
        v = find_unbalanced_witness(g)
        assert v.witness_kind == "sunoid"
        assert sorted(v.core_vertices) == list(range(9))
        assert are_isomorphic(v.sunoid.graph, c9_triangle)
        assert verify_odd_cycle_certificate(clique_matrix(g), v.certificate)

    def test_attached_triangle_leaves_odd_hole(self):
        c7 = cycle_graph(7)
        edges = c7.edges() + [(0, 7), (0, 8), (7, 8)]
        g = Graph.from_edges(9, edges)
        v = find_unbalanced_witness(g)
        assert v.witness_kind == "odd-hole"
        assert len(v.hole) == 7
        assert v.hole.verify(g)

    def test_balanced_input_rejected(self):
        with pytest.raises(ValueError):
            find_unbalanced_witness(cycle_graph(6))


class TestEnumeration:
    def test_up_to_8(self):
        got = enumerate_min_unbalanced(8)
        assert [g.n for g in got] == [5, 7]
        assert all(is_minimally_unbalanced_oracle(g) for g in got)

    def test_up_to_9(self, c9_triangle):
        got = enumerate_min_unbalanced(9)
        assert [g.n for g in got] == [5, 7, 9, 9]
        assert are_isomorphic(got[2], cycle_graph(9)) or are_isomorphic(got[3], cycle_graph(9))
        assert any(are_isomorphic(g, c9_triangle) for g in got)
        assert all(is_minimally_unbalanced_oracle(g) for g in got)

    def test_13_includes_two_triangle_sunoid(self):
        got = enumerate_min_unbalanced(13)
        target = standard_multisun(canonicalize(parse_word("*a.b2.a"))).graph
        assert any(g.n == 13 and are_isomorphic(g, target) for g in got)

    def test_all_oracle_minimal_and_distinct(self):
        got = enumerate_min_unbalanced(11)
        assert all(is_minimally_unbalanced_oracle(g) for g in got)
        for a, b in itertools.combinations(got, 2):
            if a.n == b.n:
                assert not are_isomorphic(a, b)

    def test_transversal_bounds_on_enumerated_sunoids(self):
        for g in enumerate_min_unbalanced(13):
            m = recognize_multisun(g)
            if m is None:
                continue
            rim_order = g.n
            assert tau_c(g) == (rim_order + 1) // 2
            assert alpha_c(g) <= rim_order // 2
