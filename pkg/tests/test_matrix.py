import itertools
import random

import pytest

from balcheck.graph_core import Graph, cycle_graph, cycle_with_cliques
from balcheck.matrix import (
    ZeroOneMatrix,
    clique_matrix,
    has_triangle_submatrix,
    intersection_graph,
    is_balanced,
    is_conformal,
    is_linear,
    min_odd_cycle_order,
    up_matrix,
    verify_odd_cycle_certificate,
)
from balcheck.matrix import cycle_matrix

from oracles import naive_min_odd_cycle_order


def rows(*rs):
    return ZeroOneMatrix.from_rows([list(map(int, r)) for r in rs])


@pytest.fixture(scope="module")
def random_matrices():
    rng = random.Random(40312)
    out = []
    for _ in range(60):
        nr = rng.randrange(1, 7)
        nc = rng.randrange(1, 8)
        out.append(
            ZeroOneMatrix.from_rows(
                [[rng.randrange(2) for _ in range(nc)] for _ in range(nr)]
            )
        )
    return out


@pytest.fixture(scope="module")
def random_linear_matrices():
    rng = random.Random(555)
    out = []
    while len(out) < 40:
        nr = rng.randrange(2, 7)
        nc = rng.randrange(3, 8)
        m = ZeroOneMatrix.from_rows(
            [[1 if rng.random() < 0.4 else 0 for _ in range(nc)] for _ in range(nr)]
        )
        if is_linear(m):
            out.append(m)
    return out


class TestLinear:
    def test_cycle_matrix_linear(self):
        assert is_linear(cycle_matrix(5))

    def test_forbidden_square(self):
        assert not is_linear(rows("11", "11"))

    def test_two_shared_columns(self):
        assert not is_linear(rows("111", "011"))

    def test_empty(self):
        assert is_linear(ZeroOneMatrix(0, ()))


class TestUpMatrix:
    def test_dominated_row_dropped(self):
        m = rows("110", "100", "001")
        up, kept = up_matrix(m)
        assert kept == (0, 2)
        assert up == rows("110", "001")

    def test_all_ones_absorbs_triangle(self):
        m = rows("110", "011", "101", "111")
        up, kept = up_matrix(m)
        assert up == rows("111") and kept == (3,)
        assert is_balanced(up) and not is_balanced(m)

    def test_incomparable_identity(self):
        m = rows("110", "011", "101")
        up, kept = up_matrix(m)
        assert up == m and kept == (0, 1, 2)

    def test_duplicates_collapse(self):
        m = rows("101", "101")
        up, kept = up_matrix(m)
        assert up == rows("101") and kept == (0,)

    def test_idempotent(self, random_matrices):
        for m in random_matrices:
            up, _ = up_matrix(m)
            again, _ = up_matrix(up)
            assert again == up


class TestIntersectionGraph:
    def test_cycle(self):
        assert intersection_graph(cycle_matrix(5)) == cycle_graph(5)

    def test_all_ones_row(self):
        g = intersection_graph(rows("1111"))
        assert all(g.has_edge(u, v) for u, v in itertools.combinations(range(4), 2))

    def test_identity_matrix_edgeless(self):
        m = ZeroOneMatrix.from_rows([[1 if i == j else 0 for j in range(4)] for i in range(4)])
        assert intersection_graph(m).size == 0


class TestConformal:
    def test_bare_triangle(self):
        assert not is_conformal(cycle_matrix(3))
        assert has_triangle_submatrix(cycle_matrix(3)) is not None

    def test_covered_triangle(self):
        assert is_conformal(rows("110", "011", "101", "111"))

    def test_linear_without_triangle(self, random_linear_matrices):
        for m in random_linear_matrices:
            if has_triangle_submatrix(m) is None:
                assert is_conformal(m)

    def test_clique_matrices_conformal(self, small_diamond_free_graphs):
        for g in small_diamond_free_graphs:
            assert is_conformal(clique_matrix(g))


class TestOddCycleOracle:
    def test_c5_is_its_own_witness(self):
        res = min_odd_cycle_order(cycle_matrix(5))
        assert res is not None
        order, cert = res
        assert order == 5
        assert sorted(cert.row_indices) == [0, 1, 2, 3, 4]
        assert sorted(cert.col_indices) == [0, 1, 2, 3, 4]

    def test_c9_triangle_clique_matrix(self, c9_triangle):
        res = min_odd_cycle_order(clique_matrix(c9_triangle))
        assert res is not None
        order, cert = res
        assert order == 9
        # the nine rim-edge rows over all nine columns
        cm = clique_matrix(c9_triangle)
        assert all(cm.rows[r].bit_count() == 2 for r in cert.row_indices)
        assert sorted(cert.col_indices) == list(range(9))

    def test_two_columns_balanced(self):
        assert min_odd_cycle_order(rows("11", "11", "10")) is None

    def test_c7_unbalanced(self):
        assert not is_balanced(cycle_matrix(7))

    def test_forest_representation_balanced(self):
        assert is_balanced(rows("1100", "0010", "0001"))

    def test_certificates_verify(self, random_matrices):
        for m in random_matrices:
            res = min_odd_cycle_order(m)
            if res is not None:
                order, cert = res
                assert verify_odd_cycle_certificate(m, cert)
                assert cert.order == order

    def test_matches_subset_oracle(self, random_matrices):
        for m in random_matrices:
            res = min_odd_cycle_order(m)
            expect = naive_min_odd_cycle_order(m)
            assert (res is None) == (expect is None)
            if res is not None:
                assert res[0] == expect

    def test_bipartite_clique_matrices_balanced(self):
        rng = random.Random(2024)
        for _ in range(12):
            left = rng.randrange(1, 7)
            right = rng.randrange(1, 7)
            edges = [
                (u, left + v)
                for u in range(left)
                for v in range(right)
                if rng.random() < 0.5
            ]
            g = Graph.from_edges(left + right, edges)
            assert is_balanced(clique_matrix(g))


class TestLinearUpBalanceEquivalence:
    def test_on_random_linear(self, random_linear_matrices):
        for m in random_linear_matrices:
            up, _ = up_matrix(m)
            assert is_balanced(m) == is_balanced(up)

    def test_nonlinear_counterexample(self):
        m = rows("110", "011", "101", "111")
        up, _ = up_matrix(m)
        assert is_balanced(up) and not is_balanced(m)


class TestCliqueMatrixOfDiamondFree:
    def test_linear_and_no_short_cycles(self, small_diamond_free_graphs, c9_triangle):
        for g in list(small_diamond_free_graphs) + [c9_triangle, cycle_with_cliques(13, [[0, 3, 7]])]:
            cm = clique_matrix(g)
            assert is_linear(cm)
            res = min_odd_cycle_order(cm)
            if res is not None:
                assert res[0] >= 5
