import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from helpers import p6_td, run_checked, spider_fixture
from treecut.engine import (
    bound_value,
    exact_size_cut,
    exact_size_cut_linear,
    legible_bound,
    minimum_bisection,
    tricut_width,
)
from treecut.generators import (
    grid_graph,
    grid_td,
    make_instance,
    path_graph,
    random_graph_with_td,
    star_graph,
)
from treecut.graph import Graph, Partition, cut_width, max_degree
from treecut.oracle import brute_force_min_cut_size_m
from treecut.treedec import TreeDecomposition, tree_to_width1_td


def test_bound_values():
    assert bound_value(2, 2, Fraction(1)) == 16
    assert legible_bound(2, 2, Fraction(1)) == 32
    # halving r adds one doubling of work but bounds stay monotone
    assert bound_value(2, 2, Fraction(1, 2)) > 16
    assert legible_bound(1, 3, Fraction(1, 4)) == 8 * 3 / Fraction(1, 4)


def test_p6_direct():
    g = path_graph(6)
    b, rep = exact_size_cut_linear(g, p6_td(), 3)
    assert len(b) == 3
    assert rep.width <= 2 * 2 * 2
    assert rep.width == cut_width(
        g, Partition(6, [b, sorted(set(g.vertices) - set(b))]))
    assert len(rep.steps) == 1 and rep.steps[0].kind == "direct"


def test_trivial_sizes():
    g = path_graph(5)
    td = tree_to_width1_td(g)
    b0, rep0 = exact_size_cut_linear(g, td, 0)
    assert b0 == [] and rep0.width == 0
    bn, repn = exact_size_cut_linear(g, td, 5)
    assert sorted(bn) == [1, 2, 3, 4, 5] and repn.width == 0


def test_single_vertex():
    g = Graph(1, [])
    td = TreeDecomposition([1], [], {1: [1]}, 1)
    b, rep = exact_size_cut_linear(g, td, 1)
    assert b == [1] and rep.width == 0


def test_star_matches_oracle():
    g = star_graph(5)
    td = tree_to_width1_td(g)
    b, rep = exact_size_cut_linear(g, td, 2)
    assert len(b) == 2
    assert rep.width >= brute_force_min_cut_size_m(g, 2)[0] == 2


def test_ternary_forces_back_and_forward_steps():
    g, td = make_instance("ternary", h=3)
    _, kinds, _ = run_checked(g, td, 7)
    assert "back" in kinds
    _, kinds, _ = run_checked(g, td, 10)
    assert "forward" in kinds


def test_spider_all_sizes_checked():
    g, td = spider_fixture()
    for m in range(g.n + 1):
        b, _, _ = run_checked(g, td, m)
        assert len(b) == m


def test_bisection_even_and_odd():
    for n in (8, 9):
        g = path_graph(n)
        (b, w), rep = minimum_bisection(g, tree_to_width1_td(g))
        assert len(b) == n // 2
        assert sorted(b) + sorted(w) and len(b) + len(w) == n
        assert rep.width <= rep.bound


def test_drivers_agree_on_sizes():
    for seed in (3, 11, 19):
        g, td = random_graph_with_td(16, 3, seed)
        for m in range(g.n + 1):
            b1, r1 = exact_size_cut(g, td, m)
            b2, r2 = exact_size_cut_linear(g, td, m)
            assert len(b1) == len(b2) == m
            assert r1.width <= r1.bound and r2.width <= r2.bound


def test_grid_one_direct_step():
    g = grid_graph(5)
    b, rep = exact_size_cut_linear(g, grid_td(5), 12)
    assert len(b) == 12
    assert [s.kind for s in rep.steps] == ["direct"]
    assert rep.width <= 2 * (rep.t) * max_degree(g)


def test_tricut_width():
    g = path_graph(6)
    assert tricut_width(g, set(g.vertices), {1, 2}, {3}) == 2
    assert tricut_width(g, set(g.vertices), {1, 2}, set()) == 1
    assert tricut_width(g, {1, 2, 3, 4}, {1, 2}, set()) == 1


def test_report_json():
    g = path_graph(10)
    _, rep = minimum_bisection(g, tree_to_width1_td(g))
    d = json.loads(rep.to_json())
    for key in ("n", "m", "t", "delta", "r", "width", "bound",
                "legible_bound", "impl", "steps", "ops", "seconds",
                "b_vertices"):
        assert key in d
    num, den = d["r"].split("/")
    assert Fraction(int(num), int(den)) == rep.r


def test_step_budget_and_doubling_on_random_instances():
    for seed in range(6):
        g, td = random_graph_with_td(24, 2, seed + 100)
        run_checked(g, td, g.n // 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(5, 40), st.integers(1, 3), st.integers(0, 10 ** 6))
def test_exact_cut_property(n, width, seed):
    g, td = random_graph_with_td(n, width, seed)
    m = seed % (g.n + 1)
    b, rep = exact_size_cut_linear(g, td, m)
    b = set(b)
    assert len(b) == m
    assert rep.width <= rep.bound + 1e-9
    naive = sum(1 for u, v in g.edges() if (u in b) != (v in b))
    assert naive == rep.width
