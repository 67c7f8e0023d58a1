from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from helpers import p6_td, spider_fixture
from treecut.errors import RedundantPath
from treecut.generators import (
    make_instance,
    path_graph,
    random_graph_with_td,
    star_graph,
)
from treecut.labeling import (
    CircularIndex,
    build_plabeling,
    cluster_boundary_edges,
    decompose_by_node,
)
from treecut.treedec import (
    TreeDecomposition,
    heaviest_path,
    make_nonredundant,
    restrict,
    validate,
)


def test_circular_index():
    ci = CircularIndex(6)
    assert ci.shift(5, 3) == 2
    assert ci.shift(2, -3) == 5
    assert ci.shift(4, 6) == 4  # a full turn is the identity
    assert ci.span(5, 2) == 4
    assert ci.span(3, 3) == 1
    assert list(ci.labels(5, 2)) == [5, 6, 1, 2]
    assert ci.between(5, 6, 2)
    assert not ci.between(5, 3, 2)


def test_p6_labels_follow_path_order():
    pl = build_plabeling(p6_td())
    assert pl.n == 6
    # the path is walked end to end, so labels follow path order
    assert pl.vertex_of == [0, 5, 6, 4, 3, 2, 1]
    assert pl.path_nodes == [5, 4, 3, 2, 1]
    assert all(pl.is_path_vertex[v] for v in range(1, 7))
    assert pl.relative_weight() == 1
    blocks = pl.blocks()
    # every block is pure cluster vertices (no hanging part)
    assert all(a == r for a, r, _ in blocks.values())


def test_star_labeling_definitional():
    g = star_graph(4)
    td = make_instance("star", n=5)[1]
    pl = build_plabeling(td)
    # all vertices lie in path clusters here, and each vertex's assigned
    # node is the path node nearest the start whose cluster holds it
    covered = set()
    for i in pl.path_nodes:
        for x in td.clusters[i]:
            if x not in covered:
                covered.add(x)
                assert pl.path_node_of[x] == i
    assert g.n >= pl.n == len(covered) + sum(
        1 for v in range(1, g.n + 1)
        if pl.holds(v) and not pl.is_path_vertex[v])


def test_spider_hanging_only_at_branch_node():
    g, td0 = spider_fixture()
    td = make_nonredundant(td0)
    pl = build_plabeling(td)
    blocks = pl.blocks()
    with_hang = [i for i, (a, r, _) in blocks.items() if r > a]
    # the heaviest path runs through two legs; the third leg hangs at the
    # single branch node (its innermost vertex is that node's own cluster
    # vertex, so seven of the eight leg vertices sit in the hanging part)
    assert len(with_hang) == 1
    a, r, _ = blocks[with_hang[0]]
    assert r - a == 7


def test_labeling_partitions_vertices():
    for seed in range(10):
        g, td = random_graph_with_td(18, 3, seed)
        pl = build_plabeling(make_nonredundant(td))
        seen = sorted(pl.vertex_of[1:])
        assert seen == sorted(set(seen))
        assert len(seen) == pl.n == g.n


def test_blocks_cluster_vertices_close_each_block():
    for seed in range(10):
        g, td = random_graph_with_td(20, 3, seed + 50)
        pl = build_plabeling(make_nonredundant(td))
        for i, (a, r, b) in pl.blocks().items():
            for lab in range(a, r):
                assert not pl.is_path_vertex[pl.vertex_of[lab]]
            for lab in range(r, b + 1):
                assert pl.is_path_vertex[pl.vertex_of[lab]]


def test_redundant_path_rejected():
    # the middle cluster is nested, so neither orientation works
    td = TreeDecomposition([1, 2, 3], [(1, 2), (2, 3)],
                           {1: [1, 2], 2: [2], 3: [2, 3]}, 3)
    with pytest.raises(RedundantPath):
        build_plabeling(td, [1, 2, 3])


def test_boundary_edges_p6():
    g = path_graph(6)
    td = p6_td()
    assert sorted(cluster_boundary_edges(g, td, 3)) == [(2, 3), (3, 4), (4, 5)]


def test_boundary_edges_empty_cluster():
    g = path_graph(6)
    td = restrict(p6_td(), vertex_filter={1, 2, 3})
    assert cluster_boundary_edges(g, td, 5) == []


def test_boundary_edges_star():
    g = star_graph(4)
    td = make_instance("star", n=5)[1]
    # every cluster holds the center, so each touches all four edges
    for i in td.nodes:
        assert len(cluster_boundary_edges(g, td, i)) == 4


def test_decompose_p6_middle():
    g = path_graph(6)
    td = p6_td()
    pl = build_plabeling(td)
    parts = decompose_by_node(g, td, pl, 2)  # cluster {2,3}
    assert {3, 4, 5, 6} in parts
    assert {2} in parts
    assert {1} in parts
    assert len(parts) == 3
    _check_parts_against_boundary(g, td, pl, 2)


def _check_parts_against_boundary(g, td, pl, i):
    parts = decompose_by_node(g, td, pl, i)
    everything = set()
    for p in parts:
        assert not everything & p
        everything |= p
    assert everything == set(g.vertices)
    removed = set(cluster_boundary_edges(g, td, i))
    owner = {}
    for k, p in enumerate(parts):
        for v in p:
            owner[v] = k
    for u, v in g.edges():
        if (u, v) not in removed:
            assert owner[u] == owner[v]


def test_decompose_spider_branch_node():
    g, td0 = spider_fixture()
    td = make_nonredundant(td0)
    pl = build_plabeling(td)
    branch = [i for i, (a, r, _) in pl.blocks().items() if r > a][0]
    parts = decompose_by_node(g, td, pl, branch)
    assert any(len(p) == 8 for p in parts)  # the hanging leg survives intact
    _check_parts_against_boundary(g, td, pl, branch)


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 24), st.integers(1, 3), st.integers(0, 500))
def test_decompose_property(n, width, seed):
    g, td0 = random_graph_with_td(n, width, seed)
    td = make_nonredundant(td0)
    pl = build_plabeling(td)
    for i in pl.path_nodes:
        _check_parts_against_boundary(g, td, pl, i)


def test_debug_dump_golden_p6():
    pl = build_plabeling(p6_td())
    assert pl.debug_dump() == (
        "node 5: hanging - cluster 1..2\n"
        "node 4: hanging - cluster 3..3\n"
        "node 3: hanging - cluster 4..4\n"
        "node 2: hanging - cluster 5..5\n"
        "node 1: hanging - cluster 6..6"
    )


def test_debug_dump_golden_spider():
    _, td0 = spider_fixture()
    pl = build_plabeling(make_nonredundant(td0))
    lines = pl.debug_dump().splitlines()
    assert len(lines) == 17  # two legs plus the center's own node
    assert sum("hanging -" not in line for line in lines) == 1


def test_restricted_td_reproduces_current_state():
    g, td0 = random_graph_with_td(25, 3, 7)
    td = make_nonredundant(td0)
    pl = build_plabeling(td)
    again = pl.restricted_td()
    assert validate(g, again, vertices=set(pl.current_vertices())).ok
    # rebuilding on the explicit restriction gives the same assignments
    fresh = build_plabeling(again, pl.path_nodes)
    assert fresh.path_node_of == pl.path_node_of
    assert [bool(b) for b in fresh.is_path_vertex] == \
        [bool(b) for b in pl.is_path_vertex]
