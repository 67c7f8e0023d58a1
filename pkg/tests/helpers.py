"""Shared fixtures and the checked step-by-step runner used by several tests."""
import math
from fractions import Fraction

from treecut.engine import doubling_step, tricut_width
from treecut.generators import make_instance, random_graph_with_td
from treecut.graph import max_degree
from treecut.labeling import build_plabeling
from treecut.treedec import TreeDecomposition, make_nonredundant, validate
from treecut.util import OpsCounter


def p6_td():
    """Path decomposition {1,2},{2,3},{3,4},{4,5},{5,6} of the 6-path."""
    clusters = {i: [i, i + 1] for i in range(1, 6)}
    return TreeDecomposition([1, 2, 3, 4, 5], [(i, i + 1) for i in range(1, 5)],
                             clusters, 6)


def y_shaped_td():
    """Three branches of cluster-union weights 5, 4 and 2 sharing vertex 1."""
    clusters = {
        1: [1],
        2: [1, 2], 3: [2, 3], 4: [3, 4], 5: [4, 5],
        6: [1, 6], 7: [6, 7], 8: [7, 8],
        9: [1, 9],
    }
    edges = [(1, 2), (2, 3), (3, 4), (4, 5), (1, 6), (6, 7), (7, 8), (1, 9)]
    return TreeDecomposition(list(range(1, 10)), edges, clusters, 9)


def spider_fixture():
    """Spider with three legs of length 8 (n=25) and its width-1 decomposition."""
    return make_instance("spider", legs=[8, 8, 8])


def run_checked(g, td0, m):
    """Drive the cut step by step, asserting every stated step property.

    Returns (b_vertices, step_kinds, r0). Checks per step: the direct case
    yields no remainder and an induced cut of width at most 2*t*delta; the
    other cases double the relative path weight, keep the remainder at most
    half the instance, stay within the per-step width cap, and leave a
    decomposition that still validates against the induced subgraph.
    """
    td = make_nonredundant(td0)
    t = td.width() + 1
    delta = max_degree(g)
    pl = build_plabeling(td)
    r0 = pl.relative_weight()
    cur = list(pl.current_vertices())
    assert len(cur) == g.n
    b_total = []
    kinds = []
    while m - len(b_total) > 0:
        res = doubling_step(pl, m - len(b_total))
        kinds.append(res.kind)
        rem = m - len(b_total)
        if res.kind == "direct":
            assert not res.z_vertices
            assert len(res.b_vertices) == rem
            assert tricut_width(g, cur, res.b_vertices, []) <= 2 * t * delta
            b_total.extend(res.b_vertices)
            break
        assert res.z_vertices
        assert len(res.b_vertices) <= rem <= len(res.b_vertices) + len(res.z_vertices)
        assert 2 * len(res.z_vertices) <= len(cur)
        assert res.w_after >= 2 * res.w_before
        cap = math.log2(16.0 / float(res.w_before)) * t * delta
        w3 = tricut_width(g, cur, res.b_vertices, res.z_vertices)
        assert w3 <= cap + 1e-9, (w3, cap)
        shrunk = pl.restricted_td()
        report = validate(g, shrunk, vertices=set(pl.current_vertices()))
        assert report.ok, report.witness
        b_total.extend(res.b_vertices)
        cur = res.z_vertices
    assert len(b_total) == m
    assert len(kinds) <= 1 or Fraction(2) ** (len(kinds) - 1) <= 1 / r0
    return b_total, kinds, r0


def acceptance_corpus():
    """Instance sweep used by the bound-compliance and step-property checks.

    Yields (label, graph, decomposition) for 500+ instances across every
    family, with n ranging up to 10**4.
    """
    for n in (10, 23, 47, 64, 101, 230, 512, 1000, 2500, 5000, 10000):
        yield "path-%d" % n, *make_instance("path", n=n)
        yield "star-%d" % n, *make_instance("star", n=n)
        leg = max(1, (n - 1) // 3)
        yield "spider-%d" % n, *make_instance("spider", legs=[leg, leg, leg])
        yield ("caterpillar-%d" % n,
               *make_instance("caterpillar", spine=max(1, n // 3), hairs=2))
    for h in range(1, 9):
        yield "ternary-%d" % h, *make_instance("ternary", h=h)
    for k in range(2, 11):
        yield "grid-%d" % k, *make_instance("grid", k=k)
    for seed in range(280):
        n = 5 + (seed * 17) % 196
        yield "rtree-%d" % seed, *make_instance("random-tree", n=n, seed=seed)
    for seed in range(170):
        n = 5 + (seed * 13) % 96
        width = 1 + seed % 4
        yield "rtd-%d" % seed, *random_graph_with_td(n, width, seed)


def small_fixtures():
    """Fixtures with n <= 64 for the exhaustive size sweep."""
    out = [
        ("p6", *make_instance("path", n=6)),
        ("p17", *make_instance("path", n=17)),
        ("star4", *make_instance("star", n=5)),
        ("star9", *make_instance("star", n=10)),
        ("spider432", *make_instance("spider", legs=[4, 3, 2])),
        ("spider888", *spider_fixture()),
        ("caterpillar", *make_instance("caterpillar", spine=5, hairs=2)),
        ("ternary2", *make_instance("ternary", h=2)),
        ("grid3", *make_instance("grid", k=3)),
        ("grid4", *make_instance("grid", k=4)),
        ("k2", *make_instance("path", n=2)),
        ("k1", *make_instance("path", n=1)),
    ]
    for seed in range(5):
        out.append(("rtree-s%d" % seed,
                    *make_instance("random-tree", n=8 + 3 * seed, seed=seed)))
        out.append(("rtd-s%d" % seed,
                    *random_graph_with_td(8 + 3 * seed, 3, seed)))
    return out
