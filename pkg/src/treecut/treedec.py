"""Tree decompositions: container, validity checks, and path machinery.

A decomposition holds a tree over node ids plus one vertex cluster per node.
Vertices refer to a host graph on 1..graph_n, but most operations only need
the clusters, so the host graph is passed in only where edges matter.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DecompositionFormatError,
    EmptyDecomposition,
    NotATree,
    RedundantPath,
)
from .graph import longest_path_in_tree


class TreeDecomposition:
    """Tree over node ids with a vertex cluster per node.

    Immutable by convention. Node ids are arbitrary ints; freshly built
    decompositions use dense ids starting at 1.
    """

    __slots__ = ("nodes", "neighbors", "clusters", "graph_n")

    def __init__(self, nodes, edges, clusters, graph_n):
        nodes = list(nodes)
        if not nodes:
            raise DecompositionFormatError("a decomposition needs at least one node")
        if len(set(nodes)) != len(nodes):
            raise DecompositionFormatError("duplicate node ids")
        node_set = set(nodes)
        neighbors = {i: [] for i in nodes}
        if len(edges) != len(nodes) - 1:
            raise DecompositionFormatError("node/edge counts do not form a tree")
        for a, b in edges:
            if a not in node_set or b not in node_set or a == b:
                raise DecompositionFormatError("bad tree edge (%r, %r)" % (a, b))
            neighbors[a].append(b)
            neighbors[b].append(a)
        # connectivity: n-1 edges + connected = tree
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            for w in neighbors[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(nodes):
            raise DecompositionFormatError("decomposition tree is not connected")
        cl = {}
        for i in nodes:
            c = list(clusters.get(i, ()))
            if len(set(c)) != len(c):
                raise DecompositionFormatError("duplicate vertex in cluster %r" % i)
            for x in c:
                if not (1 <= x <= graph_n):
                    raise DecompositionFormatError(
                        "vertex %r out of range in cluster %r" % (x, i))
            cl[i] = c
        self.nodes = nodes
        self.neighbors = neighbors
        self.clusters = cl
        self.graph_n = graph_n

    def edges(self):
        for a in self.nodes:
            for b in self.neighbors[a]:
                if a < b:
                    yield (a, b)

    def width(self):
        return max(len(self.clusters[i]) for i in self.nodes) - 1

    def size(self):
        """Node count plus total cluster volume."""
        return len(self.nodes) + sum(len(self.clusters[i]) for i in self.nodes)

    def vertex_count(self):
        """Number of distinct vertices appearing in clusters."""
        seen = set()
        for i in self.nodes:
            seen.update(self.clusters[i])
        return len(seen)

    def covered_vertices(self):
        seen = set()
        for i in self.nodes:
            seen.update(self.clusters[i])
        return seen

    def to_json(self):
        return json.dumps({
            "graph_n": self.graph_n,
            "nodes": [{"id": i, "cluster": sorted(self.clusters[i])}
                      for i in self.nodes],
            "edges": [[a, b] for a, b in self.edges()],
        })

    @classmethod
    def from_json(cls, text):
        try:
            obj = json.loads(text)
            nodes = [rec["id"] for rec in obj["nodes"]]
            clusters = {rec["id"]: rec["cluster"] for rec in obj["nodes"]}
            edges = [tuple(e) for e in obj["edges"]]
            graph_n = obj.get("graph_n")
        except (KeyError, TypeError, ValueError) as exc:
            raise DecompositionFormatError("bad decomposition JSON: %s" % exc)
        if graph_n is None:
            graph_n = max((x for c in clusters.values() for x in c), default=0)
        return cls(nodes, edges, clusters, graph_n)


@dataclass
class ValidityReport:
    vertex_cover_ok: bool
    edge_cover_ok: bool
    connectivity_ok: bool
    witness: str
    width: int

    @property
    def ok(self):
        return self.vertex_cover_ok and self.edge_cover_ok and self.connectivity_ok


def validate(g, td, vertices=None):
    """Check the three decomposition properties against g.

    With `vertices` given, checks are relative to that induced subgraph:
    every listed vertex must be covered and every induced edge must fit in
    some cluster. Cluster connectivity is always checked as-is.
    """
    if vertices is None:
        vertex_set = set(g.vertices)
    else:
        vertex_set = set(vertices)
    where = {}  # vertex -> list of nodes whose cluster holds it
    witness = ""
    v_ok = e_ok = c_ok = True
    cluster_sets = {}
    for i in td.nodes:
        s = set(td.clusters[i])
        cluster_sets[i] = s
        for x in s:
            if x not in vertex_set:
                v_ok = False
                witness = witness or "cluster %r holds foreign vertex %r" % (i, x)
            where.setdefault(x, []).append(i)
    for x in vertex_set:
        if x not in where:
            v_ok = False
            witness = witness or "vertex %r in no cluster" % (x,)
    for u, v in g.edges():
        if u not in vertex_set or v not in vertex_set:
            continue
        homes = where.get(u, [])
        if not any(v in cluster_sets[i] for i in homes):
            e_ok = False
            witness = witness or "edge (%r, %r) fits in no cluster" % (u, v)
            break
    # connectivity: vertex occurrences must form one subtree each
    root = td.nodes[0]
    parent = {root: None}
    stack = [root]
    while stack:
        i = stack.pop()
        for j in td.neighbors[i]:
            if j not in parent:
                parent[j] = i
                stack.append(j)
    heads = {}
    for i in td.nodes:
        p = parent[i]
        for x in cluster_sets[i]:
            if p is None or x not in cluster_sets[p]:
                heads[x] = heads.get(x, 0) + 1
    for x, k in heads.items():
        if k != 1:
            c_ok = False
            witness = witness or "vertex %r appears in %d separate subtrees" % (x, k)
            break
    width = max(len(td.clusters[i]) for i in td.nodes) - 1
    return ValidityReport(v_ok, e_ok, c_ok, witness, width)


def make_nonredundant(td, ops=None):
    """Contract away nested adjacent clusters; returns a new decomposition.

    One depth-first pass from the smallest node id. When a cluster is
    contained in its (current) parent cluster the node is merged upward;
    when the parent cluster is contained in the node's cluster the parent
    class adopts the node's cluster. Width never grows and any tree path of
    the input maps onto a tree path of the output covering at least the
    same vertices.
    """
    if all(not td.clusters[i] for i in td.nodes):
        raise EmptyDecomposition("every cluster is empty")
    root = min(td.nodes)
    rep = {i: i for i in td.nodes}

    def find(i):
        while rep[i] != i:
            rep[i] = rep[rep[i]]
            i = rep[i]
        return i

    cluster_of = {}
    csize = {}
    seen = [False] * (td.graph_n + 1)
    class_order = []
    stack = [(root, None)]
    while stack:
        i, tree_parent = stack.pop()
        x = td.clusters[i]
        n_i = len(x)
        c_i = sum(1 for v in x if seen[v])
        if ops is not None:
            ops.add(n_i + 1)
        if tree_parent is None:
            cluster_of[i] = x
            csize[i] = n_i
            class_order.append(i)
            for v in x:
                seen[v] = True
        else:
            p = find(tree_parent)
            if c_i == n_i:
                rep[i] = p  # cluster nested in parent: fold node upward
            elif c_i == csize[p]:
                # parent cluster nested here: parent class adopts this cluster
                rep[p] = i
                cluster_of[i] = x
                csize[i] = n_i
                for v in x:
                    seen[v] = True
            else:
                cluster_of[i] = x
                csize[i] = n_i
                class_order.append(i)
                for v in x:
                    seen[v] = True
        for j in td.neighbors[i]:
            if j != tree_parent:
                stack.append((j, i))
    # class_order lists creation-time roots; adoption may have moved a class
    # to a new root, so compress to final representatives keeping first seen
    final = []
    seen_cls = set()
    for i in class_order:
        f = find(i)
        if f not in seen_cls:
            seen_cls.add(f)
            final.append(f)
    new_id = {f: k + 1 for k, f in enumerate(final)}
    edges = []
    for a, b in td.edges():
        fa, fb = find(a), find(b)
        if fa != fb:
            edges.append((new_id[fa], new_id[fb]))
    clusters = {new_id[f]: cluster_of[f] for f in final}
    return TreeDecomposition(list(range(1, len(final) + 1)), edges, clusters,
                             td.graph_n)


def restrict(td, keep_nodes=None, vertex_filter=None, extra_edge=None):
    """Sub-decomposition on `keep_nodes` with clusters filtered to a vertex set.

    `vertex_filter` is a container or predicate; `extra_edge` lets the caller
    re-join two kept nodes when the kept set is disconnected in the tree.
    The result must again be a tree.
    """
    if keep_nodes is None:
        keep_nodes = list(td.nodes)
    kept = set(keep_nodes)
    if vertex_filter is None:
        member = lambda x: True
    elif callable(vertex_filter):
        member = vertex_filter
    else:
        allowed = set(vertex_filter)
        member = allowed.__contains__
    edges = [(a, b) for a, b in td.edges() if a in kept and b in kept]
    if extra_edge is not None:
        edges.append(extra_edge)
    clusters = {i: [x for x in td.clusters[i] if member(x)] for i in keep_nodes}
    return TreeDecomposition(keep_nodes, edges, clusters, td.graph_n)


@dataclass
class WeightReport:
    path_weight: int
    relative_weight: Fraction
    is_heaviest: bool


def path_weight(td, path_nodes):
    """Number of distinct vertices in the clusters along a node sequence."""
    seen = set()
    for i in path_nodes:
        seen.update(td.clusters[i])
    return len(seen)


def _weight_sweep(td, start, ops=None):
    """DFS from `start`; returns (weights, parents) for path unions.

    weights[i] = |union of clusters on the tree path start..i|. Relies on
    cluster connectivity: any previously seen vertex recurring in a cluster
    must already sit in the parent cluster.
    """
    seen = [False] * (td.graph_n + 1)
    weight = {}
    parent = {start: None}
    order = []
    stack = [(start, None, 0)]
    while stack:
        i, p, wp = stack.pop()
        fresh = 0
        for x in td.clusters[i]:
            if not seen[x]:
                seen[x] = True
                fresh += 1
        if ops is not None:
            ops.add(len(td.clusters[i]) + 1)
        w = wp + fresh
        weight[i] = w
        order.append(i)
        for j in td.neighbors[i]:
            if j != p:
                parent[j] = i
                stack.append((j, i, w))
    return weight, parent, order

def _argmax(weight, order):
    best = order[0]
    for i in order:
        if weight[i] > weight[best]:
            best = i
    return best


def heaviest_path(td, n_vertices=None, ops=None):
    """Tree path maximizing the union of its clusters, via two DFS sweeps.

    Ties stick with the first maximum in discovery order. Returns the node
    sequence and a weight report; `n_vertices` overrides the denominator of
    the relative weight (defaults to the host graph order).
    """
    start = min(td.nodes)
    w1, _, order1 = _weight_sweep(td, start, ops)
    a = _argmax(w1, order1)
    w2, parent, order2 = _weight_sweep(td, a, ops)
    b = _argmax(w2, order2)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    if n_vertices is None:
        n_vertices = td.graph_n
    return path, WeightReport(w2[b], Fraction(w2[b], n_vertices), True)


def is_nonredundant_path(td, path_nodes):
    """True if the first node qualifies as a start: nonempty first cluster and
    no cluster contained in its predecessor along the sequence."""
    first = set(td.clusters[path_nodes[0]])
    if not first:
        return False
    prev = first
    for i in path_nodes[1:]:
        cur = set(td.clusters[i])
        if cur <= prev:
            return False
        prev = cur
    return True


def orient_path(td, path_nodes):
    """Return the sequence oriented so its first node is a valid start."""
    if is_nonredundant_path(td, path_nodes):
        return list(path_nodes)
    rev = list(reversed(path_nodes))
    if is_nonredundant_path(td, rev):
        return rev
    raise RedundantPath("neither end of the path is a nonredundant start")


def tree_to_width1_td(g):
    """Width-1 decomposition of a tree: one node per edge, clusters are the
    edge endpoints, and a longest path of the tree maps onto a tree path of
    the decomposition (so its relative weight is at least the relative
    diameter)."""
    if not g.is_tree():
        raise NotATree("input must be a connected acyclic graph")
    if g.n == 1:
        return TreeDecomposition([1], [], {1: [1]}, 1)
    spine = longest_path_in_tree(g)
    root = spine[0]
    # DFS from the longest-path end; each non-root vertex owns its parent edge
    parent = [0] * (g.n + 1)
    order = []
    visited = [False] * (g.n + 1)
    visited[root] = True
    # visit the spine successor first so spine edges get consecutive ids
    stack = [w for w in reversed(g.adj[root]) if w != spine[1]] + [spine[1]]
    for w in g.adj[root]:
        parent[w] = root
    while stack:
        v = stack.pop()
        if visited[v]:
            continue
        visited[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not visited[w]:
                parent[w] = v
                stack.append(w)
    node_of = {v: k + 1 for k, v in enumerate(order)}
    clusters = {node_of[v]: [parent[v], v] for v in order}
    anchor = node_of[spine[1]]  # stand-in for the root, which owns no edge
    edges = []
    for v in order:
        p = parent[v]
        if p == root:
            if node_of[v] != anchor:
                edges.append((node_of[v], anchor))
        else:
            edges.append((node_of[v], node_of[p]))
    return TreeDecomposition(list(range(1, len(order) + 1)), edges, clusters, g.n)
