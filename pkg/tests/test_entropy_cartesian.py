import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treemin.cartesian import (
    DjpTrace,
    cartesian_on_graph,
    cartesian_on_tree,
    count_elimination_trees,
    djp_max_spanning_tree,
    ept_on_graph,
    max_spanning_tree,
    subdivided_graph,
    verify_min_edge_removal,
)
from treemin.dtm import NaiveDtm
from treemin.entropy import (
    count_le_subset,
    count_linear_extensions,
    entropy_k,
    entropy_report,
    entropy_subset,
    enumerate_le_prefixes,
    h_tilde_bound_check,
    lower_bound,
    subdivided_parents,
    tree_entropy,
)
from treemin.errors import BadParams, Disconnected, TooLarge
from treemin.fixtures import adjacency, random_connected_graph, random_tree_parents
from treemin.forest import RootedForest
from treemin.oracle import PriorityOracle
from treemin.pathmin import build_bottleneck_index, build_edge_index, build_tree_index, reconstruct_et_via_queries
from treemin.reference import bottleneck_vertex, elimination_tree

from helpers import random_parents

STAR5 = [None, 0, 0, 0, 0]
PATH5 = [None, 0, 1, 2, 3]


# -- entropy ----------------------------------------------------------------------


def test_entropy_frozen_values():
    # star: four leaves at log2 5 each; path: log2(5^5 / 5!)
    assert tree_entropy(STAR5) == pytest.approx(9.2877, abs=1e-4)
    assert tree_entropy(PATH5) == pytest.approx(4.7027, abs=1e-4)
    assert tree_entropy([None]) == 0.0


def test_linear_extension_examples():
    assert count_linear_extensions([None, 0, 0, 1]) == 3
    assert count_linear_extensions(STAR5) == 24
    assert count_linear_extensions(PATH5) == 1
    assert count_le_subset(STAR5, {1, 2, 0}) == 2


def test_prefix_counts():
    # star on 4 nodes, prefixes of length 2 out of its leaves: 3 * 2
    assert enumerate_le_prefixes([None, 0, 0, 0], 2) == 6
    with pytest.raises(TooLarge):
        enumerate_le_prefixes([None] + [0] * 12, 2)


def test_entropy_k_witness():
    h, w = entropy_k(STAR5, 2)
    assert len(w) == 2 and 0 not in w
    assert h == pytest.approx(2.0)
    assert entropy_k(STAR5, 0) == (0.0, set())
    with pytest.raises(BadParams):
        entropy_k(STAR5, -1)


def brute_le(par):
    n = len(par)
    pos = {}
    count = 0
    for order in itertools.permutations(range(n)):
        for i, v in enumerate(order):
            pos[v] = i
        if all(p is None or pos[v] < pos[p] for v, p in enumerate(par)):
            count += 1
    return count


def brute_hk(par, k):
    n = len(par)
    best = 0.0
    for size in range(1, min(k, n) + 1):
        for S in itertools.combinations(range(n), size):
            best = max(best, entropy_subset(par, S))
    return best


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7), st.integers(0, 10**6))
def test_counts_and_hk_match_brute(n, seed):
    rng = random.Random(seed)
    par = random_parents(n, rng)
    assert count_linear_extensions(par) == brute_le(par)
    assert enumerate_le_prefixes(par, n) == brute_le(par)
    for k in range(n + 1):
        assert entropy_k(par, k)[0] == pytest.approx(brute_hk(par, k), abs=1e-9)
        assert h_tilde_bound_check(par, k)
    S = {v for v in range(n) if rng.random() < 0.5}
    if S:
        # H_S is log2 of |S|! over the hook product, up to the factorial gap
        assert math.log2(count_le_subset(par, S)) <= entropy_subset(par, S) + 1e-9


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 60), st.integers(0, 500), st.integers(0, 10**6))
def test_lower_bound_shape(n, m, seed):
    par = random_parents(n, random.Random(seed))
    lb = lower_bound(par, m)
    assert lb >= max(m, n)
    assert lb <= max(entropy_k(par, m // 2)[0], m, n)
    rep = entropy_report(par, m)
    assert rep.n == n and rep.lower_bound == lb
    assert rep.log_le == pytest.approx(math.log2(count_linear_extensions(par)))


def test_subdivided_parents():
    assert subdivided_parents([None, 0]) == [None, 2, 0]


# -- cartesian trees -------------------------------------------------------------------


def random_tree_edges(n, rng):
    par = random_tree_parents(n, rng)
    return [(v, p) for v, p in enumerate(par) if p is not None]


def test_path_and_star_elimination_trees():
    o = PriorityOracle([2, 0, 1])
    et = cartesian_on_tree(3, [(0, 1), (1, 2)], o)
    assert et.parent == [1, None, 1]
    star = [(0, 1), (0, 2), (0, 3)]
    et = cartesian_on_tree(4, star, PriorityOracle([0, 3, 1, 2]))
    assert et.parent == [None, 0, 0, 0]
    assert cartesian_on_tree(4, star, PriorityOracle([3, 0, 1, 2])).parent == [3, None, 1, 2]
    assert et.root == 0
    assert et.serialize().splitlines()[0] == "0 - vertex"


def test_triangle_keeps_max_spanning_tree():
    # the edge at the minimum vertex 0 of the cycle may go
    o = PriorityOracle([0, 1, 2])
    tree = max_spanning_tree(3, [(0, 1), (1, 2), (0, 2)], o)
    assert len(tree) == 2 and (1, 2) in [tuple(sorted(e)) for e in tree]
    et = cartesian_on_graph(3, [(0, 1), (1, 2), (0, 2)], PriorityOracle([0, 1, 2]))
    assert et.parent == [None, 0, 1]


def test_graph_errors():
    with pytest.raises(Disconnected):
        cartesian_on_graph(3, [(0, 1)], PriorityOracle([0, 1, 2]))
    with pytest.raises(BadParams):
        cartesian_on_graph(2, [(0, 0)], PriorityOracle([0, 1]))


def brute_et_count(n, edges):
    adj = adjacency(n, edges)
    seen = set()
    for perm in itertools.permutations(range(n)):
        t = elimination_tree(adj, perm.__getitem__)
        seen.add(tuple(sorted(t.items())))
    return len(seen)


def test_elimination_tree_counts():
    assert count_elimination_trees(3, [(0, 1), (1, 2)]) == 5
    assert count_elimination_trees(3, [(0, 1), (1, 2), (0, 2)]) == 6
    star = [(0, 1), (0, 2), (0, 3)]
    # centre first: 1; a leaf first leaves a 3-path: 3 * 5
    assert count_elimination_trees(4, star) == 16 == brute_et_count(4, star)
    with pytest.raises(TooLarge):
        count_elimination_trees(11, [])


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10**6))
def test_elimination_tree_count_matches_brute(n, seed):
    rng = random.Random(seed)
    m = rng.randrange(n - 1, n * (n - 1) // 2 + 1) if n > 1 else 0
    n, edges = random_connected_graph(n, m, rng)
    assert count_elimination_trees(n, edges) == brute_et_count(n, edges)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 60), st.integers(0, 10**6), st.sampled_from(["binary", "pairing"]))
def test_graph_et_matches_definition(n, seed, heap):
    rng = random.Random(seed)
    m = rng.randrange(n - 1, min(n * (n - 1) // 2, 4 * n) + 1) if n > 1 else 0
    n, edges = random_connected_graph(n, m, rng)
    perm = list(range(n))
    rng.shuffle(perm)
    ref = elimination_tree(adjacency(n, edges), perm.__getitem__)
    et = cartesian_on_graph(n, edges, PriorityOracle(perm), heap=heap)
    assert dict(enumerate(et.parent)) == ref
    et2 = cartesian_on_graph(n, edges, PriorityOracle(perm), dtm_factory=NaiveDtm)
    assert et2.parent == et.parent


def test_djp_trace():
    o = PriorityOracle([0, 1, 2, 3])
    tree, trace = djp_max_spanning_tree(4, [(0, 1), (1, 2), (2, 3), (0, 3)], o)
    assert len(tree) == 3 and isinstance(trace, DjpTrace)
    assert set(trace.deleted) <= set(trace.inserted)
    assert trace.log_sum() >= 0


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 8), st.integers(0, 10**6))
def test_min_edge_removal_keeps_tree(n, seed):
    rng = random.Random(seed)
    cyc = list(range(n))
    rng.shuffle(cyc)
    edges = [(cyc[i], cyc[(i + 1) % n]) for i in range(n)]
    key = [rng.random() for _ in range(n)].__getitem__
    m = min(cyc, key=key)
    i = cyc.index(m)
    legal = (cyc[i], cyc[(i + 1) % n])
    assert verify_min_edge_removal(n, edges, key, [(cyc, legal)])
    j = next(j for j in range(n) if m not in (cyc[j], cyc[(j + 1) % n]))
    assert not verify_min_edge_removal(n, edges, key, [(cyc, (cyc[j], cyc[(j + 1) % n]))])


def edge_et_by_definition(n, edges, eperm):
    N, sub = subdivided_graph(n, edges)
    key = [(1, v) for v in range(n)] + [(0, eperm[i]) for i in range(len(edges))]
    return elimination_tree(adjacency(N, sub), key.__getitem__)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 30), st.integers(0, 10**6))
def test_edge_elimination_tree(n, seed):
    rng = random.Random(seed)
    m = rng.randrange(n - 1, min(n * (n - 1) // 2, 3 * n) + 1) if n > 1 else 0
    n, edges = random_connected_graph(n, m, rng)
    eperm = list(range(len(edges)))
    rng.shuffle(eperm)
    et = ept_on_graph(n, edges, PriorityOracle(eperm))
    assert dict(enumerate(et.parent)) == edge_et_by_definition(n, edges, eperm)
    assert et.kind == ["vertex"] * n + ["edge"] * len(edges)
    for v in range(n):
        assert all(p != v for p in et.parent)  # vertices are leaves


# -- path minima -------------------------------------------------------------------------


def tree_path(adj, u, v):
    prev = {u: None}
    stack = [u]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in prev:
                prev[y] = x
                stack.append(y)
    out = [v]
    while out[-1] != u:
        out.append(prev[out[-1]])
    return out


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 80), st.integers(0, 10**6))
def test_tree_path_min(n, seed):
    rng = random.Random(seed)
    edges = random_tree_edges(n, rng)
    perm = list(range(n))
    rng.shuffle(perm)
    o = PriorityOracle(perm)
    ix = build_tree_index(n, edges, o)
    built = o.comparisons
    adj = adjacency(n, edges)
    for _ in range(100):
        u, v = rng.randrange(n), rng.randrange(n)
        assert ix.path_min(u, v) == min(tree_path(adj, u, v), key=perm.__getitem__)
    assert o.comparisons == built
    assert reconstruct_et_via_queries(ix, n, edges) == ix.et.parent


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 40), st.integers(0, 10**6))
def test_bottleneck_vertex(n, seed):
    rng = random.Random(seed)
    m = rng.randrange(n - 1, min(n * (n - 1) // 2, 4 * n) + 1) if n > 1 else 0
    n, edges = random_connected_graph(n, m, rng)
    perm = list(range(n))
    rng.shuffle(perm)
    o = PriorityOracle(perm)
    ix = build_bottleneck_index(n, edges, o)
    built = o.comparisons
    adj = adjacency(n, edges)
    for _ in range(50):
        u, v = rng.randrange(n), rng.randrange(n)
        assert perm[ix.bottleneck(u, v)] == bottleneck_vertex(adj, perm.__getitem__, u, v)
    assert o.comparisons == built


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 60), st.integers(0, 10**6))
def test_tree_path_min_edge(n, seed):
    rng = random.Random(seed)
    edges = random_tree_edges(n, rng)
    eperm = list(range(len(edges)))
    rng.shuffle(eperm)
    o = PriorityOracle(eperm)
    ix = build_edge_index(n, edges, o)
    built = o.comparisons
    adj = adjacency(n, edges)
    index = {frozenset(e): i for i, e in enumerate(edges)}
    for _ in range(60):
        u, v = rng.randrange(n), rng.randrange(n)
        path = tree_path(adj, u, v)
        es = [index[frozenset(p)] for p in zip(path, path[1:])]
        expect = min(es, key=eperm.__getitem__) if es else None
        assert ix.path_min_edge(u, v) == expect
    assert o.comparisons == built
