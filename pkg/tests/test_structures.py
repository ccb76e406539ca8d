import math
import operator
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treemin.compress import CanonicalCut, CanonicalSplit, Compression, maximal_chains
from treemin.dtm import Edtm, NaiveDtm, UoDtm, subdivide
from treemin.dynforest import DynamicForest
from treemin.errors import AlreadyPresent, DeadNode, DuplicateElement, Empty, IsRoot, ModeMismatch, OutOfOrder
from treemin.extremal import ExtremalLeaves, dfs_labels
from treemin.forest import RootedForest
from treemin.oracle import INF, PriorityOracle
from treemin.reference import ScanDtm
from treemin.splayseq import SplaySequence

from helpers import random_ops, random_parents


def argmin_seq(elems, key):
    return SplaySequence(elems, lambda e: e, lambda a, b: a if key(a) < key(b) else b)


# -- dynamic forest -------------------------------------------------------------


def test_dynforest_examples():
    f = RootedForest.from_parents([None, 0, 0, 1])
    o = PriorityOracle([4, 3, 2, 1])
    d = DynamicForest(f, list(range(4)), less=o.less)
    assert d.tree_min(0) == 3
    d.cut(1)
    assert d.tree_min(0) == 2 and d.tree_min(3) == 3
    assert d.subtree_min(1) == 3
    with pytest.raises(IsRoot):
        d.cut(1)


def test_dynforest_inf_is_free():
    f = RootedForest.from_parents([None, 0, 0])
    o = PriorityOracle([1, 2, 3])
    d = DynamicForest(f, {0: INF, 1: INF, 2: INF}, less=o.less)
    assert d.tree_min(2) == 0 and d.priority(0) == INF
    assert o.comparisons == 0


def test_dynforest_semigroup():
    f = RootedForest.from_parents([None, 0, 1, 0])
    d = DynamicForest(f, [1, 10, 100, 1000], combine=operator.add)
    assert d.tree_sum(2) == 1111
    d.cut(1)
    assert d.tree_sum(0) == 1001 and d.tree_sum(2) == 110
    u1, u2 = d.split(1)
    assert d.tree_sum(u1) == 10 and d.tree_sum(2) == 110


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 80), st.integers(0, 10**6))
def test_dynforest_matches_scan(n, seed):
    rng = random.Random(seed)
    f = RootedForest.from_parents(random_parents(n, rng))
    perm = list(range(n))
    rng.shuffle(perm)
    o = PriorityOracle(perm)
    d = DynamicForest(f, {v: v for v in range(n)}, less=o.less)
    ref = f.copy()
    for _ in range(3 * n):
        live = ref.nodes()
        v = live[rng.randrange(len(live))]
        r = rng.random()
        if ref.parent(v) is not None and r < 0.4:
            ref.cut(v)
            d.cut(v)
        elif r < 0.6:
            ids = ref.split(v)
            d.split(v, ids)
        elif r < 0.7:
            d.set_priority(v, rng.choice(range(n)))
        w = rng.choice(ref.nodes())
        comp = ref.preorder(ref.root_of(w))
        expect = min(comp, key=lambda x: perm[d.priority(x)])
        assert perm[d.priority(d.tree_min(w))] == perm[d.priority(expect)]
        sub = ref.preorder(w)
        assert perm[d.priority(d.subtree_min(w))] == min(perm[d.priority(x)] for x in sub)


# -- splay sequences -------------------------------------------------------------


def test_splay_min_and_order():
    key = {"a": 5, "b": 2, "c": 9}.__getitem__
    s = argmin_seq("abc", key)
    assert s.min() == "b" and s.elements() == list("abc")
    assert s.predecessor("b") == "a" and s.successor("c") is None


def test_splay_split_interval():
    s = argmin_seq(range(10), lambda e: -e if e < 100 else e)
    rest, run = s.split_interval(3, 6, 100)
    assert rest.elements() == [0, 1, 2, 100, 7, 8, 9]
    assert run.elements() == [3, 4, 5, 6]
    assert run.min() == 6 and rest.min() == 9
    assert rest.predecessor(100) == 2 and rest.successor(100) == 7
    with pytest.raises(DeadNode):
        len(s)
    r2, r3 = run.split_interval(3, 4)
    assert r2.elements() == [5, 6] and r3.elements() == [3, 4]


def test_splay_errors():
    with pytest.raises(DuplicateElement):
        argmin_seq([1, 1], lambda e: e)
    s = argmin_seq([1, 2, 3], lambda e: e)
    with pytest.raises(AlreadyPresent):
        s.replace(1, 2)
    for a, b in [(3, 1), (2, 1), (3, 2)]:
        with pytest.raises(OutOfOrder):
            s.split_interval(a, b)
        assert s.elements() == [1, 2, 3] and s.min() == 1
    s = argmin_seq(range(8), lambda e: e)
    with pytest.raises(OutOfOrder):
        s.split_interval(5, 2)
    assert s.elements() == list(range(8)) and len(s) == 8
    s = argmin_seq([], lambda e: e)
    with pytest.raises(Empty):
        s.min()


def test_splay_potential_complete_seven():
    s = argmin_seq(range(7), lambda e: e)
    assert s.potential(lambda e: 1) == pytest.approx(math.log2(7) + 2 * math.log2(3))
    assert s.potential(lambda e: 1) == pytest.approx(5.977, abs=1e-3)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 60), st.integers(0, 10**6))
def test_splay_against_list(n, seed):
    rng = random.Random(seed)
    pr = {e: rng.random() for e in range(10 * n)}
    key = pr.__getitem__
    seqs = [(argmin_seq(list(range(n)), key), list(range(n)))]
    fresh = n
    for _ in range(3 * n):
        i = rng.randrange(len(seqs))
        s, ref = seqs[i]
        if not ref:
            continue
        if rng.random() < 0.3:
            j = rng.randrange(len(ref))
            s.replace(ref[j], fresh)
            ref[j] = fresh
            fresh += 1
        else:
            a = rng.randrange(len(ref))
            b = rng.randrange(a, len(ref))
            z = None
            if rng.random() < 0.5:
                z = fresh
                fresh += 1
            rest, run = s.split_interval(ref[a], ref[b], z)
            ref_rest = ref[:a] + ([z] if z is not None else []) + ref[b + 1 :]
            seqs[i] = (rest, ref_rest)
            seqs.append((run, ref[a : b + 1]))
        for s2, r2 in seqs:
            assert s2.elements() == r2
            if r2:
                assert s2.min() == min(r2, key=key)


# -- extremal leaves ---------------------------------------------------------------


def brute_extremal(f, v):
    leaves = [x for x in f.preorder(v) if f.is_leaf(x)]
    return leaves[0], leaves[-1]


def test_dfs_labels():
    f = RootedForest.from_parents([None, 0, 0, 1])
    pre, post = dfs_labels(f)
    assert pre == {0: 0, 1: 1, 3: 2, 2: 3}
    assert post == {3: 0, 1: 1, 2: 2, 0: 3}


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 60), st.integers(0, 10**6))
def test_extremal_matches_brute(n, seed):
    rng = random.Random(seed)
    f = RootedForest.from_parents(random_parents(n, rng))
    e = ExtremalLeaves(f)
    for _ in range(2 * n):
        live = f.nodes()
        v = live[rng.randrange(len(live))]
        if f.parent(v) is not None and rng.random() < 0.5:
            f.cut(v)
            e.cut(v)
        else:
            e.split(v, f.split(v))
        for w in rng.sample(f.nodes(), min(8, len(f))):
            assert e.extremal(w) == brute_extremal(f, w)


# -- compression -------------------------------------------------------------------


def test_chains_of_a_small_tree():
    # 0 - 1 - {2 - 3, 4}
    f = RootedForest.from_parents([None, 0, 1, 2, 1])
    assert maximal_chains(f) == [[0, 1], [2, 3], [4]]
    c = Compression(f)
    assert c.super_count() == 3
    assert c.super_of(3) == c.super_of(2) == 1 and c.super_of(0) == 0
    assert c.top_of(1) == 2 and c.root_of(4) == 0


def test_star_super_nodes():
    k = 6
    c = Compression(RootedForest.from_parents([None] + [0] * k))
    assert c.super_count() == k + 1


def test_path_is_one_super_node():
    c = Compression(RootedForest.from_parents([None, 0, 1, 2]))
    assert c.super_count() == 1
    op = c.cut(2)
    assert isinstance(op, CanonicalSplit)
    assert c.top_of(op.upper) == 0 and c.top_of(op.lower) == 2
    assert c.super_of(3) == op.lower and c.root_of(3) == 2


def test_compression_cut_between_chains():
    f = RootedForest.from_parents([None, 0, 1, 2, 1])
    c = Compression(f)
    op = c.cut(4)
    assert op == CanonicalCut(2, 0)
    with pytest.raises(IsRoot):
        c.cut(0)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 80), st.integers(0, 10**6))
def test_compression_invariants(n, seed):
    rng = random.Random(seed)
    f = RootedForest.from_parents(random_parents(n, rng))
    c = Compression(f)
    ref = f.copy()
    leaves0 = {r: sum(f.is_leaf(x) for x in f.preorder(r)) for r in f.roots()}
    start_root = {w: f.root_of(w) for w in range(n)}
    # every inner super-node starts with at least two children
    for x in c.Fp.nodes():
        assert c.Fp.is_leaf(x) or len(c.Fp.children(x)) >= 2
    order = [v for v in range(n) if f.parent(v) is not None]
    rng.shuffle(order)
    for v in order:
        c.cut(v)
        ref.cut(v)
        Fp = c.Fp
        edges = {r: 0 for r in leaves0}
        for x in Fp.nodes():
            if Fp.parent(x) is not None:
                edges[start_root[c.top_of(x)]] += 1
        for r, e in edges.items():
            assert e <= 2 * leaves0[r] - 2
        for w in range(n):
            assert c.root_of(w) == ref.root_of(w)
            # walking up inside a chain never leaves the super-node
            top = c.top_of(c.super_of(w))
            x = w
            while x != top:
                x = ref.parent(x)
                assert len(ref.children(x)) == 1
    assert c.Fp.cuts + c.Fp.splits == len(order)


# -- DTM ------------------------------------------------------------------------------


def drive(struct, f, ops, perm):
    ref = ScanDtm(f, key=perm.__getitem__)
    for kind, v in ops:
        if kind == "cut":
            struct.cut(v)
            ref.cut(v)
        else:
            assert struct.tree_min(v) == ref.tree_min(v)


def test_uo_examples():
    f = RootedForest.from_parents([None, 0, 0, 1, 1])
    perm = [3, 4, 0, 2, 1]
    o = PriorityOracle(perm)
    d = UoDtm(f, o)
    assert d.tree_min(3) == 2
    d.cut(2)
    assert d.tree_min(0) == 4 and d.tree_min(2) == 2
    d.cut(4)
    assert d.tree_min(3) == 3
    with pytest.raises(IsRoot):
        d.cut(0)
    with pytest.raises(ModeMismatch):
        d.tree_sum(0)
    with pytest.raises(ModeMismatch):
        UoDtm(f)


def test_single_node():
    d = UoDtm(RootedForest.from_parents([None]), PriorityOracle([0]))
    assert d.tree_min(0) == 0


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 80), st.integers(1, 300), st.integers(0, 10**6))
def test_uo_and_naive_match_scan(n, m, seed):
    rng = random.Random(seed)
    f = RootedForest.from_parents(random_parents(n, rng))
    perm = list(range(n))
    rng.shuffle(perm)
    ops = random_ops(f, m, rng)
    drive(UoDtm(f, PriorityOracle(perm)), f, ops, perm)
    drive(NaiveDtm(f, PriorityOracle(perm)), f, ops, perm)
    drive(UoDtm(f, PriorityOracle(perm), roots_backend="doubling"), f, ops, perm)


def test_all_canonical_cases_are_hit():
    rng = random.Random(5)
    seen = dict.fromkeys("abcde", 0)
    for _ in range(60):
        n = rng.randrange(2, 60)
        f = RootedForest.from_parents(random_parents(n, rng))
        perm = list(range(n))
        rng.shuffle(perm)
        d = UoDtm(f, PriorityOracle(perm))
        drive(d, f, random_ops(f, 3 * n, rng), perm)
        for k, c in d.stats()["cases"].items():
            seen[k] += c
    assert all(seen.values()), seen


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 60), st.integers(0, 10**6))
def test_uo_semigroup_sums(n, seed):
    rng = random.Random(seed)
    f = RootedForest.from_parents(random_parents(n, rng))
    w = [rng.randrange(1000) for _ in range(n)]
    d = UoDtm(f, weight=w.__getitem__, combine=operator.add)
    ref = ScanDtm(f, key=lambda v: v)
    for kind, v in random_ops(f, 2 * n, rng):
        if kind == "cut":
            d.cut(v)
            ref.cut(v)
        else:
            assert d.tree_sum(v) == sum(w[x] for x in ref.tree_nodes(v))


def test_subdivide():
    f = RootedForest.from_parents([None, 0, 0])
    sub, en = subdivide(f)
    assert en == {1: 3, 2: 4}
    assert sub.parent(1) == 3 and sub.parent(3) == 0
    assert sub.children(0) == [3, 4]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 60), st.integers(0, 10**6))
def test_edge_minima(n, seed):
    rng = random.Random(seed)
    f = RootedForest.from_parents(random_parents(n, rng))
    eperm = list(range(n))
    rng.shuffle(eperm)
    d = Edtm(f, PriorityOracle(eperm))
    ref = f.copy()
    for kind, v in random_ops(f, 2 * n, rng):
        if kind == "cut":
            d.cut(v)
            ref.cut(v)
        else:
            edges = [x for x in ref.preorder(ref.root_of(v)) if ref.parent(x) is not None]
            expect = min(edges, key=eperm.__getitem__) if edges else None
            assert d.tree_min(v) == expect
