"""Shared generators and brute-force checks for the test suite."""

import math
import random

from treemin.dtm import Edtm, NaiveDtm, UoDtm
from treemin.fixtures import (
    bad_tree_parents,
    caterpillar_parents,
    complete_binary_parents,
    path_parents,
    random_tree_parents,
    star_parents,
)
from treemin.forest import RootedForest
from treemin.oracle import PriorityOracle
from treemin.reference import ScanDtm

ACCEPTANCE = []  # one PASS/FAIL line per criterion, printed in the summary


def verdict(name, ok, detail):
    line = f"{name}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE.append(line)
    print(line)
    return ok


def random_parents(n, rng):
    kind = rng.randrange(7)
    if kind == 0:
        return path_parents(n)
    if kind == 1:
        return star_parents(n)
    if kind == 2:
        return caterpillar_parents(n)
    if kind == 3:
        return complete_binary_parents(n)
    if kind == 4:
        return bad_tree_parents(n)
    if kind == 5:
        # forest: several random trees side by side
        par = []
        while len(par) < n:
            size = rng.randint(1, n - len(par))
            base = len(par)
            par += [None if p is None else p + base for p in random_tree_parents(size, rng)]
        return par
    return random_tree_parents(n, rng)


def fuzz_size(rng, n_max=300, m_max=3000):
    """Sizes skewed towards small cases.

    Nine runs in ten draw n log-uniformly from [1, 60], the rest uniformly
    from (60, n_max].  Usually m is at most 3n + 3, enough to cut every
    edge; one run in a hundred takes m up to m_max and is query heavy.
    """
    small = min(60, n_max)
    if n_max <= small or rng.random() < 0.9:
        n = min(small, int(math.exp(rng.uniform(0, math.log(small + 1)))))
    else:
        n = rng.randint(small + 1, n_max)
    n = max(1, n)
    cap = m_max if rng.random() < 0.01 else min(m_max, 3 * n + 3)
    return n, rng.randint(1, cap)


def random_ops(forest, m, rng):
    """Valid interleaving of ('min', v) and ('cut', v) over the given forest."""
    cuttable = [v for v in forest.nodes() if forest.parent(v) is not None]
    rng.shuffle(cuttable)
    nodes = forest.nodes()
    ops = []
    for _ in range(m):
        if cuttable and rng.random() < 0.5:
            ops.append(("cut", cuttable.pop()))
        else:
            ops.append(("min", nodes[rng.randrange(len(nodes))]))
    return ops


def check_case(n, m, seed):
    """Run one fuzz case through every structure; return a list of problems."""
    rng = random.Random(seed)
    par = random_parents(n, rng)
    forest = RootedForest.from_parents(par)
    perm = list(range(n))
    rng.shuffle(perm)
    ops = random_ops(forest, m, rng)
    bad = []

    key = perm.__getitem__
    oracle = PriorityOracle(perm)
    uo = UoDtm(forest, oracle)
    naive = NaiveDtm(forest, PriorityOracle(perm))
    eperm = list(range(n))
    rng.shuffle(eperm)
    edtm = Edtm(forest, PriorityOracle(eperm))
    weight = [rng.randrange(1000) for _ in range(n)]
    sums = UoDtm(forest, weight=weight.__getitem__, combine=lambda a, b: a + b)
    brute = ScanDtm(forest, key=key)
    seen = {}  # root -> scanned answers, dropped on every cut
    for op, v in ops:
        if op == "cut":
            for s in (uo, naive, edtm, sums, brute):
                s.cut(v)
            seen.clear()
            continue
        r = brute.f.root_of(v)
        if r not in seen:
            comp = brute.tree_nodes(r)
            edges = comp[1:]  # every node but the root names an edge
            seen[r] = (
                min(comp, key=key),
                min(edges, key=eperm.__getitem__) if edges else None,
                sum(weight[w] for w in comp),
            )
        want, ewant, total = seen[r]
        if uo.tree_min(v) != want:
            bad.append(("uo", seed, v))
        if naive.tree_min(v) != want:
            bad.append(("naive", seed, v))
        if edtm.tree_min(v) != ewant:
            bad.append(("edtm", seed, v))
        if sums.tree_sum(v) != total:
            bad.append(("sum", seed, v))
    return bad
