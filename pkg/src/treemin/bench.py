"""Benchmark harness: fixtures, workloads, run records and reports.

Command line::

    python -m treemin generate --family star --n 1024 --seed 1 -o star.txt
    python -m treemin run --fixture star.txt --structure uo --workload tree_sort --verify -o rec.json
    python -m treemin report --in runs/ --out results.csv
"""

import argparse
import csv
import json
import math
import os
import random
import sys
import time
from dataclasses import asdict, dataclass, field

from .dtm import NaiveDtm, UoDtm
from .entropy import entropy_k, entropy_subset, lower_bound, tree_entropy
from .errors import BadParams, OracleMismatch, TreeMinError
from .fixtures import (
    FAMILIES,
    family_parents,
    monotone_priorities,
    random_connected_graph,
    random_permutation,
    read_forest,
    read_graph,
    write_graph,
)
from .forest import RootedForest
from .oracle import PriorityOracle
from .paths import PathDtm
from .reference import ScanDtm

STRUCTURES = ("uo", "naive", "path", "brute")
CSV_COLUMNS = ("family", "n", "m", "structure", "comparisons", "H", "H_m", "lower_bound", "ratio")


def make_structure(name, forest, oracle):
    if name == "uo":
        return UoDtm(forest, oracle)
    if name == "naive":
        return NaiveDtm(forest, oracle)
    if name == "path":
        return _PathAdapter(forest, oracle)
    if name == "brute":
        return ScanDtm(forest, oracle=oracle)
    raise BadParams(f"unknown structure {name!r}")


class _PathAdapter:
    def __init__(self, forest, oracle):
        self.p = PathDtm(forest, oracle)

    def tree_min(self, v):
        return self.p.tree_min(v)

    def cut(self, v):
        self.p.cut(v)


# -- workloads ---------------------------------------------------------------


def parse_workload(text):
    if text.startswith("top_k:"):
        k = int(text.split(":", 1)[1])
        if k < 0:
            raise BadParams("top_k needs K >= 0")
        return "top_k", k
    if text in ("tree_sort", "random_cuts", "mixed"):
        return text, None
    raise BadParams(f"unknown workload {text!r}")


def workload_priorities(kind, forest, rng):
    """Tree-sorting workloads need priorities that grow towards the root."""
    if kind in ("tree_sort", "top_k"):
        return monotone_priorities(forest, rng)
    prio = [None] * forest.capacity()
    for v, r in zip(forest.nodes(), random_permutation(len(forest), rng)):
        prio[v] = r
    return prio


class _Shadow:
    """Plain parent bookkeeping so workloads can pick legal cuts."""

    def __init__(self, forest):
        self.f = forest.copy()
        self.cuttable = [v for v in forest.nodes() if forest.parent(v) is not None]
        self.where = {v: i for i, v in enumerate(self.cuttable)}

    def cut(self, v):
        self.f.cut(v)
        i = self.where.pop(v)
        last = self.cuttable.pop()
        if last != v:
            self.cuttable[i] = last
            self.where[last] = i

    def random_edge(self, rng):
        return self.cuttable[rng.randrange(len(self.cuttable))] if self.cuttable else None


def run_workload(struct, forest, kind, k, m, rng, check=None):
    """Drive ``struct`` and return (ops performed, set of cut nodes).

    ``check(v, answer)`` is called after every query when given.
    """
    shadow = _Shadow(forest)
    ops = 0
    cut_nodes = set()
    limit = m if m else float("inf")

    def query(v):
        nonlocal ops
        a = struct.tree_min(v)
        ops += 1
        if check is not None:
            check(v, a)
        return a

    def cut(v):
        nonlocal ops
        struct.cut(v)
        shadow.cut(v)
        cut_nodes.add(v)
        ops += 1

    if kind in ("tree_sort", "top_k"):
        rounds = 0
        for r in forest.roots():
            while ops < limit and (kind == "tree_sort" or rounds < k):
                v = query(r)
                rounds += 1
                if v == r or ops >= limit:
                    break
                cut(v)
            if kind == "top_k" and rounds >= k:
                break
    elif kind == "random_cuts":
        nodes = forest.nodes()
        while ops < limit:
            if rng.random() < 0.5 and shadow.cuttable:
                cut(shadow.random_edge(rng))
            else:
                query(nodes[rng.randrange(len(nodes))])
    elif kind == "mixed":
        nodes = forest.nodes()
        while ops < limit:
            v = query(nodes[rng.randrange(len(nodes))])
            if ops >= limit:
                break
            if shadow.f.parent(v) is not None and rng.random() < 0.5:
                cut(v)
            elif shadow.cuttable:
                cut(shadow.random_edge(rng))
    return ops, cut_nodes


# -- records -----------------------------------------------------------------


@dataclass
class RunRecord:
    fixture: str
    family: str
    n: int
    leaves: int
    structure: str
    workload: str
    m: int
    pseed: int
    comparisons: int
    build_comparisons: int
    wall_time: float
    H: float
    H_m: float
    H_S: float
    lower_bound: float
    ratio: float
    refined_bound: float
    verified: bool
    extra: dict = field(default_factory=dict)

    def to_json(self):
        return json.dumps(asdict(self), indent=2, sort_keys=True)


def _fixture_meta(path):
    meta = {}
    with open(path) as fh:
        first = fh.readline()
    if first.startswith("#"):
        for tok in first[1:].split():
            if "=" in tok:
                a, b = tok.split("=", 1)
                meta[a] = b
    return meta


def run_forest(forest, structure, workload, m=0, pseed=0, verify=False, fixture="", family=""):
    kind, k = parse_workload(workload)
    rng = random.Random(pseed)
    prio = workload_priorities(kind, forest, rng)
    oracle = PriorityOracle(prio)
    t0 = time.perf_counter()
    struct = make_structure(structure, forest, oracle)
    build = oracle.comparisons
    check = None
    if verify:
        brute = ScanDtm(forest, key=oracle.rank_for_testing)

        def check(v, a):
            b = brute.tree_min(v)
            if a != b:
                raise OracleMismatch(f"tree_min({v}) = {a}, expected {b}")

        inner_cut = struct.cut

        def cut_both(v):
            inner_cut(v)
            brute.cut(v)

        struct.cut = cut_both
    ops, cut_nodes = run_workload(struct, forest, kind, k, m, rng, check)
    wall = time.perf_counter() - t0
    n = len(forest)
    leaves = sum(1 for v in forest.nodes() if forest.is_leaf(v))
    H = tree_entropy(forest)
    H_m = entropy_k(forest, ops)[0]
    H_S = entropy_subset(forest, cut_nodes)
    comps = oracle.comparisons
    refined = ops + n + min(ops, leaves) * math.log2(max(n, 2)) + H_S
    return RunRecord(
        fixture=fixture,
        family=family,
        n=n,
        leaves=leaves,
        structure=structure,
        workload=workload,
        m=ops,
        pseed=pseed,
        comparisons=comps,
        build_comparisons=build,
        wall_time=wall,
        H=H,
        H_m=H_m,
        H_S=H_S,
        lower_bound=lower_bound(forest, ops),
        ratio=comps / (ops + n + H_m),
        refined_bound=refined,
        verified=verify,
    )


def run_graph(n, edges, pseed=0, verify=False, fixture="", family="random_graph"):
    from .cartesian import cartesian_on_graph
    from .fixtures import adjacency
    from .reference import elimination_tree

    rng = random.Random(pseed)
    prio = random_permutation(n, rng)
    oracle = PriorityOracle(prio)
    t0 = time.perf_counter()
    et = cartesian_on_graph(n, edges, oracle)
    wall = time.perf_counter() - t0
    if verify:
        ref = elimination_tree(adjacency(n, edges), lambda v: prio[v])
        if {v: p for v, p in enumerate(et.parent)} != ref:
            raise OracleMismatch("elimination tree differs from the definition")
    H = tree_entropy(RootedForest.from_parents(et.parent)) if n else 0.0
    return RunRecord(
        fixture=fixture,
        family=family,
        n=n,
        leaves=0,
        structure="cartesian",
        workload="elimination_tree",
        m=len(edges),
        pseed=pseed,
        comparisons=oracle.comparisons,
        build_comparisons=0,
        wall_time=wall,
        H=H,
        H_m=0.0,
        H_S=0.0,
        lower_bound=float(max(len(edges), n - 1)),
        ratio=oracle.comparisons / max(1, len(edges) + n),
        refined_bound=0.0,
        verified=verify,
    )


# -- command line --------------------------------------------------------------


def cmd_generate(args):
    if args.family not in FAMILIES:
        raise BadParams(f"unknown family {args.family!r}")
    header = f"# family={args.family} n={args.n} seed={args.seed}\n"
    if args.family == "random_graph":
        rng = random.Random(args.seed)
        m = args.edges if args.edges is not None else min(2 * args.n, args.n * (args.n - 1) // 2)
        n, edges = random_connected_graph(args.n, max(m, args.n - 1), rng)
        write_graph(args.output, n, edges)
        return 0
    parents = family_parents(args.family, args.n, args.seed, args.k)
    rank = {}
    with open(args.output, "w") as fh:
        fh.write(header)
        for v, p in enumerate(parents):
            r = 0
            if p is not None:
                r = rank.get(p, 0)
                rank[p] = r + 1
            fh.write(f"{v} {'-' if p is None else p} {r}\n")
    return 0


def _is_graph_file(path):
    with open(path) as fh:
        first = fh.readline().split()
    return len(first) == 2


def cmd_run(args):
    meta = _fixture_meta(args.fixture)
    family = meta.get("family", os.path.splitext(os.path.basename(args.fixture))[0])
    if _is_graph_file(args.fixture):
        n, edges = read_graph(args.fixture)
        rec = run_graph(n, edges, args.pseed, args.verify, args.fixture)
    else:
        forest = read_forest(args.fixture)
        rec = run_forest(forest, args.structure, args.workload, args.m, args.pseed, args.verify, args.fixture, family)
    text = rec.to_json()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_report(args):
    rows = []
    for name in sorted(os.listdir(args.input)):
        if not name.endswith(".json"):
            continue
        with open(os.path.join(args.input, name)) as fh:
            rec = json.load(fh)
        rows.append({c: rec[c] for c in CSV_COLUMNS})
    with open(args.out, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        w.writeheader()
        w.writerows(rows)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="treemin", description="decremental tree minima benchmarks")
    sub = ap.add_subparsers(dest="command", required=True)
    g = sub.add_parser("generate", help="write a fixture file")
    g.add_argument("--family", required=True, choices=FAMILIES)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--k", type=int, default=None, help="bad_tree: number of single-node children")
    g.add_argument("--edges", type=int, default=None, help="random_graph: number of edges")
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=cmd_generate)
    r = sub.add_parser("run", help="run one workload on one fixture")
    r.add_argument("--fixture", required=True)
    r.add_argument("--structure", choices=STRUCTURES, default="uo")
    r.add_argument("--workload", default="tree_sort", help="tree_sort, top_k:K, random_cuts or mixed")
    r.add_argument("--m", type=int, default=0, help="operation budget (0 = workload default)")
    r.add_argument("--pseed", type=int, default=0)
    r.add_argument("--verify", action="store_true")
    r.add_argument("-o", "--output", default=None)
    r.set_defaults(func=cmd_run)
    p = sub.add_parser("report", help="collect run records into a CSV")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_report)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OracleMismatch as e:
        print(f"oracle mismatch: {e}", file=sys.stderr)
        return 3
    except (TreeMinError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
