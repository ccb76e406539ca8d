"""Cartesian (elimination) trees of trees and graphs.

The elimination tree of a connected graph takes the minimum-priority vertex
as root and recurses on the components left after deleting it.  On a tree
this is repeated tree-min plus cutting every edge at the minimum.  On a
general graph only a maximum spanning tree under edge weight
``min(p(u), p(v))`` matters: every other edge is incident to the minimum of
some cycle, and deleting such edges leaves the elimination tree unchanged.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional

from .dtm import UoDtm
from .errors import BadParams, Disconnected, TooLarge
from .fixtures import adjacency, root_tree
from .forest import RootedForest
from .heaps import HEAPS
from .oracle import INF, MappedOracle, vertex_sentinel
from .reference import elimination_tree


@dataclass
class EliminationTree:
    parent: List[Optional[int]]
    kind: Optional[List[str]] = None  # "vertex"/"edge" for edge elimination trees

    @property
    def root(self):
        return next(v for v, p in enumerate(self.parent) if p is None)

    def serialize(self):
        lines = []
        for v, p in enumerate(self.parent):
            k = self.kind[v] if self.kind else "vertex"
            lines.append(f"{v} {'-' if p is None else p} {k}")
        return "\n".join(lines) + "\n"


@dataclass
class DjpTrace:
    """Insert time ``s`` and delete time ``t`` of every vertex, both measured
    as the number of heap inserts done so far."""

    inserted: dict = field(default_factory=dict)
    deleted: dict = field(default_factory=dict)

    def log_sum(self):
        return sum(math.log2(max(1, self.deleted[x] - self.inserted[x])) for x in self.deleted)


def _check_simple(n, edges):
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise BadParams(f"bad edge ({u}, {v})")


def cartesian_on_tree(n, edges, oracle, dtm_factory=UoDtm):
    """Elimination tree of a tree given as ``n`` and an edge list."""
    _check_simple(n, edges)
    if n == 0:
        return EliminationTree([])
    if len(edges) != n - 1:
        raise BadParams("a tree on n vertices has n-1 edges")
    par = root_tree(adjacency(n, edges), 0)
    if sum(p is None for p in par) != 1:
        raise Disconnected("input tree is not connected")
    cur = RootedForest.from_parents(par)
    dtm = dtm_factory(cur, oracle)
    out = [None] * n
    work = [(0, None)]
    while work:
        c, p = work.pop()
        v = dtm.tree_min(c)
        out[v] = p
        pv = cur.parent(v)
        if pv is not None:
            cur.cut(v)
            dtm.cut(v)
            work.append((pv, v))
        for w in cur.children(v):
            cur.cut(w)
            dtm.cut(w)
            work.append((w, v))
    return EliminationTree(out)


def max_spanning_tree(n, edges, oracle, heap="binary", trace=None):
    """Prim-style search for a spanning tree maximising ``min(p(u), p(v))``.

    Returns the chosen edges.  Weights are vertex handles, so every weight
    comparison is one oracle comparison.
    """
    weight = [oracle.min(u, v) for u, v in edges]
    adj = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        adj[u].append((v, i))
        adj[v].append((u, i))
    less = oracle.less
    h = HEAPS[heap](lambda a, b: less(b, a))  # max-heap on weights
    via = {}
    done = [False] * n
    inserts = 0
    tree = []
    if n == 0:
        return tree
    h.insert(0, INF)
    inserts += 1
    if trace is not None:
        trace.inserted[0] = inserts
    while len(h):
        x, _ = h.delete_min()
        done[x] = True
        if trace is not None:
            trace.deleted[x] = inserts
        if x in via:
            tree.append(edges[via[x]])
        for y, i in adj[x]:
            if done[y]:
                continue
            w = weight[i]
            if y not in h:
                h.insert(y, w)
                via[y] = i
                inserts += 1
                if trace is not None:
                    trace.inserted[y] = inserts
            else:
                cur = h.key(y)
                if cur != w and less(cur, w):
                    h.decrease_key(y, w)
                    via[y] = i
    if len(tree) != n - 1:
        raise Disconnected("graph is not connected")
    return tree


def djp_max_spanning_tree(n, edges, oracle, heap="binary"):
    """Maximum spanning tree under ``min(p(u), p(v))`` plus its heap trace."""
    trace = DjpTrace()
    return max_spanning_tree(n, edges, oracle, heap, trace), trace


def cartesian_on_graph(n, edges, oracle, heap="binary", trace=None, dtm_factory=UoDtm):
    _check_simple(n, edges)
    tree = max_spanning_tree(n, edges, oracle, heap, trace)
    return cartesian_on_tree(n, tree, oracle, dtm_factory)


def subdivided_graph(n, edges):
    """Vertices keep their ids; edge ``i`` becomes vertex ``n + i``."""
    sub = []
    for i, (u, v) in enumerate(edges):
        sub.append((u, n + i))
        sub.append((n + i, v))
    return n + len(edges), sub


def ept_on_graph(n, edges, edge_oracle, heap="binary", dtm_factory=UoDtm):
    """Edge elimination tree: edges are inner nodes, vertices are leaves.

    Node ``v < n`` is vertex ``v``; node ``n + i`` is edge ``i``.  Vertices
    get per-vertex infinities ordered by id, which breaks ties.
    """
    N, sub = subdivided_graph(n, edges)
    mapping = [vertex_sentinel(v) for v in range(n)] + list(range(len(edges)))
    oracle = MappedOracle(edge_oracle, mapping)
    et = cartesian_on_graph(N, sub, oracle, heap, dtm_factory=dtm_factory)
    et.kind = ["vertex"] * n + ["edge"] * len(edges)
    return et


def count_elimination_trees(n, edges):
    """|ET(G)| by exhaustive recursion over vertex subsets (n <= 10)."""
    if n > 10:
        raise TooLarge("exhaustive count limited to 10 vertices")
    nbr = [0] * n
    for u, v in edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u

    def comps(mask):
        out = []
        while mask:
            seed = mask & -mask
            comp = seed
            frontier = seed
            while frontier:
                b = frontier & -frontier
                frontier ^= b
                new = nbr[b.bit_length() - 1] & mask & ~comp
                comp |= new
                frontier |= new
            out.append(comp)
            mask &= ~comp
        return out

    @lru_cache(maxsize=None)
    def count(mask):
        total = 0
        m = mask
        while m:
            b = m & -m
            m ^= b
            prod = 1
            for c in comps(mask & ~b):
                prod *= count(c)
            total += prod
        return total

    result = 1
    for c in comps((1 << n) - 1):
        result *= count(c)
    return result


def verify_min_edge_removal(n, edges, key, deletions):
    """Check that deleting edges at cycle minima keeps the elimination tree.

    ``deletions`` is a list of ``(cycle, edge)``: ``cycle`` lists vertices in
    order, ``edge`` must lie on it and touch its minimum-``key`` vertex.
    Returns False on an illegal deletion or a changed tree.
    """
    current = {tuple(sorted(e)) for e in edges}

    def ind():
        return elimination_tree(adjacency(n, sorted(current)), key)

    reference = ind()
    for cycle, e in deletions:
        e = tuple(sorted(e))
        k = len(cycle)
        ring = {tuple(sorted((cycle[i], cycle[(i + 1) % k]))) for i in range(k)}
        if k < 3 or e not in ring or not ring <= current:
            return False
        m = min(cycle, key=key)
        if m not in e:
            return False
        current.discard(e)
        if ind() != reference:
            return False
    return True
