"""Brute-force references used for verification.

Unless handed an oracle, everything here reads raw priority keys directly
and never touches a comparison counter, so it can run side by side with a
counted structure.
"""

from .forest import RootedForest


class ScanDtm:
    """Tree minima by scanning the whole tree on every query."""

    def __init__(self, forest: RootedForest, key=None, oracle=None):
        """Either ``key(v)``, the raw priority of ``v`` (uncounted), or an
        ``oracle`` whose comparisons are counted like any other structure."""
        self.f = forest.copy()
        self.key = key
        self.oracle = oracle

    def tree_min(self, v):
        r = self.f.root_of(v)
        if self.oracle is None:
            return min(self.f.preorder(r), key=self.key)
        less = self.oracle.less
        best = None
        for w in self.f.preorder(r):
            if best is None or less(w, best):
                best = w
        return best

    def tree_nodes(self, v):
        return list(self.f.preorder(self.f.root_of(v)))

    def cut(self, v):
        self.f.cut(v)


def components(adj, alive):
    """Connected components of the subgraph induced by ``alive``."""
    seen = set()
    out = []
    for s in sorted(alive):
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w in alive and w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(comp)
    return out


def elimination_tree(adj, key, alive=None):
    """Elimination tree by definition: remove the minimum, recurse.

    Returns a parent map (``None`` at the root of each component tree).
    """
    if alive is None:
        alive = set(range(len(adj)))
    parent = {}
    work = [(frozenset(c), None) for c in components(adj, set(alive))]
    while work:
        comp, par = work.pop()
        m = min(comp, key=key)
        parent[m] = par
        rest = set(comp)
        rest.discard(m)
        for c in components(adj, rest):
            work.append((frozenset(c), m))
    return parent


def bottleneck_vertex(adj, key, u, v):
    """Max over u-v paths of the min-priority vertex, by widest-path search."""
    import heapq

    best = {u: key(u)}
    heap = [(-key(u), u)]
    done = set()
    while heap:
        k, x = heapq.heappop(heap)
        if x in done:
            continue
        done.add(x)
        if x == v:
            return -k
        for y in adj[x]:
            cand = min(-k, key(y))
            if cand > best.get(y, float("-inf")):
                best[y] = cand
                heapq.heappush(heap, (-cand, y))
    return None
