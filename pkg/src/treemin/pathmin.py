"""Path-minimum and bottleneck queries answered by LCA.

The minimum-priority vertex on the tree path between ``u`` and ``v`` is their
lowest common ancestor in the elimination tree, and on a general graph the
best achievable path minimum (the bottleneck vertex) is the same LCA in the
elimination tree of the graph.  After one build every query is an LCA lookup
that compares integer depths only, so queries never reach the oracle.
"""

from .cartesian import cartesian_on_graph, cartesian_on_tree, ept_on_graph
from .fixtures import adjacency
from .lca import LcaIndex


class PathMinIndex:
    def __init__(self, et, n_vertices=None):
        self.et = et
        self.n = len(et.parent) if n_vertices is None else n_vertices
        self.lca = LcaIndex(et.parent)

    # vertex versions
    def path_min(self, u, v):
        return self.lca.lca(u, v)

    bottleneck = path_min

    # edge versions: inner nodes n.. are edges
    def path_min_edge(self, u, v):
        """Index of the minimum edge on the u-v path (None if u == v)."""
        if u == v:
            return None
        return self.lca.lca(u, v) - self.n

    bottleneck_edge = path_min_edge


def build_tree_index(n, edges, oracle, **kw):
    return PathMinIndex(cartesian_on_tree(n, edges, oracle, **kw))


def build_bottleneck_index(n, edges, oracle, **kw):
    return PathMinIndex(cartesian_on_graph(n, edges, oracle, **kw))


def build_edge_index(n, edges, edge_oracle, **kw):
    """Edge path minima on a tree, or edge bottlenecks on a graph."""
    return PathMinIndex(ept_on_graph(n, edges, edge_oracle, **kw), n)


def _tree_leaves(adj, verts):
    if len(verts) == 1:
        return list(verts)
    return [v for v in verts if sum(1 for w in adj[v] if w in verts) <= 1]


def reconstruct_et_via_queries(index, n, edges):
    """Rebuild the elimination tree of a tree using only ``path_min``.

    The minimum of a subtree is found by folding ``path_min`` over its
    leaves; remove it and recurse on the pieces.
    """
    adj = adjacency(n, edges)
    parent = [None] * n
    if n == 0:
        return parent
    work = [(frozenset(range(n)), None)]
    while work:
        verts, par = work.pop()
        leaves = _tree_leaves(adj, verts)
        m = leaves[0]
        for x in leaves[1:]:
            m = index.path_min(m, x)
        parent[m] = par
        seen = {m}
        for s in adj[m]:
            if s in verts and s not in seen:
                comp = []
                stack = [s]
                seen.add(s)
                while stack:
                    x = stack.pop()
                    comp.append(x)
                    for y in adj[x]:
                        if y in verts and y not in seen:
                            seen.add(y)
                            stack.append(y)
                work.append((frozenset(comp), m))
    return parent
