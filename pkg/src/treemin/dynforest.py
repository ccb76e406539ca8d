"""Dynamic forest with cached per-tree minima.

Priorities may be the global ``INF``; those nodes are left out of every
aggregate, so trees full of infinities cost nothing to maintain.  The minimum
of each tree is cached at its root, making ``tree_min`` a root lookup plus a
dictionary read.

The same class runs in semigroup mode when built with ``combine``; values are
then summed instead of minimised and ``None`` marks "no value".
"""

from .errors import DeadNode, IsRoot
from .ett import EulerTour
from .forest import RootedForest
from .oracle import INF


class DynamicForest:
    def __init__(self, forest: RootedForest, prio, less=None, combine=None, seed=0x5EED):
        """``prio`` maps node -> priority handle (or value in semigroup mode).

        In min mode ``less`` orders priority handles; ``INF`` is free.
        """
        self.f = forest.copy()
        self.prio = dict(prio) if isinstance(prio, dict) else dict(enumerate(prio))
        self.semigroup = combine is not None
        if self.semigroup:
            self._ett = EulerTour(self.f, self._lift_value, combine, seed)
        else:
            self.less = less
            self._ett = EulerTour(self.f, self._lift_min, self._argmin, seed)
        self.cache = {}
        for r in self.f.roots():
            self.cache[r] = self._ett.component_agg(r)

    # -- aggregation -------------------------------------------------------

    def _lift_min(self, tok):
        return None if self.prio[tok.node] == INF else tok

    def _lift_value(self, tok):
        return self.prio[tok.node]

    def _argmin(self, a, b):
        prio = self.prio
        return b if self.less(prio[b.node], prio[a.node]) else a

    # -- queries -----------------------------------------------------------

    def root(self, v):
        if not self.f.alive(v):
            raise DeadNode(f"node {v} is not alive")
        return self._ett.root(v)

    def tree_min(self, v):
        """Node with the smallest priority in v's tree.

        If every priority there is ``INF`` the root is returned; check it with
        ``priority``.
        """
        r = self.root(v)
        tok = self.cache[r]
        return r if tok is None else tok.node

    def tree_sum(self, v):
        return self.cache[self.root(v)]

    def priority(self, v):
        return self.prio[v]

    def subtree_min(self, v):
        """Min over the subtree of ``v`` only: detach, read, reattach."""
        if self.f.is_root(v):
            tok = self.cache[v]
        else:
            tok = self._ett.subtree_agg(v)
        return None if tok is None else tok.node

    # -- updates -----------------------------------------------------------

    def cut(self, v):
        f = self.f
        if f.is_root(v):
            raise IsRoot(f"node {v} has no parent")
        r = self.root(v)
        f.cut(v)
        rest, sub = self._ett.cut(v)
        self.cache[r] = rest.agg
        self.cache[v] = sub.agg

    def split(self, v, ids=None):
        f = self.f
        is_root, is_leaf = f.is_root(v), f.is_leaf(v)
        r = None if is_root else self.root(v)
        p = self.prio[v]
        u1, u2 = f.split(v, ids)
        self.prio[u1] = p
        self.prio[u2] = p
        ett = self._ett
        ett.split(v, u1, u2, is_root, is_leaf)
        del self.prio[v]
        cache = self.cache
        if is_root:
            cache[u2] = cache.pop(v)
            cache[u1] = ett.component_agg(u1)
        elif is_leaf:
            cache[u2] = ett.component_agg(u2)
        else:
            cache[r] = ett.component_agg(r)
            cache[u2] = ett.component_agg(u2)
        return u1, u2

    def set_priority(self, v, p):
        if self.prio[v] == p:
            return
        self.prio[v] = p
        self._ett.refresh(v)
        self.cache[self.root(v)] = self._ett.component_agg(v)

    def rebuilds(self):
        return self._ett.rebuilds
