"""Leftmost and rightmost leaves of subtrees under cut and split.

Nodes carry their pre-order and post-order numbers.  In post-order the first
node of any subtree is its leftmost leaf, and in pre-order the last node of
any subtree is its rightmost leaf.  So the leftmost leaf of ``T_v`` has the
smallest post-order label in ``T_v`` and the rightmost leaf the largest
pre-order label.  One Euler-tour tree keeps both extremes as a pair.

Labels are plain integers and are compared directly; no priority comparison
ever happens here.  Split copies the labels of the retired node to both
halves, which keeps both order properties inside every tree.
"""

from .ett import EulerTour


def dfs_labels(forest):
    """(pre-order, post-order) numbers of every node, left to right."""
    pre, post = {}, {}
    i = j = 0
    for r in forest.roots():
        for x in forest.euler(r):
            if x >= 0:
                pre[x] = i
                i += 1
            else:
                post[~x] = j
                j += 1
    return pre, post


class ExtremalLeaves:
    def __init__(self, forest):
        self.f = forest.copy()
        self.pre, self.post = dfs_labels(self.f)
        pre, post = self.pre, self.post

        def combine(a, b):
            lo = a[0] if post[a[0].node] < post[b[0].node] else b[0]
            hi = a[1] if pre[a[1].node] > pre[b[1].node] else b[1]
            return lo, hi

        self._ett = EulerTour(self.f, lambda t: (t, t), combine, seed=0xE1)

    def extremal(self, v):
        """(leftmost leaf, rightmost leaf) of the subtree of ``v``."""
        if self.f.is_root(v):
            lo, hi = self._ett.component_agg(v)
        else:
            lo, hi = self._ett.subtree_agg(v)
        return lo.node, hi.node

    def cut(self, v):
        self.f.cut(v)
        self._ett.cut(v)

    def split(self, v, ids=None):
        f = self.f
        is_root, is_leaf = f.is_root(v), f.is_leaf(v)
        u1, u2 = f.split(v, ids)
        for lab in (self.pre, self.post):
            lab[u1] = lab[u2] = lab[v]
        self._ett.split(v, u1, u2, is_root, is_leaf)
        del self.pre[v], self.post[v]
        return u1, u2
