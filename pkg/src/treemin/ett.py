"""Euler-tour sequences stored in treaps.

Each node ``v`` of a rooted forest contributes an open token and a close
token; a tree is the token sequence of its DFS, so the subtree of ``v`` is the
contiguous run between ``open(v)`` and ``close(v)`` and the root of a tree is
the owner of the first token.  Sequences are kept in treaps with parent
pointers, so cut, link and root queries take expected O(log n) time.

An optional aggregate is maintained over the open tokens.  ``lift(tok)``
gives the token's own value (``None`` for "nothing") and ``combine`` folds two
non-``None`` values.
"""

import random


class Tok:
    __slots__ = ("node", "l", "r", "p", "pri", "val", "agg", "is_open")

    def __init__(self, node, pri, is_open):
        self.node = node
        self.pri = pri
        self.is_open = is_open
        self.l = self.r = self.p = None
        self.val = None
        self.agg = None


class EulerTour:
    def __init__(self, forest, lift=None, combine=None, seed=0x5EED):
        self._rng = random.Random(seed)
        self.lift = lift
        self.combine = combine
        self.open = {}
        self.close = {}
        self.rebuilds = 0  # treap nodes whose aggregate was recomputed
        for r in forest.roots():
            self._build(forest, r)

    # -- construction ----------------------------------------------------

    def _tokens(self, v):
        rnd = self._rng.random
        o = Tok(v, rnd(), True)
        c = Tok(v, rnd(), False)
        self.open[v] = o
        self.close[v] = c
        if self.lift is not None:
            o.val = o.agg = self.lift(o)
        return o, c

    def _build(self, forest, r):
        rnd = self._rng.random
        lift = self.lift
        opens, closes = self.open, self.close
        seq = []
        for x in forest.euler(r):
            if x >= 0:
                t = Tok(x, rnd(), True)
                opens[x] = t
                if lift is not None:
                    t.val = t.agg = lift(t)
            else:
                t = Tok(~x, rnd(), False)
                closes[~x] = t
            seq.append(t)
        # Cartesian tree on the random priorities (max at the top)
        spine = []
        for t in seq:
            last = None
            while spine and spine[-1].pri < t.pri:
                last = spine.pop()
            if last is not None:
                t.l = last
                last.p = t
            if spine:
                spine[-1].r = t
                t.p = spine[-1]
            spine.append(t)
        if self.combine is not None:
            self._pull_all(spine[0])

    def _pull_all(self, root):
        order = []
        stack = [root]
        while stack:
            t = stack.pop()
            order.append(t)
            if t.l is not None:
                stack.append(t.l)
            if t.r is not None:
                stack.append(t.r)
        for t in reversed(order):
            self._pull(t)

    def add_isolated(self, v):
        o, c = self._tokens(v)
        self._merge(o, c)

    # -- treap primitives ------------------------------------------------

    def _pull(self, t):
        a = t.val
        comb = self.combine
        x = t.l
        if x is not None and x.agg is not None:
            a = x.agg if a is None else comb(x.agg, a)
        x = t.r
        if x is not None and x.agg is not None:
            a = x.agg if a is None else comb(a, x.agg)
        t.agg = a
        self.rebuilds += 1

    def _pull_path(self, toks):
        """``_pull`` over ``toks`` (children before parents), inlined."""
        comb = self.combine
        k = 0
        for t in toks:
            a = t.val
            x = t.l
            if x is not None and x.agg is not None:
                a = x.agg if a is None else comb(x.agg, a)
            x = t.r
            if x is not None and x.agg is not None:
                a = x.agg if a is None else comb(a, x.agg)
            t.agg = a
            k += 1
        self.rebuilds += k

    @staticmethod
    def top(t):
        while t.p is not None:
            t = t.p
        return t

    def _split_before(self, t):
        """Split the treap holding ``t`` into (tokens before t, t and after)."""
        pulling = self.combine is not None
        left = t.l
        if left is not None:
            left.p = None
            t.l = None
            if pulling:
                self._pull(t)
        right = t
        cur = t
        p = t.p
        t.p = None
        path = []
        while p is not None:
            pp = p.p
            if p.r is cur:
                p.r = left
                if left is not None:
                    left.p = p
                left = p
            else:
                p.l = right
                right.p = p
                right = p
            p.p = None
            if pulling:
                path.append(p)
            cur = p
            p = pp
        if pulling:
            self._pull_path(path)
        return left, right

    def _split_after(self, t):
        """Split into (tokens up to and including t, tokens after t)."""
        pulling = self.combine is not None
        right = t.r
        if right is not None:
            right.p = None
            t.r = None
            if pulling:
                self._pull(t)
        left = t
        cur = t
        p = t.p
        t.p = None
        path = []
        while p is not None:
            pp = p.p
            if p.r is cur:
                p.r = left
                left.p = p
                left = p
            else:
                p.l = right
                if right is not None:
                    right.p = p
                right = p
            p.p = None
            if pulling:
                path.append(p)
            cur = p
            p = pp
        if pulling:
            self._pull_path(path)
        return left, right

    def _merge(self, a, b):
        if a is None:
            return b
        if b is None:
            return a
        root = None
        parent = None
        on_right = False
        path = []
        while a is not None and b is not None:
            if a.pri > b.pri:
                x = a
                nxt_a, nxt_b = a.r, b
                go_right = True
            else:
                x = b
                nxt_a, nxt_b = a, b.l
                go_right = False
            if parent is None:
                root = x
                x.p = None
            else:
                if on_right:
                    parent.r = x
                else:
                    parent.l = x
                x.p = parent
            path.append(x)
            parent = x
            on_right = go_right
            a, b = nxt_a, nxt_b
        rest = a if a is not None else b
        if on_right:
            parent.r = rest
        else:
            parent.l = rest
        if rest is not None:
            rest.p = parent
        if self.combine is not None:
            self._pull_path(reversed(path))
        return root

    # -- forest operations -----------------------------------------------

    def cut(self, v):
        """Detach the subtree of ``v`` into its own sequence.

        Returns the treap roots of (the rest, the detached subtree).
        """
        a, b = self._split_before(self.open[v])
        b, c = self._split_after(self.close[v])
        return self._merge(a, c), b

    def link(self, v, p):
        """Insert the tree rooted at ``v`` right after ``open(p)``."""
        a, b = self._split_after(self.open[p])
        tv = self.top(self.open[v])
        self._merge(self._merge(a, tv), b)

    def root(self, v):
        t = self.top(self.open[v])
        while t.l is not None:
            t = t.l
        return t.node

    def component_agg(self, v):
        return self.top(self.open[v]).agg

    def subtree_agg(self, v):
        """Aggregate over the subtree of ``v`` via a transient cut and relink."""
        o = self.open[v]
        a, b = self._split_before(o)
        b, c = self._split_after(self.close[v])
        out = b.agg
        self._merge(self._merge(a, b), c)
        return out

    def refresh(self, v):
        """Recompute aggregates after the value of ``v`` changed."""
        t = self.open[v]
        t.val = self.lift(t)
        while t is not None:
            self._pull(t)
            t = t.p

    def rename(self, v, w):
        o = self.open.pop(v)
        c = self.close.pop(v)
        o.node = c.node = w
        self.open[w] = o
        self.close[w] = c

    def split(self, v, u1, u2, is_root, is_leaf):
        """Mirror ``RootedForest.split``: ``u1`` gets v's place, ``u2`` its
        children.  New isolated tokens are lifted from their node."""
        if is_root:
            self.rename(v, u2)
            self.add_isolated(u1)
        elif is_leaf:
            self.rename(v, u1)
            self.add_isolated(u2)
        else:
            a, b = self._split_before(self.open[v])
            b, c = self._split_after(self.close[v])
            self.rename(v, u2)
            o, cl = self._tokens(u1)
            self._merge(self._merge(a, self._merge(o, cl)), c)

    def sequence(self, v):
        """Token list of v's tree as (node, is_open) pairs (for checks)."""
        out = []
        stack = []
        t = self.top(self.open[v])
        while stack or t is not None:
            while t is not None:
                stack.append(t)
                t = t.l
            t = stack.pop()
            out.append((t.node, t.is_open))
            t = t.r
        return out
