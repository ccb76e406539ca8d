"""Splay-tree sequences with subtree aggregates.

A sequence of distinct elements kept in a splay tree whose in-order is the
sequence.  Each node stores the aggregate of its subtree (the argmin element
in min mode, a semigroup sum otherwise) plus explicit predecessor and
successor links, so neighbours are found without searching.

Two update operations are supported: ``replace`` swaps one element for a new
one in place, and ``split_interval`` cuts out a contiguous run, optionally
leaving a new element where the run used to be.  Both splay at most two
nodes, so by the access lemma their amortized cost is logarithmic in the
ratio of total to local weight.

Elements live in a registry shared by all sequences produced from one
another by splitting, so splits never copy element tables.
"""

import math

from .errors import AlreadyPresent, DeadNode, DuplicateElement, Empty, NotPresent, OutOfOrder


class _Node:
    __slots__ = ("elem", "val", "agg", "size", "l", "r", "p", "prev", "next")

    def __init__(self, elem, val):
        self.elem = elem
        self.val = val
        self.agg = val
        self.size = 1
        self.l = self.r = self.p = None
        self.prev = self.next = None


class SplaySequence:
    def __init__(self, elems, lift, combine, registry=None, stats=None, _root=None):
        """``lift(elem)`` is the element's own value, ``combine`` is associative.

        Sequences split from one another share ``registry`` (element -> node)
        and ``stats`` (rotation count).
        """
        self.lift = lift
        self.combine = combine
        self.registry = {} if registry is None else registry
        self.stats = {"rotations": 0} if stats is None else stats
        self.dead = False
        if elems is None:
            self.root = _root
            return
        elems = list(elems)
        if len(set(elems)) != len(elems):
            raise DuplicateElement("elements must be distinct")
        for e in elems:
            if e in self.registry:
                raise AlreadyPresent(f"element {e!r} already stored")
        self.root = self._build_complete(elems)

    # -- construction ----------------------------------------------------

    def _build_complete(self, elems):
        """Complete binary tree (heap shape) whose in-order is ``elems``."""
        n = len(elems)
        if n == 0:
            return None
        order = []
        stack = []
        i = 1
        while stack or i <= n:
            while i <= n:
                stack.append(i)
                i *= 2
            i = stack.pop()
            order.append(i)
            i = 2 * i + 1
        lift = self.lift
        heap = [None] * (n + 1)
        prev = None
        reg = self.registry
        for e, h in zip(elems, order):
            node = _Node(e, lift(e))
            heap[h] = node
            reg[e] = node
            node.prev = prev
            if prev is not None:
                prev.next = node
            prev = node
        for h in range(n, 0, -1):
            node = heap[h]
            if 2 * h <= n:
                node.l = heap[2 * h]
                node.l.p = node
            if 2 * h + 1 <= n:
                node.r = heap[2 * h + 1]
                node.r.p = node
            self._pull(node)
        return heap[1]

    # -- splay machinery -------------------------------------------------

    def _pull(self, t):
        a = t.val
        size = 1
        comb = self.combine
        x = t.l
        if x is not None:
            size += x.size
            a = x.agg if a is None else (a if x.agg is None else comb(x.agg, a))
        x = t.r
        if x is not None:
            size += x.size
            a = x.agg if a is None else (a if x.agg is None else comb(a, x.agg))
        t.agg = a
        t.size = size

    def _rotate(self, x):
        p = x.p
        g = p.p
        if p.l is x:
            b = x.r
            p.l = b
            x.r = p
        else:
            b = x.l
            p.r = b
            x.l = p
        if b is not None:
            b.p = p
        p.p = x
        x.p = g
        if g is not None:
            if g.l is p:
                g.l = x
            else:
                g.r = x
        # x now spans exactly what p spanned
        x.agg = p.agg
        x.size = p.size
        self._pull(p)
        self.stats["rotations"] += 1

    def _splay(self, x):
        rotate = self._rotate
        while x.p is not None:
            p = x.p
            g = p.p
            if g is None:
                rotate(x)
            elif (g.l is p) == (p.l is x):
                rotate(p)
                rotate(x)
            else:
                rotate(x)
                rotate(x)

    def _undo_detach(self, xp, rest):
        """Reattach ``rest`` after ``xp`` so a failed split leaves no trace."""
        if xp is None:
            self.root = rest
            return
        self._splay(xp)  # xp is the maximum of its tree, so xp.r is empty
        xp.r = rest
        if rest is not None:
            rest.p = xp
        self._pull(xp)
        self.root = xp

    def _node(self, e):
        self._check()
        node = self.registry.get(e)
        if node is None:
            raise NotPresent(f"element {e!r} is not stored")
        return node

    def _check(self):
        if self.dead:
            raise DeadNode("sequence was consumed by split_interval")

    # -- queries ---------------------------------------------------------

    def __len__(self):
        self._check()
        return 0 if self.root is None else self.root.size

    def min(self):
        """Aggregate of the whole sequence (the argmin element in min mode)."""
        self._check()
        if self.root is None:
            raise Empty("empty sequence")
        return self.root.agg

    total = min

    def elements(self):
        self._check()
        out = []
        stack = []
        t = self.root
        while stack or t is not None:
            while t is not None:
                stack.append(t)
                t = t.l
            t = stack.pop()
            out.append(t.elem)
            t = t.r
        return out

    def predecessor(self, e):
        p = self._node(e).prev
        return None if p is None else p.elem

    def successor(self, e):
        s = self._node(e).next
        return None if s is None else s.elem

    def potential(self, weight):
        """Sum over nodes of log2 of the subtree weight (diagnostics only)."""
        self._check()
        if self.root is None:
            return 0.0
        order = []
        stack = [self.root]
        while stack:
            t = stack.pop()
            order.append(t)
            if t.l is not None:
                stack.append(t.l)
            if t.r is not None:
                stack.append(t.r)
        w = {}
        total = 0.0
        for t in reversed(order):
            s = weight(t.elem)
            if t.l is not None:
                s += w[id(t.l)]
            if t.r is not None:
                s += w[id(t.r)]
            w[id(t)] = s
            total += math.log2(s)
        return total

    # -- updates ---------------------------------------------------------

    def replace(self, x, y):
        node = self._node(x)
        if y in self.registry:
            raise AlreadyPresent(f"element {y!r} already stored")
        self._splay(node)
        self.root = node
        del self.registry[x]
        self.registry[y] = node
        node.elem = y
        node.val = self.lift(y)
        self._pull(node)

    def split_interval(self, x, y, z=None):
        """Cut out the run from ``x`` to ``y``.

        Returns ``(rest, run)``: ``rest`` is the sequence with the run removed
        (and ``z`` in its place when given), ``run`` is the removed part.
        This sequence is consumed.
        """
        nx = self._node(x)
        ny = self._node(y)
        if z is not None and z in self.registry:
            raise AlreadyPresent(f"element {z!r} already stored")
        xp, yn = nx.prev, ny.next
        if xp is not None:
            self._splay(xp)
            rest = xp.r
            xp.r = None
            if rest is not None:
                rest.p = None
            left = xp
        else:
            rest = self.root
            left = None
        if rest is None:
            raise OutOfOrder(f"{x!r} does not precede {y!r}")
        if yn is not None:
            if yn is xp:
                self._undo_detach(xp, rest)
                raise OutOfOrder(f"{x!r} does not precede {y!r}")
            self._splay(yn)
            if left is not None and left.p is not None:
                # yn sat left of x: y precedes x
                self._undo_detach(xp, rest)
                raise OutOfOrder(f"{x!r} does not precede {y!r}")
            mid = yn.l
            if mid is None:
                self._undo_detach(xp, yn)
                raise OutOfOrder(f"{x!r} does not precede {y!r}")
            yn.l = None
            mid.p = None
            right = yn
        else:
            mid = rest
            right = None
        if right is not None:
            self._pull(right)
        if z is None:
            if left is not None and right is not None:
                left.r = right
                right.p = left
            if left is not None:
                self._pull(left)
                top = left
            else:
                top = right
            if xp is not None:
                xp.next = yn
            if yn is not None:
                yn.prev = xp
        else:
            if left is not None:
                self._pull(left)
            top = _Node(z, self.lift(z))
            self.registry[z] = top
            top.l, top.r = left, right
            if left is not None:
                left.p = top
            if right is not None:
                right.p = top
            self._pull(top)
            top.prev, top.next = xp, yn
            if xp is not None:
                xp.next = top
            if yn is not None:
                yn.prev = top
        nx.prev = None
        ny.next = None
        self.dead = True
        self.root = None
        a = SplaySequence(None, self.lift, self.combine, self.registry, self.stats, top)
        b = SplaySequence(None, self.lift, self.combine, self.registry, self.stats, mid)
        return a, b

    @property
    def rotations(self):
        return self.stats["rotations"]

    def discard(self):
        """Drop all elements from the shared registry and kill the sequence."""
        for e in self.elements():
            del self.registry[e]
        self.dead = True
        self.root = None
