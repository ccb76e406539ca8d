"""Addressable heaps ordered by a comparison function.

The spanning-tree search only needs insert, delete-min, decrease-key and
membership, so any class with those methods can be plugged in.
"""


class BinaryHeap:
    """Array binary heap with a position index for decrease-key."""

    def __init__(self, less):
        self.less = less
        self.items = []
        self.keys = []
        self.where = {}

    def __len__(self):
        return len(self.items)

    def __contains__(self, x):
        return x in self.where

    def key(self, x):
        return self.keys[self.where[x]]

    def _swap(self, i, j):
        it, ks = self.items, self.keys
        it[i], it[j] = it[j], it[i]
        ks[i], ks[j] = ks[j], ks[i]
        self.where[it[i]] = i
        self.where[it[j]] = j

    def _up(self, i):
        ks = self.keys
        while i:
            p = (i - 1) >> 1
            if self.less(ks[i], ks[p]):
                self._swap(i, p)
                i = p
            else:
                break

    def _down(self, i):
        ks = self.keys
        n = len(ks)
        while True:
            c = 2 * i + 1
            if c >= n:
                break
            if c + 1 < n and self.less(ks[c + 1], ks[c]):
                c += 1
            if self.less(ks[c], ks[i]):
                self._swap(i, c)
                i = c
            else:
                break

    def insert(self, x, key):
        self.where[x] = len(self.items)
        self.items.append(x)
        self.keys.append(key)
        self._up(len(self.items) - 1)

    def decrease_key(self, x, key):
        i = self.where[x]
        self.keys[i] = key
        self._up(i)

    def delete_min(self):
        x, k = self.items[0], self.keys[0]
        last = len(self.items) - 1
        self._swap(0, last)
        self.items.pop()
        self.keys.pop()
        del self.where[x]
        if self.items:
            self._down(0)
        return x, k


class PairingHeap:
    """Two-pass pairing heap; decrease-key cuts the node and re-melds it."""

    class _N:
        __slots__ = ("item", "key", "child", "sib", "prev")

        def __init__(self, item, key):
            self.item = item
            self.key = key
            self.child = self.sib = self.prev = None

    def __init__(self, less):
        self.less = less
        self.root = None
        self.nodes = {}

    def __len__(self):
        return len(self.nodes)

    def __contains__(self, x):
        return x in self.nodes

    def key(self, x):
        return self.nodes[x].key

    def _meld(self, a, b):
        if a is None:
            return b
        if b is None:
            return a
        if self.less(b.key, a.key):
            a, b = b, a
        b.prev = a
        b.sib = a.child
        if a.child is not None:
            a.child.prev = b
        a.child = b
        a.sib = a.prev = None
        return a

    def insert(self, x, key):
        node = self._N(x, key)
        self.nodes[x] = node
        self.root = self._meld(self.root, node)

    def decrease_key(self, x, key):
        node = self.nodes[x]
        node.key = key
        if node is self.root:
            return
        # unlink from parent's child list
        if node.prev.child is node:
            node.prev.child = node.sib
        else:
            node.prev.sib = node.sib
        if node.sib is not None:
            node.sib.prev = node.prev
        node.sib = node.prev = None
        self.root = self._meld(self.root, node)

    def delete_min(self):
        top = self.root
        del self.nodes[top.item]
        kids = []
        c = top.child
        while c is not None:
            nxt = c.sib
            c.sib = c.prev = None
            kids.append(c)
            c = nxt
        paired = [self._meld(kids[i], kids[i + 1] if i + 1 < len(kids) else None) for i in range(0, len(kids), 2)]
        root = None
        for h in reversed(paired):
            root = self._meld(h, root)
        self.root = root
        return top.item, top.key


HEAPS = {"binary": BinaryHeap, "pairing": PairingHeap}
