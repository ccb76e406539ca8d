"""Rooted, ordered forests with cut and split.

Nodes are addressed by integer handles.  Internally every live handle owns a
storage slot; ``split`` hands the slot that keeps the children to one of the
two fresh handles, so no child has to be re-parented and the operation is
O(1).
"""

from typing import List, Optional, Sequence, Tuple

from .errors import CycleDetected, DanglingParent, DeadNode, IsRoot

NIL = -1


class RootedForest:
    def __init__(self, n: int = 0):
        self._slot: List[int] = list(range(n))
        self._handle: List[int] = list(range(n))
        self._par = [NIL] * n
        self._first = [NIL] * n
        self._last = [NIL] * n
        self._prev = [NIL] * n
        self._next = [NIL] * n
        self.cuts = 0
        self.splits = 0
        self.inner_splits = 0

    @classmethod
    def from_parents(cls, parents: Sequence[Optional[int]], order=None):
        """Build from a parent array (``None`` or -1 marks a root).

        Children are ordered by ``order[v]`` when given, else by node id.
        """
        n = len(parents)
        f = cls(n)
        par = [NIL if (p is None or p < 0) else p for p in parents]
        for v, p in enumerate(par):
            if p >= n:
                raise DanglingParent(f"node {v} has parent {p}")
        # cycle check: every node must reach a root
        state = [0] * n
        for s in range(n):
            path = []
            v = s
            while v != NIL and state[v] == 0:
                state[v] = 1
                path.append(v)
                v = par[v]
            if v != NIL and state[v] == 1:
                raise CycleDetected(f"cycle through node {v}")
            for w in path:
                state[w] = 2
        kids = range(n) if order is None else sorted(range(n), key=lambda v: order[v])
        for v in kids:
            if par[v] != NIL:
                f._append(par[v], v)
        return f

    # -- storage helpers -------------------------------------------------

    def _new_slot(self, h: int) -> int:
        s = len(self._handle)
        self._handle.append(h)
        self._par.append(NIL)
        self._first.append(NIL)
        self._last.append(NIL)
        self._prev.append(NIL)
        self._next.append(NIL)
        return s

    def _bind(self, h: int, s: int):
        while len(self._slot) <= h:
            self._slot.append(NIL)
        if self._slot[h] != NIL:
            raise ValueError(f"handle {h} already in use")
        self._slot[h] = s
        self._handle[s] = h

    def _s(self, v: int) -> int:
        try:
            s = self._slot[v]
        except IndexError:
            s = NIL
        if s == NIL or v < 0:
            raise DeadNode(f"node {v} is not alive")
        return s

    def _append(self, p: int, v: int):
        sp, sv = self._slot[p], self._slot[v]
        last = self._last[sp]
        self._par[sv] = sp
        self._prev[sv] = last
        self._next[sv] = NIL
        if last == NIL:
            self._first[sp] = sv
        else:
            self._next[last] = sv
        self._last[sp] = sv

    def _detach(self, sv: int):
        sp = self._par[sv]
        a, b = self._prev[sv], self._next[sv]
        if a == NIL:
            self._first[sp] = b
        else:
            self._next[a] = b
        if b == NIL:
            self._last[sp] = a
        else:
            self._prev[b] = a
        self._par[sv] = self._prev[sv] = self._next[sv] = NIL

    # -- queries ---------------------------------------------------------

    def capacity(self) -> int:
        """One more than the largest handle ever issued."""
        return len(self._slot)

    def alive(self, v: int) -> bool:
        return 0 <= v < len(self._slot) and self._slot[v] != NIL

    def nodes(self) -> List[int]:
        return [h for h, s in enumerate(self._slot) if s != NIL]

    def __len__(self):
        return sum(1 for s in self._slot if s != NIL)

    def parent(self, v: int) -> Optional[int]:
        p = self._par[self._s(v)]
        return None if p == NIL else self._handle[p]

    def is_root(self, v: int) -> bool:
        return self._par[self._s(v)] == NIL

    def is_leaf(self, v: int) -> bool:
        return self._first[self._s(v)] == NIL

    def has_one_child(self, v: int) -> bool:
        s = self._s(v)
        return self._first[s] != NIL and self._first[s] == self._last[s]

    def first_child(self, v: int) -> Optional[int]:
        c = self._first[self._s(v)]
        return None if c == NIL else self._handle[c]

    def next_sibling(self, v: int) -> Optional[int]:
        c = self._next[self._s(v)]
        return None if c == NIL else self._handle[c]

    def children(self, v: int) -> List[int]:
        out = []
        c = self._first[self._s(v)]
        while c != NIL:
            out.append(self._handle[c])
            c = self._next[c]
        return out

    def roots(self) -> List[int]:
        return [h for h, s in enumerate(self._slot) if s != NIL and self._par[s] == NIL]

    def euler(self, v: int) -> List[int]:
        """Euler tour of the subtree of ``v``: ``w`` on entering node ``w``,
        ``~w`` on leaving it, children in order."""
        top = cur = self._s(v)
        first, nxt, par, h = self._first, self._next, self._par, self._handle
        out = []
        while True:
            out.append(h[cur])
            if first[cur] != NIL:
                cur = first[cur]
                continue
            while True:
                out.append(~h[cur])
                if cur == top:
                    return out
                if nxt[cur] != NIL:
                    cur = nxt[cur]
                    break
                cur = par[cur]

    def preorder(self, v: int) -> List[int]:
        return [x for x in self.euler(v) if x >= 0]

    def postorder(self, v: int) -> List[int]:
        return [~x for x in self.euler(v) if x < 0]

    def root_of(self, v: int) -> int:
        s = self._s(v)
        while self._par[s] != NIL:
            s = self._par[s]
        return self._handle[s]

    def edges(self) -> int:
        return sum(1 for s in self._slot if s != NIL and self._par[s] != NIL)

    # -- mutation --------------------------------------------------------

    def add_node(self, h: Optional[int] = None) -> int:
        if h is None:
            h = len(self._slot)
        self._bind(h, self._new_slot(h))
        return h

    def link(self, v: int, p: int):
        """Attach root ``v`` as the last child of ``p`` (internal use)."""
        sv = self._s(v)
        self._s(p)
        if self._par[sv] != NIL:
            raise ValueError(f"node {v} is not a root")
        if self.root_of(p) == v:
            raise CycleDetected("link would close a cycle")
        self._append(p, v)

    def cut(self, v: int):
        sv = self._s(v)
        if self._par[sv] == NIL:
            raise IsRoot(f"node {v} has no parent")
        self._detach(sv)
        self.cuts += 1

    def split(self, v: int, ids: Optional[Tuple[int, int]] = None) -> Tuple[int, int]:
        """Replace ``v`` by ``u1`` (keeps the parent and sibling position)
        and ``u2`` (keeps the children).  ``v`` is retired."""
        sv = self._s(v)
        if ids is None:
            u1 = len(self._slot)
            u2 = u1 + 1
        else:
            u1, u2 = ids
        if self._par[sv] != NIL and self._first[sv] != NIL:
            self.inner_splits += 1
        self.splits += 1
        self._slot[v] = NIL
        sp = self._par[sv]
        if sp == NIL:
            # root: u2 takes the old slot with its children
            self._bind(u2, sv)
            self._bind(u1, self._new_slot(u1))
        elif self._first[sv] == NIL:
            # leaf: u1 takes the old slot with its position
            self._bind(u1, sv)
            self._bind(u2, self._new_slot(u2))
        else:
            s1 = self._new_slot(u1)
            self._bind(u1, s1)
            self._par[s1] = sp
            a, b = self._prev[sv], self._next[sv]
            self._prev[s1], self._next[s1] = a, b
            if a == NIL:
                self._first[sp] = s1
            else:
                self._next[a] = s1
            if b == NIL:
                self._last[sp] = s1
            else:
                self._prev[b] = s1
            self._par[sv] = self._prev[sv] = self._next[sv] = NIL
            self._bind(u2, sv)
        return u1, u2

    def to_parents(self) -> dict:
        """Map every live node to its parent (``None`` for roots)."""
        return {h: self.parent(h) for h in self.nodes()}

    def copy(self) -> "RootedForest":
        f = RootedForest.__new__(RootedForest)
        for k, val in self.__dict__.items():
            setattr(f, k, list(val) if isinstance(val, list) else val)
        return f
