"""Decremental tree roots: ``root(v)`` under cut and split.

Two interchangeable backends are provided.

``"ett"``
    Euler tours in treaps.  Every operation is expected O(log n).

``"doubling"``
    The parent/child doubling adapter.  Every node ``v`` becomes a pair
    ``p_v -> c_v`` in an auxiliary forest that only ever sees cuts, so split
    reduces to cut.  The auxiliary structure relabels the smaller side of each
    cut, which makes root queries O(1) and the total cost O(n log n).

``PathRoots`` is a cut-only special case for forests of paths: every path
is an interval of positions in one concatenated sequence, and a cut relabels
the shorter of the two pieces with a single slice assignment.

Nothing here ever looks at a priority.
"""

from .errors import DeadNode, IsRoot, NotAPathForest
from .ett import EulerTour

BACKENDS = ("ett", "doubling")


def concatenate_paths(forest):
    """All paths of ``forest`` root-first, one after another.

    Returns (sequence, position of each node, leaf of each root).
    """
    seq = []
    leaf_of = {}
    for r in forest.roots():
        v = r
        while True:
            seq.append(v)
            kids = forest.children(v)
            if len(kids) > 1:
                raise NotAPathForest(f"node {v} has {len(kids)} children")
            if not kids:
                break
            v = kids[0]
        leaf_of[r] = v
    pos = {v: i for i, v in enumerate(seq)}
    return seq, pos, leaf_of


class PathRoots:
    """Roots of a forest of root-first paths under cuts."""

    def __init__(self, forest):
        self.seq, self.pos, leaf_of = concatenate_paths(forest)
        lab = [0] * len(self.seq)
        lo, hi = [], []
        for r, leaf in leaf_of.items():
            a, b = self.pos[r], self.pos[leaf]
            lab[a : b + 1] = [len(lo)] * (b - a + 1)
            lo.append(a)
            hi.append(b)
        self.lab, self.lo, self.hi = lab, lo, hi
        self.relabels = 0

    def _label(self, v):
        try:
            return self.lab[self.pos[v]]
        except KeyError:
            raise DeadNode(f"node {v} is not in the path forest") from None

    def interval(self, v):
        """Positions (first, last) of the path holding ``v``."""
        c = self._label(v)
        return self.lo[c], self.hi[c]

    def root(self, v):
        return self.seq[self.lo[self._label(v)]]

    def leaf(self, v):
        return self.seq[self.hi[self._label(v)]]

    def parent(self, v):
        i = self.pos[v]
        return None if i == self.lo[self.lab[i]] else self.seq[i - 1]

    def cut(self, v):
        i = self.pos[v]
        lab, lo, hi = self.lab, self.lo, self.hi
        c = lab[i]
        a, b = lo[c], hi[c]
        if i == a:
            raise IsRoot(f"node {v} has no parent")
        new = len(lo)
        if i - a < b - i + 1:
            lab[a:i] = [new] * (i - a)
            lo.append(a)
            hi.append(i - 1)
            lo[c] = i
            self.relabels += i - a
        else:
            lab[i : b + 1] = [new] * (b - i + 1)
            lo.append(i)
            hi.append(b)
            hi[c] = i - 1
            self.relabels += b - i + 1


class _SmallerHalfRoots:
    """Cut-only roots: component labels, relabel the smaller side on cut."""

    def __init__(self, n):
        self.par = [-1] * n
        self.kids = [set() for _ in range(n)]
        self.comp = [0] * n
        self.comp_root = []
        self.relabels = 0

    def add_edge(self, v, p):
        self.par[v] = p
        self.kids[p].add(v)

    def finish(self):
        n = len(self.par)
        self.comp = list(range(n))
        self.comp_root = list(range(n))
        for r in range(n):
            if self.par[r] == -1:
                stack = list(self.kids[r])
                while stack:
                    x = stack.pop()
                    self.comp[x] = r
                    stack.extend(self.kids[x])

    def add_node(self):
        v = len(self.par)
        self.par.append(-1)
        self.kids.append(set())
        self.comp.append(len(self.comp_root))
        self.comp_root.append(v)
        return v

    def root(self, v):
        return self.comp_root[self.comp[v]]

    def cut(self, v):
        p = self.par[v]
        self.par[v] = -1
        self.kids[p].discard(v)
        old = self.comp[v]
        r = self.comp_root[old]
        # interleaved traversal; the side that finishes first is the smaller
        sa, sb = [v], [r]
        seen_a, seen_b = [], []
        kids = self.kids
        while sa and sb:
            x = sa.pop()
            seen_a.append(x)
            sa.extend(kids[x])
            y = sb.pop()
            seen_b.append(y)
            sb.extend(kids[y])
        new = len(self.comp_root)
        if not sa:
            small, new_root = seen_a, v
            self.comp_root.append(v)
        else:
            small, new_root = seen_b, r
            self.comp_root.append(r)
            self.comp_root[old] = v
        for x in small:
            self.comp[x] = new
        self.relabels += len(small)


class TreeRoots:
    """Root queries on a forest that evolves by cut and split.

    The structure keeps its own mirror of the forest; the caller's forest is
    only read at construction time.
    """

    def __init__(self, forest, backend="ett"):
        if backend not in BACKENDS:
            raise ValueError(f"unknown backend {backend!r}")
        self.backend = backend
        self.f = forest.copy()
        if backend == "ett":
            self._ett = EulerTour(self.f)
        else:
            self._init_doubling()

    # -- doubling backend ------------------------------------------------

    def _init_doubling(self):
        f = self.f
        nodes = f.nodes()
        cap = f.capacity()
        x = _SmallerHalfRoots(2 * cap)
        # internal ids: p_v = 2v, c_v = 2v + 1
        for v in nodes:
            x.add_edge(2 * v + 1, 2 * v)
            p = f.parent(v)
            if p is not None:
                x.add_edge(2 * v, 2 * p + 1)
        x.finish()
        self._x = x
        self._inner = {v: 2 * v for v in nodes}  # handle -> internal node
        self._outer = {2 * v: v for v in nodes}  # internal root -> handle
        self._original = set(nodes)

    def _dbl_cut(self, v):
        self._x.cut(self._inner[v])

    def _dbl_split(self, v, u1, u2, is_root, is_leaf):
        x = self._x
        if v in self._original:
            self._original.discard(v)
            pv = self._inner.pop(v)
            x.cut(pv + 1)
            a, b = pv, pv + 1
        else:
            w = self._inner.pop(v)
            fresh = x.add_node()
            a, b = (fresh, w) if is_root else (w, fresh)
        self._inner[u1], self._inner[u2] = a, b
        self._outer[a], self._outer[b] = u1, u2

    # -- public ----------------------------------------------------------

    def root(self, v):
        if not self.f.alive(v):
            raise DeadNode(f"node {v} is not alive")
        if self.backend == "ett":
            return self._ett.root(v)
        return self._outer[self._x.root(self._inner[v])]

    def cut(self, v):
        if self.f.is_root(v):
            raise IsRoot(f"node {v} has no parent")
        self.f.cut(v)
        if self.backend == "ett":
            self._ett.cut(v)
        else:
            self._dbl_cut(v)

    def split(self, v, ids=None):
        f = self.f
        is_root, is_leaf = f.is_root(v), f.is_leaf(v)
        u1, u2 = f.split(v, ids)
        if self.backend == "ett":
            self._ett.split(v, u1, u2, is_root, is_leaf)
        else:
            self._dbl_split(v, u1, u2, is_root, is_leaf)
        return u1, u2
