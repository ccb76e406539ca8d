"""Decremental tree minima.

``UoDtm`` is the composed structure.  The forest is chain-compressed; the
chains are handled by a comparison-free path structure, inner super-nodes by
a dynamic forest, and the super-leaves of each super-tree by a splay
sequence in left-to-right order.  The minimum of a tree is the smallest of
three candidates: the root chain, the splay sequence, and the dynamic forest.
Super-roots and super-leaves carry ``INF`` in the dynamic forest, so it only
ever compares priorities of inner super-nodes, of which there are fewer than
leaves.

``NaiveDtm`` is the dynamic forest alone and ``Edtm`` answers edge minima
through a subdivided tree.  ``ScanDtm`` (in ``reference``) is the brute-force
check.
"""

from .compress import CanonicalSplit, Compression
from .dynforest import DynamicForest
from .errors import DeadNode, IsRoot, ModeMismatch
from .forest import RootedForest
from .oracle import INF, MappedOracle
from .paths import PathDtm, PathSums
from .splayseq import SplaySequence


def _leaves_in_order(forest, r):
    return [v for v in forest.preorder(r) if forest.is_leaf(v)]


class UoDtm:
    """Tree minima (or semigroup tree sums) under cuts.

    Min mode: ``UoDtm(forest, oracle)``.  Semigroup mode:
    ``UoDtm(forest, weight=w, combine=op)`` where ``op`` is associative and
    commutative.
    """

    def __init__(self, forest, oracle=None, weight=None, combine=None, roots_backend="ett"):
        self.semigroup = combine is not None
        if self.semigroup == (oracle is not None):
            raise ModeMismatch("give an oracle for min mode or weight+combine for sums")
        self.oracle = oracle
        self.A = A = Compression(forest, roots_backend)
        if self.semigroup:
            self.R = PathSums(A.FC, weight, combine, roots=A.roots_C)
            self._none = None
            self._combine = combine
        else:
            self.R = PathDtm(A.FC, oracle, roots=A.roots_C)
            self._none = INF
            self._combine = oracle.min
        Fp = A.Fp
        prio = {}
        for x in Fp.nodes():
            if Fp.is_root(x) or Fp.is_leaf(x):
                prio[x] = self._none
            else:
                prio[x] = self._chain_value(x)
        if self.semigroup:
            self.D = DynamicForest(Fp, prio, combine=combine)
        else:
            self.D = DynamicForest(Fp, prio, less=oracle.less)
        self.E = ExtremalLazy(Fp)
        self._registry = {}
        self._stats = {"rotations": 0}
        self.L = {}
        for x in Fp.roots():
            if not Fp.is_leaf(x):
                self.L[x] = self._sequence(_leaves_in_order(Fp, x))
        self.case_counts = dict.fromkeys("abcde", 0)

    def _chain_value(self, x):
        t = self.A.top[x]
        return self.R.tree_sum(t) if self.semigroup else self.R.tree_min(t)

    def _sequence(self, leaves):
        return SplaySequence(leaves, self._chain_value, self._combine, self._registry, self._stats)

    # -- queries -----------------------------------------------------------

    def tree_min(self, v):
        """Node with the smallest priority in the tree of ``v``."""
        if self.semigroup:
            raise ModeMismatch("structure holds semigroup sums")
        return self._query(v)

    def tree_sum(self, v):
        if not self.semigroup:
            raise ModeMismatch("structure holds minima")
        return self._query(v)

    def _query(self, v):
        A = self.A
        r = A.root_of(v)
        if self.semigroup:
            best = self.R.tree_sum(r)
        else:
            best = self.R.tree_min(r)
        x = A.super_of_top[r]
        comb = self._combine
        L = self.L.get(x)
        if L is not None:
            best = comb(best, L.total())
        D = self.D
        if self.semigroup:
            d = D.tree_sum(x)
            if d is not None:
                best = comb(best, d)
        else:
            d = D.prio[D.tree_min(x)]
            if d != INF:
                best = comb(best, d)
        return best

    def root(self, v):
        return self.A.root_of(v)

    def alive(self, v):
        return self.A.F.alive(v)

    # -- cut -----------------------------------------------------------------

    def cut(self, v):
        A = self.A
        if not A.F.alive(v):
            raise DeadNode(f"node {v} is not alive")
        if A.F.parent(v) is None:
            raise IsRoot(f"node {v} has no parent")
        if A.same_chain(v):
            self.R.cut(v)  # before the shared chain roots change
        op = A.cut(v)
        if isinstance(op, CanonicalSplit):
            self._split(op.node, op.upper, op.lower)
        else:
            self._cut(op.node, op.parent)

    def _retire(self, y):
        D = self.D
        if D.prio[y] != self._none:
            D.set_priority(y, self._none)

    def _cut(self, y, w):
        Fp = self.A.Fp
        D, E = self.D, self.E
        D.cut(y)
        E.cut(y)
        self._retire(y)
        w_leaf = Fp.is_leaf(w)
        if w_leaf:
            self._retire(w)
        x = D.root(w)
        self.case_counts["b"] += 1
        z1, z2 = E.extremal(y)
        z = w if (w_leaf and x != w) else None
        rest, run = self.L.pop(x).split_interval(z1, z2, z)
        if Fp.is_leaf(y):
            run.discard()
        else:
            self.L[y] = run
        if len(rest):
            self.L[x] = rest

    def _split(self, y, y1, y2):
        Fp = self.A.Fp
        D, E = self.D, self.E
        was_root = Fp.is_root(y1)
        was_leaf = Fp.is_leaf(y2)
        D.split(y, (y1, y2))
        E.split(y, (y1, y2))
        if was_root and was_leaf:
            self.case_counts["a"] += 1
        elif was_root:
            self.case_counts["c"] += 1
            self.L[y2] = self.L.pop(y)
        elif was_leaf:
            self.case_counts["d"] += 1
            self.L[D.root(y1)].replace(y, y1)
        else:
            self.case_counts["e"] += 1
            self._retire(y1)
            self._retire(y2)
            x = D.root(y1)
            z1, z2 = E.extremal(y2)
            rest, run = self.L.pop(x).split_interval(z1, z2, y1)
            self.L[x] = rest
            self.L[y2] = run

    # -- diagnostics ---------------------------------------------------------

    def stats(self):
        Fp = self.A.Fp
        return {
            "super_cuts": Fp.cuts,
            "super_splits": Fp.splits,
            "inner_splits": Fp.inner_splits,
            "cases": dict(self.case_counts),
            "splay_rotations": self._stats["rotations"],
            "forest_rebuilds": self.D.rebuilds(),
        }


class ExtremalLazy:
    """Extremal-leaf structure built on first use.

    Only canonical cuts and inner splits query it; workloads without those
    never pay for its construction.
    """

    def __init__(self, forest):
        self._forest = forest.copy()
        self._log = []
        self._impl = None

    def _get(self):
        if self._impl is None:
            from .extremal import ExtremalLeaves

            self._impl = ExtremalLeaves(self._forest)
            for op, v, ids in self._log:
                if op == "cut":
                    self._impl.cut(v)
                else:
                    self._impl.split(v, ids)
            self._log = None
        return self._impl

    def cut(self, v):
        if self._impl is None:
            self._log.append(("cut", v, None))
        else:
            self._impl.cut(v)

    def split(self, v, ids):
        if self._impl is None:
            self._log.append(("split", v, ids))
        else:
            self._impl.split(v, ids)

    def extremal(self, v):
        return self._get().extremal(v)


class NaiveDtm:
    """Baseline: one dynamic forest over all nodes, O(log n) comparisons per op."""

    def __init__(self, forest, oracle, seed=0x5EED):
        self.oracle = oracle
        self.D = DynamicForest(forest, {v: v for v in forest.nodes()}, less=oracle.less, seed=seed)

    def tree_min(self, v):
        return self.D.tree_min(v)

    def cut(self, v):
        self.D.cut(v)

    def root(self, v):
        return self.D.root(v)


def subdivide(forest):
    """Insert a node on every edge.

    Returns (subdivided forest, edge_node) where ``edge_node[v]`` is the node
    put on the edge from ``v`` to its parent.  Original nodes keep their ids.
    """
    nodes = forest.nodes()
    cap = forest.capacity()
    parents = [None] * cap
    edge_node = {}
    k = cap
    for v in nodes:
        p = forest.parent(v)
        if p is not None:
            edge_node[v] = k
            k += 1
    parents.extend([None] * (k - cap))
    for v, e in edge_node.items():
        parents[v] = e
        parents[e] = forest.parent(v)
    order = {}
    # keep sibling order: a subdivision node sits where its child sat
    for v in nodes:
        for i, c in enumerate(forest.children(v)):
            order[edge_node[c]] = i
    sub = RootedForest.from_parents(parents, order=[order.get(i, 0) for i in range(k)])
    return sub, edge_node


class Edtm:
    """Edge minima: the edge from ``v`` to its parent is named by ``v``.

    ``edge_oracle`` ranks edges by that name.  ``tree_min`` returns ``None``
    when the tree of ``v`` has no edges left.
    """

    def __init__(self, forest, edge_oracle, factory=UoDtm):
        sub, edge_node = subdivide(forest)
        self.edge_node = edge_node
        mapping = [INF] * sub.capacity()
        for v, e in edge_node.items():
            mapping[e] = v
        self.edge_of = {e: v for v, e in edge_node.items()}
        self.oracle = MappedOracle(edge_oracle, mapping)
        self.inner = factory(sub, self.oracle)

    def tree_min(self, v):
        w = self.inner.tree_min(v)
        if self.oracle.is_sentinel(w):
            return None
        return self.edge_of[w]

    def cut(self, v):
        e = self.edge_node[v]
        self.inner.cut(v)
        self.inner.cut(e)
