"""Decremental minima and sums on forests of paths.

``PathDtm`` concatenates all paths into one sequence, builds the Cartesian
tree of that sequence with the classic stack scan (at most 2n comparisons),
and answers every later query by an LCA lookup that compares only integer
depths.  A component is always a contiguous interval ``[pos(root),
pos(leaf)]``, kept by ``PathRoots``.

Both structures can share a ``PathRoots`` with an owner that cuts it.  In
that case ``cut(v)`` must be called before the owner cuts ``v`` and only
updates the structure's own bookkeeping.

``PathSums`` does the same job for an arbitrary commutative semigroup.
Positions are grouped into aligned dyadic blocks whose sums are precomputed;
each component keeps the minimal set of blocks covering it in a deque that
stores running aggregates, so sums cost O(1) and cuts O(1) amortized.
"""

from .lca import LcaIndex
from .roots import PathRoots


def cartesian_parents(seq, less):
    """Parent positions of the min-rooted Cartesian tree of ``seq``."""
    par = [-1] * len(seq)
    stack = []
    for i, x in enumerate(seq):
        last = -1
        while stack and less(x, seq[stack[-1]]):
            last = stack.pop()
        if last != -1:
            par[last] = i
        if stack:
            par[i] = stack[-1]
        stack.append(i)
    return par


class PathDtm:
    """Tree minima on a path forest; zero comparisons after construction."""

    def __init__(self, forest, oracle, roots=None):
        self._own = roots is None
        self.roots = PathRoots(forest) if roots is None else roots
        self.seq = self.roots.seq
        self.lca = LcaIndex(cartesian_parents(self.seq, oracle.less))

    def tree_min(self, v):
        lo, hi = self.roots.interval(v)
        return self.seq[self.lca.lca(lo, hi)]

    def cut(self, v):
        # the interval end plays the role of the path's leaf, so there is
        # nothing to record beyond the roots structure itself
        if self._own:
            self.roots.cut(v)

    def root(self, v):
        return self.roots.root(v)


def dyadic_blocks(lo, hi):
    """Minimal list of aligned blocks ``(level, index)`` covering [lo, hi]."""
    out = []
    while lo <= hi:
        p = 0
        while lo % (2 << p) == 0 and lo + (2 << p) - 1 <= hi:
            p += 1
        out.append((p, lo >> p))
        lo += 1 << p
    return out


class AggDeque:
    """Deque of (item, value) pairs with O(1) amortized total aggregate.

    Two stacks meet in the middle; each entry stores the aggregate of itself
    and everything between it and the middle.  Popping from an empty side
    moves half of the other side over.
    """

    __slots__ = ("combine", "front", "back", "ops")

    def __init__(self, combine):
        self.combine = combine
        self.front = []  # top of stack is the front of the deque
        self.back = []  # top of stack is the back of the deque
        self.ops = 0

    def __len__(self):
        return len(self.front) + len(self.back)

    def _push_front(self, item, val):
        f = self.front
        agg = val if not f else self.combine(val, f[-1][2])
        f.append((item, val, agg))
        self.ops += 1

    def _push_back(self, item, val):
        b = self.back
        agg = val if not b else self.combine(b[-1][2], val)
        b.append((item, val, agg))
        self.ops += 1

    push_front = _push_front
    push_back = _push_back

    def items(self):
        return [e[:2] for e in reversed(self.front)] + [e[:2] for e in self.back]

    def _rebuild(self, seq, h):
        self.front = []
        self.back = []
        for item, val in reversed(seq[:h]):
            self._push_front(item, val)
        for item, val in seq[h:]:
            self._push_back(item, val)

    def pop_front(self):
        if not self.front:
            seq = self.items()
            self._rebuild(seq, max(1, len(seq) // 2))
        self.ops += 1
        return self.front.pop()[:2]

    def pop_back(self):
        if not self.back:
            seq = self.items()
            self._rebuild(seq, min(len(seq) - 1, len(seq) // 2))
        self.ops += 1
        return self.back.pop()[:2]

    def total(self):
        f, b = self.front, self.back
        if not f:
            return b[-1][2]
        if not b:
            return f[-1][2]
        return self.combine(f[-1][2], b[-1][2])


class PathSums:
    """Semigroup tree sums on a path forest under cuts."""

    def __init__(self, forest, weight, combine, roots=None):
        self._own = roots is None
        self.roots = PathRoots(forest) if roots is None else roots
        self.seq, self.pos = self.roots.seq, self.roots.pos
        self.combine = combine
        n = len(self.seq)
        levels = [[weight(v) for v in self.seq]]
        while len(levels[-1]) >= 2:
            prev = levels[-1]
            levels.append([combine(prev[2 * q], prev[2 * q + 1]) for q in range(len(prev) // 2)])
        self.levels = levels
        self.deques = {}
        for c in range(len(self.roots.lo)):
            lo, hi = self.roots.lo[c], self.roots.hi[c]
            r = self.seq[lo]
            d = AggDeque(combine)
            for p, q in dyadic_blocks(lo, hi):
                d.push_back((p, q), levels[p][q])
            self.deques[r] = d
        self.n = n

    def tree_sum(self, v):
        return self.deques[self.roots.root(v)].total()

    def root(self, v):
        return self.roots.root(v)

    def blocks(self, v):
        """Blocks of v's component as (start, end) position pairs."""
        return [(q << p, ((q + 1) << p) - 1) for (p, q), _ in self.deques[self.roots.root(v)].items()]

    def stack_ops(self):
        return sum(d.ops for d in self.deques.values())

    def cut(self, v):
        roots = self.roots
        r = roots.root(v)
        c = self.pos[v]
        d = self.deques[r]
        levels = self.levels
        front_taken = []
        back_taken = []
        # alternate between the two ends until the block holding c shows up
        while True:
            (p, q), val = d.pop_front()
            lo, hi = q << p, ((q + 1) << p) - 1
            if hi < c:
                front_taken.append(((p, q), val))
            else:
                left = AggDeque(self.combine)
                for item, x in front_taken:
                    left.push_back(item, x)
                if lo < c:
                    for b in dyadic_blocks(lo, c - 1):
                        left.push_back(b, levels[b[0]][b[1]])
                    pieces = dyadic_blocks(c, hi)
                else:
                    pieces = [(p, q)]
                for b in reversed(pieces):
                    d.push_front(b, levels[b[0]][b[1]])
                for item, x in reversed(back_taken):
                    d.push_back(item, x)
                right = d
                break
            if not len(d):
                left, right = self._clean_split(d, front_taken, back_taken)
                break
            (p, q), val = d.pop_back()
            lo, hi = q << p, ((q + 1) << p) - 1
            if lo >= c:
                back_taken.append(((p, q), val))
            else:
                right = AggDeque(self.combine)
                if hi >= c:
                    for b in dyadic_blocks(c, hi):
                        right.push_back(b, levels[b[0]][b[1]])
                    pieces = dyadic_blocks(lo, c - 1)
                else:
                    pieces = [(p, q)]
                for item, x in reversed(back_taken):
                    right.push_back(item, x)
                for b in pieces:
                    d.push_back(b, levels[b[0]][b[1]])
                for item, x in reversed(front_taken):
                    d.push_front(item, x)
                left = d
                break
            if not len(d):
                left, right = self._clean_split(d, front_taken, back_taken)
                break
        self.deques[r] = left
        self.deques[v] = right
        if self._own:
            roots.cut(v)

    def _clean_split(self, d, front_taken, back_taken):
        # the cut fell exactly between two blocks
        left = AggDeque(self.combine)
        for item, x in front_taken:
            left.push_back(item, x)
        for item, x in reversed(back_taken):
            d.push_back(item, x)
        return left, d
