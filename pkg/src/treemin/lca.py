"""Comparison-free lowest common ancestors on a static forest.

Euler tour plus a block-decomposed range-minimum structure on the depth
sequence.  Adjacent depths differ by exactly one, so every block is described
by its pattern of up/down steps and in-block answers come from a table shared
by all blocks with the same pattern.  Only integer depths are compared, never
priorities.

Complexity: O(n) preprocessing, O(1) per query.
"""

from typing import List, Optional, Sequence


class PlusMinusOneRMQ:
    """Argmin over a sequence whose neighbours differ by +1 or -1."""

    def __init__(self, a: Sequence[int]):
        n = len(a)
        self.a = a
        b = max(1, (max(n, 2).bit_length() - 1) // 2)
        self.b = b
        nb = (n + b - 1) // b
        # block minima positions and their up/down pattern
        block_pos = []
        pattern = []
        for k in range(nb):
            lo = k * b
            hi = min(n, lo + b)
            best = lo
            mask = 0
            for i in range(lo + 1, hi):
                if a[i] < a[best]:
                    best = i
                if a[i] > a[i - 1]:
                    mask |= 1 << (i - lo - 1)
            # pad short last block with upward steps
            for i in range(hi, lo + b):
                mask |= 1 << (i - lo - 1)
            block_pos.append(best)
            pattern.append(mask)
        self.pattern = pattern
        tables = {}
        for mask in set(pattern):
            tables[mask] = self._in_block_table(mask, b)
        self.tables = tables
        # sparse table over block minima
        sparse = [block_pos]
        j = 1
        while (1 << j) <= nb:
            prev = sparse[-1]
            half = 1 << (j - 1)
            row = []
            for i in range(nb - (1 << j) + 1):
                x, y = prev[i], prev[i + half]
                row.append(x if a[x] <= a[y] else y)
            sparse.append(row)
            j += 1
        self.sparse = sparse

    @staticmethod
    def _in_block_table(mask, b):
        depth = [0] * b
        for i in range(1, b):
            depth[i] = depth[i - 1] + (1 if mask >> (i - 1) & 1 else -1)
        table = [[0] * b for _ in range(b)]
        for i in range(b):
            best = i
            row = table[i]
            for j in range(i, b):
                if depth[j] < depth[best]:
                    best = j
                row[j] = best
        return table

    def argmin(self, i: int, j: int) -> int:
        """Position of a minimum in ``a[i..j]`` (inclusive), ``i <= j``."""
        b = self.b
        bi, bj = i // b, j // b
        if bi == bj:
            return bi * b + self.tables[self.pattern[bi]][i - bi * b][j - bi * b]
        a = self.a
        best = bi * b + self.tables[self.pattern[bi]][i - bi * b][b - 1]
        c = bj * b + self.tables[self.pattern[bj]][0][j - bj * b]
        if a[c] < a[best]:
            best = c
        if bj - bi > 1:
            lo, hi = bi + 1, bj - 1
            k = (hi - lo + 1).bit_length() - 1
            row = self.sparse[k]
            x, y = row[lo], row[hi - (1 << k) + 1]
            m = x if a[x] <= a[y] else y
            if a[m] < a[best]:
                best = m
        return best


class LcaIndex:
    """LCA queries on a forest given by a parent array (``None``/-1 = root).

    Trees are joined under a virtual root so a single tour covers the forest;
    nodes in different trees have no common ancestor.
    """

    def __init__(self, parents: Sequence[Optional[int]]):
        n = len(parents)
        kids: List[List[int]] = [[] for _ in range(n + 1)]
        for v, p in enumerate(parents):
            kids[n if (p is None or p < 0) else p].append(v)
        self.n = n
        euler = []
        depth = []
        first = [0] * (n + 1)
        stack = [(n, 0, 0)]
        while stack:
            v, d, i = stack.pop()
            if i == 0:
                first[v] = len(euler)
            euler.append(v)
            depth.append(d)
            if i < len(kids[v]):
                stack.append((v, d, i + 1))
                stack.append((kids[v][i], d + 1, 0))
        self.euler = euler
        self.depth_seq = depth
        self.first = first
        self.rmq = PlusMinusOneRMQ(depth)

    def lca(self, u: int, v: int) -> Optional[int]:
        i, j = self.first[u], self.first[v]
        if i > j:
            i, j = j, i
        w = self.euler[self.rmq.argmin(i, j)]
        return None if w == self.n else w
