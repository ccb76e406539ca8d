"""Comparison-counting access to node priorities.

Every algorithm in the package learns about priorities only through
``less``.  Real priorities are hidden ranks; each call that looks at two of
them bumps ``comparisons``.  Sentinels (the global ``INF`` and the per-node
infinities) are ordered for free.
"""

from typing import Optional, Sequence

from .errors import BadParams

INF = -1  # handle of the global +infinity; it is larger than every node


class PriorityOracle:
    """Hidden priorities over nodes ``0..n-1``.

    ``ranks[v]`` is a comparable value for a finite node, or ``None`` to make
    ``v`` a per-node infinity.  Per-node infinities are larger than every
    finite priority, ordered among themselves by node id, and all smaller
    than ``INF``.
    """

    def __init__(self, ranks: Sequence[Optional[object]]):
        finite = [v for v, r in enumerate(ranks) if r is not None]
        order = sorted(finite, key=lambda v: ranks[v])
        for a, b in zip(order, order[1:]):
            if not ranks[a] < ranks[b]:
                raise BadParams("finite priorities must be distinct")
        n = len(ranks)
        nf = len(order)
        key = [0] * n
        for i, v in enumerate(order):
            key[v] = i
        for v in range(n):
            if ranks[v] is None:
                key[v] = nf + v
        self._key = key
        self._finite = nf
        self._top = nf + n
        self.comparisons = 0

    @classmethod
    def from_permutation(cls, perm):
        return cls(list(perm))

    def __len__(self):
        return len(self._key)

    def less(self, u: int, v: int) -> bool:
        ku = self._key[u] if u >= 0 else self._top
        kv = self._key[v] if v >= 0 else self._top
        nf = self._finite
        if ku < nf and kv < nf:
            self.comparisons += 1
        return ku < kv

    def is_sentinel(self, u: int) -> bool:
        return u < 0 or self._key[u] >= self._finite

    def min(self, u: int, v: int) -> int:
        return v if self.less(v, u) else u

    def reset(self):
        self.comparisons = 0

    def rank_for_testing(self, u: int) -> int:
        """Raw order key; test oracles use it to avoid touching the counter."""
        return self._key[u] if u >= 0 else self._top


def vertex_sentinel(k: int) -> int:
    """Code for the k-th per-vertex infinity inside a ``MappedOracle`` map."""
    return -2 - k


class MappedOracle:
    """View of another oracle through a handle map.

    ``mapping[h]`` is either a base handle (charged to the base oracle), a
    ``vertex_sentinel(k)`` code, or ``INF``.  Vertex sentinels rank above
    every base handle, by ``k`` among themselves, and below ``INF``.
    """

    def __init__(self, base, mapping):
        self.base = base
        self.mapping = mapping

    @property
    def comparisons(self):
        return self.base.comparisons

    def less(self, u, v):
        m = self.mapping
        a = m[u] if u >= 0 else INF
        b = m[v] if v >= 0 else INF
        if a >= 0:
            return self.base.less(a, b) if b >= 0 else True
        if b >= 0:
            return False
        if a == INF:
            return False
        return b == INF or a > b

    def is_sentinel(self, u):
        if u < 0:
            return True
        a = self.mapping[u]
        return a < 0 or self.base.is_sentinel(a)

    def min(self, u, v):
        return v if self.less(v, u) else u
