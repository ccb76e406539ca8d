"""Tree entropy and linear-extension counting.

For a rooted tree ``T`` on ``n`` nodes, ``H(T) = sum_v log2(n / |T_v|)``; for
a node set ``S``, ``H_S(T) = sum_{v in S} log2(|S| / |T_v & S|)``, and
``H_k(T)`` is the largest ``H_S`` over sets of at most ``k`` nodes.  Linear
extensions list nodes children-first, i.e. in increasing order of a
priority that grows towards the root.
"""

import math
from dataclasses import asdict, dataclass
from functools import lru_cache

from .errors import BadParams, TooLarge
from .forest import RootedForest

LOG2E = math.log2(math.e)
MAX_ENUM = 12


def _as_forest(tree):
    if isinstance(tree, RootedForest):
        return tree
    return RootedForest.from_parents(tree)


def subtree_sizes(tree):
    f = _as_forest(tree)
    size = {}
    for r in f.roots():
        for v in f.postorder(r):
            size[v] = 1 + sum(size[c] for c in f.children(v))
    return size


def tree_entropy(tree):
    size = subtree_sizes(tree)
    n = len(size)
    return sum(math.log2(n / s) for s in size.values())


def _restricted_sizes(f, S):
    """|T_v & S| for every node v."""
    cnt = {}
    for r in f.roots():
        for v in f.postorder(r):
            cnt[v] = (v in S) + sum(cnt[c] for c in f.children(v))
    return cnt


def entropy_subset(tree, S):
    f = _as_forest(tree)
    S = set(S)
    if not S:
        return 0.0
    cnt = _restricted_sizes(f, S)
    k = len(S)
    return sum(math.log2(k / cnt[v]) for v in S)


def greedy_witness(tree, k):
    """The k nodes with the smallest subtrees; this set is descendant-closed
    and maximises H_S among sets of size at most k."""
    size = subtree_sizes(tree)
    if k < 0:
        raise BadParams("k must be non-negative")
    order = sorted(size, key=lambda v: (size[v], v))
    return order[: min(k, len(order))]


def entropy_k(tree, k):
    """H_k(T) and a witness set.  The greedy witness is descendant-closed,
    so ``|T_v & S|`` equals ``|T_v|`` for every chosen node."""
    size = subtree_sizes(tree)
    w = greedy_witness(tree, k)
    m = len(w)
    return sum(math.log2(m / size[v]) for v in w), set(w)


def _hook_product(sizes):
    p = 1
    for s in sizes:
        p *= s
    return p


def count_linear_extensions(tree):
    """Hook-length formula: n! / prod |T_v|."""
    size = subtree_sizes(tree)
    return math.factorial(len(size)) // _hook_product(size.values())


def count_le_subset(tree, S):
    """Orderings of S consistent with the tree: |S|! / prod_{u in S} |T_u & S|."""
    f = _as_forest(tree)
    S = set(S)
    cnt = _restricted_sizes(f, S)
    return math.factorial(len(S)) // _hook_product(cnt[v] for v in S)


def enumerate_le_prefixes(tree, k):
    """Number of length-k prefixes of linear extensions, by search (n <= 12)."""
    f = _as_forest(tree)
    nodes = f.nodes()
    n = len(nodes)
    if n > MAX_ENUM:
        raise TooLarge(f"enumeration limited to {MAX_ENUM} nodes")
    idx = {v: i for i, v in enumerate(nodes)}
    kids = [0] * n
    for v in nodes:
        for c in f.children(v):
            kids[idx[v]] |= 1 << idx[c]

    @lru_cache(maxsize=None)
    def count(taken, left):
        if left == 0:
            return 1
        total = 0
        for i in range(n):
            if not taken >> i & 1 and kids[i] & ~taken == 0:
                total += count(taken | 1 << i, left - 1)
        return total

    return count(0, min(k, n))


def lower_bound(tree, m, slack=None):
    """Comparison lower bound for m operations, in bits.

    ``max(H_k - k*log2(e), m, n)`` with ``k = m // 2``; the ``k*log2(e)``
    term is the gap between ``log2 |LE_k|`` and ``H_k``.
    """
    size = subtree_sizes(tree)
    n = len(size)
    k = m // 2
    c = LOG2E if slack is None else slack
    return max(entropy_k(tree, k)[0] - c * k, m, n)


def subdivided_parents(tree):
    """Parent array of the tree with one extra node on every edge."""
    f = _as_forest(tree)
    nodes = f.nodes()
    pos = {v: i for i, v in enumerate(nodes)}
    par = [None] * len(nodes)
    for v in nodes:
        p = f.parent(v)
        if p is not None:
            par.append(pos[p])
            par[pos[v]] = len(par) - 1
    return par


def h_tilde_bound_check(tree, k):
    """H_k of the subdivided tree is at most 2 H_k(T) + 2k."""
    lhs = entropy_k(subdivided_parents(tree), k)[0]
    return lhs <= 2 * entropy_k(tree, k)[0] + 2 * k + 1e-9


@dataclass
class EntropyReport:
    n: int
    leaves: int
    H: float
    H_k: float
    k: int
    log_le: float
    lower_bound: float

    def to_dict(self):
        return asdict(self)


def entropy_report(tree, m):
    f = _as_forest(tree)
    size = subtree_sizes(f)
    n = len(size)
    le = count_linear_extensions(f) if n <= 3000 else None
    log_le = math.log2(le) if le is not None else (
        math.lgamma(n + 1) / math.log(2) - sum(math.log2(s) for s in size.values())
    )
    return EntropyReport(
        n=n,
        leaves=sum(1 for v in f.nodes() if f.is_leaf(v)),
        H=tree_entropy(f),
        H_k=entropy_k(f, m)[0],
        k=m,
        log_le=log_le,
        lower_bound=lower_bound(f, m),
    )
