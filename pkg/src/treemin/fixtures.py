"""Tree and graph families, priority samplers and fixture files."""

import heapq
import math
import random

from .errors import BadParams
from .forest import RootedForest

FAMILIES = ("path", "star", "caterpillar", "complete_binary", "random_tree", "bad_tree", "random_graph")


def path_parents(n):
    return [None] + list(range(n - 1))


def star_parents(n):
    return [None] + [0] * (n - 1)


def caterpillar_parents(n):
    """Spine of ceil(n/2) nodes, one leaf hanging off each spine node."""
    s = (n + 1) // 2
    par = [None] + list(range(s - 1))
    par += [i for i in range(n - s)]
    return par


def complete_binary_parents(n):
    return [None] + [(i - 1) // 2 for i in range(1, n)]


def random_tree_parents(n, rng):
    """Uniform random labelled tree (Pruefer decoding), rooted at node 0."""
    if n <= 2:
        return [None] + [0] * (n - 1)
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in code:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    adj = [[] for _ in range(n)]
    for x in code:
        leaf = heapq.heappop(leaves)
        adj[leaf].append(x)
        adj[x].append(leaf)
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    adj[a].append(b)
    adj[b].append(a)
    return root_tree(adj, 0)


def bad_tree_k(n):
    return max(1, math.ceil(n / math.log2(n))) if n > 2 else n - 1


def bad_tree_parents(n, k=None):
    """Root with ``k`` single-node children plus one chain of n-k-1 nodes."""
    if k is None:
        k = bad_tree_k(n)
    if not 0 <= k <= n - 1:
        raise BadParams("need 0 <= k <= n-1")
    par = [None] + [0] * k
    chain = n - k - 1
    if chain > 0:
        par.append(0)
        par += list(range(k + 1, n - 1))
    return par


def root_tree(adj, r):
    """Parent array of the tree given by ``adj`` rooted at ``r``."""
    n = len(adj)
    par = [None] * n
    seen = [False] * n
    seen[r] = True
    stack = [r]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                par[w] = v
                stack.append(w)
    return par


def random_connected_graph(n, m, rng):
    """Random spanning tree plus ``m - (n-1)`` distinct extra edges."""
    if n < 1 or m < n - 1 or m > n * (n - 1) // 2:
        raise BadParams(f"no simple connected graph with n={n}, m={m}")
    par = random_tree_parents(n, rng)
    edges = {(min(v, p), max(v, p)) for v, p in enumerate(par) if p is not None}
    while len(edges) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    edges = sorted(edges)
    rng.shuffle(edges)
    return n, edges


def family_parents(family, n, seed=0, k=None):
    rng = random.Random(seed)
    if family == "path":
        return path_parents(n)
    if family == "star":
        return star_parents(n)
    if family == "caterpillar":
        return caterpillar_parents(n)
    if family == "complete_binary":
        return complete_binary_parents(n)
    if family == "random_tree":
        return random_tree_parents(n, rng)
    if family == "bad_tree":
        return bad_tree_parents(n, k)
    raise BadParams(f"unknown tree family {family!r}")


def adjacency(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


# -- priorities -------------------------------------------------------------


def random_permutation(n, rng):
    p = list(range(n))
    rng.shuffle(p)
    return p


def monotone_priorities(forest, rng):
    """Uniformly random priorities that increase towards the roots.

    Nodes are drawn from the top: among the nodes whose parent is already
    drawn, node ``v`` comes next with probability proportional to the size
    of its subtree, which makes the order a uniform linear extension.  The
    first node drawn gets the largest value.
    """
    cap = forest.capacity()
    nodes = forest.nodes()
    size = [0] * cap
    for r in forest.roots():
        for v in forest.postorder(r):
            size[v] = 1 + sum(size[c] for c in forest.children(v))
    tree = [0] * (cap + 1)

    def add(i, delta):
        i += 1
        while i <= cap:
            tree[i] += delta
            i += i & -i

    top = 1 << cap.bit_length()

    def find(x):
        # smallest index whose prefix sum exceeds x
        pos = 0
        step = top
        while step:
            nxt = pos + step
            if nxt <= cap and tree[nxt] <= x:
                pos = nxt
                x -= tree[nxt]
            step >>= 1
        return pos

    total = 0
    for r in forest.roots():
        add(r, size[r])
        total += size[r]
    prio = [None] * cap
    k = len(nodes)
    while total:
        v = find(rng.randrange(total))
        add(v, -size[v])
        total -= size[v]
        k -= 1
        prio[v] = k
        for c in forest.children(v):
            add(c, size[c])
            total += size[c]
    return prio


# -- fixture files ------------------------------------------------------------


def write_forest(path, forest):
    with open(path, "w") as fh:
        for v in forest.nodes():
            p = forest.parent(v)
            rank = 0 if p is None else forest.children(p).index(v)
            fh.write(f"{v} {'-' if p is None else p} {rank}\n")


def write_forest_parents(path, parents):
    with open(path, "w") as fh:
        rank = {}
        for v, p in enumerate(parents):
            if p is None:
                fh.write(f"{v} - 0\n")
            else:
                r = rank.get(p, 0)
                rank[p] = r + 1
                fh.write(f"{v} {p} {r}\n")


def read_forest(path):
    entries = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            v, p, r = line.split()
            entries.append((int(v), None if p == "-" else int(p), int(r)))
    n = max((v for v, _, _ in entries), default=-1) + 1
    parents = [None] * n
    order = [0] * n
    for v, p, r in entries:
        parents[v] = p
        order[v] = r
    return RootedForest.from_parents(parents, order)


def write_graph(path, n, edges):
    with open(path, "w") as fh:
        fh.write(f"{n} {len(edges)}\n")
        for u, v in edges:
            fh.write(f"{u} {v}\n")


def read_graph(path):
    with open(path) as fh:
        n, m = map(int, fh.readline().split())
        edges = [tuple(map(int, fh.readline().split())) for _ in range(m)]
    return n, edges
