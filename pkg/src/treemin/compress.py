"""Chain compression of a forest.

A chain is a maximal downward path on which every node but the last has
exactly one child.  Contracting every chain to a super-node gives the
super-forest ``F'``; there every inner node has at least two children, so a
tree with ``l`` leaves has at most ``2l - 1`` super-nodes.  The chains
themselves form the chain forest ``F_C`` (a forest of paths).

Cutting an edge of ``F`` becomes one canonical operation on ``F'``: if the
edge lies inside a chain the super-node splits, otherwise the edge between
two super-nodes is cut.  ``F'`` never gains an edge.
"""

from dataclasses import dataclass

from .errors import IsRoot
from .forest import RootedForest
from .roots import PathRoots, TreeRoots


@dataclass(frozen=True)
class CanonicalCut:
    node: int  # super-node detached from its parent
    parent: int  # former parent super-node


@dataclass(frozen=True)
class CanonicalSplit:
    node: int  # retired super-node
    upper: int  # keeps the parent and the top of the chain
    lower: int  # keeps the children; its chain starts at the cut node


def maximal_chains(forest):
    """Chains in pre-order, each listed top to bottom."""
    chains = []
    for r in forest.roots():
        starts = [r]
        while starts:
            v = starts.pop()
            chain = [v]
            while forest.has_one_child(v):
                v = forest.first_child(v)
                chain.append(v)
            chains.append(chain)
            starts.extend(reversed(forest.children(v)))
    return chains


class Compression:
    def __init__(self, forest, roots_backend="ett"):
        self.roots_F = TreeRoots(forest, roots_backend)
        self.F = self.roots_F.f  # the roots structure keeps F up to date
        chains = maximal_chains(self.F)
        cap = self.F.capacity()
        chain_par = [None] * cap
        self.top = []  # super-node -> top node of its chain
        self.super_of_top = {}
        for x, chain in enumerate(chains):
            self.top.append(chain[0])
            self.super_of_top[chain[0]] = x
            for a, b in zip(chain, chain[1:]):
                chain_par[b] = a
        # the parent of a super-node is the chain whose bottom is the parent of
        # its top; pre-order numbering keeps siblings in their original order
        bottom_super = {chain[-1]: x for x, chain in enumerate(chains)}
        sup_par = []
        for chain in chains:
            p = self.F.parent(chain[0])
            sup_par.append(None if p is None else bottom_super[p])
        self.FC = RootedForest.from_parents(chain_par)
        self.Fp = RootedForest.from_parents(sup_par)
        self.chains_at_start = len(chains)
        self.roots_C = PathRoots(self.FC)

    # -- lookups -----------------------------------------------------------

    def super_of(self, v):
        return self.super_of_top[self.roots_C.root(v)]

    def root_of(self, v):
        return self.roots_F.root(v)

    def top_of(self, x):
        return self.top[x]

    def super_count(self):
        return len(self.Fp)

    def same_chain(self, v):
        """Whether ``v`` and its parent lie in one chain."""
        return self.roots_C.parent(v) is not None

    # -- the one mutation ----------------------------------------------------

    def cut(self, v):
        """Cut ``v`` from its parent in ``F``; return the canonical operation."""
        F = self.F
        u = F.parent(v)
        if u is None:
            raise IsRoot(f"node {v} has no parent")
        same_chain = self.same_chain(v)
        if same_chain:
            x = self.super_of(v)
        self.roots_F.cut(v)
        if same_chain:
            self.roots_C.cut(v)
            y1, y2 = self.Fp.split(x)
            t = self.top[x]
            for y in (y1, y2):
                while len(self.top) <= y:
                    self.top.append(None)
            self.top[y1] = t
            self.top[y2] = v
            self.top[x] = None
            self.super_of_top[t] = y1
            self.super_of_top[v] = y2
            return CanonicalSplit(x, y1, y2)
        y = self.super_of_top[v]
        w = self.Fp.parent(y)
        self.Fp.cut(y)
        return CanonicalCut(y, w)
