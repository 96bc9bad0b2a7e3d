"""Dynamic programming over block realizations, parameterized by objective.

The DP assigns each potential maximal clique to the blocks it can realize
(N(C) <= omega <= N[C]), sweeps blocks by size, and reads the optimum off the
root candidates.  Every PMC is a root candidate: a minimal triangulation can
be rooted at any of its maximal cliques, which also makes complete graphs a
degenerate case of the same rule rather than a special one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .bitset import bit, iter_bits, lowest_bit
from .graph import CliqueCover, Graph
from .separators import Block
from .triangulation import (
    TreeDecomposition,
    decomposition_from_triangulation,
    triangulation_from_bags,
)

INFEASIBLE = math.inf


@dataclass
class Realization:
    """R(C): the graph on N[C] with N(C) completed into a clique."""

    block: Block
    graph: Graph
    old_ids: list[int]


def realization(g: Graph, block: Block) -> Realization:
    sub, old = g.induced(block.vertices | block.separator)
    pos = {o: i for i, o in enumerate(old)}
    sep_local = 0
    for v in iter_bits(block.separator):
        sep_local |= bit(pos[v])
    return Realization(block, sub.with_clique(sep_local), old)


# -- objectives -------------------------------------------------------------

class Treewidth:
    """Minimize the maximum bag size; optional decision bound k."""

    combine_is_max = True

    def __init__(self, k: Optional[int] = None):
        self.k = k

    def local_cost(self, g: Graph, sep: int, omega: int):
        w = omega.bit_count() - 1
        if self.k is not None and w > self.k:
            return INFEASIBLE
        return w

    def fold(self, local, children):
        v = local
        for c in children:
            if c > v:
                v = c
        return v

    def relabel(self, old_ids):
        return self


def weight_table(pairs: Optional[dict] = None) -> Callable[[int, int], object]:
    """Weight lookup for fill edges; unlisted pairs default to weight 1."""
    table = pairs or {}

    def w(u: int, v: int):
        return table.get((u, v) if u < v else (v, u), 1)

    return w


class WeightedFill:
    """Minimize the total weight of fill edges.

    The local cost of choosing omega in the context of a block with separator
    `sep` excludes pairs inside sep*sep: the parent context already paid for
    turning the separator into a clique.
    """

    combine_is_max = False

    def __init__(self, weights: Optional[Callable[[int, int], object]] = None):
        self.w = weights if weights is not None else weight_table()

    def local_cost(self, g: Graph, sep: int, omega: int):
        cost = 0
        verts = list(iter_bits(omega))
        for i, u in enumerate(verts):
            au = g.adj[u]
            for v in verts[i + 1:]:
                if au >> v & 1:
                    continue
                if sep >> u & 1 and sep >> v & 1:
                    continue
                cost += self.w(u, v)
        return cost

    def fold(self, local, children):
        return local + sum(children)

    def relabel(self, old_ids):
        w = self.w
        return WeightedFill(lambda u, v: w(old_ids[u], old_ids[v]))


def sandwich_fill(fadj: list[int]) -> WeightedFill:
    """Chordal sandwich as weighted fill-in: admissible fill edges cost 0,
    forbidden ones cost 1, so the sandwich is feasible iff the optimum is 0."""

    def w(u: int, v: int):
        return 0 if fadj[u] >> v & 1 else 1

    return WeightedFill(w)


class Fhtw:
    """Minimize the maximum fractional edge cover over bags."""

    combine_is_max = True

    def __init__(self, fcov: Callable[[int], Fraction], old_ids: Optional[list[int]] = None):
        # fcov takes a vertex mask in hypergraph coordinates
        self._fcov = fcov
        self.old_ids = old_ids

    def local_cost(self, g: Graph, sep: int, omega: int):
        if self.old_ids is not None:
            omega = sum(bit(self.old_ids[v]) for v in iter_bits(omega))
        return self._fcov(omega)

    def fold(self, local, children):
        v = local
        for c in children:
            if c > v:
                v = c
        return v

    def relabel(self, old_ids):
        if self.old_ids is None:
            return Fhtw(self._fcov, list(old_ids))
        return Fhtw(self._fcov, [self.old_ids[i] for i in old_ids])


# -- the DP -----------------------------------------------------------------

def assign_pmc_to_blocks(g: Graph, omega: int):
    """For one PMC: the (block, children) pairs it can realize.

    Each component D of G - omega names a separator S = N(D); the full
    component of S holding omega - S is the served block, and the children
    are the components of G - omega inside it.
    """
    comps = g.components(omega)
    served = {}
    for d in comps:
        s = g.neighborhood(d)
        rest = omega & ~s
        c = g.component_of(lowest_bit(rest), s)
        if c not in served:
            served[c] = (s, tuple(d2 for d2 in comps if d2 & ~c == 0))
    return [(c, s, children) for c, (s, children) in served.items()], comps


class DpTable:
    """Block-keyed optimal values plus the witness choice for traceback."""

    def __init__(self, cover: Optional[CliqueCover]):
        self.cover = cover
        self._d = {}

    def _key(self, c: int):
        return self.cover.cliques_touching(c) if self.cover is not None else c

    def get(self, c: int):
        return self._d.get(self._key(c))

    def set(self, c: int, entry):
        self._d[self._key(c)] = entry

    def __len__(self):
        return len(self._d)


def solve(g: Graph, cover: Optional[CliqueCover], obj, pmcs,
          want_witness: bool = True):
    """Optimal objective value over all minimal triangulations of g, plus a
    witness tree decomposition (None when infeasible or not requested).

    `pmcs` must be exactly Pi(g); g must be connected.
    """
    transitions = {}
    roots = []
    for omega in pmcs:
        pairs, comps = assign_pmc_to_blocks(g, omega)
        roots.append((omega, comps))
        for c, s, children in pairs:
            transitions.setdefault(c, []).append((omega, s, children))

    table = DpTable(cover)
    for c in sorted(transitions, key=lambda x: (x.bit_count(), x)):
        best = INFEASIBLE
        best_choice = None
        for omega, s, children in transitions[c]:
            vals = []
            ok = True
            for d in children:
                e = table.get(d)
                if e is None or e[0] == INFEASIBLE:
                    ok = False
                    break
                vals.append(e[0])
            if not ok:
                continue
            local = obj.local_cost(g, s, omega)
            if local == INFEASIBLE:
                continue
            v = obj.fold(local, vals)
            if v < best:
                best = v
                best_choice = (omega, children)
        table.set(c, (best, best_choice))

    best = INFEASIBLE
    best_choice = None
    for omega, comps in roots:
        vals = []
        ok = True
        for d in comps:
            e = table.get(d)
            if e is None or e[0] == INFEASIBLE:
                ok = False
                break
            vals.append(e[0])
        if not ok:
            continue
        local = obj.local_cost(g, 0, omega)
        if local == INFEASIBLE:
            continue
        v = obj.fold(local, vals)
        if v < best:
            best = v
            best_choice = (omega, comps)

    if best == INFEASIBLE or not want_witness:
        return best, None

    bags = []
    stack = [best_choice]
    while stack:
        omega, children = stack.pop()
        bags.append(omega)
        for d in children:
            entry = table.get(d)
            stack.append(entry[1])
    h = triangulation_from_bags(g, bags)
    return best, decomposition_from_triangulation(h)


def extract_triangulation(g: Graph, td: TreeDecomposition) -> Graph:
    """The chordal supergraph whose maximal cliques are the witness bags."""
    return triangulation_from_bags(g, td.bags)
