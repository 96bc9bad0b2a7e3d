"""Chordal-graph utilities and tree decompositions.

Witness triangulations come out of the solvers as bag sets; this module turns
them into chordal supergraphs and valid tree decompositions (bags = maximal
cliques, tree = max-weight spanning tree of the clique intersection graph).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitset import bit, iter_bits, sorted_tuple
from .graph import Graph


@dataclass
class TreeDecomposition:
    n: int
    bags: list[int]
    edges: list[tuple[int, int]] = field(default_factory=list)

    @property
    def width(self) -> int:
        return max((b.bit_count() for b in self.bags), default=0) - 1

    def validate(self, g: Graph) -> bool:
        if not self.bags:
            return g.n == 0
        union = 0
        for b in self.bags:
            union |= b
        if union != g.full_mask:
            return False
        for u, v in g.edges():
            e = bit(u) | bit(v)
            if not any(b & e == e for b in self.bags):
                return False
        # each vertex's bags must induce a subtree
        nbr = [[] for _ in self.bags]
        for i, j in self.edges:
            nbr[i].append(j)
            nbr[j].append(i)
        for v in range(self.n):
            holding = [i for i, b in enumerate(self.bags) if b >> v & 1]
            if not holding:
                return False
            seen = {holding[0]}
            stack = [holding[0]]
            while stack:
                i = stack.pop()
                for j in nbr[i]:
                    if j not in seen and self.bags[j] >> v & 1:
                        seen.add(j)
                        stack.append(j)
            if len(seen) != len(holding):
                return False
        return True


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visit order (ties to the smallest index)."""
    n = g.n
    weight = [0] * n
    visited = 0
    order = []
    for _ in range(n):
        best, best_w = -1, -1
        for v in range(n):
            if not visited >> v & 1 and weight[v] > best_w:
                best, best_w = v, weight[v]
        order.append(best)
        visited |= bit(best)
        for u in iter_bits(g.adj[best] & ~visited):
            weight[u] += 1
    return order


def is_chordal(g: Graph) -> bool:
    """Standard MCS-based recognition: every vertex's earlier neighborhood
    minus its last-visited member must fall inside that member's adjacency."""
    order = mcs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    visited = 0
    for v in order:
        earlier = g.adj[v] & visited
        if earlier:
            parent = max(iter_bits(earlier), key=pos.__getitem__)
            if earlier & ~bit(parent) & ~g.adj[parent]:
                return False
        visited |= bit(v)
    return True


def maximal_cliques_chordal(g: Graph) -> list[int]:
    """Maximal cliques of a chordal graph via MCS candidate sets."""
    visited = 0
    cands = []
    for v in mcs_order(g):
        cands.append(bit(v) | (g.adj[v] & visited))
        visited |= bit(v)
    cands.sort(key=lambda c: -c.bit_count())
    out: list[int] = []
    for c in cands:
        if not any(c & ~k == 0 for k in out):
            out.append(c)
    out.sort(key=sorted_tuple)
    return out


def clique_tree(n: int, bags: list[int]) -> TreeDecomposition:
    """Max-weight spanning tree of the clique intersection graph.

    For a connected chordal graph this is a clique tree; separate components
    get joined by zero-overlap edges, which keeps the decomposition valid.
    """
    k = len(bags)
    edges = []
    if k > 1:
        in_tree = [False] * k
        best_w = [-1] * k
        best_to = [0] * k
        in_tree[0] = True
        for j in range(1, k):
            best_w[j] = (bags[0] & bags[j]).bit_count()
        for _ in range(k - 1):
            i = max((j for j in range(k) if not in_tree[j]), key=lambda j: best_w[j])
            edges.append((best_to[i], i))
            in_tree[i] = True
            for j in range(k):
                if not in_tree[j]:
                    w = (bags[i] & bags[j]).bit_count()
                    if w > best_w[j]:
                        best_w[j], best_to[j] = w, i
    return TreeDecomposition(n, list(bags), edges)


def triangulation_from_bags(g: Graph, bags) -> Graph:
    """Chordal supergraph whose edges are the union of bag cliques."""
    h = Graph(g.n)
    h.adj = list(g.adj)
    h.labels = g.labels
    for b in bags:
        for v in iter_bits(b):
            h.adj[v] |= b & ~bit(v)
    return h


def decomposition_from_triangulation(h: Graph) -> TreeDecomposition:
    bags = maximal_cliques_chordal(h)
    return clique_tree(h.n, bags)
