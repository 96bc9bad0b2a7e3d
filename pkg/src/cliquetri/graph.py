"""Graph and edge-clique-cover data model.

Vertices are dense 0-based ints; a vertex set is an int bitmask.  A Graph is
immutable after construction and all algorithms treat it as read-only, so
instances can be shared freely.
"""

from __future__ import annotations

from .bitset import bit, iter_bits, lowest_bit, mask_of


class Graph:
    """Simple undirected graph with bitmask adjacency rows.

    ``adj[v]`` is the neighbor set of v as a bitmask.  ``labels``, when
    present, maps vertex index to an external name (parsers fill it in;
    algorithms never look at it).
    """

    __slots__ = ("n", "adj", "full_mask", "labels")

    def __init__(self, n: int, edges=(), labels=None):
        self.n = n
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= bit(v)
            adj[v] |= bit(u)
        self.adj = adj
        self.full_mask = (1 << n) - 1
        self.labels = labels

    # -- basic accessors -------------------------------------------------

    def edges(self):
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    yield (u, v)
                rest >>= 1
                v += 1

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_complete(self) -> bool:
        n = self.n
        return all(self.adj[v].bit_count() == n - 1 for v in range(n))

    # -- neighborhood / component primitives -----------------------------

    def neighborhood(self, x: int) -> int:
        """N(x): union of neighbors of x, minus x itself."""
        nb = 0
        m = x
        while m:
            low = m & -m
            nb |= self.adj[low.bit_length() - 1]
            m ^= low
        return nb & ~x

    def closed_neighborhood(self, x: int) -> int:
        return self.neighborhood(x) | x

    def component_of(self, v: int, removed: int = 0) -> int:
        """Vertex set of the component of v in G minus `removed`."""
        adj = self.adj
        comp = bit(v)
        frontier = adj[v] & ~removed & ~comp
        while frontier:
            comp |= frontier
            grow = 0
            m = frontier
            while m:
                low = m & -m
                grow |= adj[low.bit_length() - 1]
                m ^= low
            frontier = grow & ~removed & ~comp
        return comp

    def components(self, removed: int = 0) -> list[int]:
        """Components of G minus `removed`, ordered by minimum vertex."""
        todo = self.full_mask & ~removed
        out = []
        while todo:
            comp = self.component_of(lowest_bit(todo), removed)
            out.append(comp)
            todo &= ~comp
        return out

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.component_of(0) == self.full_mask

    def induced(self, vset: int) -> tuple["Graph", list[int]]:
        """Induced subgraph plus the old index of each new vertex."""
        old = list(iter_bits(vset))
        pos = {o: i for i, o in enumerate(old)}
        g = Graph(len(old))
        for i, o in enumerate(old):
            row = 0
            m = self.adj[o] & vset
            while m:
                low = m & -m
                row |= bit(pos[low.bit_length() - 1])
                m ^= low
            g.adj[i] = row
        if self.labels is not None:
            g.labels = [self.labels[o] for o in old]
        return g, old

    def with_clique(self, clique: int) -> "Graph":
        """Copy of this graph with `clique` completed into a clique."""
        g = Graph(self.n)
        g.adj = list(self.adj)
        g.labels = self.labels
        m = clique
        while m:
            low = m & -m
            v = low.bit_length() - 1
            g.adj[v] |= clique & ~low
            m ^= low
        return g

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class CliqueCover:
    """An edge clique cover: ordered cliques plus per-vertex membership masks.

    ``member_mask[v]`` is the set of cover indices whose clique contains v
    (the paper-side bookkeeping that the part algebra runs on).
    """

    __slots__ = ("cliques", "member_mask", "n")

    def __init__(self, n: int, cliques):
        self.n = n
        self.cliques = tuple(cliques)
        member = [0] * n
        for i, w in enumerate(self.cliques):
            m = w
            while m:
                low = m & -m
                member[low.bit_length() - 1] |= bit(i)
                m ^= low
        self.member_mask = tuple(member)

    @property
    def cc(self) -> int:
        return len(self.cliques)

    @property
    def full_part(self) -> int:
        return (1 << len(self.cliques)) - 1

    def cliques_touching(self, x: int) -> int:
        """Part mask of cover cliques intersecting vertex set x."""
        part = 0
        m = x
        while m:
            low = m & -m
            part |= self.member_mask[low.bit_length() - 1]
            m ^= low
        return part

    def part_vertices(self, part: int) -> int:
        """Vertices all of whose cliques lie inside `part`."""
        out = 0
        for v, wm in enumerate(self.member_mask):
            if wm and wm & ~part == 0:
                out |= bit(v)
        return out

    def are_compatible(self, p1: int, p2: int) -> bool:
        """Two disjoint parts are compatible if merging them adds no vertices."""
        if p1 == 0 or p2 == 0 or p1 & p2:
            raise ValueError("parts must be non-empty and disjoint")
        return self.part_vertices(p1) | self.part_vertices(p2) == self.part_vertices(p1 | p2)

    def __repr__(self):
        return f"CliqueCover(cc={self.cc})"


def is_clique(g: Graph, x: int) -> bool:
    m = x
    while m:
        low = m & -m
        if x & ~low & ~g.adj[low.bit_length() - 1]:
            return False
        m ^= low
    return True


def validate_cover(g: Graph, cover: CliqueCover) -> bool:
    """Check both CliqueCover invariants: cliques are cliques, edges covered."""
    if cover.n != g.n:
        return False
    covered = [0] * g.n
    for w in cover.cliques:
        if not is_clique(g, w):
            return False
        m = w
        while m:
            low = m & -m
            covered[low.bit_length() - 1] |= w & ~low
            m ^= low
    if any(covered[v] != g.adj[v] for v in range(g.n)):
        return False
    # membership masks consistent with cliques
    for v in range(g.n):
        wm = mask_of(i for i, w in enumerate(cover.cliques) if w >> v & 1)
        if wm != cover.member_mask[v]:
            return False
    # every vertex of a connected graph with n > 1 must be in some clique
    if g.n > 1 and g.is_connected() and any(m == 0 for m in cover.member_mask):
        return False
    return True


def greedy_cover(g: Graph) -> CliqueCover:
    """Deterministic greedy edge clique cover.

    Scans edges in lexicographic order; each uncovered edge is grown into a
    maximal clique by repeatedly adding the smallest vertex adjacent to all
    current members.
    """
    covered = [0] * g.n
    cliques = []
    for u, v in g.edges():
        if covered[u] >> v & 1:
            continue
        cl = bit(u) | bit(v)
        common = g.adj[u] & g.adj[v] & ~cl
        while common:
            w = lowest_bit(common)
            cl |= bit(w)
            common &= g.adj[w] & ~cl
        cliques.append(cl)
        m = cl
        while m:
            low = m & -m
            covered[low.bit_length() - 1] |= cl & ~low
            m ^= low
    if not cliques:
        # edgeless graph: cover isolated vertices with singletons
        cliques = [bit(v) for v in range(g.n)]
    return CliqueCover(g.n, cliques)
