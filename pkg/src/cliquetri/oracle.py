"""Brute-force oracles and instance generators.

Everything here is definitionally exhaustive and deliberately independent of
the enumeration/DP machinery in the rest of the package: these functions are
the ground truth the solvers are tested against.  Preconditions keep the
exhaustive sweeps at desk scale (n <= 18 for set sweeps, n <= 14 for the
elimination DP).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .bitset import bit, iter_bits, mask_of
from .graph import CliqueCover, Graph

INF = float("inf")


# -- exhaustive separator / PMC oracles ------------------------------------

def brute_minseps(g: Graph) -> set[int]:
    """All vertex sets with at least two full components, by full sweep."""
    if g.n > 18:
        raise ValueError("brute_minseps is capped at n <= 18")
    out = set()
    for s in range(1, g.full_mask):
        full = 0
        for c in g.components(s):
            if g.neighborhood(c) == s:
                full += 1
        if full >= 2:
            out.add(s)
    return out


def _is_pmc_slow(g: Graph, omega: int) -> bool:
    # Prop. conditions spelled out naively: no full component, and every
    # non-adjacent pair of omega is covered by some component neighborhood.
    comps = g.components(omega)
    sides = [g.neighborhood(c) for c in comps]
    if any(s == omega for s in sides):
        return False
    verts = list(iter_bits(omega))
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if g.has_edge(u, v):
                continue
            if not any(s >> u & 1 and s >> v & 1 for s in sides):
                return False
    return True


def brute_pmcs(g: Graph) -> set[int]:
    """All potential maximal cliques, by full sweep of vertex subsets."""
    if g.n > 18:
        raise ValueError("brute_pmcs is capped at n <= 18")
    return {om for om in range(1, g.full_mask + 1) if _is_pmc_slow(g, om)}


# -- elimination-order DP for treewidth and (weighted) fill-in -------------

def _reach_sets(g: Graph, eliminated: int, v: int) -> int:
    # vertices outside `eliminated` seen from v through eliminated vertices
    adj = g.adj
    comp = bit(v)
    frontier = adj[v] & ~comp
    outside = 0
    while True:
        outside |= frontier & ~eliminated
        inside = frontier & eliminated & ~comp
        if not inside:
            return outside & ~bit(v)
        comp |= inside
        grow = 0
        m = inside
        while m:
            low = m & -m
            grow |= adj[low.bit_length() - 1]
            m ^= low
        frontier = grow & ~comp


def _elimination_dp(g: Graph, weights=None):
    """DP over eliminated prefixes; returns (treewidth, min weighted fill).

    Eliminating v after the set E costs max-degree |Q(E,v)| toward width and
    the weight of non-edges of G inside {v} x Q(E,v) toward fill, where
    Q(E,v) is the set of uneliminated vertices reachable from v through E.
    """
    if g.n > 14:
        raise ValueError("elimination DP is capped at n <= 14")
    n, full = g.n, g.full_mask
    size = 1 << n
    tw = [INF] * size
    fl = [INF] * size
    tw[0] = -1
    fl[0] = 0
    adj = g.adj
    for e_set in range(size - 1):
        cur_tw = tw[e_set]
        if cur_tw == INF:
            continue
        cur_fl = fl[e_set]
        rest = full & ~e_set
        m = rest
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            q = _reach_sets(g, e_set, v)
            nxt = e_set | low
            width = q.bit_count()
            cand_tw = width if width > cur_tw else cur_tw
            if cand_tw < tw[nxt]:
                tw[nxt] = cand_tw
            new_pairs = q & ~adj[v]
            if weights is None:
                cost = new_pairs.bit_count()
            else:
                cost = 0
                mm = new_pairs
                while mm:
                    lo = mm & -mm
                    u = lo.bit_length() - 1
                    cost += weights(min(u, v), max(u, v))
                    mm ^= lo
            cand_fl = cur_fl + cost
            if cand_fl < fl[nxt]:
                fl[nxt] = cand_fl
    return tw[full], fl[full]


def brute_treewidth(g: Graph) -> int:
    return _elimination_dp(g)[0]


def brute_fillin(g: Graph, weights=None):
    """Exact minimum fill-in; `weights(u, v)` prices each fill edge (default 1)."""
    return _elimination_dp(g, weights)[1]


# -- paper constructions ----------------------------------------------------

def gen_kcc2(cc: int) -> tuple[Graph, CliqueCover]:
    """The tightness construction: cliques W_1..W_cc where W_i = {v_i} plus
    one shared vertex v_{i,j} for every pair i < j.

    Vertices are labeled v_i first, then v_{i,j} in lexicographic pair order.
    """
    if cc < 2:
        raise ValueError("gen_kcc2 needs cc >= 2")
    labels = [f"v{i + 1}" for i in range(cc)]
    pair_index = {}
    for i, j in combinations(range(cc), 2):
        pair_index[(i, j)] = cc + len(pair_index)
        labels.append(f"v{i + 1},{j + 1}")
    cliques = []
    for i in range(cc):
        w = bit(i)
        for j in range(cc):
            if j != i:
                w |= bit(pair_index[(min(i, j), max(i, j))])
        cliques.append(w)
    n = cc + len(pair_index)
    g = Graph(n, labels=labels)
    for w in cliques:
        vs = list(iter_bits(w))
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                g.adj[vs[a]] |= bit(vs[b])
                g.adj[vs[b]] |= bit(vs[a])
    return g, CliqueCover(n, cliques)


def gen_matched_cliques(n: int) -> Graph:
    """Two cliques of size n/2 joined by the matching i <-> i + n/2."""
    if n % 2 or n < 4:
        raise ValueError("gen_matched_cliques needs even n >= 4")
    half = n // 2
    edges = []
    for i in range(half):
        for j in range(i + 1, half):
            edges.append((i, j))
            edges.append((half + i, half + j))
        edges.append((i, half + i))
    return Graph(n, edges)


# -- seeded random instances -------------------------------------------------

class SplitMix64:
    """Tiny splittable 64-bit PRNG (splitmix64), documented so the stream is
    reproducible from the seed alone."""

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def next_float(self) -> float:
        return self.next_u64() / 2.0 ** 64

    def randrange(self, k: int) -> int:
        return self.next_u64() % k


def gen_random(n: int, edge_prob: float, seed: int) -> Graph:
    """Seeded G(n, p), resampled until connected; p = 0 is rejected."""
    if n < 1:
        raise ValueError("n must be positive")
    if edge_prob <= 0.0 and n > 1:
        raise ValueError("edge_prob = 0 cannot produce a connected graph")
    rng = SplitMix64(seed)
    for _ in range(100000):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.next_float() < edge_prob]
        g = Graph(n, edges)
        if g.is_connected():
            return g
    raise ValueError(f"no connected sample for n={n}, p={edge_prob}, seed={seed}")


# -- phylogeny oracle --------------------------------------------------------

def four_gamete_oracle(matrix) -> bool:
    """Pairwise four-gamete test for binary characters.

    Complete binary characters are jointly compatible iff no pair of
    characters exhibits all four gamete patterns on taxa where both are
    defined.  (With missing data the test is necessary but not sufficient;
    see `completion_oracle`.)
    """
    k = len(matrix.characters)
    for c1, c2 in combinations(range(k), 2):
        patterns = set()
        for row in matrix.states:
            a, b = row[c1], row[c2]
            if a is None or b is None:
                continue
            patterns.add((a, b))
        if len(patterns) == 4:
            return False
    return True


def completion_oracle(matrix) -> bool:
    """Exact compatibility of partial binary characters by trying every
    completion of the missing cells against the four-gamete test."""
    from .phylo import CharacterMatrix

    holes = [(t, c) for t, row in enumerate(matrix.states)
             for c, s in enumerate(row) if s is None]
    if len(holes) > 20:
        raise ValueError("completion_oracle is capped at 20 missing cells")
    state_pairs = []
    for c in range(len(matrix.characters)):
        vals = sorted({row[c] for row in matrix.states if row[c] is not None})
        if len(vals) > 2:
            raise ValueError("completion_oracle expects binary characters")
        while len(vals) < 2:
            vals.append(f"_pad{len(vals)}")
        state_pairs.append(vals)
    rows = [list(r) for r in matrix.states]
    for assign in range(1 << len(holes)):
        for idx, (t, c) in enumerate(holes):
            rows[t][c] = state_pairs[c][assign >> idx & 1]
        filled = CharacterMatrix(matrix.taxa, matrix.characters,
                                 [list(r) for r in rows])
        if four_gamete_oracle(filled):
            return True
    return False


# -- tiny exact-LP oracle for fractional covers ------------------------------

def brute_fcov(edge_masks: list[int], x: int) -> Fraction:
    """Minimum fractional cover of the vertices in x by the given hyperedges,
    solved by enumerating basic solutions of the covering LP exactly."""
    verts = list(iter_bits(x))
    if not verts:
        return Fraction(0)
    rows = [[Fraction(1) if e >> v & 1 else Fraction(0) for e in edge_masks]
            for v in verts]
    if any(all(a == 0 for a in row) for row in rows):
        raise ValueError("a requested vertex lies in no hyperedge")
    k = len(edge_masks)
    best = Fraction(len(verts))  # integral cover of one edge per vertex works
    # a basic optimal solution has at most |verts| nonzero edge weights,
    # determined by a subset of tight covering constraints
    for supp_size in range(1, min(k, len(verts)) + 1):
        for support in combinations(range(k), supp_size):
            for tight in combinations(range(len(verts)), supp_size):
                sol = _solve_square([[rows[r][c] for c in support] for r in tight],
                                    [Fraction(1)] * supp_size)
                if sol is None or any(v < 0 for v in sol):
                    continue
                weights = [Fraction(0)] * k
                for c, v in zip(support, sol):
                    weights[c] = v
                if all(sum(rows[r][c] * weights[c] for c in range(k)) >= 1
                       for r in range(len(verts))):
                    best = min(best, sum(weights))
    return best


def _solve_square(a, b):
    """Gaussian elimination over Fractions; None if singular."""
    n = len(a)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col]
        m[col] = [v / inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [v - f * w for v, w in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


# -- small named graphs used all over the tests ------------------------------

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def grid_graph(rows: int, cols: int) -> Graph:
    def idx(r, c):
        return r * cols + c
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((idx(r, c), idx(r, c + 1)))
            if r + 1 < rows:
                edges.append((idx(r, c), idx(r + 1, c)))
    return Graph(rows * cols, edges)
