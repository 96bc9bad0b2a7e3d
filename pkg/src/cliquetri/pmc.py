"""Potential maximal cliques: recognition and the three enumeration variants.

A PMC is handled as an int vertex mask, like every other vertex set.  The
enumerators share one incremental scheme over the prefix graphs
G_j = G[{0..j-1}]: a PMC of G_j either lifts from a PMC of G_{j-1} (exactly
one of omega, omega+{v} survives), or is created at level j from a minimal
separator S as S+{newest} or as S+T with T a minimal separator of
G_j[C+{x,y}] for a full component C of S and a non-adjacent pair x, y in S.

Creation only needs to look at the component of G_j containing the newest
vertex; PMCs of untouched components were created at earlier levels and
survive the lift chain unchanged.
"""

from __future__ import annotations

from typing import Iterator

from .bitset import bit, iter_bits, sorted_tuple
from .graph import Graph
from .separators import enumerate_minimal_separators, is_minimal_separator


def is_pmc(g: Graph, omega: int) -> bool:
    """Test the two PMC conditions: no full component, and every non-adjacent
    pair of omega sees a common component neighborhood."""
    if omega == 0:
        return False
    sides = []
    for c in g.components(omega):
        s = g.neighborhood(c)
        if s == omega:
            return False
        if s:
            sides.append(s)
    for u in iter_bits(omega):
        avail = g.adj[u] | bit(u)
        for s in sides:
            if s >> u & 1:
                avail |= s
        if omega & ~avail:
            return False
    return True


def type1_pmcs(g: Graph) -> list[int]:
    """All distinct closed neighborhoods N[v] that are PMCs."""
    seen = set()
    out = []
    for v in range(g.n):
        m = g.adj[v] | bit(v)
        if m not in seen:
            seen.add(m)
            if is_pmc(g, m):
                out.append(m)
    out.sort(key=sorted_tuple)
    return out


def lift_pmc(g_with_v: Graph, v: int, omega: int) -> int:
    """Given omega in Pi(G - v), return whichever of omega, omega+{v} is a PMC
    of G.  Exactly one is; anything else signals a bug in the caller."""
    with_v = omega | bit(v)
    a = is_pmc(g_with_v, omega)
    b = is_pmc(g_with_v, with_v)
    if a == b:
        raise RuntimeError(
            f"lift invariant violated for v={v}, omega={omega:#x} (a={a}, b={b})")
    return omega if a else with_v


class _LevelCtx:
    """Per-enumeration state: prefix graphs plus bounded verdict caches.

    The caches are size-capped (cleared when full) so the polynomial-space
    enumerator can share one context across its restart passes without
    breaking its space contract.
    """

    def __init__(self, g: Graph, cache_cap: int = 1 << 16):
        self.g = g
        self.n = g.n
        prefix: list[Graph | None] = [None] * (g.n + 1)
        for j in range(1, g.n + 1):
            gj = Graph(j)
            mask = (1 << j) - 1
            gj.adj = [g.adj[v] & mask for v in range(j)]
            prefix[j] = gj
        self.prefix = prefix
        self.cap = cache_cap
        self._pmc: dict[tuple[int, int], bool] = {}
        self._levelseps: dict[int, tuple] = {}
        self._inner: dict[tuple[int, int], tuple[int, ...]] = {}

    def _room(self, d: dict) -> dict:
        if len(d) >= self.cap:
            d.clear()
        return d

    def level_pmc(self, j: int, omega: int) -> bool:
        key = (j, omega)
        hit = self._pmc.get(key)
        if hit is None:
            hit = is_pmc(self.prefix[j], omega)
            self._room(self._pmc)[key] = hit
        return hit

    def lift_to_top(self, j: int, omega: int) -> int:
        for jj in range(j + 1, self.n + 1):
            omega = self.lift_step(jj, omega)
        return omega

    def lift_step(self, j: int, omega: int) -> int:
        if self.level_pmc(j, omega):
            return omega
        lifted = omega | bit(j - 1)
        if not self.level_pmc(j, lifted):
            raise RuntimeError(f"lift invariant violated at level {j}")
        return lifted

    # -- creation candidates ------------------------------------------------

    def level_separators(self, j: int):
        """(isolated, separators of the newest vertex's component of G_j)."""
        hit = self._levelseps.get(j)
        if hit is None:
            gj = self.prefix[j]
            u = j - 1
            if gj.adj[u] == 0:
                hit = (True, ())
            else:
                comp = gj.component_of(u)
                hit = (False, tuple(_minseps_within(gj, comp)))
            self._room(self._levelseps)[j] = hit
        return hit

    def inner_separators(self, j: int, inner: int) -> tuple[int, ...]:
        key = (j, inner)
        hit = self._inner.get(key)
        if hit is None:
            sub, old = self.prefix[j].induced(inner)
            hit = tuple(_translate(t, old) for t in enumerate_minimal_separators(sub))
            self._room(self._inner)[key] = hit
        return hit

    def creations(self, j: int) -> Iterator[int]:
        """Unfiltered PMC candidates that must be created at level j."""
        if j == 1:
            yield 1
            return
        gj = self.prefix[j]
        u = j - 1
        isolated, seps = self.level_separators(j)
        if isolated:
            yield bit(u)
            return
        ub = bit(u)
        for s in seps:
            if not s & ub:
                yield s | ub
            svs = list(iter_bits(s))
            pairs = [(x, y) for i, x in enumerate(svs) for y in svs[i + 1:]
                     if not gj.has_edge(x, y)]
            if not pairs:
                continue
            fulls = [c for c in gj.components(s) if gj.neighborhood(c) == s]
            for c in fulls:
                for x, y in pairs:
                    for t in self.inner_separators(j, c | bit(x) | bit(y)):
                        yield s | t


def _minseps_within(g: Graph, comp: int) -> Iterator[int]:
    # worklist enumeration restricted to one connected component
    seen = set()
    work = []
    for v in iter_bits(comp):
        for c in g.components(g.adj[v] | bit(v)):
            if not c & comp:
                continue
            s = g.neighborhood(c)
            if s and s not in seen and is_minimal_separator(g, s):
                seen.add(s)
                work.append(s)
    while work:
        s = work.pop()
        yield s
        for x in iter_bits(s):
            removed = s | g.adj[x] | bit(x)
            for c in g.components(removed):
                if not c & comp:
                    continue
                cand = g.neighborhood(c)
                if cand and cand not in seen and is_minimal_separator(g, cand):
                    seen.add(cand)
                    work.append(cand)


def _translate(mask: int, old: list[int]) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= bit(old[i])
    return out


def enumerate_pmcs(g: Graph) -> list[int]:
    """Pi(G) exactly, no duplicates, in lexicographic order of vertex tuples.

    Incremental scheme with a hash-set per level; exponential space in the
    worst case, which is this variant's contract.
    """
    if g.n == 0:
        return []
    ctx = _LevelCtx(g)
    cur = {1}
    for j in range(2, g.n + 1):
        nxt = {ctx.lift_step(j, om) for om in cur}
        for cand in ctx.creations(j):
            if cand not in nxt and ctx.level_pmc(j, cand):
                nxt.add(cand)
        cur = nxt
    return sorted(cur, key=sorted_tuple)


def enumerate_pmcs_dupes(g: Graph) -> Iterator[int]:
    """Every PMC of G at least once, possibly with duplicates, without
    materializing any Pi set: each created PMC is lifted straight to the top.
    """
    if g.n == 0:
        return
    ctx = _LevelCtx(g)
    for j in range(1, g.n + 1):
        for cand in ctx.creations(j):
            if ctx.level_pmc(j, cand):
                yield ctx.lift_to_top(j, cand)


def _scan_pass(ctx: _LevelCtx, lo) -> int | None:
    """One restart pass: the lexicographically smallest PMC above `lo`."""
    n = ctx.n
    best = None
    best_mask = None
    for j in range(1, n + 1):
        for cand in ctx.creations(j):
            tup = sorted_tuple(cand)
            # any lift of cand extends tup with vertices >= j, so its tuple
            # sits between tup and tup + (n-1,)
            if lo is not None and (tup + (n - 1,) if j <= n - 1 else tup) <= lo:
                continue
            if best is not None and tup >= best:
                continue
            if not ctx.level_pmc(j, cand):
                continue
            om = ctx.lift_to_top(j, cand)
            t = sorted_tuple(om)
            if (lo is None or t > lo) and (best is None or t < best):
                best, best_mask = t, om
    return best_mask


def enumerate_pmcs_polyspace(g: Graph) -> Iterator[int]:
    """Pi(G) in strictly increasing lexicographic order using restarts.

    Each output re-runs the duplicate stream and keeps the smallest PMC above
    the previous output, so working memory stays polynomial (plus bounded
    caches) at the price of |Pi(G)| passes.
    """
    if g.n == 0:
        return
    ctx = _LevelCtx(g)
    lo = None
    while True:
        om = _scan_pass(ctx, lo)
        if om is None:
            return
        yield om
        lo = sorted_tuple(om)
