"""Polynomial-space solvers: direct recursion over balanced root PMCs.

No DP table is kept: each call enumerates PMCs through the restart-based
polynomial-space enumerator, keeps only the balanced ones (every block of the
PMC touches at most half the cover), and recurses into block realizations
with the inherited cover W[C] + {N(C)}.  The no-cover variant replaces the
balance filter with the PMC-count guard and component-count pruning, and is
one-sided: its result is an upper bound, exact whenever the given integer
really bounds the minimum cover size.
"""

from __future__ import annotations

import math

from .bitset import bit, iter_bits
from .graph import CliqueCover, Graph, validate_cover
from .pmc import enumerate_pmcs_polyspace

INFEASIBLE = math.inf


def _child_instance(g: Graph, cover_masks, c: int, obj):
    """Realization of block c plus its inherited cover and objective."""
    sep = g.neighborhood(c)
    sub, old = g.induced(c | sep)
    pos = {o: i for i, o in enumerate(old)}
    sep_local = 0
    for v in iter_bits(sep):
        sep_local |= bit(pos[v])
    rg = sub.with_clique(sep_local)
    child_cover = set()
    if cover_masks is not None:
        for w in cover_masks:
            if w & c:
                local = 0
                for v in iter_bits(w):
                    local |= bit(pos[v])
                child_cover.add(local)
        child_cover.add(sep_local)
        child_cover.discard(0)
        # drop cliques contained in others; the rest still covers E(R(C))
        kept = [w for w in child_cover
                if not any(w != w2 and w & ~w2 == 0 for w2 in child_cover)]
    else:
        kept = None
    return rg, kept, old, obj.relabel(old)


def _solve_cover(g: Graph, cover_masks: list[int], obj) -> object:
    if g.is_complete():
        return obj.local_cost(g, 0, g.full_mask)
    cover = CliqueCover(g.n, cover_masks)
    assert validate_cover(g, cover), "inherited cover must stay valid"
    cc = cover.cc
    decision = getattr(obj, "k", None) is not None
    best = INFEASIBLE
    for omega in enumerate_pmcs_polyspace(g):
        local = obj.local_cost(g, 0, omega)
        if local == INFEASIBLE:
            continue
        comps = g.components(omega)
        if any(2 * cover.cliques_touching(c).bit_count() > cc for c in comps):
            continue
        vals = []
        ok = True
        for c in comps:
            rg, child_cover, _, child_obj = _child_instance(g, cover_masks, c, obj)
            v = _solve_cover(rg, child_cover, child_obj)
            if v == INFEASIBLE:
                ok = False
                break
            vals.append(v)
        if not ok:
            continue
        v = obj.fold(local, vals)
        if v < best:
            best = v
            if decision:
                return best
    return best


def solve_polyspace(g: Graph, cover: CliqueCover, obj) -> object:
    """Optimal objective value using polynomial working memory.

    obj is one of the btdp objectives: Treewidth(k) (decision), WeightedFill,
    or Fhtw.  Returns INFEASIBLE when no admissible triangulation exists
    (for the treewidth decision: when tw > k).
    """
    return _solve_cover(g, list(cover.cliques), obj)


def _solve_nocover(g: Graph, cc: int, obj) -> object:
    if g.is_complete():
        return obj.local_cost(g, 0, g.full_mask)
    limit = 3 ** cc
    count = 0
    for _ in enumerate_pmcs_polyspace(g):
        count += 1
        if count > limit:
            return INFEASIBLE
    decision = getattr(obj, "k", None) is not None
    child_cc = (cc + 1) // 2 + 1
    best = INFEASIBLE
    for omega in enumerate_pmcs_polyspace(g):
        local = obj.local_cost(g, 0, omega)
        if local == INFEASIBLE:
            continue
        comps = g.components(omega)
        if len(comps) > cc:
            # a cover of size cc admits at most cc blocks per PMC
            return INFEASIBLE
        vals = []
        ok = True
        for c in comps:
            rg, _, _, child_obj = _child_instance(g, None, c, obj)
            v = _solve_nocover(rg, child_cc, child_obj)
            if v == INFEASIBLE:
                ok = False
                break
            vals.append(v)
        if not ok:
            continue
        v = obj.fold(local, vals)
        if v < best:
            best = v
            if decision:
                return best
    return best


def solve_polyspace_nocover(g: Graph, cc: int, obj) -> object:
    """One-sided polynomial-space solver given only a cover-size bound.

    The result is always >= the true optimum (INFEASIBLE counts as an
    overestimate) and equals it whenever cc is at least the minimum edge
    clique cover size of g.
    """
    if cc < 1:
        raise ValueError("cc must be at least 1")
    return _solve_nocover(g, cc, obj)
