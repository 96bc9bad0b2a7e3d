"""Fast min-plus subset convolution and the solvers that exploit a given cover.

The solvers for treewidth, minimum fill-in, and chordal sandwich walk the
block lattice bottom-up like the generic DP, but replace the iteration over
type-2 PMCs with a convolution over parts of the cover: a part stands for the
vertex sets V(G, W') it absorbs, and a tripartition (W1, W2, Wo) of the cover
into good parts determines the PMC V(G) - V(G, W1, W2, Wo).

The pairwise side of the convolution is maintained incrementally: when a part
becomes "ready" (all of its blocks solved), it is paired against every ready
subset of its complement.  Amortized over a run this costs at most one
submask sweep per ready part; the both-sides-vertexless case is bootstrapped
once through the ranked-transform convolution below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .bitset import bit, iter_bits, lowest_bit
from .graph import CliqueCover, Graph
from .pmc import type1_pmcs
from .separators import minimal_separators

INF = math.inf


# -- the convolution primitive ------------------------------------------------

@dataclass
class SetFunction:
    """Dense map from subsets of a cc-element ground set to values in
    [0, bound] or infinity (absent)."""

    cc: int
    values: list

    def __post_init__(self):
        if len(self.values) != 1 << self.cc:
            raise ValueError("values must have length 2**cc")


def min_plus_subset_convolution(f: SetFunction, g: SetFunction, bound: int) -> SetFunction:
    """Exact (f*g)(Y) = min over Y' <= Y of f(Y') + g(Y - Y').

    Ranked zeta/Moebius transforms with rank and value packed into one
    exponent of a big-integer polynomial; one multiplication per subset.
    Finite inputs must lie in [0, bound].
    """
    cc = f.cc
    if g.cc != cc:
        raise ValueError("domain mismatch")
    size = 1 << cc
    stride = 2 * bound + 1
    width = 3 * cc + 2  # coefficient counts stay below 8**cc
    fa = _encode(f.values, cc, stride, width, bound)
    ga = fa if g.values is f.values else _encode(g.values, cc, stride, width, bound)
    _zeta(fa, cc)
    if ga is not fa:
        _zeta(ga, cc)
    h = [a * b for a, b in zip(fa, ga)]
    _moebius(h, cc)
    field = (1 << width) - 1
    out = []
    for y in range(size):
        blockpos = y.bit_count() * stride * width
        block = (h[y] >> blockpos) & ((1 << (stride * width)) - 1)
        if block == 0:
            out.append(INF)
            continue
        low = block & -block
        val = (low.bit_length() - 1) // width
        out.append(val if val <= 2 * bound else INF)
    return SetFunction(cc, out)


def max_plus_subset_convolution(f: SetFunction, g: SetFunction, bound: int) -> SetFunction:
    """max-plus variant by reflecting values through `bound`."""
    neg_f = SetFunction(f.cc, [bound - v if v != INF else INF for v in f.values])
    neg_g = neg_f if g.values is f.values else SetFunction(
        g.cc, [bound - v if v != INF else INF for v in g.values])
    conv = min_plus_subset_convolution(neg_f, neg_g, bound)
    return SetFunction(f.cc, [2 * bound - v if v != INF else INF for v in conv.values])


def naive_min_plus(f: SetFunction, g: SetFunction) -> SetFunction:
    """Reference O(3^cc) evaluation, the oracle for the fast version."""
    size = 1 << f.cc
    out = [INF] * size
    for y in range(size):
        best = f.values[y] + g.values[0]
        sub = y
        while sub:
            cand = f.values[sub ^ y] + g.values[sub]
            if cand < best:
                best = cand
            sub = (sub - 1) & y
        out[y] = best
    return SetFunction(f.cc, out)


def _encode(vals, cc, stride, width, bound):
    out = []
    for x in range(1 << cc):
        v = vals[x]
        if v == INF:
            out.append(0)
        else:
            if not 0 <= v <= bound:
                raise ValueError(f"value {v} outside [0, {bound}]")
            out.append(1 << ((x.bit_count() * stride + v) * width))
    return out


def _zeta(arr, cc):
    for b in range(cc):
        step = 1 << b
        for x in range(1 << cc):
            if x & step:
                arr[x] += arr[x ^ step]


def _moebius(arr, cc):
    for b in range(cc):
        step = 1 << b
        for x in range(1 << cc):
            if x & step:
                arr[x] -= arr[x ^ step]


# -- static part algebra tables ----------------------------------------------

class PartTables:
    """Per (graph, cover) tables the three solvers share: vertex sets and
    counts of all parts, their components, goodness, the block universe, and
    the candidate lists driven off each good part acting as Wo."""

    def __init__(self, g: Graph, cover: CliqueCover):
        self.g = g
        self.cover = cover
        cc = cover.cc
        size = 1 << cc
        self.size = size
        vset = [0] * size
        for v, wm in enumerate(cover.member_mask):
            vset[wm] |= bit(v)
        for b in range(cc):
            step = 1 << b
            for x in range(size):
                if x & step:
                    vset[x] |= vset[x ^ step]
        self.vset = vset
        self.vcnt = [x.bit_count() for x in vset]

        self.seps = minimal_separators(g)
        comps: list[tuple[int, ...]] = [()] * size
        good = bytearray(size)
        blocks: dict[int, int] = {}
        for x in range(size):
            vs = vset[x]
            if vs == 0:
                good[x] = 1
                continue
            cs = []
            ok = True
            removed = g.full_mask & ~vs
            todo = vs
            while todo:
                comp = g.component_of(lowest_bit(todo), removed)
                todo &= ~comp
                nb = g.neighborhood(comp)
                if nb not in self.seps:
                    ok = False
                    break
                cs.append(comp)
                blocks.setdefault(comp, nb)
            if ok:
                good[x] = 1
                comps[x] = tuple(cs)
        self.comps = comps
        self.good = good
        self.blocks = blocks
        self.good_nonempty = [x for x in range(1, size)
                              if good[x] and vset[x]]

        # components of G - S per distinct separator, for the Wo pass
        outside: dict[int, tuple[int, ...]] = {}
        for s in self.seps:
            outside[s] = tuple(g.components(s))
        self.sep_outside = outside

        # Wo candidates: (wo, separator, target block, blocks of wo not
        # already outside the separator)
        full_part = (1 << cc) - 1
        wo_data = []
        for wo in self.good_nonempty:
            rest = full_part ^ wo
            if rest == 0:
                continue
            cands = []
            seen_s = set()
            for cp in comps[wo]:
                s = g.neighborhood(cp)
                if s in seen_s:
                    continue
                seen_s.add(s)
                out_comps = outside[s]
                out_set = set(out_comps)
                wo_children = tuple(d for d in comps[wo] if d not in out_set)
                for c in out_comps:
                    if g.neighborhood(c) != s:
                        continue
                    if rest & ~cover.cliques_touching(c):
                        continue
                    cands.append((c, c.bit_count(), s, wo_children))
            if cands:
                wo_data.append((wo, cands))
        self.wo_data = wo_data

        # type-1 PMCs with the (block, children) pairs they can realize
        t1 = type1_pmcs(g)
        t1_pairs = []
        for c, s in blocks.items():
            nc = c | s
            for om in t1:
                if s & ~om or om & ~nc:
                    continue
                children = tuple(d for d in g.components(om) if d & ~c == 0)
                t1_pairs.append((c, s, om, children))
        self.t1_pairs = t1_pairs

        full_part = size - 1
        self.rem = [g.n - self.vcnt[full_part ^ y] for y in range(size)]

        # Y -> both halves vertexless, via the convolution primitive
        ind = [0 if (x and self.vcnt[x] == 0) else INF for x in range(size)]
        sf = SetFunction(cc, ind)
        self.empty_split = [v == 0 for v in
                            min_plus_subset_convolution(sf, sf, 0).values]

    def ready_at(self, x: int) -> int:
        """First sweep iteration whose queries may use part x (all of its
        blocks are strictly smaller, hence final, by then)."""
        return 1 + max((c.bit_count() for c in self.comps[x]), default=0)


def _comb2(k: int) -> int:
    return k * (k - 1) // 2


# -- treewidth ---------------------------------------------------------------

def treewidth_fast(g: Graph, cover: CliqueCover, k: int,
                   tables: Optional[PartTables] = None) -> bool:
    """Decide tw(G) <= k in O*(2^cc) given an edge clique cover."""
    if k < 0:
        return False
    if k >= g.n - 1:
        return True
    if g.is_complete():
        return g.n <= k + 1
    pt = tables if tables is not None else PartTables(g, cover)
    full_part = pt.size - 1
    n = g.n
    solved: set[int] = set()
    ready = bytearray(pt.size)
    for x in range(1, pt.size):
        if pt.vcnt[x] == 0:
            ready[x] = 1
    best = [-1] * pt.size

    t1_pairs = [(c, om, ch) for c, s, om, ch in pt.t1_pairs
                if om.bit_count() <= k + 1]

    unflushed = list(pt.good_nonempty)
    for _ in range(n):
        progress = False
        # flush parts whose blocks are all solved; pair them with every
        # ready subset of their complement
        still = []
        vcnt = pt.vcnt
        for x in unflushed:
            if all(c in solved for c in pt.comps[x]):
                ready[x] = 1
                vx = vcnt[x]
                comp = full_part ^ x
                sub = comp
                while sub:
                    if ready[sub]:
                        y = x | sub
                        val = vx + vcnt[sub]
                        if val > best[y]:
                            best[y] = val
                    sub = (sub - 1) & comp
                progress = True
            else:
                still.append(x)
        unflushed = still

        for wo, cands in pt.wo_data:
            y = full_part ^ wo
            t = best[y]
            if t < 0 and pt.empty_split[y]:
                t = 0
            if t < 0 or n - t - pt.vcnt[wo] > k + 1:
                continue
            for c, c_size, s, wo_children in cands:
                if c not in solved and all(d in solved for d in wo_children):
                    solved.add(c)
                    progress = True
        for c, om, children in t1_pairs:
            if c not in solved and all(d in solved for d in children):
                solved.add(c)
                progress = True
        if not progress:
            break

    for s in pt.seps:
        if all(c in solved for c in pt.sep_outside[s]):
            return True
    return False


# -- minimum fill-in -----------------------------------------------------------

def fillin_fast(g: Graph, cover: CliqueCover,
                tables: Optional[PartTables] = None) -> int:
    """Exact unweighted minimum fill-in in O*(2^cc) given a cover.

    Works on adjusted edge counts av(C) = |E(H_C)| - comb2(|N(C)|), which add
    across disjoint parts.  Instead of keeping the whole (mask, p) table, the
    quantity the Wo pass reads, min over splits of comb2(|Omega|) + fill sum,
    is folded incrementally (|Omega| is determined by the split sizes).
    """
    if g.is_complete():
        return 0
    pt = tables if tables is not None else PartTables(g, cover)
    full_part = pt.size - 1
    n = g.n
    av: dict[int, int] = {}
    ready = bytearray(pt.size)
    pv = [0] * pt.size
    for x in range(1, pt.size):
        if pt.vcnt[x] == 0:
            ready[x] = 1
    # combined[y] = min over processed ready splits (and the vertexless
    # split) of comb2(|Omega(y)|) + fill sum, with |Omega(y)| read off the
    # split sizes; rem[y] = n - |V(G, W - y)| is fixed per y
    combined = [INF] * pt.size

    schedule: dict[int, list[int]] = {}
    for x in pt.good_nonempty:
        schedule.setdefault(pt.ready_at(x), []).append(x)
    last_flush = max(schedule, default=0)

    vcnt = pt.vcnt
    for i in range(1, n + 1):
        progress = False
        for x in schedule.get(i, ()):
            vals = [av.get(c) for c in pt.comps[x]]
            if any(v is None for v in vals):
                # unreachable for fill-in: every block is solvable by its
                # own final iteration
                raise RuntimeError("fill DP missed a block value")
            fx = pv[x] = sum(vals)
            ready[x] = 1
            comp = full_part ^ x
            vx = vcnt[x]
            rem = pt.rem
            sub = comp
            while sub:
                if ready[sub]:
                    y = x | sub
                    a = rem[y] - vx - vcnt[sub]
                    tot = a * (a - 1) // 2 + fx + pv[sub]
                    if tot < combined[y]:
                        combined[y] = tot
                sub = (sub - 1) & comp
            progress = True

        for wo, cands in pt.wo_data:
            y = full_part ^ wo
            cb = combined[y]
            if pt.empty_split[y]:
                alt = _comb2(n - vcnt[wo])
                if alt < cb:
                    cb = alt
            if cb == INF:
                continue
            for c, c_size, s, wo_children in cands:
                if i > c_size:
                    continue
                base = 0
                ok = True
                for d in wo_children:
                    vd = av.get(d)
                    if vd is None:
                        ok = False
                        break
                    base += vd
                if not ok:
                    continue
                cand = cb + base - _comb2(s.bit_count())
                if cand < av.get(c, INF):
                    av[c] = cand
                    progress = True
        for c, s, om, children in pt.t1_pairs:
            if i > c.bit_count():
                continue
            vals = [av.get(d) for d in children]
            if any(v is None for v in vals):
                continue
            cand = _comb2(om.bit_count()) - _comb2(s.bit_count()) + sum(vals)
            if cand < av.get(c, INF):
                av[c] = cand
                progress = True
        if not progress and i >= last_flush:
            break

    best = INF
    for s in pt.seps:
        total = _comb2(s.bit_count())
        ok = True
        for c in pt.sep_outside[s]:
            vc = av.get(c)
            if vc is None:
                ok = False
                break
            total += vc
        if ok and total < best:
            best = total
    if best == INF:
        raise RuntimeError("no root separator admitted a triangulation")
    return best - g.m


# -- chordal sandwich ----------------------------------------------------------

def sandwich_fast(g: Graph, cover: CliqueCover, fadj: list[int],
                  tables: Optional[PartTables] = None) -> bool:
    """Decide whether g has a triangulation whose fill edges all lie in the
    admissible set (given as per-vertex adjacency masks `fadj`)."""
    if g.is_complete():
        return True
    pt = tables if tables is not None else PartTables(g, cover)
    full_part = pt.size - 1
    n = g.n

    def clique_ok(x: int) -> bool:
        m = x
        while m:
            low = m & -m
            u = low.bit_length() - 1
            if x & ~low & ~g.adj[u] & ~fadj[u]:
                return False
            m ^= low
        return True

    partok = bytearray(pt.size)
    for x in range(pt.size):
        u = g.full_mask & ~pt.vset[x] & ~pt.vset[full_part ^ x]
        partok[x] = clique_ok(u)

    solved: set[int] = set()
    ready = bytearray(pt.size)
    for x in range(1, pt.size):
        if pt.vcnt[x] == 0 and partok[x]:
            ready[x] = 1
    # both halves vertexless and admissible
    ind = [0 if (x and pt.vcnt[x] == 0 and partok[x]) else INF
           for x in range(pt.size)]
    sf = SetFunction(pt.cover.cc, ind)
    esplit = [v == 0 for v in min_plus_subset_convolution(sf, sf, 0).values]
    splittable = bytearray(pt.size)

    t1_pairs = [(c, om, ch) for c, s, om, ch in pt.t1_pairs if clique_ok(om)]

    unflushed = list(pt.good_nonempty)
    for _ in range(n):
        progress = False
        still = []
        for x in unflushed:
            if partok[x] and all(c in solved for c in pt.comps[x]):
                ready[x] = 1
                comp = full_part ^ x
                sub = comp
                while sub:
                    if ready[sub]:
                        splittable[x | sub] = 1
                    sub = (sub - 1) & comp
                progress = True
            elif partok[x]:
                still.append(x)
        unflushed = still

        for wo, cands in pt.wo_data:
            if not partok[wo]:
                continue
            y = full_part ^ wo
            if not splittable[y] and not esplit[y]:
                continue
            for c, c_size, s, wo_children in cands:
                if c not in solved and all(d in solved for d in wo_children):
                    solved.add(c)
                    progress = True
        for c, om, children in t1_pairs:
            if c not in solved and all(d in solved for d in children):
                solved.add(c)
                progress = True
        if not progress:
            break

    for s in pt.seps:
        if clique_ok(s) and all(c in solved for c in pt.sep_outside[s]):
            return True
    return False
