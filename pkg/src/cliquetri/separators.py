"""Minimal separators, full components, blocks, and the part goodness test."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .bitset import iter_bits, lowest_bit
from .graph import CliqueCover, Graph


@dataclass(frozen=True)
class Block:
    """A connected vertex set C whose neighborhood N(C) is a minimal separator.

    ``key`` is the part mask of cover cliques touching C when a cover is
    present; distinct blocks then have distinct keys.
    """

    vertices: int
    separator: int
    key: Optional[int] = None


def full_components(g: Graph, s: int) -> list[int]:
    """Components C of G - s with N(C) = s, in component order."""
    return [c for c in g.components(s) if g.neighborhood(c) == s]


def is_minimal_separator(g: Graph, s: int) -> bool:
    """True iff s has at least two full components."""
    full = 0
    for c in g.components(s):
        if g.neighborhood(c) == s:
            full += 1
            if full == 2:
                return True
    return False


def _candidate_separators(g: Graph, s: int, x: int) -> Iterator[int]:
    # neighborhoods of components of G - (s u N[x]) are the one-step candidates
    removed = s | g.adj[x] | (1 << x)
    for c in g.components(removed):
        yield g.neighborhood(c)


def enumerate_minimal_separators(g: Graph) -> Iterator[int]:
    """All minimal separators of a connected graph, each exactly once.

    Worklist saturation: seed with neighborhoods of components of G - N[v]
    for every v, then close under the one-vertex expansion step, keeping
    whatever passes the two-full-components test.  Deduplicates with a set,
    so memory is proportional to the output.
    """
    seen = set()
    work = []
    for v in range(g.n):
        for c in g.components(g.adj[v] | (1 << v)):
            s = g.neighborhood(c)
            if s and s not in seen and is_minimal_separator(g, s):
                seen.add(s)
                work.append(s)
    while work:
        s = work.pop()
        yield s
        for x in iter_bits(s):
            for cand in _candidate_separators(g, s, x):
                if cand and cand not in seen and is_minimal_separator(g, cand):
                    seen.add(cand)
                    work.append(cand)


def minimal_separators(g: Graph) -> set[int]:
    return set(enumerate_minimal_separators(g))


def all_blocks(g: Graph, cover: Optional[CliqueCover] = None) -> list[Block]:
    """Every block of g exactly once.

    For each minimal separator S, each component C of G - S is a block iff
    N(C) is itself a minimal separator (full components always qualify).
    """
    seps = minimal_separators(g)
    seen = set()
    out = []
    for s in seps:
        for c in g.components(s):
            if c in seen:
                continue
            nc = g.neighborhood(c)
            if nc == s or nc in seps:
                seen.add(c)
                key = cover.cliques_touching(c) if cover is not None else None
                out.append(Block(c, nc, key))
    out.sort(key=lambda b: (b.vertices.bit_count(), b.vertices))
    return out


# -- part goodness (needs the separator test, so it lives here) -----------

def part_components(g: Graph, cover: CliqueCover, part: int) -> list[int]:
    """Components of G[V(G, part)]."""
    verts = cover.part_vertices(part)
    out = []
    todo = verts
    while todo:
        comp = g.component_of(lowest_bit(todo), g.full_mask & ~verts)
        out.append(comp)
        todo &= ~comp
    return out


def is_good_part(g: Graph, cover: CliqueCover, part: int) -> bool:
    """A part is good if every component of its vertex set is a block.

    A part with no vertices is good.
    """
    for comp in part_components(g, cover, part):
        if not is_minimal_separator(g, g.neighborhood(comp)):
            return False
    return True
