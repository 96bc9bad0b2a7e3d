"""Small helpers for vertex sets represented as int bitmasks.

Throughout the package a set of vertices (or of cover cliques) is a plain
Python int: bit i set means element i is in the set.  Python ints are
arbitrary width, so the same code handles n well past 64.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def bit(i: int) -> int:
    return 1 << i


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def lowest_bit(mask: int) -> int:
    """Index of the lowest set bit; mask must be nonzero."""
    return (mask & -mask).bit_length() - 1


def sorted_tuple(mask: int) -> tuple[int, ...]:
    """Canonical tuple form, also the lexicographic sort key for sets."""
    return tuple(iter_bits(mask))
