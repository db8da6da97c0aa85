"""Bitmask helpers.

Element sets are plain ints: bit i set means element i is a member.  All
search loops in the library work on these masks directly.
"""

from __future__ import annotations


def iter_bits(mask):
    """Yield the indices of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask):
    """Set-bit indices as a list."""
    return list(iter_bits(mask))


def mask_of(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def submasks(mask):
    """All submasks of `mask`, including 0 and `mask` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def nonempty_submasks(mask):
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask


def size(mask):
    return mask.bit_count()
