"""Convexity invariants: breadth, depth, clique, Caratheodory, Helly, rank.

Each invariant is computed from its own definition by subset search; the
identities the theory predicts (Helly = depth, clique = depth,
Caratheodory = breadth for the algebraic convexity of a semilattice) are
cross-checked by the test suite, never assumed here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bitset import iter_bits
from .caps import effective
from .errors import CapExceeded, NoBottom
from .convexity import ConvexitySpace
from .extremal import coirreducible_mask, extreme_points
from .semilattice import JoinStructure


@dataclass(frozen=True)
class InvariantProfile:
    breadth: int | str | None  # None when the structure has no joins
    depth: int | str
    clique_number: int | str
    caratheodory: int | str
    helly: int | str
    rank: int | str | None

    def to_dict(self):
        return {
            "breadth": self.breadth,
            "depth": self.depth,
            "clique_number": self.clique_number,
            "caratheodory": self.caratheodory,
            "helly": self.helly,
            "rank": self.rank,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(**data)


def depth(poset_or_structure):
    p = getattr(poset_or_structure, "poset", poset_or_structure)
    return p.depth()


def breadth(s: JoinStructure, caps=None) -> int:
    """Largest size of a join-irredundant set: dropping any member drops the join."""
    effective(caps).check_subset_space(s.n, "breadth search")
    best = 1 if s.n else 0
    for mask in range(1, 1 << s.n):
        if mask.bit_count() <= best:
            continue
        total = s.join_of(mask)
        if all(s.join_of(mask & ~(1 << x)) != total for x in iter_bits(mask)):
            best = mask.bit_count()
    return best


def clique_number(cs: ConvexitySpace, caps=None) -> int:
    """Largest free set: convex and equal to its own extreme points."""
    effective(caps).check_subset_space(cs.n, "clique search")
    best = 0
    for mask in range(1 << cs.n):
        if mask.bit_count() <= best or not cs.is_convex(mask):
            continue
        if extreme_points(cs, mask) == mask:
            best = mask.bit_count()
    return best


def caratheodory(cs: ConvexitySpace, caps=None) -> int:
    """Least c with every hull covered by the hulls of its c-point subsets."""
    effective(caps).check_subset_space(cs.n, "Caratheodory search")
    spaces = [list(iter_bits(mask)) for mask in range(1 << cs.n)]
    for c in range(1, cs.n + 1):
        if all(_c_covers(cs, mask, spaces[mask], c) for mask in range(1 << cs.n)):
            return c
    return max(cs.n, 1)


def _c_covers(cs, mask, members, c):
    target = cs.hull(mask)
    got = 0
    for r in range(1, min(c, len(members)) + 1):
        for combo in itertools.combinations(members, r):
            sub = 0
            for i in combo:
                sub |= 1 << i
            got |= cs.hull(sub)
            if got == target:
                return True
    return got == target


def helly(cs: ConvexitySpace, caps=None) -> int:
    """Largest Helly-independent set: hulls of the one-deleted subsets miss a common point."""
    effective(caps).check_subset_space(cs.n, "Helly search")
    full = cs.poset.full
    best = 0
    for mask in range(1, 1 << cs.n):
        if mask.bit_count() <= best:
            continue
        meet = full
        for x in iter_bits(mask):
            meet &= cs.hull(mask & ~(1 << x))
            if not meet:
                break
        if not meet:
            best = mask.bit_count()
    return best


def helly_verify(cs: ConvexitySpace, h, family_size_cap=5, caps=None) -> bool:
    """Family-based definition: no family of <= cap convex sets meets h by h
    with empty intersection.  The independent validation route for `helly`."""
    sets = cs.enumerate_convex_sets(caps=caps)
    full = cs.poset.full
    for r in range(1, family_size_cap + 1):
        for fam in itertools.combinations(sets, r):
            total = full
            for c in fam:
                total &= c
            if total:
                continue
            if _meets_h_by_h(fam, h, full):
                return False
    return True


def _meets_h_by_h(fam, h, full):
    for sub in itertools.combinations(fam, min(h, len(fam))):
        got = full
        for c in sub:
            got &= c
        if not got:
            return False
    return True


def rank(s: JoinStructure, warn=None) -> int:
    """Non-bottom extreme points of the whole algebraic convexity."""
    if not s.has_bottom:
        raise NoBottom("rank needs a least element")
    coirr = coirreducible_mask(s, s.poset.full)
    return (coirr & ~(1 << s.bottom)).bit_count()


def invariant_profile(cs: ConvexitySpace, caps=None) -> InvariantProfile:
    """All invariants, with cap overruns recorded instead of raised."""
    def guarded(fn):
        try:
            return fn()
        except CapExceeded:
            return "cap-exceeded"

    s = cs.semilattice
    if s is not None and s.has_bottom:
        rank_value = guarded(lambda: rank(s))
    else:
        rank_value = None
    return InvariantProfile(
        breadth=guarded(lambda: breadth(s, caps)) if s is not None else None,
        depth=cs.poset.depth(),
        clique_number=guarded(lambda: clique_number(cs, caps)),
        caratheodory=guarded(lambda: caratheodory(cs, caps)),
        helly=guarded(lambda: helly(cs, caps)),
        rank=rank_value,
    )
