"""Halfspaces, the S0-S4 separation profile, the separating join-morphism
onto {0,1}, and projection onto a convex set with its separating halfspace.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotConvex, NotInUpSet, NotUpperSet, PointInA
from .convexity import ConvexityKind, ConvexitySpace
from .semilattice import JoinStructure


def is_halfspace(cs: ConvexitySpace, mask) -> bool:
    return cs.is_convex(mask) and cs.is_convex(cs.poset.full & ~mask)


def halfspaces(cs: ConvexitySpace, caps=None):
    """All convex sets with convex complement, ascending as masks."""
    full = cs.poset.full
    return [
        c
        for c in cs.enumerate_convex_sets(caps=caps)
        if cs.is_convex(full & ~c)
    ]


@dataclass(frozen=True)
class SeparationProfile:
    s0: bool
    s1: bool
    s2: bool
    s3: bool
    s4: bool
    witnesses: dict | None = None

    def to_dict(self):
        return {
            "s0": self.s0,
            "s1": self.s1,
            "s2": self.s2,
            "s3": self.s3,
            "s4": self.s4,
            "witnesses": self.witnesses,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(**data)


def separation_profile(cs: ConvexitySpace, caps=None) -> SeparationProfile:
    """Evaluate S0..S4 exhaustively over points, convex sets and halfspaces."""
    family = cs.enumerate_convex_sets(caps=caps)
    halves = halfspaces(cs, caps=caps)
    full = cs.poset.full
    names = cs.poset.names_of
    witnesses = {}

    s0 = True
    s2 = True
    for x in range(cs.n):
        for y in range(x + 1, cs.n):
            bx, by = 1 << x, 1 << y
            if not any(bool(c & bx) != bool(c & by) for c in family):
                s0 = False
                witnesses.setdefault("s0", [names(bx)[0], names(by)[0]])
            if not any(bool(h & bx) != bool(h & by) for h in halves):
                s2 = False
                witnesses.setdefault("s2", [names(bx)[0], names(by)[0]])

    s1 = True
    for x in range(cs.n):
        if not cs.is_convex(1 << x):
            s1 = False
            witnesses.setdefault("s1", names(1 << x)[0])

    s3 = True
    for c in family:
        meet = full
        for h in halves:
            if h & c == c:
                meet &= h
        if meet != c:
            s3 = False
            witnesses.setdefault("s3", list(names(c)))

    s4 = True
    for a in family:
        for b in family:
            if a & b:
                continue
            if not any(h & a == a and h & b == 0 for h in halves):
                s4 = False
                witnesses.setdefault("s4", [list(names(a)), list(names(b))])

    return SeparationProfile(s0, s1, s2, s3, s4, witnesses or None)


def separate_upper(s: JoinStructure, a_mask, x) -> int:
    """The {0,1}-valued join-morphism separating an upper set A from x.

    Returns the support of the morphism: the complement of the principal
    ideal of x.  The morphism maps A to 1, x to 0 and preserves joins.
    """
    p = s.poset
    if p.up_set(a_mask) != a_mask:
        raise NotUpperSet("A must be an upper set")
    if a_mask >> x & 1:
        raise PointInA("x must lie outside A")
    return p.full & ~p.down[x]


@dataclass(frozen=True)
class ProjectionResult:
    point: int
    halfspace: int | None  # separating halfspace when x was outside K


def project(s: JoinStructure, k_mask, x, kind=ConvexityKind.ALG_SEMILATTICE) -> ProjectionResult:
    """Projection of x on convex K: the join of the K-elements below x.

    When x is not in K the halfspace {y : y <= x implies y <= p(x)} is
    returned as well; it contains K and avoids x.
    """
    cs = ConvexitySpace(s, kind)
    if not cs.is_convex(k_mask) or k_mask == 0:
        raise NotConvex("K must be nonempty and convex")
    p = s.poset
    below = k_mask & p.down[x]
    if below == 0:
        raise NotInUpSet("x must lie in the upper set of K")
    point = s.join_of(below)
    if k_mask >> x & 1:
        return ProjectionResult(point, None)
    halfspace = (p.full & ~p.down[x]) | p.down[point]
    return ProjectionResult(point, halfspace)
