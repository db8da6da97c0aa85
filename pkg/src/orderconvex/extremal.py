"""Extreme points, irreducible element classes, faces and extreme subsets.

`extreme_points` always evaluates the definition (x not in the hull of
K minus x) and cross-checks it against the order-theoretic
characterization of the kind; the two provably coincide for arbitrary K
except for the algebraic lattice convexity, where the characterization by
doubly-irreducible elements is guaranteed on convex K only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import iter_bits, nonempty_submasks
from .caps import effective
from .convexity import ConvexityKind, ConvexitySpace
from .semilattice import JoinStructure


@dataclass(frozen=True)
class ElementClassifier:
    """Per-element flags relative to a reference subset K, as masks."""

    subset: int
    coirreducible_in: int
    coprime_in: int
    prime_in: int | None
    doubly_irreducible_in: int | None


def coirreducible_mask(s: JoinStructure, k_mask):
    """Elements x of K that no nonempty F subset of K\\{x} joins to.

    x is join-reducible in K iff the largest candidate, K & strictly-below
    x, is nonempty and joins to x.
    """
    p = s.poset
    out = 0
    for x in iter_bits(k_mask):
        below = k_mask & p.down[x] & ~(1 << x)
        if below == 0 or s.join_of(below) != x:
            out |= 1 << x
    return out


def dual_coirreducible_mask(s: JoinStructure, k_mask):
    p = s.poset
    out = 0
    for x in iter_bits(k_mask):
        above = k_mask & p.up[x] & ~(1 << x)
        if above == 0 or s.meet_of(above) != x:
            out |= 1 << x
    return out


def coprime_mask(s: JoinStructure, k_mask):
    """Elements x with: x <= join(F), F subset of K, forces x <= some member."""
    p = s.poset
    out = 0
    for x in iter_bits(k_mask):
        not_above = k_mask & ~p.up[x]
        if not_above == 0 or not p.leq(x, s.join_of(not_above)):
            out |= 1 << x
    return out


def prime_mask(s: JoinStructure, k_mask):
    p = s.poset
    out = 0
    for x in iter_bits(k_mask):
        not_below = k_mask & ~p.down[x]
        if not_below == 0 or not p.leq(s.meet_of(not_below), x):
            out |= 1 << x
    return out


def classify_elements(s: JoinStructure, k_mask) -> ElementClassifier:
    coirr = coirreducible_mask(s, k_mask)
    coprime = coprime_mask(s, k_mask)
    if s.is_lattice:
        prime = prime_mask(s, k_mask)
        doubly = coirr & dual_coirreducible_mask(s, k_mask)
    else:
        prime = None
        doubly = None
    return ElementClassifier(k_mask, coirr, coprime, prime, doubly)


def _characterization(cs: ConvexitySpace, k_mask):
    """Order-theoretic description of the extreme points, per kind."""
    p = cs.poset
    kind = cs.kind
    if kind is ConvexityKind.UPPER:
        return p.minimal_elements(k_mask)
    if kind is ConvexityKind.LOWER:
        return p.maximal_elements(k_mask)
    if kind is ConvexityKind.ORDER:
        return p.minimal_elements(k_mask) | p.maximal_elements(k_mask)

    s = cs.semilattice
    if kind is ConvexityKind.ALG_SEMILATTICE:
        return coirreducible_mask(s, k_mask)
    if kind is ConvexityKind.IDEAL:
        return p.maximal_elements(k_mask) & coprime_mask(s, k_mask)
    if kind is ConvexityKind.ORDER_ALG_SEMILATTICE:
        max_coprime = p.maximal_elements(k_mask) & coprime_mask(s, k_mask)
        return p.minimal_elements(k_mask) | max_coprime
    if kind is ConvexityKind.ORDER_ALG_LATTICE:
        max_coprime = p.maximal_elements(k_mask) & coprime_mask(s, k_mask)
        min_prime = p.minimal_elements(k_mask) & prime_mask(s, k_mask)
        return max_coprime | min_prime
    return coirreducible_mask(s, k_mask) & dual_coirreducible_mask(s, k_mask)


def extreme_points(cs: ConvexitySpace, k_mask) -> int:
    """The x in K with x outside hull(K \\ {x})."""
    out = 0
    for x in iter_bits(k_mask):
        if not cs.hull(k_mask & ~(1 << x)) >> x & 1:
            out |= 1 << x
    if cs.kind is not ConvexityKind.ALG_LATTICE or cs.is_convex(k_mask):
        fast = _characterization(cs, k_mask)
        if fast != out:
            raise AssertionError(
                f"extreme-point characterization mismatch for {cs.kind.value}: "
                f"definition {out:b}, characterization {fast:b}, K {k_mask:b}"
            )
    return out


def is_extreme_subset(s: JoinStructure, k_mask, e_mask) -> bool:
    """x + y lands in E only if one of x, y is already there (x, y in K)."""
    if e_mask & ~k_mask:
        raise ValueError("E must be a subset of K")
    members = list(iter_bits(k_mask))
    table = s.join_table
    for a in range(len(members)):
        x = members[a]
        in_e_x = e_mask >> x & 1
        row = table[x]
        for b in range(a, len(members)):
            y = members[b]
            if e_mask >> row[y] & 1 and not (in_e_x or e_mask >> y & 1):
                return False
    return True


def is_face(s: JoinStructure, k_mask, e_mask) -> bool:
    """Nonempty extreme subset (compactness is automatic here)."""
    return e_mask != 0 and is_extreme_subset(s, k_mask, e_mask)


def is_lassak_extreme(cs: ConvexitySpace, k_mask, e_mask, caps=None) -> bool:
    """E meets hull(F) only if E meets F, for every finite F in K."""
    if e_mask & ~k_mask:
        raise ValueError("E must be a subset of K")
    effective(caps).check_subset_space(k_mask.bit_count(), "Lassak quantifier")
    for f in nonempty_submasks(k_mask):
        if e_mask & cs.hull(f) and not e_mask & f:
            return False
    return True
