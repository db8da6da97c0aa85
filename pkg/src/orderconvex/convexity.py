"""The seven convexity structures as hull operators over one interface.

A ConvexitySpace pairs a structure (FinitePoset or JoinStructure) with a
ConvexityKind and exposes the convexity predicate, the hull operator, the
convex-set enumeration, the convexity-axiom verifier and the arity.

Hulls are pairwise fixpoints (joins, meets, interval fill, up/down fill as
the kind dictates), which is exact because every convexity here has arity
at most 2; `hull_by_intersection` is the generic fallback used to
cross-validate that claim.
"""

from __future__ import annotations

import enum
import itertools

from .bitset import iter_bits
from .caps import effective
from .errors import CapExceeded
from .poset import FinitePoset
from .semilattice import JoinStructure


class ConvexityKind(enum.Enum):
    UPPER = "upper"
    LOWER = "lower"
    ORDER = "order"
    ALG_SEMILATTICE = "alg-semilattice"
    IDEAL = "ideal"
    ORDER_ALG_SEMILATTICE = "order-alg-semilattice"
    ORDER_ALG_LATTICE = "order-alg-lattice"
    ALG_LATTICE = "alg-lattice"

    @property
    def needs_join(self):
        return self in _JOIN_KINDS

    @property
    def needs_meet(self):
        return self in _MEET_KINDS

    @property
    def is_order_kind(self):
        return self in (
            ConvexityKind.ORDER,
            ConvexityKind.ORDER_ALG_SEMILATTICE,
            ConvexityKind.ORDER_ALG_LATTICE,
        )

    @classmethod
    def from_string(cls, text):
        try:
            return cls(text)
        except ValueError:
            names = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown convexity kind {text!r}; expected one of {names}")


_JOIN_KINDS = frozenset(
    {
        ConvexityKind.ALG_SEMILATTICE,
        ConvexityKind.IDEAL,
        ConvexityKind.ORDER_ALG_SEMILATTICE,
        ConvexityKind.ORDER_ALG_LATTICE,
        ConvexityKind.ALG_LATTICE,
    }
)
_MEET_KINDS = frozenset({ConvexityKind.ORDER_ALG_LATTICE, ConvexityKind.ALG_LATTICE})


def applicable_kinds(structure):
    """Kinds whose structural requirement the instance satisfies."""
    kinds = [ConvexityKind.UPPER, ConvexityKind.LOWER, ConvexityKind.ORDER]
    if isinstance(structure, JoinStructure):
        kinds += [
            ConvexityKind.ALG_SEMILATTICE,
            ConvexityKind.IDEAL,
            ConvexityKind.ORDER_ALG_SEMILATTICE,
        ]
        if structure.is_lattice:
            kinds += [ConvexityKind.ORDER_ALG_LATTICE, ConvexityKind.ALG_LATTICE]
    return kinds


def _close_under_table(table, mask):
    """Close `mask` under a binary operation given as an n x n index table."""
    result = mask
    stack = list(iter_bits(mask))
    while stack:
        i = stack.pop()
        for j in iter_bits(result):
            k = table[i][j]
            bit = 1 << k
            if not result & bit:
                result |= bit
                stack.append(k)
    return result


class ConvexitySpace:
    __slots__ = ("structure", "kind", "poset", "semilattice", "_hull_cache", "_family")

    def __init__(self, structure, kind: ConvexityKind):
        self.structure = structure
        self.kind = kind
        if isinstance(structure, JoinStructure):
            self.poset = structure.poset
            self.semilattice = structure
        else:
            self.poset = structure
            self.semilattice = None
        if kind.needs_join and self.semilattice is None:
            raise TypeError(f"{kind.value} convexity needs a join-semilattice")
        if kind.needs_meet and (
            self.semilattice is None or not self.semilattice.is_lattice
        ):
            raise TypeError(f"{kind.value} convexity needs a lattice")
        self._hull_cache = {}
        self._family = None

    @property
    def n(self):
        return self.poset.n

    # -- convexity predicate -------------------------------------------------

    def is_convex(self, mask):
        p = self.poset
        kind = self.kind
        if kind is ConvexityKind.UPPER:
            return p.up_set(mask) == mask
        if kind is ConvexityKind.LOWER:
            return p.down_set(mask) == mask
        if kind is ConvexityKind.ORDER:
            return p.up_set(mask) & p.down_set(mask) == mask

        s = self.semilattice
        if not self._join_closed(mask):
            return False
        if kind is ConvexityKind.ALG_SEMILATTICE:
            return True
        if kind is ConvexityKind.IDEAL:
            return p.down_set(mask) == mask
        if kind is ConvexityKind.ORDER_ALG_SEMILATTICE:
            return p.up_set(mask) & p.down_set(mask) == mask
        if not self._meet_closed(mask):
            return False
        if kind is ConvexityKind.ALG_LATTICE:
            return True
        return p.up_set(mask) & p.down_set(mask) == mask  # ORDER_ALG_LATTICE

    def _join_closed(self, mask):
        table = self.semilattice.join_table
        members = list(iter_bits(mask))
        for a in range(len(members)):
            row = table[members[a]]
            for b in range(a, len(members)):
                if not mask >> row[members[b]] & 1:
                    return False
        return True

    def _meet_closed(self, mask):
        table = self.semilattice.meet_table
        members = list(iter_bits(mask))
        for a in range(len(members)):
            row = table[members[a]]
            for b in range(a, len(members)):
                if not mask >> row[members[b]] & 1:
                    return False
        return True

    # -- hull ------------------------------------------------------------------

    def hull(self, mask):
        cached = self._hull_cache.get(mask)
        if cached is not None:
            return cached
        out = self._hull_raw(mask)
        if self.n <= 20:
            self._hull_cache[mask] = out
        return out

    def _hull_raw(self, mask):
        if mask == 0:
            return 0
        p = self.poset
        kind = self.kind
        if kind is ConvexityKind.UPPER:
            return p.up_set(mask)
        if kind is ConvexityKind.LOWER:
            return p.down_set(mask)
        if kind is ConvexityKind.ORDER:
            return p.up_set(mask) & p.down_set(mask)

        s = self.semilattice
        if kind is ConvexityKind.ALG_SEMILATTICE:
            return _close_under_table(s.join_table, mask)
        if kind is ConvexityKind.IDEAL:
            return p.down_set(_close_under_table(s.join_table, mask))

        current = mask
        while True:
            nxt = _close_under_table(s.join_table, current)
            if kind is ConvexityKind.ALG_LATTICE:
                nxt = _close_under_table(s.meet_table, nxt)
            elif kind is ConvexityKind.ORDER_ALG_LATTICE:
                nxt = _close_under_table(s.meet_table, nxt)
                nxt = p.up_set(nxt) & p.down_set(nxt)
            else:  # ORDER_ALG_SEMILATTICE
                nxt = p.up_set(nxt) & p.down_set(nxt)
            if nxt == current:
                return current
            current = nxt

    def hull_by_intersection(self, mask, caps=None):
        """Intersection of all convex supersets; the generic fallback route."""
        out = self.poset.full
        for c in self.enumerate_convex_sets(caps=caps):
            if c & mask == mask:
                out &= c
        return out

    # -- enumeration -------------------------------------------------------------

    def enumerate_convex_sets(self, caps=None):
        """All convex subsets, ascending as masks (deterministic order)."""
        if self._family is not None:
            return self._family
        caps = effective(caps)
        caps.check_subset_space(self.n, "convex-set enumeration")
        family = []
        for mask in range(1 << self.n):
            if self.is_convex(mask):
                family.append(mask)
                if len(family) > caps.convex_sets:
                    raise CapExceeded(
                        "convex-set family", caps.convex_sets, partial=len(family)
                    )
        self._family = tuple(family)
        return self._family

    # -- verification ---------------------------------------------------------------

    def verify_convexity_axioms(self, caps=None):
        from .verdicts import TheoremReport

        family = self.enumerate_convex_sets(caps=caps)
        ok, witness = verify_family_is_convexity(self.n, family)
        return TheoremReport(
            theorem_id="convexity-axioms",
            instance_id=f"{self.kind.value}",
            hypotheses_met=True,
            holds=ok,
            witness=witness if not ok else None,
        )

    def arity(self, caps=None):
        """Least k such that closure under k-element hulls characterizes convexity."""
        caps = effective(caps)
        caps.check_subset_space(self.n, "arity search")
        convex = set(self.enumerate_convex_sets(caps=caps))
        for k in range(1, self.n + 1):
            if self._arity_holds(k, convex):
                return k
        return self.n  # unreachable: k = n always characterizes

    def _arity_holds(self, k, convex):
        for mask in range(1 << self.n):
            if mask in convex:
                continue
            if self._closed_under_small_hulls(mask, k):
                return False
        return True

    def _closed_under_small_hulls(self, mask, k):
        members = list(iter_bits(mask))
        for r in range(1, k + 1):
            for combo in itertools.combinations(members, r):
                sub = 0
                for i in combo:
                    sub |= 1 << i
                if self.hull(sub) & ~mask:
                    return False
        return True

    def __repr__(self):
        return f"ConvexitySpace({self.kind.value}, n={self.n})"


def verify_family_is_convexity(n, family):
    """Check the convexity axioms literally on an explicit family of masks.

    Returns (ok, witness).  Directed-union closure is checked on all
    directed subfamilies of size <= 3 (finite directed families have a
    greatest member, so this is the only finite content).
    """
    full = (1 << n) - 1
    fam = set(family)
    if 0 not in fam:
        return False, {"missing": "empty set"}
    if full not in fam:
        return False, {"missing": "full carrier"}
    members = sorted(fam)
    for a in members:
        for b in members:
            if a < b and (a & b) not in fam:
                return False, {"intersection_of": [a, b]}
    for a in members:
        for b in members:
            for c in members:
                union = a | b | c
                if _directed((a, b, c)) and union not in fam:
                    return False, {"directed_union_of": [a, b, c]}
    return True, None


def _directed(sets):
    for x in sets:
        for y in sets:
            if not any(x | y == z or (x | y) & ~z == 0 for z in sets):
                return False
    return True


def polytopes(cs: ConvexitySpace, caps=None):
    """In a finite space every convex set is a polytope (hull of itself)."""
    return cs.enumerate_convex_sets(caps=caps)


__all__ = [
    "ConvexityKind",
    "ConvexitySpace",
    "applicable_kinds",
    "verify_family_is_convexity",
    "polytopes",
]
