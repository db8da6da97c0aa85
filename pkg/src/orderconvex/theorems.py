"""Executable checkers for the finite-checkable theorems: Krein-Milman and
Milman for posets and semilattices, the Bauer principles, the Minkowski
decomposition bound, the depth/extreme-point count, free-module structure
and the Martinez equivalence.

Checkers raise on violated hypotheses (HypothesisUnmet and friends) and
return a TheoremReport otherwise; a False `holds` is a genuine
counterexample to the theorem, i.e. a library bug or a finding.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .bitset import iter_bits, nonempty_submasks
from .caps import effective
from .errors import (
    ConstantTop,
    HypothesisUnmet,
    NoBottom,
    NotConvex,
    NotConvexMap,
    NotDistributive,
    NotQuasiconcave,
)
from .convexity import ConvexityKind, ConvexitySpace
from .extremal import coprime_mask, extreme_points, is_face
from .geometry import all_copoints
from .invariants import breadth
from .poset import FinitePoset
from .semilattice import (
    JoinStructure,
    is_distributive_lattice,
    is_distributive_semilattice,
)
from .verdicts import TheoremReport


_POSET_KINDS = (ConvexityKind.UPPER, ConvexityKind.LOWER, ConvexityKind.ORDER)


def _timed(report, start):
    report.elapsed = time.perf_counter() - start
    return report


def check_km_poset(p: FinitePoset, kind, k_mask, instance_id="poset") -> TheoremReport:
    """hull(K) equals the hull of the extreme points, for the poset kinds.

    Checks both ex(K) and ex(hull K) variants, plus the sharper upper-kind
    form K inside the up-set of its minimal elements.
    """
    start = time.perf_counter()
    if kind not in _POSET_KINDS:
        raise ValueError("check_km_poset covers the upper, lower and order kinds")
    cs = ConvexitySpace(p, kind)
    hull_k = cs.hull(k_mask)
    ok = cs.hull(extreme_points(cs, k_mask)) == hull_k
    ok = ok and cs.hull(extreme_points(cs, hull_k)) == hull_k
    if kind is ConvexityKind.UPPER:
        ok = ok and k_mask & ~p.up_set(p.minimal_elements(k_mask)) == 0
    witness = None if ok else {"K": list(p.names_of(k_mask))}
    return _timed(
        TheoremReport("krein-milman-poset", instance_id, True, ok, witness), start
    )


def check_milman_poset(p, kind, k_mask, a_mask, instance_id="poset") -> TheoremReport:
    """A generating set of a convex K contains every extreme point of K."""
    start = time.perf_counter()
    cs = ConvexitySpace(p, kind)
    if cs.hull(a_mask) != k_mask:
        raise HypothesisUnmet("hull(A) must equal K")
    ok = extreme_points(cs, k_mask) & ~a_mask == 0
    witness = None if ok else {"K": list(p.names_of(k_mask)), "A": list(p.names_of(a_mask))}
    return _timed(TheoremReport("milman-poset", instance_id, True, ok, witness), start)


def check_km_semilattice(s: JoinStructure, k_mask, instance_id="semilattice") -> TheoremReport:
    """Convex K is the hull of its extreme points, which order-generate it."""
    start = time.perf_counter()
    cs = ConvexitySpace(s, ConvexityKind.ALG_SEMILATTICE)
    if not cs.is_convex(k_mask):
        raise NotConvex("K must be a subsemilattice")
    ex = extreme_points(cs, k_mask)
    ok = cs.hull(ex) == k_mask
    witness = None
    for x in iter_bits(k_mask):
        gens = ex & s.poset.down[x]
        if gens == 0 or s.join_of(gens) != x:
            ok = False
            witness = {"not_generated": s.poset.elements[x]}
            break
    if not ok and witness is None:
        witness = {"K": list(s.poset.names_of(k_mask)), "ex": list(s.poset.names_of(ex))}
    return _timed(
        TheoremReport("krein-milman-semilattice", instance_id, True, ok, witness), start
    )


def check_milman_semilattice(s, k_mask, a_mask, instance_id="semilattice") -> TheoremReport:
    """ex K is contained in every A with hull(A) = K; plus the join lemma:
    an extreme point that is a join of a subset of K belongs to that subset."""
    start = time.perf_counter()
    cs = ConvexitySpace(s, ConvexityKind.ALG_SEMILATTICE)
    if cs.hull(a_mask) != k_mask:
        raise HypothesisUnmet("hull(A) must equal K")
    ex = extreme_points(cs, k_mask)
    ok = ex & ~a_mask == 0
    witness = None
    if ok:
        for sub in nonempty_submasks(k_mask):
            j = s.join_of(sub)
            if ex >> j & 1 and not sub >> j & 1:
                ok = False
                witness = {
                    "lemma_violation": s.poset.elements[j],
                    "joined_from": list(s.poset.names_of(sub)),
                }
                break
    else:
        witness = {"missing": list(s.poset.names_of(ex & ~a_mask))}
    return _timed(TheoremReport("milman-semilattice", instance_id, True, ok, witness), start)


@dataclass(frozen=True)
class ChainMap:
    """Map from a domain K into a finite chain 0..top, with shape flags."""

    values: tuple          # (element index, value) pairs, ascending by index
    domain: int
    top: int
    is_convex: bool
    is_concave: bool
    is_affine: bool
    is_quasiconcave: bool

    def value(self, i):
        return dict(self.values)[i]

    @classmethod
    def analyze(cls, s: JoinStructure, k_mask, assignment, top):
        """Classify an assignment {element index: value} on domain K."""
        members = sorted(assignment)
        f = assignment
        convex = concave = True
        for a in members:
            for b in members:
                j = f[s.join(a, b)]
                m = max(f[a], f[b])
                if j > m:
                    convex = False
                if j < m:
                    concave = False
        cs = ConvexitySpace(s, ConvexityKind.ALG_SEMILATTICE)
        quasi = True
        for level in range(top + 1):
            upper = 0
            for i in members:
                if f[i] > level:
                    upper |= 1 << i
            if not cs.is_convex(upper):
                quasi = False
        return cls(
            values=tuple(sorted(assignment.items())),
            domain=k_mask,
            top=top,
            is_convex=convex,
            is_concave=concave,
            is_affine=convex and concave,
            is_quasiconcave=quasi,
        )


def check_bauer_max(s, k_mask, chain_map: ChainMap, instance_id="semilattice") -> TheoremReport:
    """argmax of a convex map is a face of K meeting the extreme points."""
    start = time.perf_counter()
    if k_mask == 0:
        raise NotConvex("K must be nonempty")
    if not chain_map.is_convex:
        raise NotConvexMap("the map must be convex on K")
    f = dict(chain_map.values)
    best = max(f[i] for i in iter_bits(k_mask))
    argmax = 0
    for i in iter_bits(k_mask):
        if f[i] == best:
            argmax |= 1 << i
    cs = ConvexitySpace(s, ConvexityKind.ALG_SEMILATTICE)
    ok = is_face(s, k_mask, argmax) and bool(argmax & extreme_points(cs, k_mask))
    witness = None if ok else {"argmax": list(s.poset.names_of(argmax))}
    return _timed(TheoremReport("bauer-maximum", instance_id, True, ok, witness), start)


def check_bauer_min(s, k_mask, chain_map: ChainMap, instance_id="semilattice") -> TheoremReport:
    """argmin of a quasiconcave, not identically-top map is a face meeting ex K."""
    start = time.perf_counter()
    if k_mask == 0:
        raise NotConvex("K must be nonempty")
    if not chain_map.is_quasiconcave:
        raise NotQuasiconcave("the map must be quasiconcave on K")
    f = dict(chain_map.values)
    if all(f[i] == chain_map.top for i in iter_bits(k_mask)):
        raise ConstantTop("the map must not be constantly the top value")
    worst = min(f[i] for i in iter_bits(k_mask))
    argmin = 0
    for i in iter_bits(k_mask):
        if f[i] == worst:
            argmin |= 1 << i
    cs = ConvexitySpace(s, ConvexityKind.ALG_SEMILATTICE)
    ok = is_face(s, k_mask, argmin) and bool(argmin & extreme_points(cs, k_mask))
    witness = None if ok else {"argmin": list(s.poset.names_of(argmin))}
    return _timed(TheoremReport("bauer-minimum", instance_id, True, ok, witness), start)


def join_decomposition(s, ex_mask, x, max_size):
    """Smallest subset of ex_mask of size <= max_size joining to x, or None.

    Searched by increasing size with lexicographic tie-breaking on indices.
    """
    if ex_mask >> x & 1:
        return 1 << x
    candidates = [i for i in iter_bits(ex_mask) if s.poset.leq(i, x)]
    for r in range(1, max_size + 1):
        for combo in itertools.combinations(candidates, r):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if s.join_of(mask) == x:
                return mask
    return None


def check_minkowski(s: JoinStructure, k_mask, instance_id="lattice") -> TheoremReport:
    """Every element of convex K is a join of at most breadth-many extreme points."""
    start = time.perf_counter()
    if not is_distributive_lattice(s):
        raise NotDistributive("the Minkowski bound needs a distributive lattice")
    cs = ConvexitySpace(s, ConvexityKind.ALG_SEMILATTICE)
    if not cs.is_convex(k_mask):
        raise NotConvex("K must be a subsemilattice")
    b = breadth(s)
    ex = extreme_points(cs, k_mask)
    ok = True
    max_used = 0
    witness = None
    for x in iter_bits(k_mask):
        found = join_decomposition(s, ex, x, b)
        if found is None:
            ok = False
            witness = {"element": s.poset.elements[x], "breadth": b}
            break
        max_used = max(max_used, found.bit_count())
    report = TheoremReport("minkowski", instance_id, True, ok, witness)
    report.witness = witness if witness else {"breadth": b, "max_witness_size": max_used}
    return _timed(report, start)


def check_depth_count(s: JoinStructure, k_mask, instance_id="semilattice") -> TheoremReport:
    """A convex subset of a distributive semilattice has depth-many extreme points."""
    start = time.perf_counter()
    if not is_distributive_semilattice(s):
        raise NotDistributive("the depth count needs a distributive semilattice")
    cs = ConvexitySpace(s, ConvexityKind.ALG_SEMILATTICE)
    if not cs.is_convex(k_mask):
        raise NotConvex("K must be a subsemilattice")
    d = s.poset.induced(k_mask).depth() if k_mask else 0
    count = extreme_points(cs, k_mask).bit_count()
    ok = count == d
    witness = None if ok else {"depth": d, "extreme_points": count}
    return _timed(TheoremReport("depth-extreme-count", instance_id, True, ok, witness), start)


def free_module_structure(s: JoinStructure):
    """Basis candidate and decomposition data for the free-module check.

    The candidate basis is the set of non-bottom coprimes; `is_free` holds
    when mapping subsets of the basis to their joins (empty set to the
    bottom) is a bijection onto the carrier.  Antichain decomposition
    counts are reported separately: unique antichain decompositions is the
    Martinez condition, strictly weaker than freeness (chains witness the
    gap).
    """
    if not s.has_bottom:
        raise NoBottom("free-module structure needs a least element")
    basis = coprime_mask(s, s.poset.full) & ~(1 << s.bottom)
    decomposed = {s.bottom: 1}
    for sub in nonempty_submasks(basis):
        j = s.join_of(sub)
        decomposed[j] = decomposed.get(j, 0) + 1
    is_free = len(decomposed) == s.n and all(v == 1 for v in decomposed.values())

    p = s.poset
    antichain_counts = {s.bottom: 1}
    for sub in nonempty_submasks(basis):
        members = list(iter_bits(sub))
        if any(
            p.comparable(members[a], members[b])
            for a in range(len(members))
            for b in range(a + 1, len(members))
        ):
            continue
        j = s.join_of(sub)
        antichain_counts[j] = antichain_counts.get(j, 0) + 1
    unique_antichain = len(antichain_counts) == s.n and all(
        v == 1 for v in antichain_counts.values()
    )
    return basis, is_free, unique_antichain


def check_free_module(s: JoinStructure, instance_id="semilattice") -> TheoremReport:
    """Free B-module structure: unique basis decompositions, 2^rank size,
    and distributivity whenever the structure is free."""
    start = time.perf_counter()
    basis, is_free, unique_antichain = free_module_structure(s)
    ok = True
    notes = {
        "is_free": is_free,
        "unique_antichain_decomposition": unique_antichain,
        "basis": list(s.poset.names_of(basis)),
    }
    if is_free:
        ok = s.n == 1 << basis.bit_count() and is_distributive_semilattice(s)
        ok = ok and unique_antichain
    return _timed(TheoremReport("free-module", instance_id, True, ok, notes), start)


def check_martinez_equivalence(s: JoinStructure, instance_id="semilattice", caps=None) -> TheoremReport:
    """Agreement of the three Martinez conditions for the ideal convexity:
    complete distributivity of the convex-set lattice, copoints with a
    uniquely-attached point, and unique antichain decomposition into
    coprimes.  Complete distributivity of a finite lattice is plain
    distributivity.
    """
    start = time.perf_counter()
    if not s.has_bottom:
        raise NoBottom("the Martinez conditions need a least element")
    caps = effective(caps)
    cs = ConvexitySpace(s, ConvexityKind.IDEAL)

    family = cs.enumerate_convex_sets(caps=caps)
    c1 = _family_lattice_distributive(family)

    copoints = all_copoints(cs, caps=caps)
    copoints_at_point = {}
    for q in copoints:
        for x in iter_bits(q.attaching_points):
            copoints_at_point[x] = copoints_at_point.get(x, 0) + 1
    c2 = all(
        any(copoints_at_point[x] == 1 for x in iter_bits(cp.attaching_points))
        for cp in copoints
    )

    _, _, c3 = free_module_structure(s)

    conditions = {
        "completely_distributive_convexity": c1,
        "copoint_with_uniquely_attached_point": c2,
        "unique_coprime_decomposition": c3,
    }
    agree = len(set(conditions.values())) == 1
    return _timed(
        TheoremReport(
            "martinez-equivalence",
            instance_id,
            True,
            agree,
            {"conditions": conditions} if not agree else {"verdict": c1},
        ),
        start,
    )


def _family_lattice_distributive(family):
    """Distributivity of the lattice of convex sets (meet = intersection,
    join = least member containing the union)."""
    sets = sorted(family)
    index = {c: i for i, c in enumerate(sets)}

    def join(a, b):
        union = a | b
        best = None
        for c in sets:
            if c & union == union and (best is None or c & best == c):
                best = c
        return best

    joins = {}
    for a in sets:
        for b in sets:
            joins[a, b] = join(a, b)
    for x in sets:
        for y in sets:
            for z in sets:
                lhs = x & joins[y, z]
                rhs = joins[x & y, x & z]
                if lhs != rhs:
                    return False
    return True
