"""Random-instance sweeps asserting the theorem suites; the engine behind
``orderconvex theorems --sweep``.

Every report a sweep returns is expected to hold; a failing one is either
a library bug or, for the flagged Minkowski-on-semilattices probe, a
finding relevant to the open problem about distributive semilattices.
"""

from __future__ import annotations

from .caps import effective
from .convexity import ConvexityKind, ConvexitySpace
from .extremal import extreme_points
from .generators import semilattice_random
from .geometry import characterization_checks, convex_geometry
from .invariants import breadth, clique_number, caratheodory, depth, helly
from .semilattice import is_distributive_semilattice, is_distributive_lattice
from .theorems import (
    check_free_module,
    check_km_semilattice,
    check_martinez_equivalence,
    check_milman_semilattice,
    check_minkowski,
    join_decomposition,
)
from .verdicts import TheoremReport


def sweep_instances(max_n, seeds, seed_base=0):
    """Deterministic batch of random semilattices with sizes cycling 2..max_n."""
    sizes = list(range(2, max_n + 1)) or [1]
    return [
        (f"semilattice_random:{sizes[i % len(sizes)]}:{seed_base + i}",
         semilattice_random(sizes[i % len(sizes)], seed_base + i))
        for i in range(seeds)
    ]


def identity_reports(s, instance_id, caps=None) -> list:
    """Helly = depth, clique = depth, Caratheodory = breadth for the
    algebraic convexity of a semilattice."""
    caps = effective(caps)
    cs = ConvexitySpace(s, ConvexityKind.ALG_SEMILATTICE)
    d = depth(s)
    checks = {
        "helly-equals-depth": helly(cs, caps) == d,
        "clique-equals-depth": clique_number(cs, caps) == d,
        "caratheodory-equals-breadth": caratheodory(cs, caps) == breadth(s, caps),
    }
    return [
        TheoremReport(name, instance_id, True, ok, None if ok else {"depth": d})
        for name, ok in checks.items()
    ]


def km_reports(s, instance_id, caps=None) -> list:
    cs = ConvexitySpace(s, ConvexityKind.ALG_SEMILATTICE)
    out = []
    for k in cs.enumerate_convex_sets(caps=caps):
        out.append(check_km_semilattice(s, k, instance_id))
    return out


def milman_reports(s, instance_id, caps=None) -> list:
    cs = ConvexitySpace(s, ConvexityKind.ALG_SEMILATTICE)
    out = []
    for a in range(1 << s.n):
        out.append(check_milman_semilattice(s, cs.hull(a), a, instance_id))
    return out


def geometry_reports(s, instance_id, caps=None) -> list:
    """Four-way Jamison-Edelman agreement plus the structural iffs."""
    from .convexity import applicable_kinds

    out = []
    for kind in applicable_kinds(s):
        cs = ConvexitySpace(s, kind)
        verdict = convex_geometry(cs, caps=caps)
        agree = len(set(verdict.conditions)) == 1
        out.append(
            TheoremReport(
                "jamison-edelman-agreement",
                f"{instance_id}/{kind.value}",
                True,
                agree,
                None if agree else verdict.to_dict(),
            )
        )
        report = characterization_checks(cs, caps=caps)
        report.instance_id = f"{instance_id}/{kind.value}"
        out.append(report)
    return out


def minkowski_reports(s, instance_id, caps=None) -> list:
    if not is_distributive_lattice(s):
        return []
    cs = ConvexitySpace(s, ConvexityKind.ALG_SEMILATTICE)
    return [check_minkowski(s, k, instance_id) for k in cs.enumerate_convex_sets(caps=caps)]


def minkowski_problem_findings(s, instance_id, caps=None) -> list:
    """Open-problem probe: on a distributive semilattice that is not a
    lattice, does some convex subset need more than breadth-many extreme
    points?  Findings are reported, never asserted."""
    if is_distributive_lattice(s) or not is_distributive_semilattice(s):
        return []
    cs = ConvexitySpace(s, ConvexityKind.ALG_SEMILATTICE)
    b = breadth(s, caps)
    findings = []
    for k in cs.enumerate_convex_sets(caps=caps):
        ex = extreme_points(cs, k)
        for element in range(s.n):
            if not k >> element & 1:
                continue
            if join_decomposition(s, ex, element, b) is None:
                findings.append(
                    TheoremReport(
                        "minkowski-semilattice-finding",
                        instance_id,
                        True,
                        None,
                        {
                            "element": s.poset.elements[element],
                            "breadth": b,
                            "K": list(s.poset.names_of(k)),
                        },
                    )
                )
    return findings


def run_sweep(max_n=6, seeds=25, seed_base=0, caps=None):
    """The full random sweep; returns (reports, findings)."""
    caps = effective(caps)
    reports = []
    findings = []
    for instance_id, s in sweep_instances(max_n, seeds, seed_base):
        reports += identity_reports(s, instance_id, caps)
        reports += km_reports(s, instance_id, caps)
        if s.n <= 5:
            reports += milman_reports(s, instance_id, caps)
            reports += geometry_reports(s, instance_id, caps)
        reports += minkowski_reports(s, instance_id, caps)
        if s.has_bottom:
            reports.append(check_free_module(s, instance_id))
            reports.append(check_martinez_equivalence(s, instance_id, caps))
        findings += minkowski_problem_findings(s, instance_id, caps)
    reports.sort(key=lambda r: (r.instance_id, r.theorem_id))
    return reports, findings
