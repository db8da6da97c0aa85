"""Whole-instance analysis: classification, invariants, geometry and
separation per kind, plus a bounded run of the theorem checkers, all in
one JSON-serializable report (schema ``orderconvex/1``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .caps import effective
from .errors import CapExceeded, OrderConvexError
from .convexity import ConvexityKind, ConvexitySpace, applicable_kinds
from .geometry import convex_geometry
from .invariants import invariant_profile
from .io import poset_to_json
from .semilattice import JoinStructure, classify
from .separation import separation_profile
from .theorems import (
    check_free_module,
    check_km_poset,
    check_km_semilattice,
    check_martinez_equivalence,
    check_milman_poset,
    check_milman_semilattice,
    check_minkowski,
)
from .verdicts import TheoremReport

SCHEMA = "orderconvex/1"

_POSET_KINDS = (ConvexityKind.UPPER, ConvexityKind.LOWER, ConvexityKind.ORDER)


@dataclass
class KindSection:
    invariants: dict
    geometry: dict
    separation: dict
    arity: int | str

    def to_dict(self):
        return {
            "invariants": self.invariants,
            "geometry": self.geometry,
            "separation": self.separation,
            "arity": self.arity,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(**data)


@dataclass
class AnalysisReport:
    schema: str
    instance: dict
    structure_class: dict | None
    kinds: dict  # kind string -> KindSection
    theorems: list  # list of TheoremReport

    def to_dict(self):
        return {
            "schema": self.schema,
            "instance": self.instance,
            "structure_class": self.structure_class,
            "kinds": {k: v.to_dict() for k, v in self.kinds.items()},
            "theorems": [t.to_dict() for t in self.theorems],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            schema=data["schema"],
            instance=data["instance"],
            structure_class=data["structure_class"],
            kinds={k: KindSection.from_dict(v) for k, v in data["kinds"].items()},
            theorems=[TheoremReport.from_dict(t) for t in data["theorems"]],
        )

    @property
    def any_failure(self):
        return any(t.failed for t in self.theorems)


def _sample_masks(n, count, rng):
    if n <= 7:
        return list(range(1 << n))
    return sorted({rng.randrange(1 << n) for _ in range(count)})


def analyze(
    structure,
    kinds=None,
    instance_id="instance",
    caps=None,
    seed=0,
    run_theorems=True,
    sample=64,
) -> AnalysisReport:
    """Run the full pipeline on one structure, deterministically per seed.

    Sections that overrun a cap are recorded as "cap-exceeded" rather than
    aborting the report.
    """
    caps = effective(caps)
    rng = random.Random(seed)
    poset = getattr(structure, "poset", structure)
    semilattice = structure if isinstance(structure, JoinStructure) else None

    if kinds is None:
        kinds = applicable_kinds(structure)
    else:
        kinds = [ConvexityKind.from_string(k) if isinstance(k, str) else k for k in kinds]
        for kind in kinds:
            if kind not in applicable_kinds(structure):
                raise OrderConvexError(
                    f"kind {kind.value} is not applicable to this structure"
                )

    instance = {
        "id": instance_id,
        "n": poset.n,
        "poset": poset_to_json(poset),
        "is_semilattice": semilattice is not None,
        "is_lattice": bool(semilattice is not None and semilattice.is_lattice),
    }

    structure_class = classify(semilattice).to_dict() if semilattice else None

    sections = {}
    for kind in kinds:
        cs = ConvexitySpace(structure, kind)

        def guarded(fn):
            try:
                return fn()
            except CapExceeded:
                return "cap-exceeded"

        inv = guarded(lambda: invariant_profile(cs, caps).to_dict())
        geo = guarded(lambda: convex_geometry(cs, caps).to_dict())
        sep = guarded(lambda: separation_profile(cs, caps).to_dict())
        ar = guarded(lambda: cs.arity(caps))
        sections[kind.value] = KindSection(inv, geo, sep, ar)

    theorems = []
    if run_theorems:
        theorems = _run_theorems(structure, kinds, instance_id, caps, rng, sample)

    return AnalysisReport(
        schema=SCHEMA,
        instance=instance,
        structure_class=structure_class,
        kinds=sections,
        theorems=theorems,
    )


def _run_theorems(structure, kinds, instance_id, caps, rng, sample):
    from .semilattice import is_distributive_lattice, is_distributive_semilattice

    poset = getattr(structure, "poset", structure)
    semilattice = structure if isinstance(structure, JoinStructure) else None
    reports = []

    for kind in kinds:
        if kind in _POSET_KINDS:
            cs = ConvexitySpace(structure, kind)
            for mask in _sample_masks(poset.n, sample, rng):
                reports.append(
                    check_km_poset(poset, kind, mask, f"{instance_id}/{kind.value}")
                )
                k = cs.hull(mask)
                reports.append(
                    check_milman_poset(poset, kind, k, mask, f"{instance_id}/{kind.value}")
                )

    if semilattice is not None and ConvexityKind.ALG_SEMILATTICE in kinds:
        cs = ConvexitySpace(structure, ConvexityKind.ALG_SEMILATTICE)
        for mask in _sample_masks(poset.n, sample, rng):
            k = cs.hull(mask)
            reports.append(check_km_semilattice(semilattice, k, instance_id))
            reports.append(check_milman_semilattice(semilattice, k, mask, instance_id))
        if semilattice.has_bottom:
            reports.append(check_free_module(semilattice, instance_id))
            try:
                reports.append(check_martinez_equivalence(semilattice, instance_id, caps))
            except CapExceeded:
                reports.append(
                    TheoremReport.vacuous("martinez-equivalence", instance_id, "cap exceeded")
                )
        if is_distributive_lattice(semilattice):
            for mask in _sample_masks(poset.n, sample // 2, rng):
                reports.append(check_minkowski(semilattice, cs.hull(mask), instance_id))
        if is_distributive_semilattice(semilattice):
            from .theorems import check_depth_count

            for mask in _sample_masks(poset.n, sample // 2, rng):
                reports.append(check_depth_count(semilattice, cs.hull(mask), instance_id))

    reports.sort(key=lambda r: (r.instance_id, r.theorem_id))
    return reports
