"""Join-semilattices and lattices on top of FinitePoset.

A JoinStructure carries the binary join table, and a meet table when every
pair also has a greatest lower bound.  Joins of subsets are folds of the
pair table; empty joins are rejected (suprema are taken of nonempty sets
only).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import iter_bits
from .errors import NotASemilattice
from .poset import FinitePoset


class JoinStructure:
    __slots__ = ("poset", "join_table", "meet_table", "bottom", "top")

    def __init__(self, poset, join_table, meet_table=None):
        self.poset = poset
        self.join_table = join_table
        self.meet_table = meet_table
        mins = poset.minimal_elements(poset.full)
        self.bottom = mins.bit_length() - 1 if mins.bit_count() == 1 else None
        maxs = poset.maximal_elements(poset.full)
        self.top = maxs.bit_length() - 1 if maxs.bit_count() == 1 else None

    @property
    def n(self):
        return self.poset.n

    @property
    def elements(self):
        return self.poset.elements

    @property
    def is_lattice(self):
        return self.meet_table is not None

    @property
    def has_bottom(self):
        return self.bottom is not None

    def join(self, i, j):
        return self.join_table[i][j]

    def meet(self, i, j):
        return self.meet_table[i][j]

    def join_of(self, mask):
        """Supremum of a nonempty element set."""
        if mask == 0:
            raise ValueError("join of the empty set is undefined")
        it = iter_bits(mask)
        out = next(it)
        for i in it:
            out = self.join_table[out][i]
        return out

    def meet_of(self, mask):
        if mask == 0:
            raise ValueError("meet of the empty set is undefined")
        it = iter_bits(mask)
        out = next(it)
        for i in it:
            out = self.meet_table[out][i]
        return out

    def induced(self, mask):
        """Substructure on a join-closed (and meet-closed, if present) mask."""
        from .convexity import _close_under_table  # local to avoid cycle

        if _close_under_table(self.join_table, mask) != mask:
            raise ValueError("mask is not join-closed")
        sub = self.poset.induced(mask)
        return try_join_structure(sub)

    def __repr__(self):
        kind = "lattice" if self.is_lattice else "join-semilattice"
        return f"JoinStructure({kind}, {self.n} elements)"


def _bound_table(poset, upper):
    """Pairwise least-upper (or greatest-lower) bound table, or a witness pair."""
    n = poset.n
    sides = poset.up if upper else poset.down
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            common = sides[i] & sides[j]
            best = None
            for k in iter_bits(common):
                if common & ~sides[k] == 0:
                    best = k
                    break
            if best is None:
                return None, (i, j)
            row.append(best)
        table.append(tuple(row))
    return tuple(table), None


def try_join_structure(p: FinitePoset) -> JoinStructure:
    """Upgrade a poset to a JoinStructure, raising NotASemilattice otherwise.

    The meet table is filled exactly when every pair also has a greatest
    lower bound, i.e. when the structure is a lattice.
    """
    join_table, witness = _bound_table(p, upper=True)
    if join_table is None:
        i, j = witness
        raise NotASemilattice(p.elements[i], p.elements[j])
    meet_table, _ = _bound_table(p, upper=False)
    return JoinStructure(p, join_table, meet_table)


@dataclass(frozen=True)
class StructureClass:
    is_chain: bool
    is_antichain: bool
    is_tree: bool
    is_distributive_semilattice: bool
    is_distributive_lattice: bool

    def to_dict(self):
        return {
            "is_chain": self.is_chain,
            "is_antichain": self.is_antichain,
            "is_tree": self.is_tree,
            "is_distributive_semilattice": self.is_distributive_semilattice,
            "is_distributive_lattice": self.is_distributive_lattice,
        }


def is_tree(s: JoinStructure) -> bool:
    """Every principal filter is a chain."""
    p = s.poset
    for i in range(p.n):
        above = list(iter_bits(p.up[i]))
        for a in range(len(above)):
            for b in range(a + 1, len(above)):
                if not p.comparable(above[a], above[b]):
                    return False
    return True


def is_distributive_semilattice(s: JoinStructure) -> bool:
    """x <= y + z always splits as x = y' + z' with y' <= y, z' <= z.

    For each triple the maximal candidates are y' = sup(dn(y) & dn(x)) and
    z' = sup(dn(z) & dn(x)); a split exists iff they join to x.
    """
    p = s.poset
    for x in range(p.n):
        for y in range(p.n):
            for z in range(y, p.n):
                if not p.leq(x, s.join(y, z)):
                    continue
                cand_y = p.down[y] & p.down[x]
                cand_z = p.down[z] & p.down[x]
                if not cand_y or not cand_z:
                    return False
                if s.join(s.join_of(cand_y), s.join_of(cand_z)) != x:
                    return False
    return True


def is_distributive_lattice(s: JoinStructure) -> bool:
    if not s.is_lattice:
        return False
    n = s.n
    for x in range(n):
        for y in range(n):
            for z in range(y, n):
                lhs = s.meet(x, s.join(y, z))
                rhs = s.join(s.meet(x, y), s.meet(x, z))
                if lhs != rhs:
                    return False
    return True


def classify(s: JoinStructure) -> StructureClass:
    return StructureClass(
        is_chain=s.poset.is_chain(),
        is_antichain=s.poset.is_antichain(),
        is_tree=is_tree(s),
        is_distributive_semilattice=is_distributive_semilattice(s),
        is_distributive_lattice=is_distributive_lattice(s),
    )
