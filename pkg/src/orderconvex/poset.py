"""Finite partially ordered sets.

A FinitePoset stores the order as per-element bitmasks: ``up[i]`` is the
principal filter of i and ``down[i]`` its principal ideal.  Instances are
immutable after construction; every operation returns fresh masks.
"""

from __future__ import annotations

from .bitset import bits, iter_bits
from .caps import effective
from .errors import CycleDetected, DuplicateElement


class FinitePoset:
    __slots__ = ("elements", "index", "n", "full", "up", "down", "_covers")

    def __init__(self, elements, up_masks):
        self.elements = tuple(elements)
        self.index = {name: i for i, name in enumerate(self.elements)}
        self.n = len(self.elements)
        self.full = (1 << self.n) - 1
        self.up = tuple(up_masks)
        self.down = tuple(
            sum(1 << j for j in range(self.n) if self.up[j] >> i & 1)
            for i in range(self.n)
        )
        self._covers = None

    # -- order predicates -------------------------------------------------

    def leq(self, i, j):
        return bool(self.up[i] >> j & 1)

    def lt(self, i, j):
        return i != j and self.leq(i, j)

    def comparable(self, i, j):
        return self.leq(i, j) or self.leq(j, i)

    # -- set conversions ---------------------------------------------------

    def set_of(self, names):
        return sum(1 << self.index[name] for name in names)

    def names_of(self, mask):
        return tuple(self.elements[i] for i in iter_bits(mask))

    # -- generated subsets --------------------------------------------------

    def up_set(self, mask):
        out = 0
        for i in iter_bits(mask):
            out |= self.up[i]
        return out

    def down_set(self, mask):
        out = 0
        for i in iter_bits(mask):
            out |= self.down[i]
        return out

    def interval(self, i, j):
        return self.up[i] & self.down[j]

    def minimal_elements(self, mask):
        out = 0
        for i in iter_bits(mask):
            if self.down[i] & mask == 1 << i:
                out |= 1 << i
        return out

    def maximal_elements(self, mask):
        out = 0
        for i in iter_bits(mask):
            if self.up[i] & mask == 1 << i:
                out |= 1 << i
        return out

    # -- structure ----------------------------------------------------------

    def covers(self):
        """Pairs (i, j) with j covering i."""
        if self._covers is None:
            pairs = []
            for i in range(self.n):
                strict_up = self.up[i] & ~(1 << i)
                for j in iter_bits(strict_up):
                    between = self.up[i] & self.down[j] & ~(1 << i) & ~(1 << j)
                    if between == 0:
                        pairs.append((i, j))
            self._covers = tuple(pairs)
        return self._covers

    def is_chain(self):
        return all(
            self.comparable(i, j) for i in range(self.n) for j in range(i + 1, self.n)
        )

    def is_antichain(self):
        return all(
            not self.comparable(i, j)
            for i in range(self.n)
            for j in range(i + 1, self.n)
        )

    def depth(self):
        """Cardinality of a longest chain."""
        order = sorted(range(self.n), key=lambda i: self.down[i].bit_count())
        longest = [1] * self.n
        for i in order:
            below = self.down[i] & ~(1 << i)
            for j in iter_bits(below):
                longest[i] = max(longest[i], longest[j] + 1)
        return max(longest, default=0)

    def dual(self):
        return FinitePoset(self.elements, self.down)

    def induced(self, mask):
        """Sub-poset on the elements of `mask`, in carrier order."""
        kept = bits(mask)
        pos = {old: new for new, old in enumerate(kept)}
        ups = []
        for old in kept:
            m = 0
            for other in iter_bits(self.up[old] & mask):
                m |= 1 << pos[other]
            ups.append(m)
        return FinitePoset([self.elements[i] for i in kept], ups)

    def __eq__(self, other):
        return (
            isinstance(other, FinitePoset)
            and self.elements == other.elements
            and self.up == other.up
        )

    def __hash__(self):
        return hash((self.elements, self.up))

    def __repr__(self):
        return f"FinitePoset({self.n} elements, {len(self.covers())} covers)"


def build_poset(elements, cover_pairs, full_relation=False, caps=None):
    """Build a poset from named elements and generating pairs.

    `cover_pairs` are (lower, upper) name pairs; `leq` is their
    reflexive-transitive closure.  With ``full_relation=True`` the pairs
    are interpreted as an already-closed relation (reflexive pairs may be
    omitted); it is closed and validated the same way, so the flag only
    documents intent.  Raises CycleDetected if the closure would violate
    antisymmetry and DuplicateElement on repeated names.
    """
    elements = list(elements)
    seen = set()
    for name in elements:
        if name in seen:
            raise DuplicateElement(name)
        seen.add(name)
    effective(caps).check_n(len(elements))

    index = {name: i for i, name in enumerate(elements)}
    n = len(elements)
    up = [1 << i for i in range(n)]
    for low, high in cover_pairs:
        up[index[low]] |= 1 << index[high]

    changed = True
    while changed:
        changed = False
        for i in range(n):
            merged = up[i]
            for j in iter_bits(up[i]):
                merged |= up[j]
            if merged != up[i]:
                up[i] = merged
                changed = True

    for i in range(n):
        for j in iter_bits(up[i]):
            if j != i and up[j] >> i & 1:
                raise CycleDetected((elements[i], elements[j]))
    return FinitePoset(elements, up)
