"""Instance generators and the named catalog.

Spec strings drive the CLI: ``chain:4``, ``boolean:3``, ``divisors:12``,
``antichain:3``, ``product:chain:2+chain:3``, ``tree_random:8:42``,
``poset_random:6:0.3:42``, ``semilattice_random:7:42``.  Random families
are deterministic per seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .caps import effective
from .errors import OrderConvexError
from .poset import FinitePoset, build_poset
from .semilattice import JoinStructure, try_join_structure


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    args: tuple

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if text.startswith("gen:"):
            text = text[4:]
        family, _, rest = text.partition(":")
        if family == "product":
            return cls("product", tuple(GeneratorSpec.parse(p) for p in rest.split("+")))
        args = []
        for piece in rest.split(":") if rest else []:
            if "." in piece:
                args.append(float(piece))
            else:
                args.append(int(piece))
        return cls(family, tuple(args))

    def __str__(self):
        if self.family == "product":
            return "product:" + "+".join(str(a) for a in self.args)
        return ":".join([self.family] + [str(a) for a in self.args])


def chain(k):
    return try_join_structure(
        build_poset([str(i) for i in range(k)], [(str(i), str(i + 1)) for i in range(k - 1)])
    )


def antichain(k):
    return build_poset([f"a{i}" for i in range(k)], [])


def boolean(k):
    """The power-set lattice of {1..k} under inclusion."""
    if k > 9:
        raise OrderConvexError("boolean(k) supports k <= 9")
    subsets = list(range(1 << k))
    names = ["∅" if s == 0 else "".join(str(i + 1) for i in range(k) if s >> i & 1) for s in subsets]
    covers = []
    for s in subsets:
        for i in range(k):
            if not s >> i & 1:
                covers.append((names[s], names[s | 1 << i]))
    return try_join_structure(build_poset(names, covers))


def divisors(m):
    divs = [d for d in range(1, m + 1) if m % d == 0]
    names = [str(d) for d in divs]
    covers = []
    for a in divs:
        for b in divs:
            if a != b and b % a == 0 and not any(
                c != a and c != b and c % a == 0 and b % c == 0 for c in divs
            ):
                covers.append((str(a), str(b)))
    return try_join_structure(build_poset(names, covers))


def v_semilattice():
    """The three-point semilattice a, b < t with no bottom."""
    return try_join_structure(build_poset(["a", "b", "t"], [("a", "t"), ("b", "t")]))


def product(*structures):
    """Componentwise order on tuples; a semilattice/lattice when all factors are."""
    posets = [getattr(s, "poset", s) for s in structures]
    combos = [()]
    for p in posets:
        combos = [c + (i,) for c in combos for i in range(p.n)]
    names = ["(" + ",".join(p.elements[i] for p, i in zip(posets, c)) + ")" for c in combos]
    ups = []
    for c in combos:
        mask = 0
        for j, d in enumerate(combos):
            if all(p.leq(a, b) for p, a, b in zip(posets, c, d)):
                mask |= 1 << j
        ups.append(mask)
    poset = FinitePoset(names, ups)
    if all(isinstance(s, JoinStructure) for s in structures):
        return try_join_structure(poset)
    return poset


def tree_random(n, seed):
    """Random tree semilattice: node 0 is the top, parents point upward."""
    rng = random.Random(seed)
    names = [f"t{i}" for i in range(n)]
    covers = [(names[i], names[rng.randrange(i)]) for i in range(1, n)]
    return try_join_structure(build_poset(names, covers))


def poset_random(n, density, seed):
    rng = random.Random(seed)
    names = [f"e{i}" for i in range(n)]
    covers = [
        (names[i], names[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < density
    ]
    return build_poset(names, covers)


def semilattice_random(n, seed, inclusion_probability=0.5):
    """Random union-closed family with exactly n member sets.

    Grows the family one random subset at a time, closing under unions and
    rejecting overshoots; a fresh strictly-larger top breaks stalls, so the
    target size is always reached.  Join is set union, so the result is a
    join-semilattice by construction (not necessarily with a bottom).
    """
    rng = random.Random(seed)
    universe = n + 8
    family: set = set()
    stall = 0
    while len(family) < n:
        if stall > 20:
            everything = frozenset().union(*family) if family else frozenset()
            candidate = everything | {min(i for i in range(universe) if i not in everything)}
            family.add(frozenset(candidate))
            stall = 0
            continue
        pick = frozenset(
            i for i in range(universe) if rng.random() < inclusion_probability
        )
        closed = set(family)
        closed.add(pick)
        frontier = [pick]
        while frontier:
            new = frontier.pop()
            for other in list(closed):
                u = new | other
                if u not in closed:
                    closed.add(u)
                    frontier.append(u)
        if len(closed) <= n:
            stall = 0 if len(closed) > len(family) else stall + 1
            family = closed
        else:
            stall += 1
    sets = sorted(family, key=lambda s: (len(s), sorted(s)))
    names = ["{" + ",".join(str(i) for i in sorted(s)) + "}" for s in sets]
    covers = []
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            if a < b and not any(a < c < b for c in sets):
                covers.append((names[i], names[j]))
    return try_join_structure(build_poset(names, covers))


_FAMILIES = {
    "chain": chain,
    "antichain": antichain,
    "boolean": boolean,
    "divisors": divisors,
    "tree_random": tree_random,
    "poset_random": poset_random,
    "semilattice_random": semilattice_random,
}


def generate(spec, caps=None):
    """Build the structure a GeneratorSpec (or spec string) describes."""
    if isinstance(spec, str):
        spec = GeneratorSpec.parse(spec)
    caps = effective(caps)
    if spec.family == "product":
        return product(*(generate(sub, caps) for sub in spec.args))
    builder = _FAMILIES.get(spec.family)
    if builder is None:
        raise OrderConvexError(f"unknown generator family {spec.family!r}")
    structure = builder(*spec.args)
    caps.check_n(getattr(structure, "n", 0))
    return structure


def catalog():
    """The named instances exercised by the acceptance tables."""
    out = {}
    for k in range(1, 6):
        out[f"chain-{k}"] = chain(k)
    for k in range(2, 5):
        out[f"antichain-{k}"] = antichain(k)
    out["boolean-2"] = boolean(2)
    out["boolean-3"] = boolean(3)
    out["v-semilattice"] = v_semilattice()
    out["divisors-12"] = divisors(12)
    out["divisors-36"] = divisors(36)
    return out
