"""Resource caps for the exhaustive searches.

Every operation that walks a subset space or a convex-set family checks
against these limits and raises CapExceeded rather than running forever.
Defaults can be overridden with the ORDERCONVEX_CAPS environment variable,
e.g. ``ORDERCONVEX_CAPS="n=20,subsets=1048576,convex-sets=100000"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import CapExceeded

_ENV_VAR = "ORDERCONVEX_CAPS"
_ENV_KEYS = {"n": "max_n", "subsets": "subsets", "convex-sets": "convex_sets"}


@dataclass(frozen=True)
class Caps:
    max_n: int = 24          # carrier size accepted by constructors
    subsets: int = 1 << 16   # masks visited by one subset-space search
    convex_sets: int = 1 << 16  # convex sets returned by one enumeration

    def check_n(self, n):
        if n > self.max_n:
            raise CapExceeded("carrier size", self.max_n, n)

    def check_subset_space(self, n_bits, what="subset search"):
        if n_bits > self.subsets.bit_length() - 1:
            raise CapExceeded(what, self.subsets, 1 << n_bits)


def caps_from_env(env=None):
    raw = (env if env is not None else os.environ).get(_ENV_VAR, "")
    kwargs = {}
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        key, _, value = part.partition("=")
        field = _ENV_KEYS.get(key.strip())
        if field is None:
            raise ValueError(f"unknown {_ENV_VAR} key: {key!r}")
        kwargs[field] = int(value)
    return Caps(**kwargs)


DEFAULT_CAPS = caps_from_env()


def effective(caps):
    return DEFAULT_CAPS if caps is None else caps
