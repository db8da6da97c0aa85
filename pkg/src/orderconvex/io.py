"""Poset file formats.

Text format::

    # optional comments
    elements: a b c
    cover: a b
    cover: b c

JSON mirror: ``{"elements": ["a", "b", "c"], "covers": [["a", "b"], ["b", "c"]]}``.
"""

from __future__ import annotations

import json

from .errors import OrderConvexError
from .poset import FinitePoset, build_poset


def parse_poset_text(text, caps=None) -> FinitePoset:
    elements = None
    covers = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        key = key.strip()
        if key == "elements":
            elements = rest.split()
        elif key == "cover":
            pair = rest.split()
            if len(pair) != 2:
                raise OrderConvexError(f"line {lineno}: cover needs two names")
            covers.append((pair[0], pair[1]))
        else:
            raise OrderConvexError(f"line {lineno}: unknown directive {key!r}")
    if elements is None:
        raise OrderConvexError("missing 'elements:' line")
    return build_poset(elements, covers, caps=caps)


def poset_to_text(p: FinitePoset) -> str:
    lines = ["elements: " + " ".join(p.elements)]
    for i, j in p.covers():
        lines.append(f"cover: {p.elements[i]} {p.elements[j]}")
    return "\n".join(lines) + "\n"


def parse_poset_json(data, caps=None) -> FinitePoset:
    if isinstance(data, str):
        data = json.loads(data)
    return build_poset(data["elements"], [tuple(c) for c in data["covers"]], caps=caps)


def poset_to_json(p: FinitePoset) -> dict:
    return {
        "elements": list(p.elements),
        "covers": [[p.elements[i], p.elements[j]] for i, j in p.covers()],
    }


def load_poset(path, caps=None) -> FinitePoset:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if str(path).endswith(".json"):
        return parse_poset_json(text, caps=caps)
    return parse_poset_text(text, caps=caps)


def save_poset(p: FinitePoset, path):
    with open(path, "w", encoding="utf-8") as fh:
        if str(path).endswith(".json"):
            json.dump(poset_to_json(p), fh, ensure_ascii=False, indent=2)
            fh.write("\n")
        else:
            fh.write(poset_to_text(p))
