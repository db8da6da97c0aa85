"""DOT export of Hasse diagrams, ranked by chain depth so the drawing
reads level by level, bottom to top.  Two optional highlight sets are
rendered as gray and black fills, the convention the figures use for a
subset and its distinguished points.
"""

from __future__ import annotations

from .bitset import iter_bits


def _quote(name):
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(structure, highlight=None) -> str:
    """DOT digraph of the cover relation.

    `highlight` is an optional pair of element masks: the first is drawn
    gray, the second black (black wins on overlap).
    """
    p = getattr(structure, "poset", structure)
    gray, black = highlight if highlight is not None else (0, 0)

    levels = {}
    order = sorted(range(p.n), key=lambda i: (p.down[i].bit_count(), i))
    for i in order:
        below = [j for j in iter_bits(p.down[i]) if j != i]
        levels[i] = 1 + max((levels[j] for j in below), default=0)

    lines = ["digraph poset {", "  rankdir=BT;", '  node [shape=circle, style=filled, fillcolor=white];']
    for level in sorted(set(levels.values())):
        same = [i for i in order if levels[i] == level]
        lines.append("  { rank=same; " + " ".join(_quote(p.elements[i]) + ";" for i in same) + " }")
    for i in range(p.n):
        if black >> i & 1:
            lines.append(f"  {_quote(p.elements[i])} [fillcolor=black, fontcolor=white];")
        elif gray >> i & 1:
            lines.append(f"  {_quote(p.elements[i])} [fillcolor=gray];")
    for i, j in p.covers():
        lines.append(f"  {_quote(p.elements[i])} -> {_quote(p.elements[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
