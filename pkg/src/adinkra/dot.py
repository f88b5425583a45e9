"""Graphviz DOT rendering for adinkras and baobabs."""

from __future__ import annotations

from .baobab import Baobab
from .codes import bit_string, weight
from .graph import Adinkra

_PALETTE = [
    "red", "blue", "green", "orange",
    "purple", "brown", "cyan", "magenta", "olive", "navy",
]


def color_name(color: int) -> str:
    return _PALETTE[(color - 1) % len(_PALETTE)]


def _node_line(label: str, filled: bool) -> str:
    style = (
        'style=filled, fillcolor=black, fontcolor=white'
        if filled else 'style=solid'
    )
    return f'  "{label}" [shape=circle, {style}];'


def adinkra_to_dot(adinkra: Adinkra) -> str:
    """Render nodes (fermions filled), colored edges, dashes, and
    heights as same-rank rows when present."""
    length = adinkra.length
    lines = ["graph adinkra {"]
    append = lines.append
    append("  rankdir=BT;")
    for x in adinkra.nodes:
        append(_node_line(bit_string(x, length), weight(x) % 2 == 1))
    if adinkra.heights is not None:
        by_height: dict[int, list[int]] = {}
        for x in adinkra.nodes:
            by_height.setdefault(adinkra.heights[x], []).append(x)
        for h in sorted(by_height):
            row = " ".join(f'"{bit_string(x, length)}"'
                           for x in sorted(by_height[h]))
            append(f"  {{ rank=same; {row} }}")
    for e in adinkra.edges:
        attrs = [f"color={color_name(e.color)}"]
        if adinkra.dashing is not None and adinkra.dashing[e] == -1:
            attrs.append("style=dashed")
        u, v = bit_string(e.u, length), bit_string(e.v, length)
        if adinkra.heights is not None:
            lo, hi = (
                (u, v) if adinkra.heights[e.u] < adinkra.heights[e.v]
                else (v, u)
            )
            attrs.append("dir=forward")
            append(f'  "{lo}" -- "{hi}" [{", ".join(attrs)}];')
        else:
            append(f'  "{u}" -- "{v}" [{", ".join(attrs)}];')
    append("}")
    return "\n".join(lines) + "\n"


def baobab_to_dot(baobab: Baobab) -> str:
    """Render the determining subgraph: tree edges solid, cycle edges
    bold, pinned arrows directed, with the carried bit on each label."""
    length = baobab.length
    lines = ["graph baobab {"]
    append = lines.append
    nodes = sorted(
        {e.u for e in baobab.slot_edges()} | {e.v for e in baobab.slot_edges()}
    )
    for x in nodes:
        append(_node_line(bit_string(x, length), weight(x) % 2 == 1))
    for e in baobab.slot_edges():
        attrs = [f"color={color_name(e.color)}"]
        attrs.append(f'label="{baobab.bits[e]}"')
        if e in baobab.cycle_edges:
            attrs.append("penwidth=2")
        if e in baobab.pinned:
            attrs.append("dir=forward")
            head = baobab.pinned[e]
            tail = e.u if head == e.v else e.v
            append(
                f'  "{bit_string(tail, length)}" -- '
                f'"{bit_string(head, length)}" [{", ".join(attrs)}];'
            )
        else:
            append(
                f'  "{bit_string(e.u, length)}" -- '
                f'"{bit_string(e.v, length)}" [{", ".join(attrs)}];'
            )
    for e in sorted(baobab.pinned, key=lambda e: (e.u, e.color)):
        if e not in baobab.bits:
            head = baobab.pinned[e]
            tail = e.u if head == e.v else e.v
            append(
                f'  "{bit_string(tail, length)}" -- '
                f'"{bit_string(head, length)}" '
                f'[color={color_name(e.color)}, dir=forward];'
            )
    append("}")
    return "\n".join(lines) + "\n"
