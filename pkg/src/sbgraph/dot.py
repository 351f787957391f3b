"""DOT export with optional block highlighting."""

from __future__ import annotations

PALETTE = (
    "#1b9e77",
    "#d95f02",
    "#7570b3",
    "#e7298a",
    "#66a61e",
    "#e6ab02",
    "#a6761d",
    "#666666",
    "#1f78b4",
    "#b2df8a",
    "#fb9a99",
    "#cab2d6",
)


def export_dot(g, highlight=None):
    """Render g as a DOT digraph.

    highlight: optional family of vertex sets; each set gets a palette
    colour, and vertices in several sets get a gradient of all of them.
    """
    colours = {}
    if highlight:
        for i, block in enumerate(highlight):
            colour = PALETTE[i % len(PALETTE)]
            for v in block:
                colours.setdefault(v, []).append(colour)
    lines = ["digraph g {"]
    for v in range(g.n):
        if v in colours:
            fill = ":".join(colours[v])
            lines.append(f'  {v} [style=filled, fillcolor="{fill}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges:
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
