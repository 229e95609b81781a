"""DOT text export with per-edge-set style highlighting."""

from __future__ import annotations

from typing import Iterable, Sequence

from .graphs import Edge, Graph, normalize_edge


def export_dot(
    g: Graph,
    highlights: Sequence[tuple[Iterable[tuple[int, int]], str]] = (),
    name: str = "G",
) -> str:
    """Render g as undirected DOT text.

    highlights is a sequence of (edges, style) pairs; each listed edge gets the
    style string as its DOT style attribute (earlier sets win on overlap).
    Highlight edges may be non-edges of g (e.g. pairing chords); they are drawn
    too.  Endpoints outside 0..n-1 are rejected.
    """
    style_of: dict[Edge, str] = {}
    for edges, style in highlights:
        for (u, v) in edges:
            e = normalize_edge(u, v)
            if not 0 <= e[0] < e[1] < g.n:
                raise ValueError(f"highlight edge {e} out of range for n={g.n}")
            style_of.setdefault(e, style)
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for (u, v) in sorted(set(g.edges) | set(style_of)):
        if (u, v) in style_of:
            lines.append(f"  {u} -- {v} [style={style_of[(u, v)]}];")
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
