"""Graphviz rendering of a network with its SIMUG covering."""
from __future__ import annotations

from .graph import EdgeKind, ExtendedGraph, edge_key

PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
           "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f")


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: ExtendedGraph, covering=None, excited=(), names=None, title: str = "network") -> str:
    """DOT text: one colour per SIMUG, dashed fixed edges, double border on excited nodes.

    The output depends only on the arguments, so it is stable byte for byte.
    """
    name = names.name if names is not None else str
    color_of = {}
    if covering is not None:
        for k, t in enumerate(covering):
            for e in t.edges:
                color_of[(e.tail, e.head)] = PALETTE[k % len(PALETTE)]
    excited = frozenset(excited)
    lines = [f"digraph {_quote(title)} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for v in g.vertices:
        attrs = []
        if g.is_e_node(v):
            attrs.append("shape=box")
        if v in excited:
            attrs.append("peripheries=2")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quote(name(v))}{suffix};")
    for e in sorted(g.edges, key=edge_key):
        attrs = []
        if e.kind is EdgeKind.FIXED:
            attrs.append("style=dashed")
        if (e.tail, e.head) in color_of:
            attrs.append(f"color={_quote(color_of[(e.tail, e.head)])}")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {_quote(name(e.tail))} -> {_quote(name(e.head))}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
