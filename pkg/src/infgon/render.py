"""SVG diagrams: arc families as semicircles over the number line, quivers
as vertex glyphs at arc midpoints with directed edges.

Output is deterministic text; integer pixel coordinates throughout (the
unit is even, so semicircle centers stay integral).
"""

from __future__ import annotations

from typing import Union

from .arcs import Arc, ArcFamily, Window, arcs_in_window, classify
from .quiver import Quiver

__all__ = ["render_svg", "UNIT", "MARGIN"]

UNIT = 40
MARGIN = 30


def _x(v: int, lo: int) -> int:
    return MARGIN + (v - lo) * UNIT


def _svg(width: int, height: int, body: list[str], lo: int, baseline: int) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" data-lo="{lo}" data-unit="{UNIT}" '
        f'data-margin="{MARGIN}" data-baseline="{baseline}">'
    )
    return "\n".join([head] + body + ["</svg>"]) + "\n"


def _render_family(family: ArcFamily, w: Window) -> str:
    arcs = arcs_in_window(family, w)
    max_span = max((a.right - a.left for a in arcs), default=2)
    baseline = max_span * UNIT // 2 + MARGIN
    width = 2 * MARGIN + (w.hi - w.lo) * UNIT
    height = baseline + MARGIN
    body = [
        f'<line class="axis" x1="{_x(w.lo, w.lo)}" y1="{baseline}" '
        f'x2="{_x(w.hi, w.lo)}" y2="{baseline}" stroke="#888"/>'
    ]
    for v in w.vertices():
        x = _x(v, w.lo)
        body.append(
            f'<line class="tick" x1="{x}" y1="{baseline - 4}" x2="{x}" '
            f'y2="{baseline + 4}" stroke="#444"/>'
        )
        body.append(
            f'<text class="label" x="{x}" y="{baseline + 18}" font-size="11" '
            f'text-anchor="middle" fill="#444">{v}</text>'
        )
    for a in arcs:
        x1, x2 = _x(a.left, w.lo), _x(a.right, w.lo)
        r = (x2 - x1) // 2
        body.append(
            f'<path class="arc" data-arc="{a.left},{a.right}" '
            f'd="M {x1} {baseline} A {r} {r} 0 0 1 {x2} {baseline}" '
            f'fill="none" stroke="#1c6fbd" stroke-width="2"/>'
        )
    cls = classify(family)
    for v in sorted(cls.left_fountains | cls.right_fountains):
        x = _x(v, w.lo)
        if w.lo <= v <= w.hi:
            kind = (
                "fountain"
                if v in cls.fountains
                else ("left-fountain" if v in cls.left_fountains else "right-fountain")
            )
            body.append(
                f'<text class="fountain" data-kind="{kind}" x="{x}" '
                f'y="{baseline - 8}" font-size="14" text-anchor="middle" '
                f'fill="#c0392b">*</text>'
            )
    return _svg(width, height, body, w.lo, baseline)


def _render_quiver(q: Quiver, w: Window) -> str:
    max_span = max((a.right - a.left for a in q.vertices), default=2)
    baseline = max_span * UNIT // 2 + MARGIN
    width = 2 * MARGIN + (w.hi - w.lo) * UNIT
    height = baseline + MARGIN
    marker = (
        '<defs><marker id="arrowhead" markerWidth="8" markerHeight="6" '
        'refX="8" refY="3" orient="auto"><path d="M 0 0 L 8 3 L 0 6 z" '
        'fill="#333"/></marker></defs>'
    )

    def pos(a: Arc) -> tuple[int, int]:
        x1, x2 = _x(a.left, w.lo), _x(a.right, w.lo)
        return (x1 + x2) // 2, baseline - (x2 - x1) // 2

    body = [marker]
    for u, v in q.arrows:
        (ux, uy), (vx, vy) = pos(u), pos(v)
        body.append(
            f'<line class="arrow" x1="{ux}" y1="{uy}" x2="{vx}" y2="{vy}" '
            f'stroke="#333" marker-end="url(#arrowhead)"/>'
        )
    for a in sorted(q.vertices):
        x, y = pos(a)
        body.append(
            f'<circle class="vertex" data-arc="{a.left},{a.right}" cx="{x}" '
            f'cy="{y}" r="5" fill="#1c6fbd"/>'
        )
        body.append(
            f'<text class="vertex-label" x="{x}" y="{y - 9}" font-size="10" '
            f'text-anchor="middle" fill="#333">({a.left},{a.right})</text>'
        )
    return _svg(width, height, body, w.lo, baseline)


def render_svg(subject: Union[ArcFamily, Quiver], w: Window) -> str:
    """Vector diagram of a family (arcs over the number line, fountains
    starred) or of a quiver (vertices at arc midpoints, directed edges)."""
    if isinstance(subject, ArcFamily):
        return _render_family(subject, w)
    if isinstance(subject, Quiver):
        return _render_quiver(subject, w)
    raise TypeError(f"cannot render {type(subject).__name__}")
