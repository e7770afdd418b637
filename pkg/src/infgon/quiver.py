"""Cluster quivers (the AR quiver of a windowed family) and
Fomin-Zelevinsky mutation on arrow multisets.

Arrow convention on each face (v0, v1, v2):
(v0,v1) -> (v1,v2) -> (v0,v2) -> (v0,v1), keeping only arrows whose both
ends are member arcs (boundary edges carry no vertex).  The paper's figures
pin the quiver down only up to simultaneous arrow reversal; this convention
reproduces the alternating line of the leapfrog example and is covariant
under FZ mutation, which is all downstream code relies on.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .arcs import Arc, ArcFamily, Window, arcs_in_window
from .triangulation import triangles_in_window

__all__ = [
    "Quiver",
    "cluster_quiver",
    "fz_mutate",
    "quivers_equal_on",
    "relabel_vertex",
    "to_dot",
]

Arrow = tuple[Arc, Arc]


@dataclass(frozen=True)
class Quiver:
    """Finite directed multigraph on arcs; arrows stored sorted for determinism."""

    vertices: frozenset[Arc]
    arrows: tuple[Arrow, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows)))
        for u, v in self.arrows:
            if u == v:
                raise ValueError(f"loop at {u}")
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"arrow endpoint off the vertex set: {u} -> {v}")


def cluster_quiver(family: ArcFamily, w: Window) -> Quiver:
    """Quiver on the member arcs inside w, arrows from the face convention."""
    vertices = frozenset(arcs_in_window(family, w))
    members = set(vertices)
    arrows: list[Arrow] = []
    for v0, v1, v2 in triangles_in_window(family, w):
        sides = [(v0, v1), (v1, v2), (v0, v2)]
        cyc = [(0, 1), (1, 2), (2, 0)]
        for i, j in cyc:
            (a1, a2), (b1, b2) = sides[i], sides[j]
            if a2 - a1 >= 2 and b2 - b1 >= 2:
                u, v = Arc(a1, a2), Arc(b1, b2)
                if u in members and v in members:
                    arrows.append((u, v))
    return Quiver(vertices, tuple(arrows))


def fz_mutate(q: Quiver, v: Arc) -> Quiver:
    """Fomin-Zelevinsky mutation at v on a loop-free, 2-cycle-free quiver:
    compose every path through v, reverse arrows incident to v, then cancel
    2-cycles in maximal pairs.
    """
    if v not in q.vertices:
        raise ValueError(f"{v} is not a vertex")
    arrows = Counter(q.arrows)
    new: Counter[Arrow] = Counter()
    into = Counter()
    outof = Counter()
    for (u, w), mult in arrows.items():
        if w == v:
            into[u] += mult
        if u == v:
            outof[w] += mult
    for (u, w), mult in arrows.items():
        if u == v or w == v:
            new[(w, u)] += mult
        else:
            new[(u, w)] += mult
    for u, mu in into.items():
        for w, mw in outof.items():
            if u != w:
                new[(u, w)] += mu * mw
            # u == w would be a 2-cycle through v, excluded by precondition
    for u, w in list(new):
        if u < w and (w, u) in new:
            c = min(new[(u, w)], new[(w, u)])
            new[(u, w)] -= c
            new[(w, u)] -= c
    flat: list[Arrow] = []
    for arrow, mult in new.items():
        flat.extend([arrow] * mult)
    return Quiver(q.vertices, tuple(flat))


def quivers_equal_on(q1: Quiver, q2: Quiver, keep: Iterable[Arc]) -> bool:
    """Equality of the induced sub-multigraphs on the vertex set keep."""
    ks = frozenset(keep)
    if q1.vertices & ks != q2.vertices & ks:
        return False
    sub1 = Counter((u, v) for u, v in q1.arrows if u in ks and v in ks)
    sub2 = Counter((u, v) for u, v in q2.arrows if u in ks and v in ks)
    return sub1 == sub2


def relabel_vertex(q: Quiver, old: Arc, new: Arc) -> Quiver:
    """Rename one vertex, keeping all arrows (new must not collide)."""
    if old not in q.vertices:
        raise ValueError(f"{old} is not a vertex")
    if new in q.vertices and new != old:
        raise ValueError(f"{new} already a vertex")
    sub = lambda a: new if a == old else a
    return Quiver(
        frozenset(sub(a) for a in q.vertices),
        tuple((sub(u), sub(v)) for u, v in q.arrows),
    )


def to_dot(q: Quiver) -> str:
    """Graphviz DOT rendering with deterministic ordering."""
    name = lambda a: f'"{a.left},{a.right}"'
    lines = ["digraph quiver {"]
    for a in sorted(q.vertices):
        lines.append(f"  {name(a)};")
    for u, v in q.arrows:
        lines.append(f"  {name(u)} -> {name(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
