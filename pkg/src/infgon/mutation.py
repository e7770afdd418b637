"""Cluster mutation: the unique exchange arc, the flipped family, and the
sides of the two exchange triangles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arcs import Arc, ArcFamily, Orbit, family_contains
from .triangulation import Quadrilateral, quadrilateral

__all__ = [
    "NotMember",
    "NotMutable",
    "ExchangeSides",
    "exchange_arc",
    "mutate",
    "exchange_sides",
]


class NotMember(ValueError):
    """The arc to mutate is not a member of the family."""


class NotMutable(ValueError):
    """The arc has no outer apex; the flip is undefined there."""


def _quad(family: ArcFamily, a: Arc) -> Quadrilateral:
    if not family_contains(family, a):
        raise NotMember(f"{a} is not a member")
    q = quadrilateral(family, a)
    if q.outer_apex is None:
        raise NotMutable(f"{a} has no outer apex; mutation undefined")
    return q


def exchange_arc(family: ArcFamily, a: Arc) -> Arc:
    """The other diagonal of the quadrangle around a; crosses a, never equals it."""
    q = _quad(family, a)
    lo, hi = sorted((q.inner_apex, q.outer_apex))
    return Arc(lo, hi)


def mutate(family: ArcFamily, a: Arc) -> ArcFamily:
    """The family with a replaced by its exchange arc.

    The exchange arc joins as a fresh single; a leaves through the removal
    set unless it was itself a single (then its orbit is dropped).
    """
    star = exchange_arc(family, a)
    orbits = list(family.orbits)
    removed = set(family.removed)
    singles = [o for o in orbits if o.count == 1 and o.base == a]
    if singles:
        orbits = [o for o in orbits if not (o.count == 1 and o.base == a)]
    else:
        removed.add(a)
    removed.discard(star)
    out = ArcFamily(tuple(orbits), frozenset(removed))
    if not family_contains(out, star):
        out = ArcFamily(tuple(orbits) + (Orbit(star),), frozenset(removed))
    return out


@dataclass(frozen=True)
class ExchangeSides:
    """Member-arc sides of the two triangles glued along the mutated arc.

    Boundary edges are omitted, so each set has at most two arcs.  The union
    is exactly the neighbourhood of the arc in the cluster quiver.
    """

    inner: frozenset[Arc]
    outer: frozenset[Arc]


def exchange_sides(family: ArcFamily, a: Arc) -> ExchangeSides:
    q = _quad(family, a)
    v = q.inner_apex
    inner = [
        side
        for side in ((a.left, v), (v, a.right))
        if side[1] - side[0] >= 2 and family_contains(family, Arc(*side))
    ]
    o = q.outer_apex
    if o < a.left:
        outer_pairs = [(o, a.left), (o, a.right)]
    else:
        outer_pairs = [(a.left, o), (a.right, o)]
    outer = [
        side
        for side in outer_pairs
        if side[1] - side[0] >= 2 and family_contains(family, Arc(*side))
    ]
    return ExchangeSides(
        frozenset(Arc(*s) for s in inner), frozenset(Arc(*s) for s in outer)
    )
