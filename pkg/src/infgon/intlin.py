"""Exact feasibility of small linear systems over non-negative integers.

Everything downstream (orbit crossing, tail certification) reduces questions
about infinite arc families to systems of at most a handful of integer linear
inequalities in one or two non-negative unknowns.  This module decides such
systems exactly: no floats, no enumeration horizon that could miss solutions.
"""

from __future__ import annotations

from typing import Iterable, Optional

# A constraint (a, b, c) means  a*x + b*y <= c.
Constraint = tuple[int, int, int]


def floor_div(p: int, q: int) -> int:
    """floor(p / q) for any nonzero q (Python's // already floors)."""
    return p // q


def ceil_div(p: int, q: int) -> int:
    """ceil(p / q) for any nonzero q."""
    return -((-p) // q)


def feasible_point(
    constraints: Iterable[Constraint],
    x_max: Optional[int] = None,
    y_max: Optional[int] = None,
) -> Optional[tuple[int, int]]:
    """Least-x integer point (x, y) with x, y >= 0 satisfying all constraints.

    Returns the solution with minimal x (then minimal y), or None if the
    system is infeasible.  Optional x_max / y_max add upper bounds.

    Exactness: the constraint region plus x,y >= 0 is a pointed polyhedron,
    so any point in it is a convex combination of vertices plus a conic
    combination of at most two integral extreme rays.  Vertex coordinates
    are Cramer ratios bounded by 2*delta*gamma (delta = max |coefficient|,
    gamma = max |constant|, determinants are >= 1 in absolute value), and
    rounding the ray coefficients down to integers moves an integer solution
    by at most one ray vector per ray, each with entries <= delta.  Hence a
    feasible system has a solution with x <= 2*delta*gamma + 2*delta, and
    scanning x up to that bound with an exact y-interval check decides
    feasibility.
    """
    sys_: list[Constraint] = [(-1, 0, 0), (0, -1, 0)]
    sys_.extend(constraints)
    if x_max is not None:
        if x_max < 0:
            return None
        sys_.append((1, 0, x_max))
    if y_max is not None:
        if y_max < 0:
            return None
        sys_.append((0, 1, y_max))

    delta = max(1, max(max(abs(a), abs(b)) for a, b, _ in sys_))
    gamma = max(1, max(abs(c) for _, _, c in sys_))
    bound = 2 * delta * gamma + 2 * delta + 4
    if x_max is not None:
        bound = min(bound, x_max)

    for x in range(bound + 1):
        ylo = 0
        yhi: Optional[int] = y_max
        ok = True
        for a, b, c in sys_:
            rhs = c - a * x
            if b == 0:
                if rhs < 0:
                    ok = False
                    break
            elif b > 0:
                q = floor_div(rhs, b)
                if yhi is None or q < yhi:
                    yhi = q
            else:
                q = ceil_div(rhs, b)
                if q > ylo:
                    ylo = q
        if ok and (yhi is None or ylo <= yhi):
            return (x, ylo)
    return None
