"""Arcs of the infinity-gon and symbolic infinite arc families.

An arc joins two non-neighbouring integers.  Infinite families are written
as finite lists of orbits (m + k*dl, n + k*dr) plus a finite removal set;
all predicates on families (membership, crossing, fountain classification)
are decided exactly from that description.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .intlin import Constraint, ceil_div, feasible_point, floor_div

__all__ = [
    "Arc",
    "Window",
    "Orbit",
    "ArcFamily",
    "Classification",
    "Valid",
    "InvalidArc",
    "SelfCrossing",
    "crosses",
    "scan_key",
    "scan_arcs",
    "family_contains",
    "arcs_in_window",
    "validate_family",
    "classify",
    "normalize",
    "translate_family",
    "family_crossing_arc",
]


@dataclass(frozen=True, order=True)
class Arc:
    """A diagonal (left, right) of the infinity-gon; requires left <= right - 2.

    The same pair doubles as the coordinate of an indecomposable object on
    the ZA-infinity quiver (see homcalc); the identification is the identity.
    """

    left: int
    right: int

    def __post_init__(self) -> None:
        if self.left > self.right - 2:
            raise ValueError(f"not an arc: ({self.left}, {self.right})")

    def translate(self, t: int) -> "Arc":
        return Arc(self.left + t, self.right + t)

    def __str__(self) -> str:
        return f"({self.left},{self.right})"


def crosses(a: Arc, b: Arc) -> bool:
    """Strict interleaving; arcs sharing an endpoint never cross."""
    return (a.left < b.left < a.right < b.right) or (
        b.left < a.left < b.right < a.right
    )


def scan_key(a: Arc) -> tuple[int, int, int]:
    """Deterministic witness order: (|left| + |right|, left, right) ascending."""
    return (abs(a.left) + abs(a.right), a.left, a.right)


@dataclass(frozen=True)
class Window:
    """Finite viewport [lo, hi] on the vertex line."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"bad window [{self.lo}, {self.hi}]")

    def vertices(self) -> range:
        return range(self.lo, self.hi + 1)

    def __contains__(self, v: int) -> bool:
        return self.lo <= v <= self.hi


def scan_arcs(w: Window) -> list[Arc]:
    """All arcs with both endpoints in w, in scan order."""
    out = [
        Arc(u, v)
        for u in w.vertices()
        for v in range(u + 2, w.hi + 1)
    ]
    out.sort(key=scan_key)
    return out


@dataclass(frozen=True)
class Orbit:
    """Linear family of arcs (m + k*dl, n + k*dr) for 0 <= k < count.

    count=None means infinite; count=1 encodes a single arc (steps unused).
    """

    base: Arc
    dl: int = 0
    dr: int = 0
    count: Optional[int] = 1

    def __post_init__(self) -> None:
        if self.count is not None and self.count < 1:
            raise ValueError("orbit count must be >= 1")
        if self.count != 1 and self.dl == 0 and self.dr == 0:
            raise ValueError("zero-step orbit must have count 1")

    @property
    def is_infinite(self) -> bool:
        return self.count is None

    def arc_at(self, k: int) -> Arc:
        if k < 0 or (self.count is not None and k >= self.count):
            raise IndexError(f"k={k} outside orbit range")
        return Arc(self.base.left + k * self.dl, self.base.right + k * self.dr)

    def solve(self, a: Arc) -> Optional[int]:
        """The unique k with arc_at(k) == a, or None."""
        k: Optional[int] = None
        for target, start, step in (
            (a.left, self.base.left, self.dl),
            (a.right, self.base.right, self.dr),
        ):
            if step == 0:
                if target != start:
                    return None
            else:
                q, r = divmod(target - start, step)
                if r:
                    return None
                if k is None:
                    k = q
                elif k != q:
                    return None
        if k is None:
            k = 0
        if k < 0 or (self.count is not None and k >= self.count):
            return None
        return k

    def first_invalid_k(self) -> Optional[int]:
        """Least k whose generated pair violates the arc condition, if any."""
        d = self.dr - self.dl
        if d >= 0:
            return None
        gap = self.base.right - self.base.left - 2
        k = floor_div(gap, -d) + 1
        if self.count is not None and k > self.count - 1:
            return None
        return k


@dataclass(frozen=True)
class ArcFamily:
    """Finite orbit list plus finite removal set; members = generated - removed."""

    orbits: tuple[Orbit, ...] = ()
    removed: frozenset[Arc] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "orbits", tuple(self.orbits))
        object.__setattr__(self, "removed", frozenset(self.removed))
        for a in self.removed:
            if not any(o.solve(a) is not None for o in self.orbits):
                raise ValueError(f"removed arc {a} is not generated by any orbit")


def family_contains(family: ArcFamily, a: Arc) -> bool:
    if a in family.removed:
        return False
    return any(o.solve(a) is not None for o in family.orbits)


def normalize(family: ArcFamily) -> tuple[Orbit, ...]:
    """Equivalent list of hole-free orbits (removals split orbits apart).

    The result generates exactly the member set; downstream decision
    procedures are stated for hole-free orbits only.
    """
    out: list[Orbit] = []
    for o in family.orbits:
        holes = sorted({k for a in family.removed if (k := o.solve(a)) is not None})
        start = 0
        for h in holes:
            if h > start:
                out.append(Orbit(o.arc_at(start), o.dl, o.dr, h - start))
            start = h + 1
        if o.count is None:
            out.append(Orbit(o.arc_at(start), o.dl, o.dr, None))
        elif start <= o.count - 1:
            out.append(Orbit(o.arc_at(start), o.dl, o.dr, o.count - start))
    return tuple(out)


def translate_family(family: ArcFamily, t: int) -> ArcFamily:
    return ArcFamily(
        tuple(Orbit(o.base.translate(t), o.dl, o.dr, o.count) for o in family.orbits),
        frozenset(a.translate(t) for a in family.removed),
    )


def _k_bounds(start: int, step: int, lo: int, hi: int):
    """Integer k range with lo <= start + k*step <= hi.

    Returns "all", None (empty), or an (klo, khi) pair.
    """
    if step == 0:
        return "all" if lo <= start <= hi else None
    if step > 0:
        return (ceil_div(lo - start, step), floor_div(hi - start, step))
    return (ceil_div(hi - start, step), floor_div(lo - start, step))


def arcs_in_window(family: ArcFamily, w: Window) -> list[Arc]:
    """Member arcs with both endpoints in w, sorted lexicographically."""
    found: set[Arc] = set()
    for o in family.orbits:
        klo, khi = 0, None if o.count is None else o.count - 1
        empty = False
        for start, step in ((o.base.left, o.dl), (o.base.right, o.dr)):
            b = _k_bounds(start, step, w.lo, w.hi)
            if b is None:
                empty = True
                break
            if b == "all":
                continue
            klo = max(klo, b[0])
            khi = b[1] if khi is None else min(khi, b[1])
        if empty:
            continue
        if khi is None:
            # both steps window-free only happens for count 1
            khi = klo
        for k in range(klo, khi + 1):
            a = o.arc_at(k)
            if a not in family.removed:
                found.add(a)
    return sorted(found)


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class Valid:
    pass


@dataclass(frozen=True)
class InvalidArc:
    orbit_index: int
    k: int


@dataclass(frozen=True)
class SelfCrossing:
    first: Arc
    second: Arc


ValidationResult = Union[Valid, InvalidArc, SelfCrossing]


def _under_constraints(A: Orbit, B: Orbit) -> list[Constraint]:
    """Constraints in (kA, kB) for A.left < B.left < A.right < B.right."""
    mA, nA, mB, nB = A.base.left, A.base.right, B.base.left, B.base.right
    return [
        (A.dl, -B.dl, mB - mA - 1),   # A.left  < B.left
        (-A.dr, B.dl, nA - mB - 1),   # B.left  < A.right
        (A.dr, -B.dr, nB - nA - 1),   # A.right < B.right
    ]


def _swap_vars(cons: list[Constraint]) -> list[Constraint]:
    return [(b, a, c) for a, b, c in cons]


def orbit_pair_crossing(
    A: Orbit, B: Orbit, same: bool = False
) -> Optional[tuple[int, int]]:
    """Least (kA, kB) witnessing a crossing between arcs of A and B.

    With same=True (A is B) only ordered pairs kA < kB are considered.
    Exact for infinite orbits: both interleavings become 2-variable integer
    linear systems decided by intlin.feasible_point.
    """
    xa = None if A.count is None else A.count - 1
    yb = None if B.count is None else B.count - 1
    systems = [_under_constraints(A, B), _swap_vars(_under_constraints(B, A))]
    if same:
        for s in systems:
            s.append((1, -1, -1))  # kA <= kB - 1
    best: Optional[tuple[int, int]] = None
    for s in systems:
        p = feasible_point(s, xa, yb)
        if p is not None and (best is None or p < best):
            best = p
    return best


def _least_k(system: list[tuple[int, int]], k_max: Optional[int]) -> Optional[int]:
    """Least k >= 0 (and <= k_max) with a*k <= c for every (a, c); exact."""
    klo = 0
    khi = k_max
    for a, c in system:
        if a == 0:
            if c < 0:
                return None
        elif a > 0:
            q = floor_div(c, a)
            if khi is None or q < khi:
                khi = q
        else:
            q = ceil_div(c, a)
            if q > klo:
                klo = q
    if khi is not None and klo > khi:
        return None
    return klo


def _orbit_crossing_arc(o: Orbit, c: Arc) -> Optional[int]:
    """Least k with crosses(o.arc_at(k), c), decided exactly."""
    m, n = o.base.left, o.base.right
    under = [
        (o.dl, c.left - m - 1),    # o.left  < c.left
        (-o.dr, n - c.left - 1),   # c.left  < o.right
        (o.dr, c.right - n - 1),   # o.right < c.right
    ]
    over = [
        (-o.dl, m - c.left - 1),   # c.left  < o.left
        (o.dl, c.right - m - 1),   # o.left  < c.right
        (-o.dr, n - c.right - 1),  # c.right < o.right
    ]
    xa = None if o.count is None else o.count - 1
    best: Optional[int] = None
    for s in (under, over):
        k = _least_k(s, xa)
        if k is not None and (best is None or k < best):
            best = k
    return best


def family_crossing_arc(norm_orbits: tuple[Orbit, ...], c: Arc) -> Optional[Arc]:
    """First member (orbit order, then increasing k) crossing c, or None.

    Takes hole-free orbits (see normalize); exact for infinite orbits.
    """
    for o in norm_orbits:
        k = _orbit_crossing_arc(o, c)
        if k is not None:
            return o.arc_at(k)
    return None


def validate_family(family: ArcFamily) -> ValidationResult:
    """Valid iff every generated pair is an arc and no two members cross.

    Failures are reported in deterministic scan order: orbit list order,
    then increasing k (witness pairs are least in (k1, k2)).
    """
    for i, o in enumerate(family.orbits):
        bad = o.first_invalid_k()
        if bad is not None:
            return InvalidArc(i, bad)
    norm = normalize(family)
    for i in range(len(norm)):
        for j in range(i, len(norm)):
            w = orbit_pair_crossing(norm[i], norm[j], same=(i == j))
            if w is not None:
                return SelfCrossing(norm[i].arc_at(w[0]), norm[j].arc_at(w[1]))
    return Valid()


# ---------------------------------------------------------------------------
# fountains


@dataclass(frozen=True)
class Classification:
    locally_finite: bool
    left_fountains: frozenset[int]
    right_fountains: frozenset[int]
    fountains: frozenset[int]


def classify(family: ArcFamily) -> Classification:
    """Fountain classification read off the orbit shapes.

    Only infinite orbits pinning one endpoint produce fountains; finite
    removals and orbits moving both endpoints never do.
    """
    rights = frozenset(
        o.base.left for o in family.orbits if o.is_infinite and o.dl == 0 and o.dr > 0
    )
    lefts = frozenset(
        o.base.right for o in family.orbits if o.is_infinite and o.dr == 0 and o.dl < 0
    )
    return Classification(
        locally_finite=not rights and not lefts,
        left_fountains=lefts,
        right_fountains=rights,
        fountains=lefts & rights,
    )
