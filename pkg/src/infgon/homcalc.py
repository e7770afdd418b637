"""The coordinate model of the ZA-infinity quiver: suspension, Serre functor,
hammock regions, and Hom dimensions between indecomposables.

Coordinates (m, n) with m <= n - 2 name the indecomposables; the type is the
same integer pair used for arcs (the identification is the identity map).
Hom spaces have dimension 0 or 1, so only the dimension is computed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .arcs import Arc

Ind = Arc

__all__ = [
    "Ind",
    "Hammock",
    "MorphismKind",
    "Composition",
    "HomPreconditionError",
    "shift",
    "serre",
    "object_label",
    "hammock_contains",
    "hom_dim",
    "hom_dim_via_arcs",
    "morphism_kind",
    "composition_nonzero",
]


def shift(x: Ind, t: int) -> Ind:
    """t-fold suspension: coordinates drop by t on both axes."""
    return Arc(x.left - t, x.right - t)


def serre(x: Ind) -> Ind:
    """Serre functor = square of the suspension."""
    return shift(x, 2)


def object_label(j: int, r: int) -> Ind:
    """Coordinates of the j-th suspension of the width-r object: (-j-r-2, -j)."""
    if r < 0:
        raise ValueError("width r must be >= 0")
    return Arc(-j - r - 2, -j)


@dataclass(frozen=True)
class Hammock:
    """Region H^-(apex) or H^+(apex) of the coordinate plane, edges included.

    For apex (i, j):
      H^-  = { (m, n) : m <= i-1,  i+1 <= n <= j-1 }
      H^+  = { (m, n) : i+1 <= m <= j-1,  n >= j+1 }
    """

    apex: Ind
    sign: str  # "-" or "+"

    def __post_init__(self) -> None:
        if self.sign not in ("-", "+"):
            raise ValueError("hammock sign must be '-' or '+'")

    @classmethod
    def minus(cls, apex: Ind) -> "Hammock":
        return cls(apex, "-")

    @classmethod
    def plus(cls, apex: Ind) -> "Hammock":
        return cls(apex, "+")


def hammock_contains(h: Hammock, y: Ind) -> bool:
    i, j = h.apex.left, h.apex.right
    m, n = y.left, y.right
    if h.sign == "-":
        return m <= i - 1 and i + 1 <= n <= j - 1
    return i + 1 <= m <= j - 1 and n >= j + 1


def _backward(x: Ind, y: Ind) -> bool:
    """y in H^-(shift(x, 1)), inlined."""
    i, j = x.left - 1, x.right - 1
    return y.left <= i - 1 and i + 1 <= y.right <= j - 1


def _forward(x: Ind, y: Ind) -> bool:
    """y in H^+(shift(x, 1)), inlined."""
    i, j = x.left - 1, x.right - 1
    return i + 1 <= y.left <= j - 1 and y.right >= j + 1


def hom_dim(x: Ind, y: Ind) -> int:
    """dim Hom(x, y): 1 iff y lies in one of the two hammocks of shift(x, 1)."""
    return 1 if _forward(x, y) or _backward(x, y) else 0


def hom_dim_via_arcs(x: Ind, y: Ind) -> int:
    """dim Hom(x, y) through arc crossing: x crosses the arc of shift(y, -1).

    Deliberately independent of the hammock tests; the two implementations
    cross-validate each other.
    """
    p, q = y.left + 1, y.right + 1
    a, b = x.left, x.right
    return 1 if (a < p < b < q) or (p < a < q < b) else 0


class MorphismKind(enum.Enum):
    ZERO = "zero"
    FORWARD = "forward"
    BACKWARD = "backward"


def morphism_kind(x: Ind, y: Ind) -> MorphismKind:
    """Forward/backward split of nonzero morphisms (the regions are disjoint)."""
    if _forward(x, y):
        return MorphismKind.FORWARD
    if _backward(x, y):
        return MorphismKind.BACKWARD
    return MorphismKind.ZERO


class Composition(enum.Enum):
    NON_ZERO = "nonzero"
    UNDETERMINED = "undetermined"


class HomPreconditionError(ValueError):
    """Raised when composition is queried on a vanishing leg."""


def composition_nonzero(x: Ind, y: Ind, z: Ind) -> Composition:
    """Compose nonzero x -> y -> z.

    NON_ZERO exactly for all-forward chains (y, z forward from x and z
    forward from y); every other configuration is honestly UNDETERMINED.
    """
    if hom_dim(x, y) != 1 or hom_dim(y, z) != 1:
        raise HomPreconditionError("both legs must be nonzero morphisms")
    if _forward(x, y) and _forward(x, z) and _forward(y, z):
        return Composition.NON_ZERO
    return Composition.UNDETERMINED
