"""Exact combinatorics of triangulations of the infinity-gon and the
2-Calabi-Yau category they classify: arcs, hammocks, maximality and
functorial-finiteness certificates, quadrilateral flips, and quiver mutation.
"""

from .arcs import (
    Arc,
    ArcFamily,
    Classification,
    InvalidArc,
    Orbit,
    SelfCrossing,
    Valid,
    Window,
    arcs_in_window,
    classify,
    crosses,
    family_contains,
    translate_family,
    validate_family,
)
from .homcalc import (
    Composition,
    Hammock,
    Ind,
    MorphismKind,
    composition_nonzero,
    hammock_contains,
    hom_dim,
    hom_dim_via_arcs,
    morphism_kind,
    object_label,
    serre,
    shift,
)

__version__ = "0.1.0"
