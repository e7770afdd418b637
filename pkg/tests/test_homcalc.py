"""Coordinate model: suspension, Serre functor, hammocks, Hom dimensions.

The window invariants here are the small versions of the acceptance
criteria; the acceptance module runs them at full size.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from infgon.arcs import Arc, crosses
from infgon.homcalc import (
    Composition,
    Hammock,
    HomPreconditionError,
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

A = Arc


def coords(lo, hi):
    return [A(m, n) for m in range(lo, hi - 1) for n in range(m + 2, hi + 1)]


def test_shift():
    assert shift(A(0, 2), 1) == A(-1, 1)
    assert shift(A(0, 2), 0) == A(0, 2)
    assert shift(A(0, 2), -2) == A(2, 4)


def test_serre():
    assert serre(A(0, 2)) == A(-2, 0)
    assert serre(A(-1, 4)) == A(-3, 2)
    x = A(5, 9)
    assert serre(shift(x, -2)) == x


def test_object_label():
    assert object_label(0, 0) == A(-2, 0)
    assert object_label(2, 0) == A(-4, -2)
    m, n = 3, 7
    assert object_label(-n, n - m - 2) == A(m, n)
    with pytest.raises(ValueError):
        object_label(0, -1)


def test_hammock_contains():
    assert hammock_contains(Hammock.minus(A(0, 2)), A(-2, 1))
    assert hammock_contains(Hammock.plus(A(0, 2)), A(1, 3))
    assert not hammock_contains(Hammock.minus(A(0, 2)), A(0, 4))
    with pytest.raises(ValueError):
        Hammock(A(0, 2), "x")


def test_hom_dim_examples():
    assert hom_dim(A(0, 2), A(0, 2)) == 1  # identity
    assert hom_dim(A(0, 2), A(0, 3)) == 1
    assert hom_dim(A(0, 2), A(1, 3)) == 0


def test_hom_dim_via_arcs_examples():
    assert hom_dim_via_arcs(A(0, 2), A(0, 3)) == 1
    assert hom_dim_via_arcs(A(0, 2), A(-1, 1)) == 0  # identical arcs after shift
    assert hom_dim_via_arcs(A(0, 2), A(-3, 0)) == 1
    # definition check: crossing of x with the shifted target
    x, y = A(0, 2), A(0, 3)
    assert hom_dim_via_arcs(x, y) == int(crosses(x, shift(y, -1)))


def test_morphism_kind_examples():
    assert morphism_kind(A(0, 2), A(0, 3)) is MorphismKind.FORWARD
    assert morphism_kind(A(0, 2), A(-3, 0)) is MorphismKind.BACKWARD
    assert morphism_kind(A(0, 2), A(5, 9)) is MorphismKind.ZERO


def test_composition_nonzero():
    # all-forward chain along the ray out of (0,2)
    assert (
        composition_nonzero(A(0, 2), A(0, 3), A(0, 4)) is Composition.NON_ZERO
    )
    # (1,4) is not forward-reachable from (0,2): hom vanishes, chain breaks
    assert hom_dim(A(0, 2), A(1, 4)) == 0
    assert (
        composition_nonzero(A(0, 2), A(0, 3), A(1, 4)) is Composition.UNDETERMINED
    )
    assert (
        composition_nonzero(A(0, 2), A(-3, 0), A(-3, 1)) is Composition.UNDETERMINED
    )
    # identity second leg: the all-forward hypothesis still holds (regions
    # include their edges), so the lemma decides it
    assert (
        composition_nonzero(A(0, 2), A(0, 3), A(0, 3)) is Composition.NON_ZERO
    )
    with pytest.raises(HomPreconditionError):
        composition_nonzero(A(0, 2), A(1, 3), A(2, 4))


WINDOW = coords(-7, 7)


def test_hom_is_zero_one_and_oracle_agreement():
    for x in WINDOW:
        for y in WINDOW:
            d = hom_dim(x, y)
            assert d in (0, 1)
            assert d == hom_dim_via_arcs(x, y)


def test_serre_duality_window():
    for x in WINDOW:
        for y in WINDOW:
            assert hom_dim(x, y) == hom_dim(y, serre(x))


def test_corollary_symmetry_window():
    # y in H(shift x) iff x in H(shift^-1 y)
    for x in WINDOW:
        for y in WINDOW:
            fwd = hom_dim(x, y) == 1
            back = hammock_contains(Hammock.minus(shift(y, -1)), x) or hammock_contains(
                Hammock.plus(shift(y, -1)), x
            )
            assert fwd == back


def test_region_duality_window():
    for x in WINDOW:
        for y in WINDOW:
            plus = hammock_contains(Hammock.plus(shift(x, 1)), y)
            dual = hammock_contains(Hammock.minus(shift(y, 1)), serre(x))
            assert plus == dual
            minus = hammock_contains(Hammock.minus(shift(x, 1)), y)
            dual2 = hammock_contains(Hammock.plus(shift(y, 1)), serre(x))
            assert minus == dual2


def test_morphism_kind_consistent_with_hom():
    for x in WINDOW:
        for y in WINDOW:
            assert (morphism_kind(x, y) is MorphismKind.ZERO) == (hom_dim(x, y) == 0)


def test_composition_consistency_window():
    small = coords(-4, 4)
    for x in small:
        for y in small:
            if hom_dim(x, y) != 1:
                continue
            for z in small:
                if hom_dim(y, z) != 1:
                    continue
                if composition_nonzero(x, y, z) is Composition.NON_ZERO:
                    assert hom_dim(x, z) == 1


coord_st = st.builds(
    lambda m, span: A(m, m + span), st.integers(-50, 50), st.integers(2, 30)
)


@given(coord_st, coord_st)
def test_serre_duality_property(x, y):
    assert hom_dim(x, y) == hom_dim(y, serre(x))


@given(coord_st, st.integers(-20, 20))
def test_shift_inverts(x, t):
    assert shift(shift(x, t), -t) == x
