from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dextral.exactlin import (
    QQ,
    FieldError,
    FieldSpec,
    Fp,
    rref,
    span,
    subspace_contains,
    subspace_eq,
    subspace_leq,
    subspace_sum,
)

from .strategies import fractions, small_int

GF3 = FieldSpec.prime(3)


def test_rref_full_space():
    assert rref([(1, 1), (0, 1)]).basis == ((1, 0), (0, 1))


def test_rref_scales_to_unit_pivot():
    assert rref([(2, 4)]).basis == ((1, 2),)


def test_rref_over_gf3_drops_dependent_row():
    U = rref([(1, 1), (2, 2)], GF3)
    assert U.basis == ((1, 1),)
    assert U.dim == 1


def test_sum_of_coordinate_lines():
    e1, e2 = span(QQ, 2, [(1, 0)]), span(QQ, 2, [(0, 1)])
    assert subspace_sum(e1, e2) == span(QQ, 2, [(1, 0), (0, 1)])


def test_sum_is_idempotent():
    U = span(QQ, 3, [(1, 2, 3)])
    assert subspace_sum(U, U) == U


def test_sum_contains_difference():
    S = subspace_sum(span(QQ, 3, [(1, 1, 0)]), span(QQ, 3, [(0, 1, 1)]))
    assert S.dim == 2
    assert subspace_contains(S, (1, 0, -1))


def test_membership_and_order():
    e1 = span(QQ, 2, [(1, 0)])
    assert subspace_contains(e1, (3, 0))
    assert subspace_eq(span(QQ, 2, [(1, 2)]), span(QQ, 2, [(2, 4)]))
    assert not subspace_leq(e1, span(QQ, 2, [(0, 1)]))


def test_field_parse_and_json():
    assert FieldSpec.parse("rational") == QQ
    assert FieldSpec.parse("gf:5") == FieldSpec.prime(5)
    assert FieldSpec.from_json(GF3.to_json()) == GF3
    with pytest.raises((FieldError, ValueError)):
        FieldSpec.parse("gf:4")


def test_coercion_rejects_non_embedding_fraction():
    assert GF3.coerce(Fraction(1, 2)) == 2
    with pytest.raises(FieldError):
        GF3.coerce(Fraction(1, 3))


def test_mixing_characteristics_fails():
    with pytest.raises(FieldError):
        Fp(1, 3) + Fp(1, 5)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_fermat(p):
    F = FieldSpec.prime(p)
    for a in F.elements():
        assert a ** p == a


@given(fractions, fractions)
def test_rational_arithmetic_is_exact(a, c):
    assert (a + c) - c == a


@given(st.integers(1, 4), st.lists(st.lists(small_int, min_size=4, max_size=4), max_size=4), st.data())
@settings(max_examples=60)
def test_rref_is_canonical(k, rows, data):
    """Any other generating set of the same span gives the same basis."""
    U = rref(rows, QQ, 4)
    coeffs = data.draw(st.lists(st.lists(small_int, min_size=len(rows), max_size=len(rows)), max_size=k))
    extra = [tuple(sum(c * r[i] for c, r in zip(cs, rows)) for i in range(4)) for cs in coeffs]
    shuffled = list(reversed(rows)) + extra
    scaled = [tuple(3 * x for x in r) for r in shuffled]
    assert rref(scaled, QQ, 4).basis == U.basis


@given(
    st.sampled_from([QQ, FieldSpec.prime(2), GF3]),
    st.lists(st.lists(small_int, min_size=3, max_size=3), max_size=3),
    st.lists(st.lists(small_int, min_size=3, max_size=3), max_size=3),
)
@settings(max_examples=80)
def test_eq_iff_mutual_inclusion(F, a, b):
    U, V = rref(a, F, 3), rref(b, F, 3)
    assert subspace_eq(U, V) == (subspace_leq(U, V) and subspace_leq(V, U))
    assert subspace_leq(U, subspace_sum(U, V))
