import random

import pytest

from dextral import catalog
from dextral.algebra import Algebra, zero_algebra
from dextral.exactlin import QQ, FieldSpec, vscale
from dextral.identities import (
    ARITY,
    IDENTITIES,
    cyclic_relations,
    dextral_identity,
    evaluate_identity,
    is_antiassociative,
    is_anticommutative,
    is_associative,
    is_commutative,
    is_left_leibniz,
    is_lie,
    is_right_leibniz,
    jacobi,
    quadruple_identity,
)

GF2 = FieldSpec.prime(2)


def idempotent_line():
    return Algebra.from_names("e2", QQ, ("e",), {("e", "e"): {"e": 1}})


def test_zero_algebra_satisfies_everything():
    Z = zero_algebra()
    for fn in IDENTITIES.values():
        assert fn(Z).holds


def test_gamma1_not_anticommutative():
    rep = is_anticommutative(catalog.instantiate("gamma1"))
    assert not rep.holds and rep.violation.indices == (0, 0)


def test_anticommutativity_in_characteristic_two():
    """Over GF(2), e1 e2 = e2 e1 is antisymmetric but e1 e1 != 0 is not alternating."""
    A = Algebra.from_names("sq", GF2, ("a", "b"), {("a", "a"): {"b": 1}})
    assert not is_anticommutative(A).holds
    B = Algebra.from_names("ab", GF2, ("a", "b"), {("a", "b"): {"b": 1}, ("b", "a"): {"b": 1}})
    assert is_anticommutative(B).holds and is_commutative(B).holds


def test_lie7_over_gf3():
    A = catalog.instantiate("lie7_char3")
    assert is_anticommutative(A).holds
    assert is_lie(A).holds
    assert is_right_leibniz(A).holds and is_left_leibniz(A).holds
    assert dextral_identity(A).holds


def test_lie7_over_rationals_fails_jacobi_by_three_x7():
    A = catalog.instantiate("lie7_char3", field=QQ, enforce_characteristic=False)
    assert not is_lie(A).holds
    rep = jacobi(A)
    assert rep.violation.lhs == vscale(3, A.e("x7"))


def test_lnotr_not_antiassociative():
    assert not is_antiassociative(catalog.instantiate("lnotr")).holds


def test_idempotent_line():
    A = idempotent_line()
    assert is_associative(A).holds
    rep = is_right_leibniz(A)
    assert not rep.holds and rep.violation.lhs == A.e("e")


def test_catalog_is_right_leibniz():
    for entry, values, A in catalog.instances():
        assert is_right_leibniz(A).holds, A.name


def test_dextral_identity_examples():
    assert dextral_identity(catalog.instantiate("R1")).holds
    S2 = catalog.instantiate("S2")
    rep = dextral_identity(S2)
    assert not rep.holds
    assert rep.violation.names(S2) == ("x", "z", "z")
    assert rep.violation.lhs == vscale(-1, S2.e("x"))


def test_cyclic_and_quadruple():
    assert cyclic_relations(zero_algebra()).holds
    assert not cyclic_relations(catalog.instantiate("S3")).holds
    assert quadruple_identity(catalog.instantiate("lnotr")).holds


def test_identity_implies_cyclic_for_right_leibniz():
    for entry, values, A in catalog.instances():
        if dextral_identity(A).holds:
            assert cyclic_relations(A).holds, A.name
            assert quadruple_identity(A).holds, A.name


def _random_element(rng, A):
    return A.element(rng.randint(-3, 3) for _ in range(A.dim))


@pytest.mark.parametrize("entry_id", ["lnotr", "S2", "N7", "R3", "L1", "towers_n"])
def test_basis_check_soundness(entry_id):
    """A basis-level verdict agrees with 100 random element tuples."""
    A = catalog.instantiate(entry_id)
    rng = random.Random(entry_id)
    for name, arity in ARITY.items():
        holds = IDENTITIES[name](A).holds if name in IDENTITIES else jacobi(A).holds
        if not holds:
            continue
        for _ in range(100):
            lhs, rhs = evaluate_identity(A, name, tuple(_random_element(rng, A) for _ in range(arity)))
            assert lhs == rhs, (name, A.name)
