import random
from itertools import product

import pytest

from dextral import catalog
from dextral.algebra import Algebra, full_space, span_names, zero_algebra, zero_space
from dextral.decide import (
    BudgetExceeded,
    Reason,
    Status,
    Witness,
    cb_condition,
    decide_dextral,
    exhaustive_oracle,
    is_symmetric_ideal,
    search_grid,
)
from dextral.exactlin import QQ, FieldError, FieldSpec, is_zero
from dextral.identities import dextral_identity, is_right_leibniz

GF2, GF3, GF5 = (FieldSpec.prime(p) for p in (2, 3, 5))


def test_r1_all_triples_zero():
    v = decide_dextral(catalog.instantiate("R1"))
    assert v.status is Status.YES and v.reason is Reason.ALL_TRIPLES_ZERO


def test_n7_witness():
    A = catalog.instantiate("N7")
    v = decide_dextral(A)
    assert v.no
    w = v.witness
    assert (w.a, w.b, w.c) == (A.e("y"), A.e("x"), A.e("x"))
    assert is_zero(w.abc)
    assert w.bac == tuple(-x for x in A.e("w"))
    assert w.validate(A)


def test_s2_witness():
    A = catalog.instantiate("S2")
    w = decide_dextral(A).witness
    assert (w.a, w.b, w.c) == (A.e("x"), A.e("z"), A.e("z"))


def test_zero_algebra():
    assert decide_dextral(zero_algebra()).yes


def test_lie7_via_identity():
    v = decide_dextral(catalog.instantiate("lie7_char3"))
    assert v.yes and v.reason is Reason.DEXTRAL_IDENTITY


def test_forged_witness_rejected():
    A = catalog.instantiate("S2")
    w = decide_dextral(A).witness
    forged = Witness(w.b, w.a, w.c, w.abc, w.bac)
    assert not forged.validate(A)


def test_symmetric_ideal_examples():
    A = catalog.instantiate("N17")
    assert is_symmetric_ideal(A, full_space(A)).yes
    assert is_symmetric_ideal(A, span_names(A, "w")).yes
    for name in ("S2", "N7", "R1"):
        B = catalog.instantiate(name)
        assert is_symmetric_ideal(B, zero_space(B)).status == decide_dextral(B).status


def test_lifted_witnesses_are_valid_modulo_ideal():
    from dextral.verification import Context, quotient_cases

    refuted = 0
    for A, I in quotient_cases(Context()):
        v = is_symmetric_ideal(A, I)
        if v.no:
            refuted += 1
            assert v.witness.validate(A, I)
    assert refuted > 0


def test_oracle_examples():
    assert exhaustive_oracle(catalog.instantiate("gamma1", field=GF2)).yes
    pattern = Algebra.from_names("s2pat", GF3, ("x", "z"), {("x", "z"): {"x": 1}, ("z", "x"): {"x": -1}})
    v = exhaustive_oracle(pattern)
    assert v.no and v.witness.validate(pattern)
    assert exhaustive_oracle(zero_algebra(GF5)).yes


def test_oracle_budget():
    A = catalog.instantiate("N7", field=GF5)
    with pytest.raises(BudgetExceeded):
        exhaustive_oracle(A, budget=1000)
    with pytest.raises(ValueError):
        exhaustive_oracle(catalog.instantiate("N7"))


def test_leibniz_exactness_catalog():
    """For right Leibniz tables a Yes verdict is the same as the identity holding."""
    for entry, values, A in catalog.instances():
        assert decide_dextral(A).yes == dextral_identity(A).holds, A.name


@pytest.mark.parametrize("F", [GF3, GF5])
def test_leibniz_exactness_against_oracle(F):
    for entry, values, A in catalog.instances():
        if A.dim > 3:
            continue
        try:
            B = A.over(F)
        except FieldError:
            continue
        assert exhaustive_oracle(B).yes == dextral_identity(B).holds, B.name


def random_table(rng, F, n, density=0.35):
    products = {}
    for i in range(n):
        for j in range(n):
            if rng.random() < density:
                products[(i, j)] = tuple(F.coerce(rng.randrange(F.p)) for _ in range(n))
    return Algebra(f"rand{n}", F, tuple(f"e{k}" for k in range(n)), products)


@pytest.mark.parametrize("seed", range(40))
def test_random_tables_match_oracle(seed):
    """Arbitrary (mostly non-Leibniz) tables: every verdict agrees with brute force."""
    rng = random.Random(seed)
    F = rng.choice([GF2, GF3])
    A = random_table(rng, F, rng.randint(1, 3))
    v = decide_dextral(A)
    o = exhaustive_oracle(A)
    assert v.status == o.status
    if v.no:
        assert v.witness.validate(A)


def test_grid_radius_controls_search():
    A = catalog.instantiate("S2")
    assert search_grid(A, bound=0) is None
    w = search_grid(A, bound=1)
    assert w is not None and w.validate(A)


def test_cb_condition_matches_antiassociativity_on_lie7():
    assert cb_condition(catalog.instantiate("lie7_char3"))


def rank_one_table(F):
    """``xy = l(x) m(y) u`` with ``l = (1, 0)``, ``m = (1, 1)``.

    ``a(bc) = l(a) l(b) m(c) u`` is symmetric in ``a, b``, so the algebra is
    dextral symmetric, yet it is neither right Leibniz nor (anti)commutative.
    """
    return Algebra.from_names("rank1", F, ("u", "v"), {("u", "u"): {"u": 1}, ("u", "v"): {"u": 1}})


def test_unknown_is_honest_over_rationals():
    A = rank_one_table(QQ)
    assert not is_right_leibniz(A).holds
    assert not dextral_identity(A).holds
    v = decide_dextral(A, witness_bound=2)
    assert v.status is Status.UNKNOWN


def test_same_table_over_finite_field_is_settled():
    v = decide_dextral(rank_one_table(GF3))
    assert v.yes and v.reason is Reason.EXHAUSTIVE


def naive_cb(A):
    """CB condition with x, y, z all running over every element."""
    elems = list(product(A.field.elements(), repeat=A.dim))
    for x in elems:
        for y in elems:
            if not is_zero(A.mul(x, y)):
                continue
            for z in elems:
                if not is_zero(A.mul(A.mul(x, z), y)):
                    return False
    return True


@pytest.mark.parametrize("seed", range(30))
def test_cb_condition_against_naive_enumeration(seed):
    rng = random.Random(1000 + seed)
    F = rng.choice([GF2, GF3])
    A = random_table(rng, F, rng.randint(1, 2), density=0.8)
    assert cb_condition(A) == naive_cb(A)
