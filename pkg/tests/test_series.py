import pytest

from dextral import catalog
from dextral.algebra import span_names, zero_algebra
from dextral.decide import decide_dextral
from dextral.exactlin import subspace_leq
from dextral.series import (
    PreconditionError,
    SeriesKind,
    derived_left_product_mismatches,
    is_left_nilpotent,
    is_nilpotent,
    is_right_nilpotent,
    is_solvable,
    series,
    verify_derived_is_left,
    verify_derived_left_product,
    verify_left_nilpotency_bound,
)


def test_lnotr_predicates():
    A = catalog.instantiate("lnotr")
    assert is_left_nilpotent(A) == (True, 3)
    assert not is_right_nilpotent(A)[0]
    assert is_solvable(A)[0]


def test_lprime_left_chain():
    A = catalog.instantiate("Lprime")
    t = series(A, SeriesKind.LEFT)
    assert t.term(2) == span_names(A, "x", "y")
    assert t.term(3) == span_names(A, "y")
    assert t.term(4) == span_names(A, "y")
    assert not t.terminal_is_zero
    assert is_solvable(A)[0]


def test_s2_solvable_not_left_nilpotent():
    A = catalog.instantiate("S2")
    assert is_solvable(A)[0] and not is_left_nilpotent(A)[0]


def test_term_indexing():
    t = series(catalog.instantiate("lnotr"), "left")
    with pytest.raises(IndexError):
        t.term(0)
    assert t.term(50).dim == 0


def test_catalog_series_invariants():
    for entry, values, A in catalog.instances():
        traces = {k: series(A, k) for k in SeriesKind}
        for t in traces.values():
            assert t.stabilized_at <= A.dim + 1
            assert all(subspace_leq(b, a) for a, b in zip(t.terms, t.terms[1:]))
        for n in range(1, A.dim + 2):
            assert subspace_leq(traces[SeriesKind.DERIVED].term(n), traces[SeriesKind.LEFT].term(n))
        rn, ln = is_right_nilpotent(A)[0], is_left_nilpotent(A)[0]
        assert not rn or ln, A.name
        assert rn == is_nilpotent(A)[0], A.name
        if decide_dextral(A).yes:
            assert is_solvable(A)[0] == ln, A.name


def test_derived_left_product_examples():
    R1 = catalog.instantiate("R1")
    assert verify_derived_left_product(R1, 3, 4, n_min=2)
    A = zero_algebra()
    assert verify_derived_left_product(A, 4, 6)


def test_derived_left_product_fails_at_n_equal_one():
    """[z,x] = z: [L[2], L] = span{z} but L(3) = 0."""
    A = catalog.instantiate("lnotr")
    assert derived_left_product_mismatches(A, 3, 4) == [(2, 1)]
    assert not verify_derived_left_product(A, 3, 4)
    assert verify_derived_left_product(A, 3, 4, n_min=2)


def test_derived_is_left():
    assert verify_derived_is_left(catalog.instantiate("lnotr"), 3)
    for i in (1, 2, 11, 17, 22):
        assert verify_derived_is_left(catalog.instantiate(f"N{i}"), 3)
    assert verify_derived_is_left(zero_algebra(), 3)


def test_left_nilpotency_bound():
    assert verify_left_nilpotency_bound(catalog.instantiate("lnotr"))
    assert verify_left_nilpotency_bound(catalog.instantiate("R2"))
    assert verify_left_nilpotency_bound(zero_algebra())


def test_preconditions():
    with pytest.raises(PreconditionError):
        verify_left_nilpotency_bound(catalog.instantiate("S2"))
    from dextral.algebra import Algebra
    from dextral.exactlin import QQ

    line = Algebra.from_names("e2", QQ, ("e",), {("e", "e"): {"e": 1}})
    with pytest.raises(PreconditionError):
        verify_derived_is_left(line, 2)
