"""Multilinear identities decided by evaluation on basis tuples.

Every identity here is multilinear in its arguments, so holding on all basis
tuples is equivalent to holding on all elements. Tuples are scanned in
lexicographic order and the first failure is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from .algebra import Algebra
from .exactlin import Vec, vadd


@dataclass(frozen=True)
class Violation:
    indices: tuple[int, ...]
    lhs: Vec
    rhs: Vec

    def names(self, A: Algebra) -> tuple[str, ...]:
        return tuple(A.basis[i] for i in self.indices)


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    holds: bool
    violation: Violation | None = None

    def __bool__(self):
        return self.holds


def _scan(
    A: Algebra, name: str, tuples: Iterator[tuple[int, ...]], sides: Callable[..., tuple[Vec, Vec]]
) -> IdentityReport:
    for t in tuples:
        lhs, rhs = sides(*t)
        if lhs != rhs:
            return IdentityReport(name, False, Violation(t, lhs, rhs))
    return IdentityReport(name, True)


def _neg(v: Vec) -> Vec:
    return tuple(-x for x in v)


def _pairs(n: int):
    return ((i, j) for i in range(n) for j in range(i, n))


def is_commutative(A: Algebra) -> IdentityReport:
    return _scan(A, "commutative", _pairs(A.dim), lambda i, j: (A.product(i, j), A.product(j, i)))


def is_anticommutative(A: Algebra) -> IdentityReport:
    """``x x = 0`` for every ``x``, via ``e_i e_i = 0`` and ``e_i e_j + e_j e_i = 0``.

    The polarized form is valid in characteristic 2, where ``e_i e_j =
    -e_j e_i`` alone would not force squares to vanish.
    """

    def sides(i, j):
        if i == j:
            return A.product(i, i), A.zero
        return vadd(A.product(i, j), A.product(j, i)), A.zero

    return _scan(A, "anticommutative", _pairs(A.dim), sides)


def _left_assoc(A: Algebra, i: int, j: int, k: int) -> Vec:
    return A.mul(A.product(i, j), A.e(k))


def is_associative(A: Algebra) -> IdentityReport:
    return _scan(
        A,
        "associative",
        product(range(A.dim), repeat=3),
        lambda i, j, k: (_left_assoc(A, i, j, k), A.triple(i, j, k)),
    )


def is_antiassociative(A: Algebra) -> IdentityReport:
    return _scan(
        A,
        "antiassociative",
        product(range(A.dim), repeat=3),
        lambda i, j, k: (_left_assoc(A, i, j, k), _neg(A.triple(i, j, k))),
    )


def is_right_leibniz(A: Algebra) -> IdentityReport:
    """``[a,[b,c]] = [[a,b],c] - [[a,c],b]``."""

    def sides(i, j, k):
        rhs = tuple(p - q for p, q in zip(_left_assoc(A, i, j, k), _left_assoc(A, i, k, j)))
        return A.triple(i, j, k), rhs

    return _scan(A, "right_leibniz", product(range(A.dim), repeat=3), sides)


def is_left_leibniz(A: Algebra) -> IdentityReport:
    """``[a,[b,c]] = [[a,b],c] + [b,[a,c]]``."""

    def sides(i, j, k):
        return A.triple(i, j, k), vadd(_left_assoc(A, i, j, k), A.triple(j, i, k))

    return _scan(A, "left_leibniz", product(range(A.dim), repeat=3), sides)


def jacobi(A: Algebra) -> IdentityReport:
    def sides(i, j, k):
        s = vadd(vadd(A.triple(i, j, k), A.triple(j, k, i)), A.triple(k, i, j))
        return s, A.zero

    return _scan(A, "jacobi", product(range(A.dim), repeat=3), sides)


def is_lie(A: Algebra) -> IdentityReport:
    rep = is_anticommutative(A)
    if not rep.holds:
        return IdentityReport("lie", False, rep.violation)
    rep = jacobi(A)
    return IdentityReport("lie", rep.holds, rep.violation)


def dextral_identity(A: Algebra) -> IdentityReport:
    """``x(yz) + y(xz) = 0`` on all basis triples.

    When this holds, ``a(bc) = 0`` forces ``b(ac) = -a(bc) = 0``.
    """
    return _scan(
        A,
        "dextral_identity",
        product(range(A.dim), repeat=3),
        lambda i, j, k: (vadd(A.triple(i, j, k), A.triple(j, i, k)), A.zero),
    )


def cyclic_relations(A: Algebra) -> IdentityReport:
    """The sign chain for dextral symmetric right Leibniz algebras.

    ``[x,[y,z]] = [y,[z,x]] = [z,[x,y]] = -[x,[z,y]] = -[y,[x,z]] = -[z,[y,x]]``.
    A violation reports the first term of the chain that differs from
    ``[x,[y,z]]``.
    """

    def sides(i, j, k):
        first = A.triple(i, j, k)
        for other in (
            A.triple(j, k, i),
            A.triple(k, i, j),
            _neg(A.triple(i, k, j)),
            _neg(A.triple(j, i, k)),
            _neg(A.triple(k, j, i)),
        ):
            if other != first:
                return first, other
        return first, first

    return _scan(A, "cyclic_relations", product(range(A.dim), repeat=3), sides)


def quadruple_identity(A: Algebra) -> IdentityReport:
    """``[[x,y],[z,w]] = [x,[y,[z,w]]]`` on all basis quadruples."""
    n = A.dim

    def sides(i, j, k, l):
        zw = A.product(k, l)
        lhs = A.mul(A.product(i, j), zw)
        rhs = A.left_basis_mul(i, A.left_basis_mul(j, zw))
        return lhs, rhs

    return _scan(A, "quadruple_identity", product(range(n), repeat=4), sides)


def all_triples_zero(A: Algebra) -> bool:
    """Whether ``a(bc) = 0`` for all elements (checked on basis triples)."""
    return not A.triple_products


IDENTITIES: dict[str, Callable[[Algebra], IdentityReport]] = {
    "commutative": is_commutative,
    "anticommutative": is_anticommutative,
    "associative": is_associative,
    "antiassociative": is_antiassociative,
    "right_leibniz": is_right_leibniz,
    "left_leibniz": is_left_leibniz,
    "lie": is_lie,
    "dextral_identity": dextral_identity,
    "cyclic_relations": cyclic_relations,
    "quadruple_identity": quadruple_identity,
}


def evaluate_identity(A: Algebra, name: str, args: tuple[Vec, ...]) -> tuple[Vec, Vec]:
    """Both sides of an identity at arbitrary elements, for spot checks."""
    m = A.mul
    if name == "commutative":
        x, y = args
        return m(x, y), m(y, x)
    if name == "anticommutative":
        (x,) = args
        return m(x, x), A.zero
    if name == "associative":
        x, y, z = args
        return m(m(x, y), z), m(x, m(y, z))
    if name == "antiassociative":
        x, y, z = args
        return m(m(x, y), z), _neg(m(x, m(y, z)))
    if name == "right_leibniz":
        x, y, z = args
        return m(x, m(y, z)), tuple(p - q for p, q in zip(m(m(x, y), z), m(m(x, z), y)))
    if name == "left_leibniz":
        x, y, z = args
        return m(x, m(y, z)), vadd(m(m(x, y), z), m(y, m(x, z)))
    if name == "jacobi":
        x, y, z = args
        return vadd(vadd(m(x, m(y, z)), m(y, m(z, x))), m(z, m(x, y))), A.zero
    if name == "dextral_identity":
        x, y, z = args
        return vadd(m(x, m(y, z)), m(y, m(x, z))), A.zero
    if name == "quadruple_identity":
        x, y, z, w = args
        return m(m(x, y), m(z, w)), m(x, m(y, m(z, w)))
    raise KeyError(name)


ARITY = {
    "commutative": 2,
    "anticommutative": 1,
    "associative": 3,
    "antiassociative": 3,
    "right_leibniz": 3,
    "left_leibniz": 3,
    "jacobi": 3,
    "dextral_identity": 3,
    "quadruple_identity": 4,
}

