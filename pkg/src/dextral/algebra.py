"""Finite-dimensional algebras given by structure constants."""

from __future__ import annotations

from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

from .exactlin import (
    QQ,
    DimensionError,
    FieldError,
    FieldSpec,
    Subspace,
    Vec,
    is_zero,
    rref,
    unit_vector,
    vadd,
    zero_vector,
)


class NotAnIdealError(ValueError):
    pass


class Algebra:
    """An algebra over an exact field, stored as sparse structure constants.

    ``products`` maps a pair of basis indices ``(i, j)`` to the coordinate
    vector of ``e_i e_j``. Pairs that are absent multiply to zero.
    """

    def __init__(
        self,
        name: str,
        field: FieldSpec,
        basis: Sequence[str],
        products: Mapping[tuple[int, int], Sequence] | None = None,
        notes: Sequence[str] = (),
    ):
        basis = tuple(basis)
        if len(set(basis)) != len(basis):
            raise ValueError(f"basis names must be distinct: {basis}")
        self.name = name
        self.field = field
        self.basis = basis
        self.dim = len(basis)
        self.notes = tuple(notes)
        table = {}
        for (i, j), v in (products or {}).items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise DimensionError(f"product index ({i}, {j}) outside dimension {self.dim}")
            if len(v) != self.dim:
                raise DimensionError(f"product e{i}e{j} has length {len(v)}, expected {self.dim}")
            v = tuple(field.coerce(x) for x in v)
            if not is_zero(v):
                table[(i, j)] = v
        self._table = dict(sorted(table.items()))
        self._left = [dict() for _ in range(self.dim)]
        for (i, j), v in self._table.items():
            self._left[i][j] = v

    @classmethod
    def from_names(
        cls,
        name: str,
        field: FieldSpec,
        basis: Sequence[str],
        products: Mapping[tuple[str, str], Mapping[str, object]],
        notes: Sequence[str] = (),
    ) -> Algebra:
        """Build from ``{("x", "y"): {"z": 1, "w": "-1/2"}}`` style data."""
        idx = {b: k for k, b in enumerate(basis)}
        table = {}
        for (l, r), value in products.items():
            if l not in idx or r not in idx:
                raise ValueError(f"unknown basis element in product [{l},{r}]")
            v = [field.zero] * len(basis)
            for target, coeff in value.items():
                if target not in idx:
                    raise ValueError(f"unknown basis element {target!r}")
                v[idx[target]] = v[idx[target]] + field.coerce(coeff)
            key = (idx[l], idx[r])
            if key in table:
                table[key] = vadd(table[key], tuple(v))
            else:
                table[key] = tuple(v)
        return cls(name, field, basis, table, notes)

    # -- elements ------------------------------------------------------------

    def index(self, name: str | int) -> int:
        if isinstance(name, int):
            return name
        try:
            return self.basis.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not a basis element of {self.name}") from None

    def e(self, name: str | int) -> Vec:
        """Basis element by name or index."""
        return unit_vector(self.field, self.dim, self.index(name))

    def element(self, coords: Iterable) -> Vec:
        v = tuple(self.field.coerce(x) for x in coords)
        if len(v) != self.dim:
            raise DimensionError(f"element of length {len(v)} in algebra of dimension {self.dim}")
        return v

    def combo(self, **coeffs) -> Vec:
        """Element from named coefficients, e.g. ``A.combo(x=1, y=-2)``."""
        v = [self.field.zero] * self.dim
        for name, c in coeffs.items():
            v[self.index(name)] = self.field.coerce(c)
        return tuple(v)

    @property
    def zero(self) -> Vec:
        return zero_vector(self.field, self.dim)

    def _check(self, v: Sequence) -> None:
        if len(v) != self.dim:
            raise DimensionError(f"element of length {len(v)} in algebra of dimension {self.dim}")

    # -- products ------------------------------------------------------------

    @property
    def products(self) -> dict[tuple[int, int], Vec]:
        """Nonzero basis products, keyed by index pair."""
        return dict(self._table)

    def product(self, i: int, j: int) -> Vec:
        return self._table.get((i, j)) or self.zero

    def structure_constants(self) -> list[list[Vec]]:
        return [[self.product(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def mul(self, a: Sequence, b: Sequence) -> Vec:
        self._check(a)
        self._check(b)
        out = list(self.zero)
        for (i, j), v in self._table.items():
            ai = a[i]
            if not ai:
                continue
            bj = b[j]
            if not bj:
                continue
            c = ai * bj
            for k, x in enumerate(v):
                if x:
                    out[k] = out[k] + c * x
        return tuple(out)

    def left_basis_mul(self, i: int, v: Sequence) -> Vec:
        """``e_i v`` using only the nonzero products with left factor ``e_i``."""
        out = list(self.zero)
        for m, w in self._left[i].items():
            c = v[m]
            if c:
                for k, x in enumerate(w):
                    if x:
                        out[k] = out[k] + c * x
        return tuple(out)

    @cached_property
    def triple_products(self) -> dict[tuple[int, int, int], Vec]:
        """Nonzero ``e_i (e_j e_k)`` keyed by ``(i, j, k)``."""
        out = {}
        for (j, k), v in self._table.items():
            for i in range(self.dim):
                w = self.left_basis_mul(i, v)
                if not is_zero(w):
                    out[(i, j, k)] = w
        return dict(sorted(out.items()))

    def triple(self, i: int, j: int, k: int) -> Vec:
        return self.triple_products.get((i, j, k)) or self.zero

    def triple_right(self, a: Sequence, b: Sequence, c: Sequence) -> Vec:
        """``a (b c)``, the triple product used by the dextral condition."""
        return self.mul(a, self.mul(b, c))

    # -- conversions -----------------------------------------------------------

    def over(self, field: FieldSpec) -> Algebra:
        """The same table with coefficients mapped into ``field``.

        Raises :class:`FieldError` when a coefficient does not embed, e.g. a
        denominator divisible by ``p`` or a GF(p) table sent to Q.
        """
        if field == self.field:
            return self
        if self.field.p != 0 and field.p != self.field.p:
            raise FieldError(f"cannot transport a {self.field} table to {field}")
        return Algebra(self.name, field, self.basis, self._table, self.notes)

    def renamed(self, name: str) -> Algebra:
        return Algebra(name, self.field, self.basis, self._table, self.notes)

    def same_table(self, other: Algebra) -> bool:
        return self.field == other.field and self.dim == other.dim and self._table == other._table

    def is_abelian(self) -> bool:
        return not self._table

    def __repr__(self):
        return f"Algebra({self.name!r}, {self.field}, dim={self.dim}, nnz={len(self._table)})"

    def describe(self) -> str:
        """Nonzero brackets in ``[x,y]=...`` notation."""
        parts = []
        for (i, j), v in self._table.items():
            parts.append(f"[{self.basis[i]},{self.basis[j]}]={format_element(self, v)}")
        return ", ".join(parts) if parts else "(abelian)"


def format_element(A: Algebra, v: Sequence) -> str:
    terms = []
    for name, c in zip(A.basis, v):
        if not c:
            continue
        s = str(c)
        if s == "1":
            terms.append(name)
        elif s == "-1":
            terms.append("-" + name)
        else:
            terms.append(f"{s}*{name}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def multiply(A: Algebra, a: Sequence, b: Sequence) -> Vec:
    return A.mul(a, b)


def triple_right(A: Algebra, a: Sequence, b: Sequence, c: Sequence) -> Vec:
    return A.triple_right(a, b, c)


def _check_subspace(A: Algebra, U: Subspace) -> None:
    if U.ambient_dim != A.dim:
        raise DimensionError(f"subspace of ambient {U.ambient_dim} in algebra of dimension {A.dim}")
    if U.field != A.field:
        raise FieldError(f"subspace over {U.field} in algebra over {A.field}")


def full_space(A: Algebra) -> Subspace:
    return Subspace.full(A.field, A.dim)


def zero_space(A: Algebra) -> Subspace:
    return Subspace.zero(A.field, A.dim)


def span_of(A: Algebra, vectors: Iterable[Sequence]) -> Subspace:
    return rref(list(vectors), A.field, A.dim)


def span_names(A: Algebra, *names: str) -> Subspace:
    return span_of(A, [A.e(n) for n in names])


def subspace_product(A: Algebra, U: Subspace, V: Subspace) -> Subspace:
    """Span of all products ``u v`` with ``u`` in ``U`` and ``v`` in ``V``."""
    _check_subspace(A, U)
    _check_subspace(A, V)
    return span_of(A, (A.mul(u, v) for u in U.basis for v in V.basis))


def is_ideal(A: Algebra, I: Subspace) -> bool:
    _check_subspace(A, I)
    for u in I.basis:
        for k in range(A.dim):
            e = A.e(k)
            if A.mul(u, e) not in I or A.mul(e, u) not in I:
                return False
    return True


def is_subalgebra(A: Algebra, U: Subspace) -> bool:
    _check_subspace(A, U)
    return all(A.mul(u, v) in U for u in U.basis for v in U.basis)


def ideal_closure(A: Algebra, vectors: Iterable[Sequence]) -> Subspace:
    """Smallest two-sided ideal containing ``vectors``."""
    I = span_of(A, vectors)
    while True:
        grown = span_of(
            A,
            list(I.basis)
            + [A.mul(u, A.e(k)) for u in I.basis for k in range(A.dim)]
            + [A.mul(A.e(k), u) for u in I.basis for k in range(A.dim)],
        )
        if grown == I:
            return I
        I = grown


def subalgebra_closure(A: Algebra, vectors: Iterable[Sequence]) -> Subspace:
    """Smallest subalgebra containing ``vectors``."""
    U = span_of(A, vectors)
    while True:
        grown = span_of(A, list(U.basis) + [A.mul(u, v) for u in U.basis for v in U.basis])
        if grown == U:
            return U
        U = grown


def subalgebra(A: Algebra, U: Subspace, name: str | None = None) -> Algebra:
    """The subalgebra ``U`` as an algebra in its own right.

    Coordinates are read off the pivot columns of ``U``'s echelon basis.
    """
    _check_subspace(A, U)
    if not is_subalgebra(A, U):
        raise ValueError("subspace is not closed under multiplication")
    piv = U.pivots
    table = {}
    for a, u in enumerate(U.basis):
        for b, v in enumerate(U.basis):
            w = A.mul(u, v)
            if not is_zero(w):
                table[(a, b)] = tuple(w[p] for p in piv)
    names = tuple(f"u{k + 1}" for k in range(U.dim))
    return Algebra(name or f"{A.name}|sub", A.field, names, table)


class QuotientMap:
    """Projection ``A -> A/I`` and a section back to coset representatives.

    The quotient basis is the set of non-pivot coordinates of ``I``.
    """

    def __init__(self, A: Algebra, I: Subspace):
        self.source = A
        self.ideal = I
        piv = set(I.pivots)
        self.free = tuple(k for k in range(A.dim) if k not in piv)

    def project(self, v: Sequence) -> Vec:
        r = self.ideal.reduce(tuple(v))
        return tuple(r[k] for k in self.free)

    def lift(self, u: Sequence) -> Vec:
        out = list(self.source.zero)
        for k, c in zip(self.free, u):
            out[k] = c
        return tuple(out)

    __call__ = project


def quotient(A: Algebra, I: Subspace) -> tuple[Algebra, QuotientMap]:
    """Quotient algebra ``A/I`` with its projection."""
    _check_subspace(A, I)
    if not is_ideal(A, I):
        raise NotAnIdealError(f"{I} is not a two-sided ideal of {A.name}")
    pi = QuotientMap(A, I)
    table = {}
    for a, i in enumerate(pi.free):
        for b, j in enumerate(pi.free):
            w = pi.project(A.product(i, j))
            if not is_zero(w):
                table[(a, b)] = w
    names = tuple(A.basis[k] for k in pi.free)
    Q = Algebra(f"{A.name}/I", A.field, names, table)
    return Q, pi


def direct_sum(A: Algebra, B: Algebra, name: str | None = None) -> Algebra:
    """Block-diagonal sum; basis names get ``_1`` / ``_2`` suffixes."""
    if A.field != B.field:
        raise FieldError(f"direct sum of algebras over {A.field} and {B.field}")
    n = A.dim + B.dim
    table = {}
    for (i, j), v in A.products.items():
        table[(i, j)] = tuple(v) + zero_vector(A.field, B.dim)
    for (i, j), v in B.products.items():
        table[(A.dim + i, A.dim + j)] = zero_vector(A.field, A.dim) + tuple(v)
    names = tuple(f"{b}_1" for b in A.basis) + tuple(f"{b}_2" for b in B.basis)
    assert len(names) == n
    return Algebra(name or f"{A.name}+{B.name}", A.field, names, table)


def zero_algebra(field: FieldSpec = QQ) -> Algebra:
    return Algebra("0", field, ())


def from_function(
    name: str, field: FieldSpec, basis: Sequence[str], rule: Callable[[int, int], Sequence]
) -> Algebra:
    """Tabulate ``rule(i, j)`` on all basis pairs."""
    n = len(basis)
    return Algebra(name, field, basis, {(i, j): rule(i, j) for i in range(n) for j in range(n)})
