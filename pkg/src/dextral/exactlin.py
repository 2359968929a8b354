"""Exact scalars (rationals, prime fields) and canonical subspaces.

Everything here is exact: rationals are :class:`fractions.Fraction`, prime
field elements are :class:`Fp`. Vectors are plain tuples of scalars.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union


class DimensionError(ValueError):
    """Vectors or subspaces of different ambient dimension were combined."""


class FieldError(ValueError):
    """Scalars from incompatible fields, or a value that does not embed."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Fp:
    """Residue class modulo a prime ``p``, stored in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other) -> int:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldError(f"cannot mix GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value, self.p)

    def inverse(self) -> Fp:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Fp(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * Fp(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(o, self.p) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return Fp(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, Fp]
Vec = tuple


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: ``FieldSpec()`` is Q, ``FieldSpec(p)`` is GF(p)."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @classmethod
    def rational(cls) -> FieldSpec:
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``"rational"``, ``"Q"`` or ``"gf:<p>"``."""
        t = text.strip().lower()
        if t in ("rational", "q", "qq"):
            return cls(0)
        if t.startswith("gf:"):
            return cls(int(t[3:]))
        if t.startswith("gf(") and t.endswith(")"):
            return cls(int(t[3:-1]))
        raise FieldError(f"unknown field {text!r}")

    @property
    def kind(self) -> str:
        return "rational" if self.p == 0 else "prime"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.p == 0 else Fp(0, self.p)

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.p == 0 else Fp(1, self.p)

    def __call__(self, value) -> Scalar:
        return self.coerce(value)

    def coerce(self, value) -> Scalar:
        """Map an int, Fraction, ``"a/b"`` string or scalar into this field."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.p == 0:
            if isinstance(value, Fp):
                raise FieldError(f"GF({value.p}) element is not rational")
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise FieldError(f"cannot coerce {value!r} into Q")
        if isinstance(value, Fp):
            if value.p != self.p:
                raise FieldError(f"GF({value.p}) element is not in GF({self.p})")
            return value
        if isinstance(value, int):
            return Fp(value, self.p)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldError(f"{value} does not reduce modulo {self.p}")
            return Fp(value.numerator, self.p) / value.denominator
        raise FieldError(f"cannot coerce {value!r} into GF({self.p})")

    def format(self, s: Scalar) -> str:
        return str(s)

    def elements(self) -> list[Scalar]:
        if self.p == 0:
            raise FieldError("Q is infinite")
        return [Fp(i, self.p) for i in range(self.p)]

    def __str__(self):
        return "Q" if self.p == 0 else f"GF({self.p})"

    def to_json(self) -> dict:
        if self.p == 0:
            return {"kind": "rational"}
        return {"kind": "prime", "p": self.p}

    @classmethod
    def from_json(cls, d: dict) -> FieldSpec:
        kind = d.get("kind")
        if kind == "rational":
            return cls(0)
        if kind == "prime":
            return cls(int(d["p"]))
        raise FieldError(f"unknown field kind {kind!r}")


QQ = FieldSpec(0)


# -- vectors -----------------------------------------------------------------

def zero_vector(F: FieldSpec, n: int) -> Vec:
    return (F.zero,) * n


def unit_vector(F: FieldSpec, n: int, i: int) -> Vec:
    v = [F.zero] * n
    v[i] = F.one
    return tuple(v)


def vec(F: FieldSpec, entries: Iterable) -> Vec:
    return tuple(F.coerce(x) for x in entries)


def vadd(u: Vec, v: Vec) -> Vec:
    if len(u) != len(v):
        raise DimensionError(f"lengths {len(u)} and {len(v)} differ")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    if len(u) != len(v):
        raise DimensionError(f"lengths {len(u)} and {len(v)} differ")
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: Scalar, v: Vec) -> Vec:
    return tuple(c * a for a in v)


def is_zero(v: Vec) -> bool:
    return not any(v)


# -- subspaces ---------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A coordinate subspace held by its reduced row echelon basis.

    Build instances with :func:`rref`; the constructor trusts its input.
    """

    field: FieldSpec
    ambient_dim: int
    basis: tuple[Vec, ...] = ()
    _pivots: tuple[int, ...] = field(default=(), compare=False, repr=False)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        if self._pivots or not self.basis:
            return self._pivots
        return tuple(next(i for i, x in enumerate(r) if x) for r in self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def zero(cls, F: FieldSpec, n: int) -> Subspace:
        return cls(F, n, ())

    @classmethod
    def full(cls, F: FieldSpec, n: int) -> Subspace:
        return cls(F, n, tuple(unit_vector(F, n, i) for i in range(n)), tuple(range(n)))

    def reduce(self, v: Vec) -> Vec:
        """Residual of ``v`` after clearing every pivot column."""
        if len(v) != self.ambient_dim:
            raise DimensionError(f"vector of length {len(v)} in ambient {self.ambient_dim}")
        w = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        w[j] = w[j] - c * row[j]
        return tuple(w)

    def __contains__(self, v: Vec) -> bool:
        return is_zero(self.reduce(v))

    def __le__(self, other: Subspace) -> bool:
        return subspace_leq(self, other)

    def __add__(self, other: Subspace) -> Subspace:
        return subspace_sum(self, other)

    def __str__(self):
        rows = ", ".join("(" + ",".join(str(x) for x in r) + ")" for r in self.basis)
        return f"span{{{rows}}}"


def rref(rows: Iterable[Sequence], F: FieldSpec = QQ, dim: int | None = None) -> Subspace:
    """Canonical subspace spanned by ``rows``.

    Pivots are taken at the first nonzero column scanning left to right, and
    the result is reduced, so equal spans give identical bases.
    """
    m = [[F.coerce(x) for x in r] for r in rows]
    if dim is None:
        if not m:
            raise DimensionError("cannot infer the ambient dimension of an empty row list")
        dim = len(m[0])
    for r in m:
        if len(r) != dim:
            raise DimensionError(f"row of length {len(r)} in ambient {dim}")
    pivots = []
    top = 0
    for col in range(dim):
        hit = next((i for i in range(top, len(m)) if m[i][col]), None)
        if hit is None:
            continue
        m[top], m[hit] = m[hit], m[top]
        inv = F.one / m[top][col]
        prow = [x * inv for x in m[top]]
        m[top] = prow
        for i in range(len(m)):
            if i != top:
                c = m[i][col]
                if c:
                    m[i] = [a - c * b for a, b in zip(m[i], prow)]
        pivots.append(col)
        top += 1
        if top == len(m):
            break
    return Subspace(F, dim, tuple(tuple(r) for r in m[:top]), tuple(pivots))


def span(F: FieldSpec, dim: int, vectors: Iterable[Sequence]) -> Subspace:
    return rref(list(vectors), F, dim)


def _check_ambient(U: Subspace, V: Subspace) -> None:
    if U.ambient_dim != V.ambient_dim:
        raise DimensionError(f"ambient dimensions {U.ambient_dim} and {V.ambient_dim} differ")
    if U.field != V.field:
        raise FieldError(f"subspaces over {U.field} and {V.field}")


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    _check_ambient(U, V)
    if not V.basis:
        return U
    if not U.basis:
        return V
    return rref(U.basis + V.basis, U.field, U.ambient_dim)


def subspace_contains(U: Subspace, v: Sequence) -> bool:
    return tuple(U.field.coerce(x) for x in v) in U


def subspace_leq(U: Subspace, V: Subspace) -> bool:
    _check_ambient(U, V)
    return all(r in V for r in U.basis)


def subspace_eq(U: Subspace, V: Subspace) -> bool:
    _check_ambient(U, V)
    return U.basis == V.basis


def format_scalar(s) -> str:
    """``"a/b"`` or ``"a"`` for rationals, the residue for GF(p)."""
    return str(s)
