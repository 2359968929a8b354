"""The four descending ideal series and the nilpotency predicates.

For a bracket ``[ , ]`` on ``L``:

* right series  ``L<1> = L``,  ``L<n+1> = [L<n>, L]``
* left series   ``L(1) = L``,  ``L(n+1) = [L, L(n)]``
* derived       ``L[1] = L``,  ``L[n+1] = [L[n], L[n]]``
* full          ``L^1 = L``,   ``L^(n+1) = sum over i of [L^i, L^(n+1-i)]``

Each series is iterated until two consecutive terms agree. In finite
dimension the chain is descending, so this happens by index ``dim + 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import Algebra, full_space, subspace_product, zero_space
from .decide import decide_dextral
from .exactlin import Subspace, subspace_sum
from .identities import is_right_leibniz


class SeriesKind(str, enum.Enum):
    RIGHT = "right"
    LEFT = "left"
    DERIVED = "derived"
    FULL = "full"


class PreconditionError(ValueError):
    """A check was asked of an algebra outside its hypotheses."""


@dataclass(frozen=True)
class SeriesTrace:
    kind: SeriesKind
    terms: tuple[Subspace, ...]
    stabilized_at: int

    @property
    def terminal_is_zero(self) -> bool:
        return self.terms[-1].dim == 0

    def term(self, n: int) -> Subspace:
        """Term ``n`` (1-based); past stabilization the chain is constant."""
        if n < 1:
            raise IndexError("series are indexed from 1")
        return self.terms[min(n, len(self.terms)) - 1]

    @property
    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]

    @property
    def zero_index(self) -> int | None:
        """Smallest ``n`` with term ``n`` zero."""
        for n, t in enumerate(self.terms, start=1):
            if t.dim == 0:
                return n
        return None


def series(A: Algebra, kind: SeriesKind | str) -> SeriesTrace:
    kind = SeriesKind(kind)
    L = full_space(A)
    terms = [L]
    while True:
        cur = terms[-1]
        if kind is SeriesKind.RIGHT:
            nxt = subspace_product(A, cur, L)
        elif kind is SeriesKind.LEFT:
            nxt = subspace_product(A, L, cur)
        elif kind is SeriesKind.DERIVED:
            nxt = subspace_product(A, cur, cur)
        else:
            m = len(terms)  # computing L^(m+1)
            nxt = zero_space(A)
            for i in range(1, m + 1):
                nxt = subspace_sum(nxt, subspace_product(A, terms[i - 1], terms[m - i]))
        terms.append(nxt)
        if nxt == cur:
            return SeriesTrace(kind, tuple(terms), len(terms) - 1)


def _predicate(A: Algebra, kind: SeriesKind) -> tuple[bool, int | None]:
    t = series(A, kind)
    return t.terminal_is_zero, t.zero_index


def is_solvable(A: Algebra) -> tuple[bool, int | None]:
    return _predicate(A, SeriesKind.DERIVED)


def is_left_nilpotent(A: Algebra) -> tuple[bool, int | None]:
    return _predicate(A, SeriesKind.LEFT)


def is_right_nilpotent(A: Algebra) -> tuple[bool, int | None]:
    return _predicate(A, SeriesKind.RIGHT)


def is_nilpotent(A: Algebra) -> tuple[bool, int | None]:
    return _predicate(A, SeriesKind.FULL)


def _require_dextral_leibniz(A: Algebra) -> None:
    if not is_right_leibniz(A).holds:
        raise PreconditionError(f"{A.name} is not right Leibniz")
    if not decide_dextral(A).yes:
        raise PreconditionError(f"{A.name} is not proved dextral symmetric")


def derived_left_product_mismatches(
    A: Algebra, m_max: int, n_max: int, n_min: int = 1
) -> list[tuple[int, int]]:
    """Pairs ``(m, n)`` where ``[L[m], L(n)] != L(2^(m-1) + n)``."""
    left = series(A, SeriesKind.LEFT)
    derived = series(A, SeriesKind.DERIVED)
    bad = []
    for m in range(1, m_max + 1):
        for n in range(n_min, n_max + 1):
            lhs = subspace_product(A, derived.term(m), left.term(n))
            if lhs != left.term(2 ** (m - 1) + n):
                bad.append((m, n))
    return bad


def verify_derived_left_product(
    A: Algebra, m_max: int, n_max: int, check_hypotheses: bool = True, n_min: int = 1
) -> bool:
    """``[L[m], L(n)] = L(2^(m-1) + n)`` for ``1 <= m <= m_max``, ``n_min <= n <= n_max``.

    With ``n = 1`` and ``m >= 2`` this can fail in a dextral symmetric
    algebra: for ``[z,x] = z`` one has ``[L[2], L] = span{z}`` while
    ``L(3) = 0``. From ``n = 2`` on it holds.
    """
    if check_hypotheses:
        _require_dextral_leibniz(A)
    return not derived_left_product_mismatches(A, m_max, n_max, n_min)


def verify_derived_is_left(A: Algebra, m_max: int, check_hypotheses: bool = True) -> bool:
    """``L[m] = L(2^(m-1))`` for ``1 <= m <= m_max``."""
    if check_hypotheses:
        _require_dextral_leibniz(A)
    left = series(A, SeriesKind.LEFT)
    derived = series(A, SeriesKind.DERIVED)
    return all(derived.term(m) == left.term(2 ** (m - 1)) for m in range(1, m_max + 1))


def verify_left_nilpotency_bound(A: Algebra, check_hypotheses: bool = True) -> bool:
    """``L(dim + 1) = 0``."""
    if check_hypotheses:
        _require_dextral_leibniz(A)
    return series(A, SeriesKind.LEFT).term(A.dim + 1).dim == 0
