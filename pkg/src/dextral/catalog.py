"""Multiplication tables of small right Leibniz algebras, with expectations.

Each entry stores its nonzero brackets in ``[x,y]=z`` notation (possibly as
a function of parameters), the admissible parameter values, and the
properties the classification asserts for it. Every expected property
carries a ``claims`` string stating where the value comes from.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence, Union

from .algebra import Algebra
from .exactlin import QQ, FieldError, FieldSpec


class UnknownEntryError(KeyError):
    pass


class DomainError(ValueError):
    """A parameter value outside the entry's declared domain."""


# -- bracket notation ----------------------------------------------------------

_TERM = re.compile(r"([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?([A-Za-z]\w*)")


def parse_brackets(text: str) -> dict[tuple[str, str], dict[str, Fraction]]:
    """Parse ``"[x,y]=z; [y,y]=-z+2*w"`` into nested dicts."""
    out: dict[tuple[str, str], dict[str, Fraction]] = {}
    for item in text.split(";"):
        item = item.strip()
        if not item:
            continue
        m = re.fullmatch(r"\[\s*(\w+)\s*,\s*(\w+)\s*\]\s*=\s*(.+)", item)
        if not m:
            raise ValueError(f"cannot parse bracket {item!r}")
        left, right, rhs = m.groups()
        rhs = rhs.replace(" ", "").replace("+-", "-").replace("--", "+")
        pos = 0
        value: dict[str, Fraction] = {}
        while pos < len(rhs):
            t = _TERM.match(rhs, pos)
            if not t or t.end() == pos:
                raise ValueError(f"cannot parse term in {rhs!r}")
            sign, coeff, name = t.groups()
            c = Fraction(coeff) if coeff else Fraction(1)
            if sign == "-":
                c = -c
            value[name] = value.get(name, Fraction(0)) + c
            pos = t.end()
        key = (left, right)
        if key in out:
            raise ValueError(f"bracket [{left},{right}] given twice")
        out[key] = value
    return out


# -- entries -------------------------------------------------------------------

@dataclass(frozen=True)
class Param:
    name: str
    kind: str  # "rational" | "finite" | "integer"
    excluded: tuple[Fraction, ...] = ()
    values: tuple[Fraction, ...] = ()
    minimum: int | None = None
    default: Fraction = Fraction(0)
    samples: tuple[Fraction, ...] = ()

    def admits(self, v: Fraction) -> bool:
        if self.kind == "rational":
            return v not in self.excluded
        if self.kind == "finite":
            return v in self.values
        if self.kind == "integer":
            return v.denominator == 1 and (self.minimum is None or v >= self.minimum)
        raise ValueError(self.kind)

    def sample(self, grid: Sequence[int] | None = None) -> list[Fraction]:
        """Admissible sample values: ``grid`` for rational domains, else the declared set."""
        if self.kind == "rational":
            grid = range(-2, 3) if grid is None else grid
            return [Fraction(g) for g in grid if self.admits(Fraction(g))]
        if self.kind == "finite":
            return list(self.values)
        return list(self.samples)

    def describe(self) -> str:
        if self.kind == "rational":
            if self.excluded:
                return f"{self.name} in Q minus {{{', '.join(map(str, self.excluded))}}}"
            return f"{self.name} in Q"
        if self.kind == "finite":
            return f"{self.name} in {{{', '.join(map(str, self.values))}}}"
        return f"{self.name} integer >= {self.minimum}"


def rational(name: str, excluded: Sequence[int] = (), default: int = 0) -> Param:
    return Param(name, "rational", excluded=tuple(Fraction(e) for e in excluded), default=Fraction(default))


def finite(name: str, values: Sequence[int], default: int | None = None) -> Param:
    vals = tuple(Fraction(v) for v in values)
    return Param(name, "finite", values=vals, default=vals[0] if default is None else Fraction(default))


@dataclass(frozen=True)
class Expected:
    dextral: bool
    solvable: bool
    left_nilpotent: bool
    right_nilpotent: bool
    left_index: int | None = None
    nilradical: str | None = None
    claims: Mapping[str, str] = field(default_factory=dict)


Products = Union[str, Callable[..., str]]


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    label: str
    basis: tuple[str, ...] | Callable[..., tuple[str, ...]]
    products: Products
    expected: Expected
    params: tuple[Param, ...] = ()
    default_field: FieldSpec = QQ
    characteristic: int | None = None
    group: str = ""
    notes: tuple[str, ...] = ()

    @property
    def dim(self) -> int | None:
        """Fixed dimension, or ``None`` when the dimension is a parameter."""
        return None if callable(self.basis) else len(self.basis)

    def param_grid(self, grid: Sequence[int] | None = None) -> list[dict[str, Fraction]]:
        """Cartesian product of the sampled parameter values."""
        combos: list[dict[str, Fraction]] = [{}]
        for p in self.params:
            combos = [dict(c, **{p.name: v}) for c in combos for v in p.sample(grid)]
        return combos

    def resolve(self, params: Mapping[str, object] | None) -> dict[str, Fraction]:
        params = dict(params or {})
        out = {}
        for p in self.params:
            raw = params.pop(p.name, p.default)
            try:
                v = Fraction(raw) if not isinstance(raw, str) else Fraction(raw.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise DomainError(f"{self.id}: bad value {raw!r} for {p.name}") from exc
            if not p.admits(v):
                raise DomainError(f"{self.id}: {p.name}={v} outside {p.describe()}")
            out[p.name] = v
        if params:
            raise DomainError(f"{self.id}: unknown parameters {sorted(params)}")
        return out

    def table_text(self, values: Mapping[str, Fraction]) -> str:
        if callable(self.products):
            return self.products(*(values[p.name] for p in self.params))
        return self.products


def _nilpotent_expect(index: int, claim: str, dextral_claim: str) -> Expected:
    return Expected(
        dextral=True,
        solvable=True,
        left_nilpotent=True,
        right_nilpotent=True,
        left_index=index,
        claims={
            "dextral": dextral_claim,
            "right_nilpotent": claim,
            "solvable": "right nilpotent Leibniz algebras are solvable",
            "left_nilpotent": "right nilpotency implies left nilpotency",
            "left_index": "L(3) = 0 and the algebra is not abelian, so L(2) != 0",
        },
    )


_XY = ("x", "y")
_XYZ = ("x", "y", "z")
_XYZW = ("x", "y", "z", "w")

_THREE_DIM = "3-dim right nilpotent Leibniz algebras are dextral symmetric (L(3) = 0)"
_FOUR_NIL = "4-dim right nilpotent list; all but N7-N10 have L(3) = 0"
_FOUR_NIL_NO = "N7-N10: [y,[x,x]] = 0 but [x,[y,x]] != 0"


def _n(i: int, products: Products, params=(), dextral=True, notes=()) -> CatalogEntry:
    if dextral:
        exp = _nilpotent_expect(3, "listed among 4-dim right nilpotent Leibniz algebras", _FOUR_NIL)
    else:
        exp = Expected(
            dextral=False,
            solvable=True,
            left_nilpotent=True,
            right_nilpotent=True,
            claims={
                "dextral": _FOUR_NIL_NO,
                "right_nilpotent": "listed among 4-dim right nilpotent Leibniz algebras",
                "solvable": "right nilpotent Leibniz algebras are solvable",
                "left_nilpotent": "right nilpotency implies left nilpotency",
            },
        )
    return CatalogEntry(
        f"N{i}", f"N{i}", _XYZW, products, exp, tuple(params), group="nilpotent4", notes=tuple(notes)
    )


def _towers_basis(n) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, int(n) + 1))


def _towers_products(n) -> str:
    n = int(n)
    return "; ".join(f"[x{i},x{n}]=x{i}" for i in range(1, n))


_LIE7 = (
    "[x1,x2]=x4; [x1,x3]=x5; [x2,x3]=x6; [x1,x6]=x7; [x2,x5]=-x7; [x3,x4]=x7; "
    "[x2,x1]=-x4; [x3,x1]=-x5; [x3,x2]=-x6; [x6,x1]=-x7; [x5,x2]=x7; [x4,x3]=-x7"
)

_LEFT_IDX3 = "left nilpotent with index of left nilpotency equal to 3"
_SOLVABLE4 = "4-dim solvable Leibniz algebra"

ENTRIES: tuple[CatalogEntry, ...] = (
    CatalogEntry(
        "lnotr", "[z,x]=z", _XYZ, "[z,x]=z",
        Expected(
            dextral=True, solvable=True, left_nilpotent=True, right_nilpotent=False, left_index=3,
            claims={
                "dextral": "left nilpotent, not right nilpotent example; dextral symmetric but not anti-associative",
                "left_nilpotent": "left nilpotent but not right nilpotent",
                "right_nilpotent": "left nilpotent but not right nilpotent",
                "solvable": "dextral symmetric and solvable, not right nilpotent",
                "left_index": "L(2) = span{z}, L(3) = [L, z] = 0",
            },
        ),
        group="leibniz-examples",
    ),
    CatalogEntry(
        "Lprime", "L'", _XYZ, "[x,z]=x; [y,z]=y; [z,y]=-y",
        Expected(
            dextral=False, solvable=True, left_nilpotent=False, right_nilpotent=False,
            claims={
                "solvable": "L'[3] = 0",
                "left_nilpotent": "solvable but not left nilpotent",
                "right_nilpotent": "not left nilpotent, hence not right nilpotent",
                "dextral": "dextral symmetric Leibniz algebras are solvable iff left nilpotent",
            },
        ),
        group="leibniz-examples",
    ),
    CatalogEntry(
        "gamma1", "gamma_1", _XY, "[x,x]=y",
        _nilpotent_expect(
            3, "2-dim non-abelian right nilpotent Leibniz algebra",
            "all products [a,[b,c]] vanish in gamma_1",
        ),
        group="nilpotent2",
    ),
    CatalogEntry("mu1", "mu_1", _XYZ, "[x,x]=z", _nilpotent_expect(3, _THREE_DIM, _THREE_DIM), group="nilpotent3"),
    CatalogEntry("mu2", "mu_2", _XYZ, "[x,y]=z; [y,x]=-z", _nilpotent_expect(3, _THREE_DIM, _THREE_DIM), group="nilpotent3"),
    CatalogEntry(
        "mu3", "mu_3(alpha)", _XYZ, lambda alpha: f"[x,x]=z; [y,y]={alpha}*z; [x,y]=z",
        _nilpotent_expect(3, _THREE_DIM, _THREE_DIM), (rational("alpha"),), group="nilpotent3",
        notes=("parameter domain not stated; taken as all of Q",),
    ),
    CatalogEntry("mu4", "mu_4", _XYZ, "[y,x]=z; [x,y]=z", _nilpotent_expect(3, _THREE_DIM, _THREE_DIM), group="nilpotent3"),
    CatalogEntry("mu5", "mu_5", _XYZ, "[x,x]=y; [y,x]=z", _nilpotent_expect(3, _THREE_DIM, _THREE_DIM), group="nilpotent3"),
    _n(1, "[x,x]=y; [y,x]=z; [z,x]=w"),
    _n(2, "[x,x]=z; [x,y]=w; [y,x]=z; [z,x]=w"),
    _n(3, "[x,x]=z; [y,x]=z; [z,x]=w"),
    _n(4, lambda alpha: f"[x,x]=z; [x,y]={alpha}*w; [y,x]=z; [y,y]=w; [z,x]=w", (finite("alpha", (0, 1)),)),
    _n(5, "[x,x]=z; [x,y]=w; [z,x]=w"),
    _n(6, "[x,x]=z; [y,y]=w; [z,x]=w"),
    _n(7, "[x,x]=w; [y,x]=z; [z,x]=w; [x,y]=-z; [x,z]=-w", dextral=False),
    _n(8, "[x,x]=w; [y,x]=z; [z,x]=w; [x,y]=-z+w; [x,z]=-w", dextral=False),
    _n(9, "[x,x]=w; [y,x]=z; [y,y]=w; [z,x]=w; [x,y]=-z+2*w; [x,z]=-w", dextral=False),
    _n(10, "[x,x]=w; [y,x]=z; [y,y]=w; [z,x]=w; [x,y]=-z; [x,z]=-w", dextral=False),
    _n(11, "[x,x]=w; [x,y]=z; [y,x]=-z; [y,y]=-2*z+w"),
    _n(12, "[x,y]=z; [y,x]=w; [y,y]=-z"),
    _n(13, lambda alpha: f"[x,x]=z; [x,y]=w; [y,x]={-alpha}*z; [y,y]=-w", (rational("alpha"),)),
    _n(14, lambda alpha: f"[x,x]=w; [x,y]={alpha}*w; [y,x]={-alpha}*w; [y,y]=w; [z,z]=w", (rational("alpha"),)),
    _n(15, "[x,y]=w; [x,z]=w; [y,x]=-w; [y,y]=w; [z,x]=w"),
    _n(16, "[x,x]=w; [x,y]=w; [y,x]=-w; [z,z]=w"),
    _n(17, "[x,y]=z; [y,x]=w"),
    _n(
        18, "[x,y]=z; [y,x]=-z; [y,y]=w",
        notes=("the [y,x] bracket is encoded as -z",),
    ),
    _n(19, "[y,x]=w; [y,y]=z"),
    _n(
        20, lambda alpha: f"[x,y]=w; [y,x]={(1 + alpha) / (1 - alpha)}*w; [y,y]=z",
        (rational("alpha", excluded=(1,)),),
    ),
    _n(21, "[x,y]=w; [y,x]=-w; [z,z]=w"),
    _n(22, "[z,x]=w; [y,z]=w"),
    CatalogEntry(
        "R1", "R_1", _XYZW, "[x,z]=x; [y,w]=y",
        Expected(
            dextral=True, solvable=True, left_nilpotent=True, right_nilpotent=False, left_index=3,
            nilradical="2-dim",
            claims={
                "dextral": "2-dim nilradical case: dextral symmetric iff isomorphic to R_1",
                "solvable": _SOLVABLE4,
                "left_nilpotent": "dextral symmetric and solvable, hence left nilpotent",
                "left_index": "L(2) = span{x,y}, L(3) = 0",
                "right_nilpotent": "L<n> = span{x,y} for all n >= 2",
            },
        ),
        group="solvable4",
    ),
    CatalogEntry(
        "S2", "S_2", _XYZW, "[x,z]=x; [y,w]=y; [z,x]=-x; [w,y]=-y",
        Expected(
            dextral=False, solvable=True, left_nilpotent=False, right_nilpotent=False, nilradical="2-dim",
            claims={
                "dextral": "[z,[x,z]] = -x != 0",
                "solvable": _SOLVABLE4,
                "left_nilpotent": "S_2 and S_3 are not left nilpotent",
                "right_nilpotent": "not left nilpotent, hence not right nilpotent",
            },
        ),
        group="solvable4",
    ),
    CatalogEntry(
        "S3", "S_3", _XYZW, "[x,z]=x; [y,w]=y; [w,y]=-y",
        Expected(
            dextral=False, solvable=True, left_nilpotent=False, right_nilpotent=False, nilradical="2-dim",
            claims={
                "dextral": "2-dim nilradical case: only R_1 is dextral symmetric",
                "solvable": _SOLVABLE4,
                "left_nilpotent": "S_2 and S_3 are not left nilpotent",
                "right_nilpotent": "not left nilpotent, hence not right nilpotent",
            },
        ),
        group="solvable4",
    ),
    CatalogEntry(
        "L1", "L_1(lambda)", _XYZW,
        lambda lam: (
            f"[y,z]=w; [z,y]=-w; [y,x]=y; [z,x]={lam}*z; [w,x]={1 + lam}*w; "
            f"[x,y]=-y; [x,z]={-lam}*z; [x,w]={-(1 + lam)}*w"
        ),
        Expected(
            dextral=False, solvable=True, left_nilpotent=False, right_nilpotent=False, nilradical="mu2",
            claims={
                "dextral": "no dextral symmetric 4-dim Leibniz algebra has nilradical mu_2",
                "solvable": _SOLVABLE4,
                "left_nilpotent": "L_1(lambda), L_2, L_3 are not left nilpotent",
                "right_nilpotent": "not left nilpotent, hence not right nilpotent",
            },
        ),
        (rational("lambda"),), group="solvable4",
        notes=(
            "[x,w] = -(1+lambda)w; with the opposite sign the right Leibniz identity "
            "fails at (x,x,w) unless lambda = -1",
        ),
    ),
    CatalogEntry(
        "L2", "L_2", _XYZW, "[y,z]=w; [z,y]=-w; [y,x]=y; [x,y]=-y; [z,x]=-z; [x,z]=z; [x,x]=w",
        Expected(
            dextral=False, solvable=True, left_nilpotent=False, right_nilpotent=False, nilradical="mu2",
            claims={
                "dextral": "no dextral symmetric 4-dim Leibniz algebra has nilradical mu_2",
                "solvable": _SOLVABLE4,
                "left_nilpotent": "L_1(lambda), L_2, L_3 are not left nilpotent",
                "right_nilpotent": "not left nilpotent, hence not right nilpotent",
            },
        ),
        group="solvable4",
    ),
    CatalogEntry(
        "L3", "L_3", _XYZW,
        "[y,z]=w; [z,y]=-w; [y,x]=y+z; [x,y]=-y-z; [z,x]=z; [x,z]=-z; [w,x]=2*w; [x,w]=-2*w",
        Expected(
            dextral=False, solvable=True, left_nilpotent=False, right_nilpotent=False, nilradical="mu2",
            claims={
                "dextral": "no dextral symmetric 4-dim Leibniz algebra has nilradical mu_2",
                "solvable": _SOLVABLE4,
                "left_nilpotent": "L_1(lambda), L_2, L_3 are not left nilpotent",
                "right_nilpotent": "not left nilpotent, hence not right nilpotent",
            },
        ),
        group="solvable4",
    ),
    CatalogEntry(
        "R2", "R_2", _XYZW, "[z,y]=w; [z,x]=z; [w,x]=w",
        Expected(
            dextral=True, solvable=True, left_nilpotent=True, right_nilpotent=False, left_index=3,
            nilradical="mu3",
            claims={
                "dextral": "nilradical mu_3: dextral symmetric iff isomorphic to R_2",
                "solvable": _SOLVABLE4,
                "left_nilpotent": _LEFT_IDX3,
                "left_index": _LEFT_IDX3,
                "right_nilpotent": "[z,x]=z keeps z in every L<n>",
            },
        ),
        group="solvable4",
    ),
    CatalogEntry(
        "R3", "R_3(beta)", _XYZW, lambda beta: f"[y,y]=w; [z,x]=z; [x,y]=w; [x,x]={beta}*w",
        Expected(
            dextral=True, solvable=True, left_nilpotent=True, right_nilpotent=False, left_index=3,
            nilradical="mu1",
            claims={
                "dextral": "nilradical mu_1: dextral symmetric iff isomorphic to R_3(beta), R_4 or R_5",
                "solvable": _SOLVABLE4,
                "left_nilpotent": _LEFT_IDX3,
                "left_index": _LEFT_IDX3,
                "right_nilpotent": "[z,x]=z keeps z in every L<n>",
            },
        ),
        (rational("beta"),), group="solvable4",
        notes=("beta ranges over Q",),
    ),
    CatalogEntry(
        "R4", "R_4", _XYZW, "[y,y]=w; [z,x]=z",
        Expected(
            dextral=True, solvable=True, left_nilpotent=True, right_nilpotent=False, left_index=3,
            nilradical="mu1",
            claims={
                "dextral": "nilradical mu_1: dextral symmetric iff isomorphic to R_3(beta), R_4 or R_5",
                "solvable": _SOLVABLE4,
                "left_nilpotent": _LEFT_IDX3,
                "left_index": _LEFT_IDX3,
                "right_nilpotent": "[z,x]=z keeps z in every L<n>",
            },
        ),
        group="solvable4",
    ),
    CatalogEntry(
        "R5", "R_5", _XYZW, "[y,y]=w; [z,x]=z; [x,y]=w; [y,x]=w",
        Expected(
            dextral=True, solvable=True, left_nilpotent=True, right_nilpotent=False, left_index=3,
            nilradical="mu1",
            claims={
                "dextral": "nilradical mu_1: dextral symmetric iff isomorphic to R_3(beta), R_4 or R_5",
                "solvable": _SOLVABLE4,
                "left_nilpotent": _LEFT_IDX3,
                "left_index": _LEFT_IDX3,
                "right_nilpotent": "[z,x]=z keeps z in every L<n>",
            },
        ),
        group="solvable4",
    ),
    CatalogEntry(
        "towers_n", "[x_i,x_n]=x_i", _towers_basis, _towers_products,
        Expected(
            dextral=True, solvable=True, left_nilpotent=True, right_nilpotent=False, left_index=3,
            claims={
                "dextral": "n-dim dextral symmetric Leibniz algebra with L(3) = 0",
                "solvable": "dextral symmetric and left nilpotent",
                "left_nilpotent": "L(3) = 0",
                "left_index": "L(2) = span{x_1..x_(n-1)} != 0 for n >= 2",
                "right_nilpotent": "[x_i,x_n]=x_i keeps x_1..x_(n-1) in every L<k>, n >= 2",
            },
        ),
        (Param("n", "integer", minimum=1, default=Fraction(4), samples=tuple(Fraction(k) for k in range(2, 11))),),
        group="families",
    ),
    CatalogEntry(
        "lie7_char3", "7-dim Lie algebra, char 3", tuple(f"x{i}" for i in range(1, 8)), _LIE7,
        Expected(
            dextral=True, solvable=True, left_nilpotent=True, right_nilpotent=True, left_index=4,
            claims={
                "dextral": "dextral symmetric Lie algebra over a field of characteristic 3",
                "solvable": "dextral symmetric finite-dimensional Leibniz algebras are solvable",
                "left_nilpotent": "dextral symmetric finite-dimensional Leibniz algebras are left nilpotent",
                "left_index": "[x1,[x2,x3]] = x7 != 0, so L(3) = span{x7}; L(4) = 0",
                "right_nilpotent": "for Lie algebras left and right series coincide",
            },
        ),
        default_field=FieldSpec(3), characteristic=3, group="families",
        notes=("antisymmetric brackets [x_j,x_i] = -[x_i,x_j] are implied by the Lie structure",),
    ),
)

_BY_ID = {e.id: e for e in ENTRIES}


def list_ids() -> list[str]:
    return [e.id for e in ENTRIES]


def get(entry_id: str) -> CatalogEntry:
    try:
        return _BY_ID[entry_id]
    except KeyError:
        raise UnknownEntryError(f"no catalog entry {entry_id!r}") from None


def expected(entry_id: str) -> Expected:
    return get(entry_id).expected


def instantiate(
    entry_id: str,
    params: Mapping[str, object] | None = None,
    field: FieldSpec | None = None,
    enforce_characteristic: bool = True,
) -> Algebra:
    """Numeric algebra for an entry at the given parameters and field.

    ``field`` defaults to the entry's own field. Entries tied to one
    characteristic refuse other fields unless ``enforce_characteristic`` is
    false.
    """
    entry = get(entry_id)
    field = entry.default_field if field is None else field
    if enforce_characteristic and entry.characteristic is not None and field.p != entry.characteristic:
        raise FieldError(f"{entry_id} requires characteristic {entry.characteristic}, got {field}")
    values = entry.resolve(params)
    basis = entry.basis(*values.values()) if callable(entry.basis) else entry.basis
    brackets = parse_brackets(entry.table_text(values))
    name = entry_id
    if values:
        name += "(" + ",".join(f"{k}={v}" for k, v in values.items()) + ")"
    return Algebra.from_names(name, field, basis, brackets, entry.notes)


def instances(
    grid: Sequence[int] | None = None, field: FieldSpec | None = None, ids: Sequence[str] | None = None
) -> list[tuple[CatalogEntry, dict[str, Fraction], Algebra]]:
    """Every entry at every sampled parameter value, in catalog order."""
    out = []
    for entry in ENTRIES:
        if ids is not None and entry.id not in ids:
            continue
        for values in entry.param_grid(grid):
            out.append((entry, values, instantiate(entry.id, values, field)))
    return out
