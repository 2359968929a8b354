"""The acceptance checks, shared by the command line and the test suite.

Each check returns a :class:`CheckResult`. ``fail`` means a computed fact
contradicts the expected one; ``unknown`` means a decision procedure gave
up within its budget and nothing was contradicted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Sequence

from . import catalog
from .algebra import (
    Algebra,
    direct_sum,
    ideal_closure,
    quotient,
    subalgebra,
    subalgebra_closure,
    zero_space,
)
from .decide import (
    Status,
    Reason,
    cb_condition,
    decide_dextral,
    exhaustive_oracle,
    is_symmetric_ideal,
)
from .exactlin import FieldError, FieldSpec
from .identities import (
    cyclic_relations,
    is_antiassociative,
    is_lie,
    is_right_leibniz,
    quadruple_identity,
)
from .leavitt import (
    DirectedGraph,
    Edge,
    LpaElement,
    classify_graph,
    lpa_multiply,
    random_monomials,
    validate_witness,
)
from .series import (
    SeriesKind,
    is_left_nilpotent,
    is_right_nilpotent,
    is_solvable,
    derived_left_product_mismatches,
    series,
    verify_derived_is_left,
    verify_left_nilpotency_bound,
)

DEFAULT_GRID = tuple(range(-2, 3))
DEFAULT_SEED = 20240521


@dataclass
class Context:
    grid: Sequence[int] = DEFAULT_GRID
    witness_depth: int = 1
    seed: int = DEFAULT_SEED

    def decide(self, A: Algebra):
        return decide_dextral(A, witness_bound=self.witness_depth)


@dataclass
class CheckResult:
    id: str
    claim: str
    status: str = "pass"
    details: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.status = "fail"
        self.details.append("FAIL " + msg)

    def unknown(self, msg: str) -> None:
        if self.status == "pass":
            self.status = "unknown"
        self.details.append("UNKNOWN " + msg)

    def note(self, msg: str) -> None:
        self.details.append(msg)

    def expect(self, ok: bool, msg: str) -> None:
        if not ok:
            self.fail(msg)

    def verdict(self, v, want_yes: bool, what: str) -> None:
        if v.status is Status.UNKNOWN:
            self.unknown(f"{what}: undecided")
        elif v.yes != want_yes:
            self.fail(f"{what}: decided {v.status.value}, expected {'yes' if want_yes else 'no'}")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {"id": self.id, "claim": self.claim, "status": self.status, "details": self.details}


def _left_zero_at_3(A: Algebra) -> bool:
    return series(A, SeriesKind.LEFT).term(3).dim == 0


def _inst(ctx: Context, ids: Sequence[str]):
    return catalog.instances(ctx.grid, ids=ids)


NILPOTENT4 = [f"N{i}" for i in range(1, 23)]
NOT_DEXTRAL4 = {"N7", "N8", "N9", "N10"}


def check_transcription(ctx: Context) -> CheckResult:
    r = CheckResult("transcription", "every catalog entry satisfies the right Leibniz identity")
    count = 0
    for entry, values, A in catalog.instances(ctx.grid):
        rep = is_right_leibniz(A)
        count += 1
        if not rep.holds:
            r.fail(f"{A.name}: fails at {rep.violation.names(A)}")
    r.note(f"{count} instances checked")
    return r


def check_nilpotent4(ctx: Context) -> CheckResult:
    r = CheckResult(
        "nilpotent4",
        "among 4-dim right nilpotent Leibniz algebras exactly N7-N10 are not dextral symmetric, "
        "the other 18 have L(3) = 0",
    )
    yes_ids = set()
    for entry, values, A in _inst(ctx, NILPOTENT4):
        v = ctx.decide(A)
        if entry.id in NOT_DEXTRAL4:
            r.verdict(v, False, A.name)
            if v.no:
                w = v.witness
                shape = (w.a, w.b, w.c) == (A.e("y"), A.e("x"), A.e("x"))
                r.expect(shape, f"{A.name}: witness is not (y, x, x)")
                r.expect(w.validate(A), f"{A.name}: witness does not validate")
        else:
            r.verdict(v, True, A.name)
            r.expect(v.reason is Reason.ALL_TRIPLES_ZERO, f"{A.name}: reason {v.reason}")
            r.expect(_left_zero_at_3(A), f"{A.name}: L(3) != 0")
            if v.yes:
                yes_ids.add(entry.id)
    r.expect(len(yes_ids) == 18, f"{len(yes_ids)} dextral classes, expected 18")
    r.note(f"dextral classes: {len(yes_ids)}")
    return r


def _not_left_nilpotent(r: CheckResult, A: Algebra) -> None:
    t = series(A, SeriesKind.LEFT)
    r.expect(not t.terminal_is_zero, f"{A.name}: left series reaches 0")
    r.note(f"{A.name}: left series dims {t.dims}")


def check_two_dim_nilradical(ctx: Context) -> CheckResult:
    r = CheckResult(
        "two_dim_nilradical",
        "with 2-dim nilradical: R1 is dextral symmetric, S2 and S3 are not and are not left nilpotent",
    )
    for entry, values, A in _inst(ctx, ["R1", "S2", "S3"]):
        v = ctx.decide(A)
        if entry.id == "R1":
            r.verdict(v, True, A.name)
            continue
        r.verdict(v, False, A.name)
        if v.no:
            r.expect(v.witness.validate(A), f"{A.name}: witness does not validate")
            r.note(f"{A.name}: witness {_names(A, v.witness)}")
        _not_left_nilpotent(r, A)
    return r


def check_mu2_nilradical(ctx: Context) -> CheckResult:
    r = CheckResult(
        "mu2_nilradical",
        "with nilradical mu2: L1(lambda), L2, L3 are not dextral symmetric and not left nilpotent",
    )
    for entry, values, A in _inst(ctx, ["L1", "L2", "L3"]):
        v = ctx.decide(A)
        r.verdict(v, False, A.name)
        if v.no:
            r.expect(v.witness.validate(A), f"{A.name}: witness does not validate")
        _not_left_nilpotent(r, A)
    return r


def check_mu3_mu1_nilradical(ctx: Context) -> CheckResult:
    r = CheckResult(
        "mu3_mu1_nilradical",
        "with nilradical mu3 or mu1: R2, R3(beta), R4, R5 are dextral symmetric, "
        "left nilpotent of index 3",
    )
    for entry, values, A in _inst(ctx, ["R2", "R3", "R4", "R5"]):
        r.verdict(ctx.decide(A), True, A.name)
        ok, idx = is_left_nilpotent(A)
        r.expect(ok and idx == 3, f"{A.name}: left nilpotency ({ok}, {idx})")
    return r


def check_four_dim_criterion(ctx: Context) -> CheckResult:
    r = CheckResult(
        "four_dim_criterion",
        "a catalogued 4-dim right Leibniz algebra is dextral symmetric iff L(3) = 0",
    )
    n = 0
    for entry, values, A in catalog.instances(ctx.grid):
        if A.dim != 4:
            continue
        n += 1
        v = ctx.decide(A)
        r.verdict(v, _left_zero_at_3(A), A.name)
    r.note(f"{n} instances")
    return r


def check_examples(ctx: Context) -> CheckResult:
    r = CheckResult(
        "examples",
        "worked examples: left but not right nilpotent; solvable but not left nilpotent; "
        "the tower family; a 7-dim Lie algebra over GF(3) with L(3) != 0",
    )
    A = catalog.instantiate("lnotr")
    r.verdict(ctx.decide(A), True, "lnotr")
    r.expect(is_left_nilpotent(A) == (True, 3), "lnotr: left nilpotency index")
    r.expect(not is_right_nilpotent(A)[0], "lnotr: right nilpotent")
    r.expect(not is_antiassociative(A).holds, "lnotr: anti-associative")

    A = catalog.instantiate("Lprime")
    ok, idx = is_solvable(A)
    r.expect(series(A, SeriesKind.DERIVED).term(3).dim == 0, "Lprime: L[3] != 0")
    r.expect(ok, "Lprime: not solvable")
    r.expect(not is_left_nilpotent(A)[0], "Lprime: left nilpotent")

    for n in range(2, 11):
        A = catalog.instantiate("towers_n", {"n": n})
        r.expect(_left_zero_at_3(A), f"{A.name}: L(3) != 0")
        r.verdict(ctx.decide(A), True, A.name)

    A = catalog.instantiate("lie7_char3")
    r.expect(is_lie(A).holds, "lie7: not a Lie algebra over GF(3)")
    r.verdict(ctx.decide(A), True, "lie7")
    third = series(A, SeriesKind.LEFT).term(3)
    r.expect(third.dim > 0 and A.e("x7") in third, "lie7: x7 not in L(3)")
    r.note(f"lie7: left series dims {series(A, SeriesKind.LEFT).dims}")
    return r


def _dextral_instances(ctx: Context):
    out = []
    for entry, values, A in catalog.instances(ctx.grid):
        if entry.id == "towers_n":
            continue
        if ctx.decide(A).yes:
            out.append(A)
    out += [catalog.instantiate("towers_n", {"n": n}) for n in range(2, 11)]
    return out


def check_dextral_structure(ctx: Context) -> CheckResult:
    r = CheckResult(
        "dextral_structure",
        "dextral symmetric right Leibniz algebras: cyclic sign relations, [[x,y],[z,w]] = [x,[y,[z,w]]], "
        "[L[m], L(n)] = L(2^(m-1)+n), L[m] = L(2^(m-1)), L(dim+1) = 0, solvable iff left nilpotent",
    )
    algebras = _dextral_instances(ctx)
    from_two = True
    for A in algebras:
        r.expect(cyclic_relations(A).holds, f"{A.name}: cyclic relations")
        r.expect(quadruple_identity(A).holds, f"{A.name}: quadruple identity")
        bad = derived_left_product_mismatches(A, 4, 6)
        r.expect(not bad, f"{A.name}: [L[m], L(n)] != L(2^(m-1)+n) at (m, n) in {bad}")
        from_two = from_two and not any(n >= 2 for _, n in bad)
        r.expect(verify_derived_is_left(A, 4, check_hypotheses=False), f"{A.name}: L[m] = L(2^(m-1))")
        r.expect(verify_left_nilpotency_bound(A, check_hypotheses=False), f"{A.name}: L(dim+1) != 0")
        r.expect(is_solvable(A)[0] == is_left_nilpotent(A)[0], f"{A.name}: solvable vs left nilpotent")
    r.note(f"{len(algebras)} dextral symmetric instances")
    r.note(f"[L[m], L(n)] = L(2^(m-1)+n) for all m <= 4, 2 <= n <= 6: {from_two}")
    return r


def check_strict_inclusions(ctx: Context) -> CheckResult:
    r = CheckResult(
        "strict_inclusions",
        "right nilpotent < left nilpotent < solvable, each inclusion strict",
    )
    right = []
    for entry, values, A in catalog.instances(ctx.grid):
        rn, ln, so = is_right_nilpotent(A)[0], is_left_nilpotent(A)[0], is_solvable(A)[0]
        r.expect(not rn or ln, f"{A.name}: right but not left nilpotent")
        r.expect(not ln or so, f"{A.name}: left nilpotent but not solvable")
        if rn:
            right.append(A.name)
    r.expect(bool(right), "no right nilpotent entry")
    A = catalog.instantiate("lnotr")
    r.expect(is_left_nilpotent(A)[0] and not is_right_nilpotent(A)[0], "lnotr separation")
    A = catalog.instantiate("Lprime")
    r.expect(is_solvable(A)[0] and not is_left_nilpotent(A)[0], "Lprime separation")
    r.note(f"right nilpotent example: {right[0] if right else None}")
    return r


def check_oracle(ctx: Context) -> CheckResult:
    r = CheckResult(
        "oracle",
        "on catalog entries of dim <= 3 over GF(2), GF(3), GF(5) the decision procedure "
        "matches exhaustive enumeration",
    )
    n = skipped = 0
    small = [e.id for e in catalog.ENTRIES if e.dim is not None and e.dim <= 3]
    for p in (2, 3, 5):
        F = FieldSpec.prime(p)
        for entry, values, A in _inst(ctx, small):
            try:
                B = A.over(F)
            except FieldError:
                skipped += 1
                continue
            n += 1
            v = ctx.decide(B)
            o = exhaustive_oracle(B)
            if v.status != o.status:
                r.fail(f"{B.name} over GF({p}): decided {v.status.value}, oracle {o.status.value}")
            if v.no:
                r.expect(v.witness.validate(B), f"{B.name} over GF({p}): witness")
    r.note(f"{n} comparisons, {skipped} skipped (coefficients do not embed)")
    return r


def _random_vector(rng: random.Random, A: Algebra, radius: int = 2):
    return A.element(rng.randint(-radius, radius) for _ in range(A.dim))


def check_closure(ctx: Context) -> CheckResult:
    r = CheckResult(
        "closure",
        "direct sums and subalgebras of dextral symmetric algebras are dextral symmetric",
    )
    reps = []
    seen = set()
    for entry, values, A in catalog.instances(ctx.grid):
        if entry.id in seen or entry.id == "towers_n":
            continue
        if A.field.p:
            continue
        if ctx.decide(A).yes:
            seen.add(entry.id)
            reps.append(A)
    pairs = 0
    for A, B in combinations_with_replacement(reps, 2):
        pairs += 1
        r.verdict(ctx.decide(direct_sum(A, B)), True, f"{A.name} + {B.name}")
    rng = random.Random(ctx.seed)
    for k in range(50):
        A = rng.choice(reps)
        U = subalgebra_closure(A, [_random_vector(rng, A) for _ in range(rng.randint(1, 2))])
        S = subalgebra(A, U, name=f"{A.name}.sub{k}")
        r.verdict(ctx.decide(S), True, f"{S.name} (dim {S.dim})")
    r.note(f"{pairs} direct sums, 50 subalgebras")
    return r


_IDEAL_HOSTS = ["N7", "N8", "N9", "N10", "S2", "S3", "L2", "L3", "lnotr", "Lprime"]


def quotient_cases(ctx: Context):
    """Twenty (algebra, ideal) pairs: the zero ideal and a random principal ideal per host."""
    rng = random.Random(ctx.seed + 1)
    out = []
    for name in _IDEAL_HOSTS:
        A = catalog.instantiate(name)
        out.append((A, zero_space(A)))
        out.append((A, ideal_closure(A, [_random_vector(rng, A, 1)])))
    return out


def check_quotients(ctx: Context) -> CheckResult:
    r = CheckResult(
        "quotients",
        "an ideal is symmetric iff the quotient is dextral symmetric",
    )
    counts = {"yes": 0, "no": 0}
    for A, I in quotient_cases(ctx):
        v = is_symmetric_ideal(A, I, witness_bound=ctx.witness_depth)
        Q, _ = quotient(A, I)
        q = ctx.decide(Q)
        what = f"{A.name} / ideal of dim {I.dim}"
        r.expect(v.status == q.status, f"{what}: {v.status.value} vs quotient {q.status.value}")
        if v.no:
            r.expect(v.witness.validate(A, I), f"{what}: lifted witness")
        counts[v.status.value] = counts.get(v.status.value, 0) + 1
    r.note(f"verdicts {counts}")
    return r


def leavitt_examples() -> list[tuple[str, DirectedGraph, bool, int, int, str | None]]:
    """(label, graph, dextral, |I|, |J|, iso class)."""
    laurent = "R[x,x^-1]"
    return [
        ("vertex", DirectedGraph(["v"]), True, 1, 0, "R"),
        ("loop", DirectedGraph(["v"], [Edge("f", "v", "v")]), True, 0, 1, laurent),
        ("edge", DirectedGraph(["u", "v"], [Edge("e", "u", "v")]), False, 0, 0, None),
        ("two_loops", DirectedGraph(["v"], [Edge("f", "v", "v"), Edge("g", "v", "v")]), False, 0, 0, None),
        (
            "mixed",
            DirectedGraph(["a", "b", "c", "d", "e"], [Edge("l", "d", "d"), Edge("m", "e", "e")]),
            True,
            3,
            2,
            " ⊕ ".join(["R"] * 3 + [laurent] * 2),
        ),
    ]


def random_graph(rng: random.Random, max_vertices: int = 4, max_edges: int = 4) -> DirectedGraph:
    vs = [f"v{i}" for i in range(rng.randint(1, max_vertices))]
    es = [Edge(f"e{i}", rng.choice(vs), rng.choice(vs)) for i in range(rng.randint(0, max_edges))]
    return DirectedGraph(vs, es)


def check_leavitt(ctx: Context) -> CheckResult:
    r = CheckResult(
        "leavitt",
        "L(E) is dextral symmetric iff every edge is a loop and no vertex has two loops; "
        "then it is a sum of copies of R and R[x,x^-1]",
    )
    for label, E, dextral, I, J, iso in leavitt_examples():
        c = classify_graph(E)
        r.expect(c.dextral == dextral, f"{label}: dextral {c.dextral}")
        if dextral:
            r.expect((c.isolated, c.looped, c.iso_class) == (I, J, iso), f"{label}: {c.iso_class}")
        else:
            r.expect(bool(c.violations), f"{label}: no violations")
        for viol in c.violations:
            r.expect(viol.certificate is not None, f"{label}: no certificate")
            r.expect(validate_witness(E, *viol.witness), f"{label}: witness does not validate")
            r.note(f"{label}: witness ({', '.join(str(x) for x in viol.witness)})")
    rng = random.Random(ctx.seed + 2)
    graphs = [random_graph(rng) for _ in range(20)]
    for i in range(1000):
        E = graphs[i % len(graphs)]
        x, y, z = (LpaElement.from_map({k: Fraction(1)}) for k in random_monomials(E, rng, 3))
        lhs = lpa_multiply(E, lpa_multiply(E, x, y), z)
        rhs = lpa_multiply(E, x, lpa_multiply(E, y, z))
        if lhs != rhs:
            r.fail(f"associativity: ({x})({y})({z})")
            break
    r.note("1000 random monomial triples")
    return r


def random_anticommutative(rng: random.Random, F: FieldSpec, dim: int, density: float = 0.4) -> Algebra:
    names = tuple(f"e{i + 1}" for i in range(dim))
    products = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            v = tuple(F.coerce(rng.randrange(F.p)) if rng.random() < density else F.zero for _ in range(dim))
            if any(v):
                products[(i, j)] = v
                products[(j, i)] = tuple(-x for x in v)
    return Algebra(f"anticomm{dim}", F, names, products)


def check_anticommutative(ctx: Context) -> CheckResult:
    r = CheckResult(
        "anticommutative",
        "for anti-commutative algebras: dextral symmetric iff anti-associative iff "
        "xy = 0 implies (xz)y = 0",
    )
    F = FieldSpec.prime(3)
    rng = random.Random(ctx.seed + 3)
    algebras = [catalog.instantiate("lie7_char3")]
    algebras += [random_anticommutative(rng, F, rng.randint(1, 3)) for _ in range(20)]
    tally = {}
    for k, A in enumerate(algebras):
        v = ctx.decide(A)
        if v.status is Status.UNKNOWN:
            r.unknown(f"{A.name}#{k}: undecided")
            continue
        anti = is_antiassociative(A).holds
        cb = cb_condition(A)
        r.expect(v.yes == anti == cb, f"{A.name}#{k}: dextral {v.yes}, antiassoc {anti}, cb {cb}")
        tally[v.yes] = tally.get(v.yes, 0) + 1
    r.note(f"dextral yes/no counts: {tally.get(True, 0)}/{tally.get(False, 0)}")
    return r


@dataclass(frozen=True)
class Check:
    id: str
    modules: tuple[str, ...]
    run: Callable[[Context], CheckResult]


CHECKS: list[Check] = [
    Check("transcription", ("catalog", "identities"), check_transcription),
    Check("nilpotent4", ("dextral", "catalog"), check_nilpotent4),
    Check("two_dim_nilradical", ("dextral", "series"), check_two_dim_nilradical),
    Check("mu2_nilradical", ("dextral", "series"), check_mu2_nilradical),
    Check("mu3_mu1_nilradical", ("dextral", "series"), check_mu3_mu1_nilradical),
    Check("four_dim_criterion", ("dextral", "series"), check_four_dim_criterion),
    Check("examples", ("series", "dextral", "identities"), check_examples),
    Check("dextral_structure", ("series", "identities"), check_dextral_structure),
    Check("strict_inclusions", ("series",), check_strict_inclusions),
    Check("oracle", ("dextral", "exactlin"), check_oracle),
    Check("closure", ("algebra", "dextral"), check_closure),
    Check("quotients", ("algebra", "dextral"), check_quotients),
    Check("leavitt", ("leavitt",), check_leavitt),
    Check("anticommutative", ("identities", "dextral"), check_anticommutative),
]

MODULES = sorted({m for c in CHECKS for m in c.modules})


def run_checks(ctx: Context | None = None, only: str | None = None) -> list[CheckResult]:
    ctx = ctx or Context()
    return [c.run(ctx) for c in CHECKS if only is None or only in c.modules or only == c.id]


def _names(A: Algebra, w) -> str:
    from .algebra import format_element

    return "(" + ", ".join(format_element(A, x) for x in (w.a, w.b, w.c)) + ")"
