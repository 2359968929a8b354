"""Leavitt path algebras: graph classification and CK-1 monomial arithmetic.

Elements are finite sums of monomials ``alpha beta*`` with ``alpha`` and
``beta`` paths ending at the same vertex. Products use the rule

    (alpha beta*)(gamma delta*) = alpha gamma' delta*   if gamma = beta gamma'
                                = alpha (delta beta')*  if beta = gamma beta'
                                = 0                     otherwise

which encodes vertex orthogonality, the source/range relations and CK-1.
CK-2 is never applied, so a zero result is always genuine, while a nonzero
sum is only known to be nonzero through :func:`certify_nonzero`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Mapping

from .exactlin import QQ, FieldSpec, Scalar


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    name: str
    src: str
    rng: str

    @property
    def is_loop(self) -> bool:
        return self.src == self.rng


@dataclass(frozen=True)
class Path:
    """A path: its start vertex and a tuple of edge names (empty for a vertex)."""

    start: str
    edges: tuple[str, ...] = ()

    def __len__(self):
        return len(self.edges)

    def __str__(self):
        return "".join(self.edges) if self.edges else self.start


class DirectedGraph:
    def __init__(self, vertices: Iterable[str], edges: Iterable[Edge] = ()):
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("vertex names must be distinct")
        vs = set(self.vertices)
        self._edge = {}
        for e in self.edges:
            if e.name in self._edge:
                raise GraphError(f"edge name {e.name!r} used twice")
            if e.name in vs:
                raise GraphError(f"edge name {e.name!r} clashes with a vertex")
            if e.src not in vs or e.rng not in vs:
                raise GraphError(f"edge {e.name!r} references an undeclared vertex")
            self._edge[e.name] = e

    def edge(self, name: str) -> Edge:
        try:
            return self._edge[name]
        except KeyError:
            raise GraphError(f"no edge {name!r}") from None

    def loops_at(self, v: str) -> list[Edge]:
        return [e for e in self.edges if e.is_loop and e.src == v]

    def path(self, *names: str) -> Path:
        """Path from edge names; a single vertex name gives the trivial path."""
        if len(names) == 1 and names[0] in self.vertices:
            return Path(names[0])
        if not names:
            raise GraphError("empty path needs a vertex")
        es = [self.edge(n) for n in names]
        for a, b in zip(es, es[1:]):
            if a.rng != b.src:
                raise GraphError(f"edges {a.name} and {b.name} do not compose")
        return Path(es[0].src, tuple(names))

    def range_of(self, p: Path) -> str:
        return self.edge(p.edges[-1]).rng if p.edges else p.start

    def check_path(self, p: Path) -> None:
        if p.start not in self.vertices:
            raise GraphError(f"unknown vertex {p.start!r}")
        cur = p.start
        for n in p.edges:
            e = self.edge(n)
            if e.src != cur:
                raise GraphError(f"path {p} is not composable")
            cur = e.rng

    def paths(self, max_len: int) -> list[Path]:
        """All paths of length at most ``max_len``, shortest first."""
        out = [Path(v) for v in self.vertices]
        frontier = [(Path(e.src, (e.name,)), e.rng) for e in self.edges]
        for _ in range(max_len):
            out.extend(p for p, _ in frontier)
            frontier = [
                (Path(p.start, p.edges + (e.name,)), e.rng)
                for p, r in frontier
                for e in self.edges
                if e.src == r
            ]
        return out

    def disjoint_union(self, other: DirectedGraph, tags=("1", "2")) -> DirectedGraph:
        def tag(g, t):
            vs = [f"{v}_{t}" for v in g.vertices]
            es = [Edge(f"{e.name}_{t}", f"{e.src}_{t}", f"{e.rng}_{t}") for e in g.edges]
            return vs, es

        v1, e1 = tag(self, tags[0])
        v2, e2 = tag(other, tags[1])
        return DirectedGraph(v1 + v2, e1 + e2)

    def __repr__(self):
        es = ", ".join(f"{e.name}:{e.src}->{e.rng}" for e in self.edges)
        return f"DirectedGraph({list(self.vertices)}, [{es}])"


Key = tuple[Path, Path]


@dataclass(frozen=True)
class Monomial:
    alpha: Path
    beta: Path
    coefficient: Scalar = Fraction(1)

    def __str__(self):
        a, b = self.alpha, self.beta
        if not a.edges and not b.edges:
            body = a.start
        elif not b.edges:
            body = str(a)
        elif not a.edges:
            body = f"{b}*"
        else:
            body = f"{a}({b})*" if len(b) > 1 else f"{a}{b}*"
        c = self.coefficient
        return body if c == 1 else f"{c}*{body}"


@dataclass(frozen=True)
class LpaElement:
    """A finite linear combination of monomials ``alpha beta*``."""

    terms: tuple[tuple[Key, Scalar], ...] = ()
    field: FieldSpec = field(default=QQ, compare=False)

    @classmethod
    def from_map(cls, terms: Mapping[Key, Scalar], F: FieldSpec = QQ) -> LpaElement:
        kept = [(k, c) for k, c in terms.items() if c]
        kept.sort(key=lambda kc: _sort_key(kc[0]))
        return cls(tuple(kept), F)

    def as_map(self) -> dict[Key, Scalar]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> list[Monomial]:
        return [Monomial(a, b, c) for (a, b), c in self.terms]

    def __add__(self, other: LpaElement) -> LpaElement:
        m = self.as_map()
        for k, c in other.terms:
            m[k] = m.get(k, self.field.zero) + c
        return LpaElement.from_map(m, self.field)

    def scale(self, c) -> LpaElement:
        c = self.field.coerce(c)
        return LpaElement.from_map({k: c * v for k, v in self.terms}, self.field)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(str(m) for m in self.monomials())


def _sort_key(k: Key):
    a, b = k
    return (len(a) + len(b), a.start, a.edges, b.start, b.edges)


# -- generators ----------------------------------------------------------------

def vertex(E: DirectedGraph, v: str, F: FieldSpec = QQ) -> LpaElement:
    p = E.path(v)
    return LpaElement.from_map({(p, p): F.one}, F)


def edge(E: DirectedGraph, name: str, F: FieldSpec = QQ) -> LpaElement:
    e = E.edge(name)
    return LpaElement.from_map({(Path(e.src, (name,)), Path(e.rng)): F.one}, F)


def ghost(E: DirectedGraph, name: str, F: FieldSpec = QQ) -> LpaElement:
    e = E.edge(name)
    return LpaElement.from_map({(Path(e.rng), Path(e.src, (name,))): F.one}, F)


def monomial(E: DirectedGraph, alpha: Path, beta: Path, coeff=1, F: FieldSpec = QQ) -> LpaElement:
    E.check_path(alpha)
    E.check_path(beta)
    if E.range_of(alpha) != E.range_of(beta):
        raise GraphError(f"r({alpha}) != r({beta})")
    return LpaElement.from_map({(alpha, beta): F.coerce(coeff)}, F)


def _is_prefix(p: Path, q: Path) -> bool:
    """Whether ``q = p q'`` for some path ``q'``."""
    if p.start != q.start or len(p) > len(q):
        return False
    return q.edges[: len(p)] == p.edges


def _rest(E: DirectedGraph, p: Path, q: Path) -> Path:
    """``q'`` with ``q = p q'`` (``p`` a prefix of ``q``)."""
    tail = q.edges[len(p):]
    return Path(E.range_of(p), tail)


def _concat(E: DirectedGraph, p: Path, q: Path) -> Path:
    return Path(p.start, p.edges + q.edges)


def multiply_monomials(E: DirectedGraph, x: Key, y: Key) -> Key | None:
    alpha, beta = x
    gamma, delta = y
    if _is_prefix(beta, gamma):
        return _concat(E, alpha, _rest(E, beta, gamma)), delta
    if _is_prefix(gamma, beta):
        return alpha, _concat(E, delta, _rest(E, gamma, beta))
    return None


def lpa_multiply(E: DirectedGraph, x: LpaElement, y: LpaElement) -> LpaElement:
    for (a, b), _ in x.terms + y.terms:
        E.check_path(a)
        E.check_path(b)
    F = x.field
    out: dict[Key, Scalar] = {}
    for kx, cx in x.terms:
        for ky, cy in y.terms:
            k = multiply_monomials(E, kx, ky)
            if k is not None:
                out[k] = out.get(k, F.zero) + cx * cy
    return LpaElement.from_map(out, F)


def is_generator(k: Key) -> bool:
    """Vertex ``v v*``, edge ``e r(e)*`` or ghost edge ``r(e) e*``."""
    a, b = k
    return (len(a), len(b)) in ((0, 0), (1, 0), (0, 1))


@dataclass(frozen=True)
class Certificate:
    """``x * m`` (side ``"right"``) or ``m * x`` (``"left"``) equals ``c * g``
    for a single generator ``g`` and a nonzero scalar ``c``."""

    multiplier: Monomial
    side: str
    result: Monomial


def certify_nonzero(E: DirectedGraph, x: LpaElement, max_len: int = 2) -> Certificate | None:
    """Prove a single monomial nonzero by reducing it to a generator.

    Generators (vertices, edges, ghost edges) are nonzero in any Leavitt
    path algebra, and the reduction uses only CK-1, so ``x`` cannot vanish.
    Sums of several monomials are not handled: they can cancel through CK-2.
    A one-sided factor cannot shorten both paths, so monomials with both
    ``alpha`` and ``beta`` of length at least 2 get no certificate either.
    """
    if len(x.terms) != 1:
        return None
    (k, c), = x.terms
    if is_generator(k):
        r = E.range_of(k[0])
        m = Monomial(Path(r), Path(r))
        return Certificate(m, "right", Monomial(k[0], k[1], c))
    candidates = _monomial_keys(E, max_len)
    for side in ("right", "left"):
        for m in candidates:
            y = multiply_monomials(E, k, m) if side == "right" else multiply_monomials(E, m, k)
            if y is not None and is_generator(y):
                return Certificate(Monomial(m[0], m[1]), side, Monomial(y[0], y[1], c))
    return None


def _monomial_keys(E: DirectedGraph, max_len: int) -> list[Key]:
    ps = E.paths(max_len)
    keys = [(a, b) for a, b in product(ps, ps) if E.range_of(a) == E.range_of(b)]
    keys.sort(key=_sort_key)
    return keys


def validate_witness(E: DirectedGraph, a: LpaElement, b: LpaElement, c: LpaElement) -> bool:
    """``a(bc) = 0`` and ``b(ac)`` certified nonzero."""
    if not lpa_multiply(E, a, lpa_multiply(E, b, c)).is_zero:
        return False
    return certify_nonzero(E, lpa_multiply(E, b, lpa_multiply(E, a, c))) is not None


# -- classification ------------------------------------------------------------

@dataclass(frozen=True)
class GraphViolation:
    kind: str  # "non-loop edge" | "multiple loops"
    where: str
    witness: tuple[LpaElement, LpaElement, LpaElement]
    certificate: Certificate | None


@dataclass(frozen=True)
class GraphClassification:
    dextral: bool
    isolated: int
    looped: int
    iso_class: str | None
    violations: tuple[GraphViolation, ...] = ()


LAURENT = "R[x,x^-1]"


def iso_class_label(isolated: int, looped: int) -> str:
    parts = ["R"] * isolated + [LAURENT] * looped
    return " ⊕ ".join(parts) if parts else "0"


def classify_graph(E: DirectedGraph, F: FieldSpec = QQ) -> GraphClassification:
    """Decide dextral symmetry of ``L(E)`` from the shape of ``E``.

    It holds iff every edge is a loop and no vertex carries two loops. Then
    ``L(E)`` is a sum of one copy of ``R`` per bare vertex and one Laurent
    ring per looped vertex. Each violation comes with a witness triple.
    """
    violations = []
    for e in E.edges:
        if not e.is_loop:
            w = (edge(E, e.name, F), vertex(E, e.src, F), vertex(E, e.rng, F))
            cert = certify_nonzero(E, lpa_multiply(E, w[1], lpa_multiply(E, w[0], w[2])))
            violations.append(GraphViolation("non-loop edge", e.name, w, cert))
    for v in E.vertices:
        loops = E.loops_at(v)
        if len(loops) >= 2:
            f, g = loops[0], loops[1]
            w = (ghost(E, g.name, F), edge(E, f.name, F), vertex(E, v, F))
            cert = certify_nonzero(E, lpa_multiply(E, w[1], lpa_multiply(E, w[0], w[2])))
            violations.append(GraphViolation("multiple loops", v, w, cert))
    if violations:
        return GraphClassification(False, 0, 0, None, tuple(violations))
    isolated = sum(1 for v in E.vertices if not E.loops_at(v))
    looped = len(E.vertices) - isolated
    return GraphClassification(True, isolated, looped, iso_class_label(isolated, looped))


def random_monomials(E: DirectedGraph, rng, count: int, max_len: int = 3) -> Iterator[Key]:
    keys = _monomial_keys(E, max_len)
    for _ in range(count):
        yield rng.choice(keys)
