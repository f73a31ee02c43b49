"""Degenerations of Jordan algebras along curves ``g(t)`` of basis changes.

A witness ``g(t)`` has the new basis vectors ``f_j(t)`` as its columns.  The
conjugated constants ``c(t)`` describe the source in the basis ``f(t)``; when
every entry has a finite value at ``t = 0`` those values define the limit.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from . import catalog
from .algebra import (
    Algebra,
    annihilator,
    change_of_basis,
    derivation_dim,
    is_associative,
    is_jordan,
    orbit_dimension,
    power_filtration,
    radical,
)
from .cohomology import z2_dim
from .exactla import (
    PoleAtZero,
    PolyMatrix,
    RationalFunction,
    RatMatrix,
    SingularMatrix,
    UniPoly,
    limit_at_zero,
    parse_poly,
)


class IdenticallySingular(ValueError):
    """``det g(t)`` is the zero polynomial."""


class NotJordanAtLimit(RuntimeError):
    """A limit of Jordan structure constants failed the Jordan identity (a bug signal)."""


class AuditFailure(RuntimeError):
    def __init__(self, source: str, target: str, detail: str):
        super().__init__(f"edge {source} -> {target}: {detail}")
        self.source, self.target, self.detail = source, target, detail


class CoverageGap(RuntimeError):
    def __init__(self, node: str):
        super().__init__(f"{node} has no ancestor in the rigid set")
        self.node = node


class Provenance(enum.Enum):
    EXPLICIT = "PaperExplicit"
    DERIVED = "Derived"
    SCALING = "Scaling"


class ArrowStatus(enum.Enum):
    VERIFIED_WITNESS = "VerifiedWitness"
    CLAIMED_BY_REFERENCE = "ClaimedByReference"
    AUDIT_ONLY = "AuditOnly"


def resolve(node) -> Algebra:
    """Catalog id, two-dimensional node name, or an :class:`Algebra` itself."""
    if isinstance(node, Algebra):
        return node
    extra = catalog.jor2_algebras()
    if node in extra:
        return extra[node]
    return catalog.algebra(node)


# ---------------------------------------------------------------------------
# witnesses and families


@dataclass(frozen=True)
class Witness:
    source: str
    target: str
    g: PolyMatrix
    provenance: Provenance
    note: str = field(default="", compare=False)

    def __post_init__(self):
        if self.g.det().is_zero():
            raise IdenticallySingular(f"det g(t) vanishes identically for {self.source} -> {self.target}")

    def invertible_point(self) -> Fraction:
        """Smallest positive integer ``t0`` where ``g(t0)`` is invertible."""
        d = self.g.det()
        t0 = 1
        while d(t0) == 0:
            t0 += 1
        return Fraction(t0)


def witness_from_columns(source: str, target: str, columns, provenance=Provenance.DERIVED, note="") -> Witness:
    """``columns[j]`` maps basis names of the source to polynomial strings."""
    names = resolve(source).basis_names
    index = {s: i for i, s in enumerate(names)}
    n = len(names)
    cols = []
    for spec in columns:
        col = [UniPoly()] * n
        for name, poly in spec.items():
            col[index[name]] = parse_poly(poly) if isinstance(poly, str) else UniPoly.constant(poly)
        cols.append(col)
    return Witness(source, target, PolyMatrix.from_columns(cols), provenance, note)


def scaling_witness(source: str, target: str | None = None) -> Witness:
    a = resolve(source)
    if target is None:
        target = "J22" if a.dim == 3 else {1: "Rn", 2: "Rn+Rn"}.get(a.dim, "zero")
    return Witness(source, target, PolyMatrix.scaling(a.dim), Provenance.SCALING, "g = tI")


@dataclass(frozen=True)
class AlgebraFamily:
    """Structure constants ``c[i][j][k]`` as rational functions of ``t``."""

    dim: int
    c_of_t: tuple

    def at(self, t0) -> Algebra:
        n = self.dim
        return Algebra(n, [[[self.c_of_t[i][j][k](t0) for k in range(n)] for j in range(n)] for i in range(n)])

    def is_constant(self) -> bool:
        return all(f.den == 1 and f.num.degree <= 0 for row in self.c_of_t for v in row for f in v)


def _poly_product(a: Algebra, u: Sequence[UniPoly], v: Sequence[UniPoly]) -> list[UniPoly]:
    n = a.dim
    out = [UniPoly()] * n
    for p in range(n):
        if u[p].is_zero():
            continue
        for q in range(n):
            if v[q].is_zero():
                continue
            row = a.c[p][q]
            if not any(row):
                continue
            s = u[p] * v[q]
            for m in range(n):
                if row[m]:
                    out[m] = out[m] + s * row[m]
    return out


def conjugate_family(a: Algebra, g: PolyMatrix) -> AlgebraFamily:
    """Constants of ``a`` in the basis given by the columns of ``g(t)``."""
    n = a.dim
    if g.n != n:
        raise ValueError("witness size does not match the algebra")
    det = g.det()
    if det.is_zero():
        raise IdenticallySingular("det g(t) is identically zero")
    adj = g.adjugate()
    cols = [g.col(j) for j in range(n)]
    c = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = _poly_product(a, cols[i], cols[j])
            w = []
            for k in range(n):
                acc = UniPoly()
                for m in range(n):
                    if not v[m].is_zero() and not adj[k][m].is_zero():
                        acc = acc + adj[k][m] * v[m]
                w.append(RationalFunction(acc, det))
            c[i][j] = c[j][i] = tuple(w)
    return AlgebraFamily(n, tuple(tuple(r) for r in c))


def limit_algebra(f: AlgebraFamily, label: str | None = None) -> Algebra:
    n = f.dim
    d = [[[limit_at_zero(f.c_of_t[i][j][k]) for k in range(n)] for j in range(n)] for i in range(n)]
    out = Algebra(n, d, label)
    if not is_jordan(out):
        raise NotJordanAtLimit("limit of a Jordan family is not Jordan")
    return out


@dataclass(frozen=True)
class ArrowCheck:
    ok: bool
    reason: str
    limit: Algebra | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_arrow(w: Witness) -> ArrowCheck:
    """Exact limit equality with the target's catalog constants (same basis order)."""
    src, dst = resolve(w.source), resolve(w.target)
    if src.dim != dst.dim:
        return ArrowCheck(False, "dimensions differ")
    try:
        lim = limit_algebra(conjugate_family(src, w.g), label=f"lim {w.source}")
    except PoleAtZero as exc:
        return ArrowCheck(False, f"pole at t=0: {exc}")
    if lim != dst:
        return ArrowCheck(False, "limit differs from target constants", lim)
    return ArrowCheck(True, "limit equals target", lim)


# ---------------------------------------------------------------------------
# necessary conditions


@dataclass(frozen=True)
class Profile:
    dim_der: int
    dim_rad: int
    dim_ann: int
    power2: int
    power3: int
    associative: bool
    z2: int


@lru_cache(maxsize=256)
def profile(a: Algebra) -> Profile:
    pf = power_filtration(a)
    return Profile(
        dim_der=derivation_dim(a),
        dim_rad=len(radical(a)),
        dim_ann=len(annihilator(a)),
        power2=pf.power_dim(2),
        power3=pf.power_dim(3),
        associative=is_associative(a).ok,
        z2=z2_dim(a),
    )


@dataclass(frozen=True)
class AuditCheck:
    item: str
    quantity: str
    relation: str
    source_value: object
    target_value: object
    passed: bool

    def line(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        return (
            f"{self.item:<5} {self.quantity:<12} {self.source_value!s:>5} {self.relation:<2} "
            f"{self.target_value!s:<5} {verdict}"
        )


@dataclass(frozen=True)
class AuditReport:
    source: str
    target: str
    checks: tuple[AuditCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[str]:
        return [c.item for c in self.checks if not c.passed]

    def lines(self) -> list[str]:
        out = [f"audit {self.source} -> {self.target}"]
        out.extend(c.line() for c in self.checks)
        out.append(f"verdict {'pass' if self.ok else 'fail'}")
        return out


def necessary_conditions_audit(source, target) -> AuditReport:
    """Necessary conditions for ``source`` to degenerate to ``target``.

    Items (i)-(iv), (vi), (vii); (iv) is checked for r = 2 and r = 3, giving
    seven checks.  The polynomial identity checked for (vi) is associativity.
    """
    s, t = profile(resolve(source)), profile(resolve(target))
    checks = (
        AuditCheck("(i)", "dim Der", "<", s.dim_der, t.dim_der, s.dim_der < t.dim_der),
        AuditCheck("(ii)", "dim Rad", "<=", s.dim_rad, t.dim_rad, s.dim_rad <= t.dim_rad),
        AuditCheck("(iii)", "dim Ann", "<=", s.dim_ann, t.dim_ann, s.dim_ann <= t.dim_ann),
        AuditCheck("(iv)", "dim J^2", ">=", s.power2, t.power2, s.power2 >= t.power2),
        AuditCheck("(iv)", "dim J^3", ">=", s.power3, t.power3, s.power3 >= t.power3),
        AuditCheck("(vi)", "associative", "=>", s.associative, t.associative, t.associative or not s.associative),
        AuditCheck("(vii)", "dim Z2", "<=", s.z2, t.z2, s.z2 <= t.z2),
    )
    name = lambda x: x if isinstance(x, str) else (x.label or "?")  # noqa: E731
    return AuditReport(name(source), name(target), checks)


# ---------------------------------------------------------------------------
# registered witnesses

EXPLICIT_WITNESSES = {
    ("J3", "J8"): [{"e1": "1/2", "e2": "1/2"}, {"e1": "1/2", "e2": "-1/2"}, {"e3": "t"}],
    ("J4", "J11"): [{"e1": "1"}, {"e2": "1"}, {"e3": "t"}],
    ("J5", "J19"): [{"e1": "1/2", "e2": "-1/2"}, {"e3": "t"}, {"e1": "1/2*t^2", "e2": "1/2*t^2"}],
    ("J15", "J23"): [{"n2": "t^2"}, {"n1": "t", "n2": "-t"}, {"e1": "t", "n1": "1", "n2": "1"}],
    ("J21", "J24"): [{"n1": "t"}, {"e1": "t^2", "n2": "-1"}, {"n2": "t^2"}],
}

REFERENCE_ARROWS = (
    ("J1", "J6"), ("J6", "J21"), ("J2", "J9"), ("J2", "J10"), ("J10", "J15"), ("J9", "J18"),
    ("J18", "J13"), ("J23", "J26"), ("J26", "J25"), ("J8", "J14"), ("J20", "J16"), ("J7", "J17"),
)

DERIVED_WITNESSES = {
    ("J1", "J6"): [{"e1": "1"}, {"e2": "1"}, {"e3": "t"}],
    ("J6", "J21"): [{"e1": "1"}, {"e2": "t", "n1": "t"}, {"e2": "t^2"}],
    ("J2", "J9"): [{"e1": "1"}, {"e3": "1"}, {"e2": "t"}],
    ("J2", "J10"): [{"e1": "1"}, {"e2": "1"}, {"e3": "t"}],
    ("J10", "J15"): [{"e1": "1"}, {"e2": "t"}, {"n1": "1"}],
    ("J9", "J18"): [{"e1": "1", "e2": "1"}, {"e2": "t", "n1": "t"}, {"e2": "t^2"}],
    ("J18", "J13"): [{"e1": "1"}, {"n1": "t"}, {"n2": "1"}],
    ("J23", "J26"): [{"n3": "t"}, {"n2": "1"}, {"n1": "t"}],
    ("J26", "J25"): [{"n1": "1", "n2": "1/2"}, {"n3": "1"}, {"n1": "t", "n2": "-1/2*t"}],
    ("J8", "J14"): [{"e1": "1"}, {"n1": "1"}, {"e2": "t"}],
    ("J20", "J16"): [{"e1": "1"}, {"n1": "t"}, {"n2": "1"}],
    ("J7", "J17"): [{"e2": "1"}, {"e1": "t"}, {"n1": "t"}],
}

JOR2_WITNESSES = {
    ("Re+Re", "Re+Rn"): [{"e1": "1"}, {"e2": "t"}],
    ("Re+Re", "B1"): [{"e1": "1", "e2": "1"}, {"e2": "t"}],
    ("B4", "B1"): [{"e1": "1"}, {"e2": "t"}],
    ("Re+Rn", "B3"): [{"e1": "t", "n1": "t"}, {"e1": "t^2"}],
    ("B1", "B3"): [{"e1": "t", "n1": "1"}, {"e1": "t^2", "n1": "2*t"}],
}


def explicit_witness(source: str, target: str) -> Witness:
    return witness_from_columns(source, target, EXPLICIT_WITNESSES[(source, target)], Provenance.EXPLICIT)


def derived_witness(source: str, target: str) -> Witness:
    return witness_from_columns(source, target, DERIVED_WITNESSES[(source, target)], Provenance.DERIVED)


def registered_witness(source: str, target: str) -> Witness | None:
    key = (source, target)
    if key in EXPLICIT_WITNESSES:
        return explicit_witness(source, target)
    if key in DERIVED_WITNESSES:
        return derived_witness(source, target)
    if key in JOR2_WITNESSES:
        return witness_from_columns(source, target, JOR2_WITNESSES[key])
    if target in ("J22", "Rn+Rn") and source != target:
        return scaling_witness(source, target)
    return None


# ---------------------------------------------------------------------------
# the closure graph


@dataclass(frozen=True)
class Arrow:
    source: str
    target: str
    status: ArrowStatus
    witness: Witness | None = None


@dataclass(frozen=True)
class ClosureGraph:
    nodes: tuple[str, ...]
    edges: tuple[Arrow, ...]
    rigid_set: tuple[str, ...]

    def successors(self, node: str) -> list[str]:
        return [e.target for e in self.edges if e.source == node]

    def predecessors(self, node: str) -> list[str]:
        return [e.source for e in self.edges if e.target == node]

    def edge(self, source: str, target: str) -> Arrow | None:
        return next((e for e in self.edges if e.source == source and e.target == target), None)

    def maximal_nodes(self) -> list[str]:
        targets = {e.target for e in self.edges}
        return [v for v in self.nodes if v not in targets]

    def path(self, source: str, target: str) -> list[str] | None:
        """Shortest directed path (breadth first, neighbours in edge order)."""
        prev = {source: None}
        queue = deque([source])
        while queue:
            v = queue.popleft()
            if v == target:
                out = []
                while v is not None:
                    out.append(v)
                    v = prev[v]
                return out[::-1]
            for w in self.successors(v):
                if w not in prev:
                    prev[w] = v
                    queue.append(w)
        return None

    def reachable_from(self, node: str) -> set[str]:
        seen, stack = {node}, [node]
        while stack:
            for w in self.successors(stack.pop()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen


def _checked_edge(source: str, target: str, witness: Witness | None, verify: bool) -> Arrow:
    report = necessary_conditions_audit(source, target)
    if not report.ok:
        raise AuditFailure(source, target, "fails " + ", ".join(report.failed()))
    if witness is None:
        return Arrow(source, target, ArrowStatus.CLAIMED_BY_REFERENCE)
    if verify:
        res = verify_arrow(witness)
        if not res:
            raise AuditFailure(source, target, f"witness does not verify: {res.reason}")
    return Arrow(source, target, ArrowStatus.VERIFIED_WITNESS, witness)


def build_closure_graph(*, use_derived: bool = True, verify: bool = True) -> ClosureGraph:
    """Orbit-closure graph on J1..J26 from the explicit witnesses and reference arrows.

    Every edge passes :func:`necessary_conditions_audit` (else
    :class:`AuditFailure`).  Cited arrows carry a witness only when
    ``use_derived`` is set.
    """
    nodes = tuple(catalog.jordan3_ids())
    edges = []
    for s, t in EXPLICIT_WITNESSES:
        edges.append(_checked_edge(s, t, explicit_witness(s, t), verify))
    for s, t in REFERENCE_ARROWS:
        w = derived_witness(s, t) if use_derived and (s, t) in DERIVED_WITNESSES else None
        edges.append(_checked_edge(s, t, w, verify))
    for s in nodes:
        if s != "J22":
            edges.append(_checked_edge(s, "J22", scaling_witness(s), verify))
    return ClosureGraph(nodes, tuple(edges), catalog.OMEGA)


JOR2_NODES = ("Re+Re", "Re+Rn", "Rn+Rn", "B1", "B2", "B3", "B4")
JOR2_MAXIMAL = ("Re+Re", "B2", "B4")


def build_dim2_graph(*, verify: bool = True) -> ClosureGraph:
    edges = [_checked_edge(s, t, registered_witness(s, t), verify) for s, t in JOR2_WITNESSES]
    for s in JOR2_NODES:
        if s != "Rn+Rn":
            edges.append(_checked_edge(s, "Rn+Rn", scaling_witness(s), verify))
    return ClosureGraph(JOR2_NODES, tuple(edges), JOR2_MAXIMAL)


@dataclass(frozen=True)
class CoverageReport:
    paths: dict
    admissible_into_rigid: dict

    @property
    def rigidity_consistent(self) -> bool:
        return not any(self.admissible_into_rigid.values())

    def lines(self) -> list[str]:
        out = []
        for node, p in self.paths.items():
            out.append(f"{node:<4} covered via {' -> '.join(p)}")
        for node, cands in self.admissible_into_rigid.items():
            shown = ", ".join(cands) if cands else "none"
            out.append(f"{node:<4} rigid; incoming candidates passing the audit: {shown}")
        return out


def rigid_coverage_check(g: ClosureGraph, candidates: Iterable[str] | None = None) -> CoverageReport:
    """Ancestor path in the rigid set for each other node, and no admissible arrow into it."""
    paths = {}
    for v in g.nodes:
        if v in g.rigid_set:
            continue
        best = None
        for r in g.rigid_set:
            p = g.path(r, v)
            if p is not None and (best is None or len(p) < len(best)):
                best = p
        if best is None:
            raise CoverageGap(v)
        paths[v] = best
    pool = list(g.nodes if candidates is None else candidates)
    admissible = {}
    for r in g.rigid_set:
        admissible[r] = [s for s in pool if s != r and necessary_conditions_audit(s, r).ok]
    return CoverageReport(paths, admissible)


# ---------------------------------------------------------------------------
# witness search


def _support_columns(n: int, coefficients: Sequence[Fraction]) -> list[tuple[Fraction, ...]]:
    cols = []
    for i in range(n):
        for a in coefficients:
            v = [Fraction(0)] * n
            v[i] = a
            cols.append(tuple(v))
    for i in range(n):
        for j in range(i + 1, n):
            for a, b in product(coefficients, repeat=2):
                v = [Fraction(0)] * n
                v[i], v[j] = a, b
                cols.append(tuple(v))
    return cols


def _scaled_limit(c, k: Sequence[int], n: int):
    """Limit of the constants ``c`` after ``f_i -> t^{k_i} f_i``, or None on a pole."""
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            v = []
            for m in range(n):
                x = c[i][j][m]
                e = k[i] + k[j] - k[m]
                if x and e < 0:
                    return None
                v.append(x if e == 0 else Fraction(0))
            row.append(v)
        out.append(row)
    return out


def derive_witness_search(
    source: str,
    target: str,
    degree_bound: int = 2,
    coefficients: Sequence = (1, -1),
) -> Witness | None:
    """Search curves ``g(t) = h diag(t^k)`` for a witness of ``source -> target``.

    ``h`` runs over invertible matrices whose columns have at most two nonzero
    entries drawn from ``coefficients``; ``k`` runs over ``{0..degree_bound}^n``.
    Enumeration order is fixed, so the first hit is reproducible.  Returns
    ``None`` when nothing is found, which proves nothing.
    """
    src, dst = resolve(source), resolve(target)
    if src.dim != dst.dim:
        return None
    n = src.dim
    coeffs = [Fraction(x) for x in coefficients]
    target_c = [[list(v) for v in row] for row in dst.c]
    cols = _support_columns(n, coeffs)
    exps = list(product(range(degree_bound + 1), repeat=n))
    for h_cols in product(cols, repeat=n):
        h = RatMatrix.from_columns(h_cols)
        try:
            c = change_of_basis(src, h).c
        except SingularMatrix:
            continue
        for k in exps:
            lim = _scaled_limit(c, k, n)
            if lim == target_c:
                g = PolyMatrix(
                    [[UniPoly.monomial(h_cols[j][i], k[j]) for j in range(n)] for i in range(n)]
                )
                w = Witness(source, target, g, Provenance.DERIVED, "found by search")
                if verify_arrow(w):
                    return w
    return None


# ---------------------------------------------------------------------------
# export

_EDGE_STYLE = {
    ArrowStatus.VERIFIED_WITNESS: "solid",
    ArrowStatus.CLAIMED_BY_REFERENCE: "dashed",
    ArrowStatus.AUDIT_ONLY: "dotted",
}


def to_dot(g: ClosureGraph, name: str = "closure") -> str:
    out = [f"digraph {name} {{", "  rankdir=TB;"]
    for v in g.nodes:
        a = resolve(v)
        der = derivation_dim(a)
        shape = "doublecircle" if v in g.rigid_set else "circle"
        out.append(f'  "{v}" [label="{v}\\nDer {der}, orbit {orbit_dimension(a)}", shape={shape}];')
    for e in g.edges:
        prov = e.witness.provenance.value if e.witness else "none"
        out.append(
            f'  "{e.source}" -> "{e.target}" [style={_EDGE_STYLE[e.status]}, '
            f'status="{e.status.value}", provenance="{prov}"];'
        )
    out.append("}")
    return "\n".join(out) + "\n"
