"""Real Jordan algebras of dimension at most three, with their tabulated invariants.

Bases follow the catalog convention: idempotent-like generators ``e_i`` first,
then radical generators ``n_i``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .algebra import (
    Algebra,
    annihilator,
    change_of_basis,
    direct_sum,
    derivation_dim,
    find_unit,
    is_associative,
    power_filtration,
    radical,
    radical_niltype,
    require_jordan,
    square_form_invariant,
    trace_form_signature,
)
from .exactla import RatMatrix, Signature, SingularMatrix, as_rational
from .formats import dump_jalg


class UnknownId(KeyError):
    pass


class AllZero(ValueError):
    pass


@dataclass(frozen=True)
class Expected:
    dim_aut: int
    dim_ann: int
    dim_rad: int
    niltype: tuple[int, ...] | None
    associative: bool
    unital: bool


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    algebra: Algebra
    expected: Expected
    description: str = ""


_E3 = ("e1", "e2", "e3")
_EEN = ("e1", "e2", "n1")
_ENN = ("e1", "n1", "n2")
_NNN = ("n1", "n2", "n3")

# id, basis, products, (dimAut, dimAnn, dimRad, niltype of radical, associative, unital), description
_ROWS = [
    ("Re", ("e1",), "e1*e1=e1", (0, 0, 0, None, True, True), "Re"),
    ("Rn", ("n1",), "", (1, 1, 1, (1,), True, False), "Rn"),
    ("B1", ("e1", "n1"), "e1*e1=e1; e1*n1=n1", (1, 0, 1, (1,), True, True), ""),
    ("B2", ("e1", "n1"), "e1*e1=e1; e1*n1=1/2 n1", (2, 0, 1, (1,), False, False), ""),
    ("B3", ("n1", "n2"), "n1*n1=n2", (2, 1, 2, (1, 1), True, False), ""),
    ("B4", ("e1", "e2"), "e1*e1=e1; e1*e2=e2; e2*e2=-e1", (0, 0, 0, None, True, True), ""),
    ("J1", _E3, "e1*e1=e1; e2*e2=e2; e3*e3=e3", (0, 0, 0, None, True, True), "Re1+Re2+Re3"),
    ("J2", _E3, "e1*e1=e1; e1*e2=e2; e2*e2=-e1; e3*e3=e3", (0, 0, 0, None, True, True), "B4+Re3"),
    ("J3", _E3, "e1*e1=e1; e1*e2=e2; e1*e3=e3; e2*e2=e1; e3*e3=-e1", (1, 0, 0, None, False, True), "J(V,f1)"),
    ("J4", _E3, "e1*e1=e1; e1*e2=e2; e1*e3=e3; e2*e2=-e1; e3*e3=-e1", (1, 0, 0, None, False, True), "J(V,f2)"),
    ("J5", _E3, "e1*e1=e1; e1*e2=e2; e1*e3=e3; e2*e2=e1; e3*e3=e1", (1, 0, 0, None, False, True), "J(V,f3)"),
    ("J6", _EEN, "e1*e1=e1; e2*e2=e2", (1, 1, 1, (1,), True, False), "Re1+Re2+Rn1"),
    ("J7", _EEN, "e1*e1=e1; e1*n1=1/2 n1; e2*e2=e2", (2, 0, 1, (1,), False, False), "B2+Re2"),
    ("J8", _EEN, "e1*e1=e1; e2*e2=e2; e1*n1=1/2 n1; e2*n1=1/2 n1", (2, 0, 1, (1,), False, True), ""),
    ("J9", _EEN, "e1*e1=e1; e1*n1=n1; e2*e2=e2", (1, 0, 1, (1,), True, True), "B1+Re2"),
    ("J10", _EEN, "e1*e1=e1; e1*e2=e2; e2*e2=-e1", (1, 1, 1, (1,), True, False), "B4+Rn1"),
    ("J11", _EEN, "e1*e1=e1; e1*e2=e2; e2*e2=-e1; e1*n1=n1", (2, 0, 1, (1,), False, True), ""),
    ("J12", _ENN, "e1*e1=e1; e1*n1=1/2 n1; e1*n2=1/2 n2", (6, 0, 2, (2,), False, False), ""),
    ("J13", _ENN, "e1*e1=e1; e1*n1=n1; e1*n2=n2", (4, 0, 2, (2,), True, True), ""),
    ("J14", _ENN, "e1*e1=e1; e1*n1=1/2 n1", (3, 1, 2, (2,), False, False), "B2+Rn2"),
    ("J15", _ENN, "e1*e1=e1; e1*n1=n1", (2, 1, 2, (2,), True, False), "B1+Rn2"),
    ("J16", _ENN, "e1*e1=e1; e1*n1=1/2 n1; e1*n2=n2", (3, 0, 2, (2,), False, False), ""),
    ("J17", _ENN, "e1*e1=e1", (4, 2, 2, (2,), True, False), "Re1+Rn1+Rn2"),
    ("J18", _ENN, "e1*e1=e1; n1*n1=n2; e1*n1=n1; e1*n2=n2", (2, 0, 2, (1, 1), True, True), ""),
    ("J19", _ENN, "e1*e1=e1; n1*n1=n2; e1*n1=1/2 n1", (2, 1, 2, (1, 1), False, False), ""),
    ("J20", _ENN, "e1*e1=e1; n1*n1=n2; e1*n2=n2; e1*n1=1/2 n1", (2, 0, 2, (1, 1), False, False), ""),
    ("J21", _ENN, "e1*e1=e1; n1*n1=n2", (2, 1, 2, (1, 1), True, False), "B3+Re1"),
    ("J22", _NNN, "", (9, 3, 3, (3,), True, False), "Rn1+Rn2+Rn3"),
    ("J23", _NNN, "n2*n3=n1; n3*n3=n2", (3, 1, 3, (1, 1, 1), True, False), ""),
    ("J24", _NNN, "n1*n1=n3; n2*n2=n3", (4, 1, 3, (2, 1), True, False), ""),
    ("J25", _NNN, "n1*n1=n2", (5, 2, 3, (2, 1), True, False), "B3+Rn3"),
    ("J26", _NNN, "n1*n2=n3", (4, 1, 3, (2, 1), True, False), ""),
]

# For direct-sum entries: summand ids and the permutation taking direct_sum
# order to the catalog basis order (new basis i is old order[i]).
DIRECT_SUMS = {
    "J2": (("B4", "Re"), (0, 1, 2)),
    "J6": (("Re", "Re", "Rn"), (0, 1, 2)),
    "J7": (("B2", "Re"), (0, 2, 1)),
    "J9": (("B1", "Re"), (0, 2, 1)),
    "J10": (("B4", "Rn"), (0, 1, 2)),
    "J14": (("B2", "Rn"), (0, 1, 2)),
    "J15": (("B1", "Rn"), (0, 1, 2)),
    "J17": (("Re", "Rn", "Rn"), (0, 1, 2)),
    "J21": (("B3", "Re"), (2, 0, 1)),
    "J25": (("B3", "Rn"), (0, 1, 2)),
}

OMEGA = ("J1", "J2", "J3", "J4", "J5", "J7", "J12", "J20")


def _build() -> dict[str, CatalogEntry]:
    out = {}
    for cid, names, table, exp, desc in _ROWS:
        alg = Algebra.from_table(names, table, label=cid)
        out[cid] = CatalogEntry(cid, alg, Expected(*exp), desc)
    return out


_ENTRIES = _build()


def ids(dim: int | None = None) -> list[str]:
    """Catalog ids in table order, optionally only one dimension."""
    return [k for k, e in _ENTRIES.items() if dim is None or e.algebra.dim == dim]


def jordan3_ids() -> list[str]:
    return [f"J{i}" for i in range(1, 27)]


def jor2_algebras() -> dict[str, Algebra]:
    """The seven orbits of two-dimensional Jordan algebras, keyed by node name."""
    re, rn = algebra("Re"), algebra("Rn")
    out = {}
    for key, (x, y), names in (
        ("Re+Re", (re, re), ("e1", "e2")),
        ("Re+Rn", (re, rn), ("e1", "n1")),
        ("Rn+Rn", (rn, rn), ("n1", "n2")),
    ):
        s = direct_sum(x, y)
        out[key] = Algebra(s.dim, s.c, key, names)
    for b in ("B1", "B2", "B3", "B4"):
        out[b] = algebra(b)
    return out


def get(cid: str) -> CatalogEntry:
    try:
        return _ENTRIES[cid]
    except KeyError:
        raise UnknownId(cid) from None


def algebra(cid: str) -> Algebra:
    return get(cid).algebra


# ---------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class Invariants:
    dim_der: int
    dim_ann: int
    dim_rad: int
    niltype: tuple[int, ...] | None
    associative: bool
    unital: bool

    def as_expected(self) -> Expected:
        return Expected(self.dim_der, self.dim_ann, self.dim_rad, self.niltype, self.associative, self.unital)


@lru_cache(maxsize=512)
def invariants(a: Algebra) -> Invariants:
    return Invariants(
        dim_der=derivation_dim(a),
        dim_ann=len(annihilator(a)),
        dim_rad=len(radical(a)),
        niltype=radical_niltype(a),
        associative=is_associative(a).ok,
        unital=find_unit(a) is not None,
    )


def table_check(cid: str) -> dict[str, tuple]:
    """Field-by-field (expected, computed) pairs that disagree; empty when all match."""
    e = get(cid)
    got = invariants(e.algebra).as_expected()
    diffs = {}
    for k, v in asdict(e.expected).items():
        g = getattr(got, k)
        if v != g:
            diffs[k] = (v, g)
    return diffs


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    dim_rad: int
    dim_ann: int
    dim_der: int
    niltype_of_radical: tuple[int, ...] | None
    associative: bool
    unital: bool
    power_dims: tuple[int, ...]
    trace_form_signature: Signature
    square_form_invariant: tuple[int, int] | None

    def fields(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


@lru_cache(maxsize=512)
def fingerprint(a: Algebra) -> Fingerprint:
    require_jordan(a)
    inv = invariants(a)
    return Fingerprint(
        dim=a.dim,
        dim_rad=inv.dim_rad,
        dim_ann=inv.dim_ann,
        dim_der=inv.dim_der,
        niltype_of_radical=inv.niltype,
        associative=inv.associative,
        unital=inv.unital,
        power_dims=power_filtration(a).power_dims,
        trace_form_signature=trace_form_signature(a),
        square_form_invariant=square_form_invariant(a),
    )


@dataclass(frozen=True)
class DistinctnessReport:
    labels: tuple[str, ...]
    collisions: tuple[tuple[str, str], ...]

    @property
    def ok(self) -> bool:
        return not self.collisions

    @property
    def distinct(self) -> int:
        return len(self.labels) - len({b for _, b in self.collisions})


def pairwise_distinct_audit(members: dict[str, Algebra] | None = None) -> DistinctnessReport:
    """Compare fingerprints pairwise; defaults to J1..J26."""
    if members is None:
        members = {cid: algebra(cid) for cid in jordan3_ids()}
    labels = tuple(members)
    fps = {k: fingerprint(a) for k, a in members.items()}
    collisions = []
    for i, x in enumerate(labels):
        for y in labels[i + 1:]:
            if fps[x] == fps[y]:
                collisions.append((x, y))
    return DistinctnessReport(labels, tuple(collisions))


def identify(a: Algebra) -> list[str]:
    """Catalog ids whose fingerprint equals that of ``a``."""
    fp = fingerprint(a)
    return [cid for cid in ids(a.dim) if fingerprint(algebra(cid)) == fp]


# ---------------------------------------------------------------------------
# the family N1^2 = a N3, N2^2 = b N3, N1 N2 = g N3


def nilpotent_21_algebra(alpha, beta, gamma) -> Algebra:
    al, be, ga = (as_rational(x) for x in (alpha, beta, gamma))
    return Algebra.from_products(
        3,
        {(0, 0): (0, 0, al), (1, 1): (0, 0, be), (0, 1): (0, 0, ga)},
        label=f"N({al},{be},{ga})",
        names=("N1", "N2", "N3"),
    )


@dataclass(frozen=True)
class IsoWitness:
    """``change_of_basis(source, matrix)`` is claimed to equal ``target`` exactly."""

    source_id: str
    target_id: str
    matrix: RatMatrix
    source: Algebra
    target: Algebra


def verify_iso(w: IsoWitness) -> bool:
    if not w.matrix.is_invertible():
        raise SingularMatrix("witness matrix is singular")
    return change_of_basis(w.source, w.matrix) == w.target


def _rational_sqrt(x: Fraction) -> Fraction | None:
    from math import isqrt

    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


class IrrationalSqrtDelta(ValueError):
    """The classifying basis change needs an irrational square root."""

    def __init__(self, target_id: str, delta: Fraction):
        super().__init__(f"class {target_id}; witness needs sqrt of {delta}")
        self.target_id = target_id
        self.delta = delta


@dataclass(frozen=True)
class Classification:
    target_id: str
    delta: Fraction
    witness: IsoWitness | None
    case: str


def classify_nilpotent_21(alpha, beta, gamma, *, strict: bool = False) -> Classification:
    """Class of ``N1^2 = aN3, N2^2 = bN3, N1N2 = gN3`` among J24, J25, J26.

    The witness matrix is the inverse of the normalizing map ``N_i -> ...`` so that
    it verifies as ``change_of_basis(family, matrix) == target``.  When the map
    needs an irrational square root the witness is ``None`` (or
    :class:`IrrationalSqrtDelta` is raised with ``strict=True``).

    In the case delta = 0, gamma != 0 the normalizing map uses ``1/alpha``; here
    beta != 0 forces alpha = gamma^2 / beta != 0.
    """
    al, be, ga = (as_rational(x) for x in (alpha, beta, gamma))
    if not (al or be or ga):
        raise AllZero("alpha, beta, gamma all vanish")
    delta = -al * be + ga * ga
    h = Fraction(1, 2)
    # images of N1, N2, N3 in the target basis (n1, n2, n3)
    if be == 0:
        if ga != 0:
            target, case = "J26", "beta=0, gamma!=0"
            images = [(1, al / (2 * ga), 0), (0, 1, 0), (0, 0, 1 / ga)]
        else:
            target, case = "J25", "beta=0, gamma=0"
            images = [(1, 0, 0), (0, 0, 1), (0, 1 / al, 0)]
    elif delta > 0:
        target, case = "J26", "delta>0"
        s = _rational_sqrt(delta)
        images = None if s is None else [
            (h + ga / (2 * s), -h + ga / (2 * s), 0),
            (be / (2 * s), be / (2 * s), 0),
            (0, 0, be / (2 * delta)),
        ]
    elif delta < 0:
        target, case = "J24", "delta<0"
        s = _rational_sqrt(-delta)
        images = None if s is None else [(1, ga / s, 0), (0, be / s, 0), (0, 0, -be / delta)]
    else:
        target = "J25"
        if ga == 0:
            case = "delta=0, gamma=0"
            images = [(0, 0, 1), (1, 0, 0), (0, 1 / be, 0)]
        else:
            case = "delta=0, gamma!=0"
            images = [(1, 0, 1), (ga / al, 0, 0), (0, 1 / al, 0)]
    if images is None:
        if strict:
            raise IrrationalSqrtDelta(target, delta)
        return Classification(target, delta, None, case)
    phi = RatMatrix.from_columns(images)
    src = nilpotent_21_algebra(al, be, ga)
    w = IsoWitness(src.label, target, phi.inverse(), src, algebra(target))
    return Classification(target, delta, w, case)


# ---------------------------------------------------------------------------
# export


def manifest_text() -> str:
    """One line per entry: id, dim and the expected invariants, stable order."""
    lines = ["# id dim dimAut dimAnn dimRad niltype associative unital"]
    for cid in ids():
        e = get(cid)
        x = e.expected
        nt = "-" if x.niltype is None else "(" + ",".join(map(str, x.niltype)) + ")"
        lines.append(
            f"{cid} {e.algebra.dim} {x.dim_aut} {x.dim_ann} {x.dim_rad} {nt} "
            f"{int(x.associative)} {int(x.unital)}"
        )
    return "\n".join(lines) + "\n"


def export_catalog(directory) -> list[Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    written = []
    for cid in ids():
        p = d / f"{cid}.jalg"
        p.write_text(dump_jalg(algebra(cid), comment=cid), encoding="utf-8")
        written.append(p)
    m = d / "manifest.txt"
    m.write_text(manifest_text(), encoding="utf-8")
    written.append(m)
    return written
