"""Commutative algebras given by rational structure constants, and their invariants."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import lcm
from typing import Sequence

from .exactla import (
    RatMatrix,
    Signature,
    Vector,
    as_rational,
    as_vector,
    contains,
    coordinates,
    kernel_basis,
    rank,
    signature,
    solve,
    span,
)

HALF = Fraction(1, 2)
ZERO = Fraction(0)
ONE = Fraction(1)


class AlgebraError(ValueError):
    pass


class DimensionMismatch(AlgebraError):
    pass


class NotCommutative(AlgebraError):
    pass


class NotJordan(AlgebraError):
    pass


class NotIdempotent(AlgebraError):
    pass


class EigenspaceGap(AlgebraError):
    """Eigenspaces for 1, 1/2 and 0 do not span the algebra."""


class InternalCheckFailure(RuntimeError):
    """A computed object failed its own post-condition (a bug, not bad input)."""


@dataclass(frozen=True)
class Algebra:
    """An ``n``-dimensional commutative algebra, ``e_i e_j = sum_k c[i][j][k] e_k``.

    Indices are 0-based in code; the text format and all reports are 1-based.
    ``label`` and ``names`` are cosmetic and ignored by equality.
    """

    dim: int
    c: tuple
    label: str | None = field(default=None, compare=False)
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.dim
        if not isinstance(n, int) or n < 1:
            raise AlgebraError("algebra dimension must be a positive integer")
        try:
            c = tuple(tuple(as_vector(self.c[i][j]) for j in range(n)) for i in range(n))
        except (IndexError, TypeError) as exc:
            raise AlgebraError("structure constants must be an n x n x n tensor") from exc
        if len(self.c) != n or any(len(self.c[i]) != n for i in range(n)) or any(
            len(v) != n for row in c for v in row
        ):
            raise AlgebraError("structure constants must be an n x n x n tensor")
        for i in range(n):
            for j in range(i):
                if c[i][j] != c[j][i]:
                    raise NotCommutative(f"c[{i + 1}][{j + 1}] != c[{j + 1}][{i + 1}]")
        object.__setattr__(self, "c", c)
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != n:
                raise AlgebraError("need one basis name per dimension")
            object.__setattr__(self, "names", names)

    # construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, n: int, label: str | None = None, names=None) -> Algebra:
        z = [[[0] * n for _ in range(n)] for _ in range(n)]
        return cls(n, z, label, names)

    @classmethod
    def from_products(cls, n: int, products: dict, label=None, names=None) -> Algebra:
        """``products`` maps 0-based ``(i, j)`` to a length-``n`` vector; symmetric completion."""
        c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j), v in products.items():
            v = as_vector(v)
            if len(v) != n:
                raise DimensionMismatch("product vector has wrong length")
            for (a, b) in {(i, j), (j, i)}:
                if any(c[a][b]) and c[a][b] != list(v):
                    raise NotCommutative(f"conflicting products for e{i + 1}e{j + 1}")
                c[a][b] = list(v)
        return cls(n, c, label, names)

    @classmethod
    def from_table(cls, names: Sequence[str], table: str, label: str | None = None) -> Algebra:
        """Build from text such as ``"e1*e1 = e1; e1*n1 = 1/2 n1"``; unlisted products vanish."""
        names = tuple(names)
        index = {s: i for i, s in enumerate(names)}
        n = len(names)
        prods = {}
        for rule in filter(None, (r.strip() for r in table.split(";"))):
            lhs, rhs = (s.strip() for s in rule.split("="))
            x, y = (s.strip() for s in lhs.split("*"))
            vec = [ZERO] * n
            for sign, coef, name in _RHS_TERM.findall(rhs):
                k = index[name]
                val = Fraction(coef) if coef else ONE
                vec[k] += -val if sign == "-" else val
            prods[(index[x], index[y])] = vec
        return cls.from_products(n, prods, label, names)

    # basic access -----------------------------------------------------------

    @property
    def basis_names(self) -> tuple[str, ...]:
        return self.names or tuple(f"e{i + 1}" for i in range(self.dim))

    def basis(self, i: int) -> Vector:
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    def vector(self, **coords) -> Vector:
        """Vector by basis name, e.g. ``a.vector(e1=1, n1=Fraction(1, 2))``."""
        idx = {s: i for i, s in enumerate(self.basis_names)}
        v = [ZERO] * self.dim
        for name, x in coords.items():
            v[idx[name]] = as_rational(x)
        return tuple(v)

    @cached_property
    def _nonzero(self) -> tuple:
        n = self.dim
        return tuple(
            (i, j, tuple((k, x) for k, x in enumerate(self.c[i][j]) if x))
            for i in range(n)
            for j in range(n)
            if any(self.c[i][j])
        )

    def mul(self, x: Sequence, y: Sequence) -> Vector:
        out = [ZERO] * self.dim
        for i, j, terms in self._nonzero:
            xi = x[i]
            if not xi:
                continue
            s = xi * y[j]
            if s:
                for k, v in terms:
                    out[k] += s * v
        return tuple(out)

    def left_matrix(self, x: Sequence) -> RatMatrix:
        """Matrix of ``y -> x*y`` (column ``m`` is ``x*e_m``)."""
        cols = [self.mul(x, self.basis(m)) for m in range(self.dim)]
        return RatMatrix.from_columns(cols)

    def is_zero_algebra(self) -> bool:
        return not self._nonzero

    def format_table(self) -> str:
        names = self.basis_names
        lines = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                v = self.c[i][j]
                if any(v):
                    lines.append(f"{names[i]}*{names[j]} = {format_vector(v, names)}")
        return "\n".join(lines) if lines else "(all products zero)"


_RHS_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*([A-Za-z]\w*)")


def format_vector(v: Sequence[Fraction], names: Sequence[str]) -> str:
    parts = []
    for x, s in zip(v, names):
        if not x:
            continue
        a = abs(x)
        body = s if a == 1 else f"{a} {s}"
        parts.append(("-" if x < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# products and identities


def multiply(a: Algebra, x: Sequence, y: Sequence) -> Vector:
    x, y = as_vector(x), as_vector(y)
    if len(x) != a.dim or len(y) != a.dim:
        raise DimensionMismatch(f"vectors must have length {a.dim}")
    return a.mul(x, y)


def _add(u, v):
    return tuple(p + q for p, q in zip(u, v))


def _sub(u, v):
    return tuple(p - q for p, q in zip(u, v))


def _scale(s, v):
    return tuple(s * x for x in v)


@dataclass(frozen=True)
class Verdict:
    """Outcome of an identity check; truthy when the identity holds.

    ``witness`` holds the first failing 1-based index tuple and ``residual``
    the nonzero coefficient found there.
    """

    ok: bool
    witness: tuple[int, ...] | None = None
    residual: Fraction | None = None

    def __bool__(self) -> bool:
        return self.ok


def integer_constants(a: Algebra) -> tuple[int, list]:
    """``(D, C)`` with ``C[i][j][k] = D * c[i][j][k]`` integral and ``D > 0`` minimal."""
    d = 1
    for row in a.c:
        for v in row:
            for x in v:
                if x.denominator != 1:
                    d = lcm(d, x.denominator)
    return d, [[[int(x * d) for x in v] for v in row] for row in a.c]


def _int_mul(C, n, u, v):
    out = [0] * n
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                if vj:
                    s = ui * vj
                    for k, x in enumerate(C[i][j]):
                        if x:
                            out[k] += s * x
    return out


@lru_cache(maxsize=1024)
def is_jordan(a: Algebra) -> Verdict:
    """Evaluate the Jordan structure-constant system over all ``(i, j, k, l, p)``.

    Per basis 4-tuple this is the linearized identity
    ``(x,y,zw) + (w,y,zx) + (z,y,xw) = 0`` with ``(x,y,z) = (xy)z - x(yz)``.
    Every term is quadratic in the constants, so it is evaluated on ``D c``
    in integers and the residual is divided by ``D^2``.
    """
    n = a.dim
    d, C = integer_constants(a)
    e = [[int(i == k) for k in range(n)] for i in range(n)]
    P = C  # P[i][j] = D * (e_i e_j)

    def m(u, v):
        return _int_mul(C, n, u, v)

    for i, j, k, l in product(range(n), repeat=4):
        # (e_i e_j)(e_k e_l) - e_i(e_j(e_k e_l)) and the two rotations, all scaled by D^2
        t1 = m(P[i][j], P[k][l])
        t2 = m(e[i], m(e[j], P[k][l]))
        t3 = m(P[l][j], P[k][i])
        t4 = m(e[l], m(e[j], P[k][i]))
        t5 = m(P[k][j], P[i][l])
        t6 = m(e[k], m(e[j], P[i][l]))
        for p in range(n):
            r = t1[p] - t2[p] + t3[p] - t4[p] + t5[p] - t6[p]
            if r:
                return Verdict(False, (i + 1, j + 1, k + 1, l + 1, p + 1), Fraction(r, d * d))
    return Verdict(True)


def jordan_defect(a: Algebra, x: Sequence, y: Sequence) -> Vector:
    """``((xx)y)x - (xx)(yx)`` for concrete vectors."""
    x2 = a.mul(x, x)
    return _sub(a.mul(a.mul(x2, y), x), a.mul(x2, a.mul(y, x)))


def associator(a: Algebra, x, y, z) -> Vector:
    return _sub(a.mul(a.mul(x, y), z), a.mul(x, a.mul(y, z)))


def is_associative(a: Algebra) -> Verdict:
    n = a.dim
    e = [a.basis(i) for i in range(n)]
    for i, j, k in product(range(n), repeat=3):
        r = associator(a, e[i], e[j], e[k])
        for p, x in enumerate(r):
            if x:
                return Verdict(False, (i + 1, j + 1, k + 1, p + 1), x)
    return Verdict(True)


def require_jordan(a: Algebra) -> None:
    v = is_jordan(a)
    if not v:
        raise NotJordan(f"Jordan identity fails at (i,j,k,l,p)={v.witness}, residual {v.residual}")


def find_unit(a: Algebra) -> Vector | None:
    n = a.dim
    rows, rhs = [], []
    for i in range(n):
        for k in range(n):
            rows.append([a.c[m][i][k] for m in range(n)])
            rhs.append(ONE if i == k else ZERO)
    return solve(rows, rhs)


# ---------------------------------------------------------------------------
# basis change and constructions


def _as_matrix(g) -> RatMatrix:
    return g if isinstance(g, RatMatrix) else RatMatrix(g)


def change_of_basis(a: Algebra, g) -> Algebra:
    """Structure constants of ``a`` in the basis formed by the columns of ``g``.

    With ``f_j = sum_i g[i][j] e_i`` this returns ``f_i f_j = sum_k c'[i][j][k] f_k``,
    i.e. the product ``x *' y = g^{-1}(gx . gy)`` on coordinate space.
    Raises :class:`~jorvar.exactla.SingularMatrix` when ``g`` is not invertible.
    """
    g = _as_matrix(g)
    if g.shape != (a.dim, a.dim):
        raise DimensionMismatch("basis change must be dim x dim")
    ginv = g.inverse()
    f = g.columns()
    n = a.dim
    prods = {}
    for i in range(n):
        for j in range(i, n):
            prods[(i, j)] = ginv @ a.mul(f[i], f[j])
    return Algebra.from_products(n, prods, a.label, a.names)


def permute(a: Algebra, order: Sequence[int], names=None) -> Algebra:
    """Reorder the basis: new basis vector ``i`` is old ``order[i]`` (0-based)."""
    n = a.dim
    g = RatMatrix([[1 if order[j] == i else 0 for j in range(n)] for i in range(n)])
    out = change_of_basis(a, g)
    if names is None and a.names:
        names = tuple(a.names[k] for k in order)
    return Algebra(n, out.c, a.label, names)


def direct_sum(a: Algebra, b: Algebra, label: str | None = None) -> Algebra:
    n, m = a.dim, b.dim
    N = n + m
    c = [[[ZERO] * N for _ in range(N)] for _ in range(N)]
    for i, j in product(range(n), repeat=2):
        for k in range(n):
            c[i][j][k] = a.c[i][j][k]
    for i, j in product(range(m), repeat=2):
        for k in range(m):
            c[n + i][n + j][n + k] = b.c[i][j][k]
    names = a.basis_names + b.basis_names
    if len(set(names)) != len(names):
        names = None
    return Algebra(N, c, label, names)


def unitalize(a: Algebra, label: str | None = None) -> Algebra:
    """``a`` with a formally adjoined identity appended as the last basis vector."""
    n = a.dim
    N = n + 1
    c = [[[ZERO] * N for _ in range(N)] for _ in range(N)]
    for i, j in product(range(n), repeat=2):
        for k in range(n):
            c[i][j][k] = a.c[i][j][k]
    for i in range(N):
        c[i][n][i] = ONE
        c[n][i][i] = ONE
    names = a.basis_names + ("1",)
    if len(set(names)) != len(names):
        names = None
    return Algebra(N, c, label or (f"{a.label}#" if a.label else None), names)


# ---------------------------------------------------------------------------
# subspaces and filtrations


def subspace_product(a: Algebra, U: Sequence[Vector], V: Sequence[Vector]) -> tuple[Vector, ...]:
    return span((a.mul(u, v) for u in U for v in V), a.dim)


def full_space(a: Algebra) -> tuple[Vector, ...]:
    return tuple(a.basis(i) for i in range(a.dim))


@dataclass(frozen=True)
class PowerFiltration:
    """``powers[r-1]`` spans J^r and ``lcs[r-1]`` spans J^<r>, both from r = 1."""

    powers: tuple
    lcs: tuple
    niltype: tuple[int, ...] | None

    @property
    def power_dims(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.powers)

    @property
    def lcs_dims(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.lcs)

    def power_dim(self, r: int) -> int:
        """dim J^r, with the last computed value extended for larger r."""
        return len(self.powers[min(r, len(self.powers)) - 1])


def power_filtration(a: Algebra) -> PowerFiltration:
    n = a.dim
    J = full_space(a)
    powers = [J]
    for r in range(2, n + 2):
        terms = []
        for i in range(1, r):
            terms.extend(subspace_product(a, powers[i - 1], powers[r - i - 1]))
        powers.append(span(terms, n))
    lcs = [J]
    while True:
        nxt = subspace_product(a, lcs[-1], J)
        if nxt == lcs[-1]:
            break
        lcs.append(nxt)
        if len(lcs) > n + 1:
            raise InternalCheckFailure("lower central series failed to stabilize")
    niltype = None
    if len(lcs[-1]) == 0:
        dims = [len(s) for s in lcs]
        niltype = tuple(dims[i] - dims[i + 1] for i in range(len(dims) - 1))
    return PowerFiltration(tuple(powers), tuple(lcs), niltype)


def restrict(a: Algebra, basis: Sequence[Vector], label: str | None = None) -> Algebra:
    """Structure constants of the subalgebra spanned by ``basis`` (in that basis)."""
    basis = [as_vector(v) for v in basis]
    m = len(basis)
    if m == 0:
        raise AlgebraError("cannot restrict to the zero subspace")
    prods = {}
    for i in range(m):
        for j in range(i, m):
            coords = coordinates(basis, a.mul(basis[i], basis[j]))
            if coords is None:
                raise AlgebraError("subspace is not closed under multiplication")
            prods[(i, j)] = coords
    return Algebra.from_products(m, prods, label)


def is_ideal(a: Algebra, basis: Sequence[Vector]) -> bool:
    return all(
        contains(basis, a.mul(v, a.basis(i)), a.dim) for v in basis for i in range(a.dim)
    )


def annihilator(a: Algebra) -> list[Vector]:
    n = a.dim
    rows = [[a.c[m][i][k] for m in range(n)] for i in range(n) for k in range(n)]
    return kernel_basis(rows)


def trace_form(a: Algebra) -> RatMatrix:
    """Gram matrix ``tr L(e_i e_j)``."""
    n = a.dim
    tr = [sum((a.c[k][m][m] for m in range(n)), ZERO) for k in range(n)]
    return RatMatrix(
        [[sum((a.c[i][j][k] * tr[k] for k in range(n)), ZERO) for j in range(n)] for i in range(n)]
    )


def radical(a: Algebra) -> list[Vector]:
    """Basis of Rad(a), the kernel of the trace form ``tr L(xy)``.

    The result is checked to be a nilpotent ideal.
    """
    require_jordan(a)
    basis = kernel_basis(trace_form(a))
    if basis:
        if not is_ideal(a, basis):
            raise InternalCheckFailure("trace-form kernel is not an ideal")
        if power_filtration(restrict(a, basis)).niltype is None:
            raise InternalCheckFailure("trace-form kernel is not nilpotent")
    return basis


def radical_niltype(a: Algebra) -> tuple[int, ...] | None:
    rad = radical(a)
    if not rad:
        return None
    return power_filtration(restrict(a, rad)).niltype


def derivation_basis(a: Algebra) -> list[RatMatrix]:
    """Derivations ``D`` with ``D(e_i) = sum_p D[p][i] e_p``."""
    n = a.dim
    rows = []
    # unknown D[p][q] sits in column p*n + q
    for i in range(n):
        for j in range(i, n):
            for p in range(n):
                row = [ZERO] * (n * n)
                for q in range(n):
                    row[p * n + q] += a.c[i][j][q]
                    row[q * n + i] -= a.c[q][j][p]
                    row[q * n + j] -= a.c[i][q][p]
                rows.append(row)
    ker = kernel_basis(rows)
    return [RatMatrix([v[p * n:(p + 1) * n] for p in range(n)]) for v in ker]


def derivation_dim(a: Algebra) -> int:
    return len(derivation_basis(a))


def orbit_dimension(a: Algebra) -> int:
    return a.dim ** 2 - derivation_dim(a)


# ---------------------------------------------------------------------------
# idempotents and Peirce decompositions


def verify_idempotent(a: Algebra, e: Sequence) -> bool:
    e = as_vector(e)
    return any(e) and a.mul(e, e) == e


def eigenspace(a: Algebra, x: Sequence, lam) -> list[Vector]:
    lam = as_rational(lam)
    L = a.left_matrix(as_vector(x))
    return kernel_basis(L - RatMatrix.identity(a.dim).scale(lam))


@dataclass(frozen=True)
class PeirceDecomposition:
    idempotent: Vector
    one: tuple
    half: tuple
    zero: tuple
    checks: dict = field(compare=False, default_factory=dict)

    @property
    def dims(self) -> tuple[int, int, int]:
        return len(self.one), len(self.half), len(self.zero)

    def component(self, lam) -> tuple:
        return {ONE: self.one, HALF: self.half, ZERO: self.zero}[as_rational(lam)]


def _prod_in(a: Algebra, U, V, W) -> bool:
    return all(contains(W, a.mul(u, v), a.dim) for u in U for v in V)


def peirce_decompose(a: Algebra, e: Sequence) -> PeirceDecomposition:
    e = as_vector(e)
    if not verify_idempotent(a, e):
        raise NotIdempotent("e*e != e or e = 0")
    require_jordan(a)
    n = a.dim
    P1 = span(eigenspace(a, e, 1), n)
    Ph = span(eigenspace(a, e, HALF), n)
    P0 = span(eigenspace(a, e, 0), n)
    if len(span(P1 + Ph + P0, n)) != n:
        raise EigenspaceGap("Peirce spaces do not span the algebra")
    zero = ()
    checks = {
        "P1*P1 in P1": _prod_in(a, P1, P1, P1),
        "P1*P0 = 0": _prod_in(a, P1, P0, zero),
        "P0*P0 in P0": _prod_in(a, P0, P0, P0),
        "P0*P1/2 in P1/2": _prod_in(a, P0, Ph, Ph),
        "P1*P1/2 in P1/2": _prod_in(a, P1, Ph, Ph),
        "P1/2*P1/2 in P0+P1": _prod_in(a, Ph, Ph, span(P0 + P1, n)),
    }
    return PeirceDecomposition(e, P1, Ph, P0, checks)


@dataclass(frozen=True)
class RefinedPeirce:
    """Refined decomposition ``J = sum P_ij`` relative to orthogonal idempotents.

    ``algebra`` is the algebra the components live in (the unitalization when
    the given idempotents do not already sum to an identity); ``idempotents``
    includes the complementary one in that case, listed first.
    """

    algebra: Algebra
    idempotents: tuple
    components: dict
    checks: dict


def refined_peirce(a: Algebra, idempotents: Sequence[Sequence]) -> RefinedPeirce:
    require_jordan(a)
    es = [as_vector(e) for e in idempotents]
    for i, e in enumerate(es):
        if not verify_idempotent(a, e):
            raise NotIdempotent(f"idempotent #{i + 1} is not idempotent")
        for f in es[i + 1:]:
            if any(a.mul(e, f)):
                raise AlgebraError("idempotents are not pairwise orthogonal")
    total = tuple(sum(col, ZERO) for col in zip(*es))
    unit = find_unit(a)
    if unit is not None and unit == total:
        A = a
    else:
        A = unitalize(a)
        es = [e + (ZERO,) for e in es]
        one = A.basis(a.dim)
        e0 = _sub(one, tuple(sum(col, ZERO) for col in zip(*es)))
        es = [e0] + es
    n = A.dim
    m = len(es)
    comps = {}
    for i in range(m):
        for j in range(i, m):
            rows = []
            for k in range(m):
                lam = (ONE if k == i else ZERO) if i == j else (HALF if k in (i, j) else ZERO)
                L = A.left_matrix(es[k]) - RatMatrix.identity(n).scale(lam)
                rows.extend(L.entries)
            comps[(i, j)] = span(kernel_basis(rows), n)
    if len(span([v for c in comps.values() for v in c], n)) != n:
        raise EigenspaceGap("refined Peirce components do not span")

    def P(i, j):
        return comps[(min(i, j), max(i, j))]

    checks = {}
    idx = range(m)
    for i in idx:
        checks[f"P{i}{i}^2 in P{i}{i}"] = _prod_in(A, P(i, i), P(i, i), P(i, i))
        for j in idx:
            if j == i:
                continue
            checks[f"P{i}{j}*P{i}{i} in P{i}{j}"] = _prod_in(A, P(i, j), P(i, i), P(i, j))
            checks[f"P{i}{j}^2 in P{i}{i}+P{j}{j}"] = _prod_in(
                A, P(i, j), P(i, j), span(P(i, i) + P(j, j), n)
            )
            checks[f"P{i}{i}*P{j}{j} = 0"] = _prod_in(A, P(i, i), P(j, j), ())
            for k in idx:
                if k in (i, j):
                    continue
                checks[f"P{i}{j}*P{j}{k} in P{i}{k}"] = _prod_in(A, P(i, j), P(j, k), P(i, k))
                checks[f"P{i}{i}*P{j}{k} = 0"] = _prod_in(A, P(i, i), P(j, k), ())
                for l in idx:
                    if l in (i, j, k):
                        continue
                    checks[f"P{i}{j}*P{k}{l} = 0"] = _prod_in(A, P(i, j), P(k, l), ())
    return RefinedPeirce(A, tuple(es), comps, checks)


# ---------------------------------------------------------------------------
# forms used by fingerprints


def trace_form_signature(a: Algebra) -> Signature:
    return signature(trace_form(a))


def square_form_invariant(a: Algebra) -> tuple[int, int] | None:
    """``(rank, |pos - neg|)`` of ``(x, y) -> coefficient of xy on J^2`` when dim J^2 = 1."""
    sq = subspace_product(a, full_space(a), full_space(a))
    if len(sq) != 1:
        return None
    w = sq[0]
    piv = next(k for k, x in enumerate(w) if x)
    n = a.dim
    gram = RatMatrix([[a.c[i][j][piv] / w[piv] for j in range(n)] for i in range(n)])
    s = signature(gram)
    return (s.positive + s.negative, abs(s.positive - s.negative))


def rank_of(vectors: Sequence[Vector]) -> int:
    return rank(list(vectors)) if vectors else 0
