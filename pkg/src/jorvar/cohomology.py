"""Second cohomology H^2(J, J): cocycles, coboundaries and the rigidity certificate."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd
from typing import Sequence

from .algebra import Algebra, integer_constants, require_jordan
from .exactla import RatMatrix, Vector, as_vector, int_rank, kernel_basis, rank


def cocycle_rows_count(n: int) -> int:
    """Number of equations in the assembled cocycle system, (n^4 + n(n-1)/2) n."""
    return (n ** 4 + n * (n - 1) // 2) * n


def alpha_index(n: int, i: int, j: int, k: int) -> int:
    """Column of the unknown ``alpha[i][j][k]`` (coefficient of e_k in h(e_i, e_j))."""
    return (i * n + j) * n + k


@dataclass(frozen=True)
class CocycleSystem:
    """Linear equations for the 2-cocycles of ``algebra``.

    Rows ``0 .. n^5 - 1`` come from the linearized cocycle identity at every
    ordered basis 4-tuple ``(x, y, w, z)`` (output component fastest); the
    remaining ``n * n(n-1)/2`` rows are ``alpha_ij^k - alpha_ji^k = 0``.  Rows
    are scaled by a common positive integer so the entries are integers.
    """

    algebra: Algebra
    int_rows: tuple

    @property
    def shape(self) -> tuple[int, int]:
        n = self.algebra.dim
        return len(self.int_rows), n ** 3

    @property
    def matrix(self) -> RatMatrix:
        return RatMatrix(self.int_rows)

    def column(self, i: int, j: int, k: int) -> int:
        return alpha_index(self.algebra.dim, i, j, k)

    def rank(self) -> int:
        return int_rank(_distinct_rows(self.int_rows), self.shape[1])

    def residual(self, alpha: Sequence) -> list:
        alpha = as_vector(alpha)
        return [sum((x * y for x, y in zip(r, alpha)), Fraction(0)) for r in self.int_rows]


def _distinct_rows(rows) -> list:
    """Nonzero rows up to scalar multiples; rank is unchanged."""
    seen, out = set(), []
    for r in rows:
        g = 0
        for x in r:
            if x:
                g = gcd(g, x)
        if not g:
            continue
        lead = next(x for x in r if x)
        if lead < 0:
            g = -g
        key = tuple(x // g for x in r)
        if key not in seen:
            seen.add(key)
            out.append(list(key))
    return out


def cocycle_system(a: Algebra) -> CocycleSystem:
    require_jordan(a)
    return _cocycle_system(a)


@lru_cache(maxsize=256)
def _cocycle_system(a: Algebra) -> CocycleSystem:
    n = a.dim
    N3 = n ** 3
    _, C = integer_constants(a)

    def col(i, j, k):
        return (i * n + j) * n + k

    def vmul(u, v):
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

    def lmat(u):
        # M[p][m] = (u * e_m)_p
        return [[sum(u[q] * C[q][m][p] for q in range(n) if u[q]) for m in range(n)] for p in range(n)]

    unit = [[1 if k == i else 0 for k in range(n)] for i in range(n)]
    L_basis = [lmat(unit[w]) for w in range(n)]

    def h_basis(i, j):
        return [{col(i, j, m): 1} for m in range(n)]

    def h_vec(u, v):
        out = [dict() for _ in range(n)]
        for i, ui in enumerate(u):
            if ui:
                for j, vj in enumerate(v):
                    if vj:
                        s = ui * vj
                        for m in range(n):
                            out[m][col(i, j, m)] = out[m].get(col(i, j, m), 0) + s
        return out

    def act(hv, M):
        # multiply an h-valued vector by the fixed operator M (componentwise linear)
        out = [dict() for _ in range(n)]
        for p in range(n):
            Mp = M[p]
            acc = out[p]
            for m in range(n):
                f = Mp[m]
                if f:
                    for c_, v in hv[m].items():
                        acc[c_] = acc.get(c_, 0) + f * v
        return out

    def accumulate(rows, hv, sign):
        for p in range(n):
            r = rows[p]
            for c_, v in hv[p].items():
                r[c_] += sign * v

    out_rows = []
    for x, y, w, z in product(range(n), repeat=4):
        rows = [[0] * N3 for _ in range(n)]
        for (p1, p2, rest) in ((x, y, z), (x, z, y), (y, z, x)):
            ab = C[p1][p2]
            # (h(a,b) w) rest
            accumulate(rows, act(act(h_basis(p1, p2), L_basis[w]), L_basis[rest]), 1)
            # h((ab) w, rest)
            accumulate(rows, h_vec(vmul(ab, unit[w]), unit[rest]), 1)
            # h(ab, w) rest
            accumulate(rows, act(h_vec(ab, unit[w]), L_basis[rest]), 1)
            # (ab) h(w, rest)
            accumulate(rows, act(h_basis(w, rest), lmat(ab)), -1)
            # h(a,b)(w rest)
            accumulate(rows, act(h_basis(p1, p2), lmat(C[w][rest])), -1)
            # h(ab, w rest)
            accumulate(rows, h_vec(ab, C[w][rest]), -1)
        out_rows.extend(tuple(r) for r in rows)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                r = [0] * N3
                r[col(i, j, k)] = 1
                r[col(j, i, k)] = -1
                out_rows.append(tuple(r))
    return CocycleSystem(a, tuple(out_rows))


def z2_dim(a: Algebra) -> int:
    s = cocycle_system(a)
    return s.shape[1] - s.rank()


def z2_basis(a: Algebra) -> list:
    """Basis of Z^2 as tensors ``alpha[i][j][k]``."""
    s = cocycle_system(a)
    n = a.dim
    return [_as_tensor(v, n) for v in kernel_basis(_distinct_rows(s.int_rows) or [[0] * n ** 3])]


def _as_tensor(v: Sequence, n: int):
    return tuple(tuple(tuple(v[alpha_index(n, i, j, k)] for k in range(n)) for j in range(n)) for i in range(n))


def flatten(alpha) -> Vector:
    n = len(alpha)
    return tuple(alpha[i][j][k] for i in range(n) for j in range(n) for k in range(n))


@dataclass(frozen=True)
class CoboundaryMap:
    """Matrix (n^3 x n^2) sending ``mu`` to ``(a, b) -> mu(ab) - a mu(b) - mu(a) b``.

    ``mu(e_q) = sum_p mu[p][q] e_p`` with unknown ``mu[p][q]`` in column ``p*n + q``.
    """

    algebra: Algebra
    matrix: RatMatrix

    def generators(self) -> list:
        n = self.algebra.dim
        return [_as_tensor(c, n) for c in self.matrix.columns()]


def coboundary_map(a: Algebra) -> CoboundaryMap:
    require_jordan(a)
    n = a.dim
    c = a.c
    rows = []
    for i, j, k in product(range(n), repeat=3):
        r = [Fraction(0)] * (n * n)
        for q in range(n):
            r[k * n + q] += c[i][j][q]
        for p in range(n):
            r[p * n + j] -= c[i][p][k]
            r[p * n + i] -= c[p][j][k]
        rows.append(r)
    return CoboundaryMap(a, RatMatrix(rows))


def b2_dim(a: Algebra) -> int:
    return rank(coboundary_map(a).matrix)


def h2_dim(a: Algebra) -> int:
    return z2_dim(a) - b2_dim(a)


class Rigidity(enum.Enum):
    H2_ZERO = "H2Zero"
    INCONCLUSIVE = "Inconclusive"


def rigidity_certificate(a: Algebra) -> Rigidity:
    """H2Zero proves rigidity; a nonzero H^2 proves nothing either way."""
    return Rigidity.H2_ZERO if h2_dim(a) == 0 else Rigidity.INCONCLUSIVE


def apply_bilinear(alpha, u: Sequence, v: Sequence) -> Vector:
    n = len(alpha)
    out = [Fraction(0)] * n
    for i in range(n):
        if not u[i]:
            continue
        for j in range(n):
            s = u[i] * v[j]
            if s:
                for k in range(n):
                    out[k] += s * alpha[i][j][k]
    return tuple(out)


def cocycle_defect(a: Algebra, alpha, x: Sequence, y: Sequence) -> Vector:
    """Unlinearized cocycle condition at ``(a, b) = (x, y)``; zero for cocycles.

    ``(h(a,a)b)a + h(a^2,b)a + h(a^2 b,a) - a^2 h(b,a) - h(a,a)(ba) - h(a^2,ba)``
    """
    h = lambda u, v: apply_bilinear(alpha, u, v)  # noqa: E731
    m = a.mul
    x2 = m(x, x)
    lhs = [m(m(h(x, x), y), x), m(h(x2, y), x), h(m(x2, y), x)]
    rhs = [m(x2, h(y, x)), m(h(x, x), m(y, x)), h(x2, m(y, x))]
    return tuple(sum(t[k] for t in lhs) - sum(t[k] for t in rhs) for k in range(a.dim))
