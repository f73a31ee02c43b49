"""Exact scalars, polynomials in one parameter ``t`` and dense rational matrices.

Scalars are :class:`fractions.Fraction` throughout.  Nothing in this module
ever touches floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]


class PoleAtZero(ArithmeticError):
    """A rational function has no finite value at t = 0."""


class NotSymmetric(ValueError):
    pass


class SingularMatrix(ValueError):
    pass


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, str or Fraction")
    return Fraction(x)


def as_vector(xs: Iterable) -> Vector:
    return tuple(as_rational(x) for x in xs)


# ---------------------------------------------------------------------------
# univariate polynomials


class UniPoly:
    """Polynomial in ``t`` with rational coefficients, lowest degree first.

    The zero polynomial has degree ``-1``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> UniPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, c, k: int) -> UniPoly:
        return cls([0] * k + [c])

    @classmethod
    def t(cls) -> UniPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int | None:
        """Order of vanishing at t = 0; ``None`` for the zero polynomial."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    @staticmethod
    def _lift(x) -> UniPoly:
        return x if isinstance(x, UniPoly) else UniPoly.constant(x)

    def __add__(self, other) -> UniPoly:
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> UniPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> UniPoly:
        return self._lift(other) - self

    def __mul__(self, other) -> UniPoly:
        if isinstance(other, RationalFunction):
            return NotImplemented
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> UniPoly:
        out = UniPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other) -> tuple[UniPoly, UniPoly]:
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.lead
        for k in range(dq, -1, -1):
            q = rem[k + other.degree] / lead
            quot[k] = q
            if q:
                for i, c in enumerate(other.coeffs):
                    rem[k + i] -= q * c
        return UniPoly(quot), UniPoly(rem[: other.degree])

    def __floordiv__(self, other) -> UniPoly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> UniPoly:
        return divmod(self, other)[1]

    def exact_div(self, other) -> UniPoly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        lc = self.lead
        return UniPoly([c / lc for c in self.coeffs])

    def __call__(self, t0) -> Fraction:
        t0 = as_rational(t0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t0 + c
        return acc

    def __repr__(self) -> str:
        return f"UniPoly({self})"

    def __str__(self) -> str:
        return format_poly(self)

    @classmethod
    def parse(cls, text: str) -> UniPoly:
        return parse_poly(text)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd; gcd(0, 0) is 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


_TERM = re.compile(
    r"""\s*([+-]?)\s*
        (?:(\d+(?:/\d+)?)\s*(?:\*\s*)?)?
        (t(?:\s*\^\s*(\d+))?)?\s*""",
    re.X,
)


def parse_poly(text: str) -> UniPoly:
    """Parse sparse ``coeff*t^k`` sums such as ``-1/2*t^2+t-3``."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    pos, out, first = 0, {}, True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        sign, coef, tpart, power = m.groups()
        if not sign and not first:
            raise ValueError(f"missing operator in polynomial {text!r}")
        c = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            c = -c
        k = (int(power) if power else 1) if tpart else 0
        out[k] = out.get(k, Fraction(0)) + c
        pos, first = m.end(), False
    deg = max(out)
    return UniPoly([out.get(k, 0) for k in range(deg + 1)])


def _format_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: UniPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if not mono:
            body = _format_scalar(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_scalar(a)}*{mono}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    s = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        s += sign + body
    return s


# ---------------------------------------------------------------------------
# rational functions


class RationalFunction:
    """``num/den`` in lowest terms with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = UniPoly._lift(num)
        den = UniPoly.constant(1) if den is None else UniPoly._lift(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = UniPoly(), UniPoly.constant(1)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lead
        if lc != 1:
            num = UniPoly([c / lc for c in num.coeffs])
            den = UniPoly([c / lc for c in den.coeffs])
        self.num, self.den = num, den

    @staticmethod
    def _lift(x) -> RationalFunction:
        return x if isinstance(x, RationalFunction) else RationalFunction(x)

    def __eq__(self, other) -> bool:
        if isinstance(other, (RationalFunction, UniPoly, int, Fraction)):
            other = self._lift(other)
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("RationalFunction", self.num, self.den))

    def __add__(self, other) -> RationalFunction:
        o = self._lift(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> RationalFunction:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> RationalFunction:
        return self._lift(other) - self

    def __mul__(self, other) -> RationalFunction:
        o = self._lift(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFunction:
        o = self._lift(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> RationalFunction:
        return self._lift(other) / self

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __call__(self, t0) -> Fraction:
        d = self.den(t0)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at t = {t0}")
        return self.num(t0) / d

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"


def limit_at_zero(f) -> Fraction:
    """Value at t = 0 after cancelling powers of t; raises :class:`PoleAtZero`."""
    if isinstance(f, UniPoly):
        return f.coeff(0)
    if not isinstance(f, RationalFunction):
        return as_rational(f)
    if f.num.is_zero():
        return Fraction(0)
    vd = f.den.valuation
    vn = f.num.valuation
    if vn < vd:
        raise PoleAtZero(f"{f} has a pole at t = 0")
    if vn > vd:
        return Fraction(0)
    return f.num.coeffs[vn] / f.den.coeffs[vd]


def quotient_limit(num: UniPoly, den: UniPoly) -> Fraction:
    """limit_at_zero(num/den) without building the reduced fraction."""
    if num.is_zero():
        return Fraction(0)
    vd, vn = den.valuation, num.valuation
    if vn < vd:
        raise PoleAtZero(f"({num})/({den}) has a pole at t = 0")
    if vn > vd:
        return Fraction(0)
    return num.coeffs[vn] / den.coeffs[vd]


# ---------------------------------------------------------------------------
# matrices


class RatMatrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = [as_vector(r) for r in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix dimensions must be positive")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        self.entries: tuple[Vector, ...] = tuple(rows)
        self.rows = len(rows)
        self.cols = width

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RatMatrix:
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def diag(cls, values: Sequence) -> RatMatrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> RatMatrix:
        return cls([list(r) for r in zip(*columns)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.cols)]

    def transpose(self) -> RatMatrix:
        return RatMatrix(list(zip(*self.entries)))

    T = property(transpose)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            ocols = other.columns()
            return RatMatrix(
                [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in ocols] for r in self.entries]
            )
        v = as_vector(other)
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self.entries)

    def scale(self, s) -> RatMatrix:
        s = as_rational(s)
        return RatMatrix([[s * x for x in r] for r in self.entries])

    def __add__(self, other: RatMatrix) -> RatMatrix:
        return RatMatrix([[a + b for a, b in zip(r, q)] for r, q in zip(self.entries, other.entries)])

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        return RatMatrix([[a - b for a, b in zip(r, q)] for r, q in zip(self.entries, other.entries)])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.entries[i][j] == self.entries[j][i] for i in range(self.rows) for j in range(i)
        )

    def det(self) -> Fraction:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        a = [list(r) for r in self.entries]
        n, sign, acc = self.rows, 1, Fraction(1)
        for c in range(n):
            p = next((i for i in range(c, n) if a[i][c]), None)
            if p is None:
                return Fraction(0)
            if p != c:
                a[c], a[p] = a[p], a[c]
                sign = -sign
            piv = a[c][c]
            acc *= piv
            for i in range(c + 1, n):
                f = a[i][c] / piv
                if f:
                    a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return sign * acc

    def inverse(self) -> RatMatrix:
        if not self.is_square():
            raise SingularMatrix("non-square matrix")
        n = self.rows
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.entries)]
        red, pivots = _rref(aug, n)
        if len(pivots) < n:
            raise SingularMatrix("matrix is not invertible over Q")
        return RatMatrix([r[n:] for r in red[:n]])

    def is_invertible(self) -> bool:
        return self.is_square() and rank(self) == self.rows

    def __repr__(self) -> str:
        body = "; ".join(" ".join(_format_scalar(x) for x in r) for r in self.entries)
        return f"RatMatrix[{body}]"


def _rows_of(m) -> list[list[Fraction]]:
    if isinstance(m, RatMatrix):
        return [list(r) for r in m.entries]
    return [[as_rational(x) for x in r] for r in m]


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for r in rows:
        d = 1
        for x in r:
            if isinstance(x, Fraction) and x.denominator != 1:
                d = lcm(d, x.denominator)
        out.append([int(x * d) for x in r])
    return out


def _primitive(r: list[int], start: int = 0) -> tuple[int, ...] | None:
    """Row divided by the gcd of its entries, first nonzero entry positive."""
    g = gcd(*r)
    if not g:
        return None
    if next(x for x in r[start:] if x) < 0:
        g = -g
    return tuple(x // g for x in r)


def int_rank(rows: list[list[int]], ncols: int | None = None) -> int:
    """Rank of an integer matrix by fraction-free elimination.

    Rows are reduced by their content after every step, which keeps entries
    small and lets repeated rows be dropped; neither affects the rank.
    """
    m = list(dict.fromkeys(p for p in (_primitive(list(r)) for r in rows) if p is not None))
    if not m:
        return 0
    ncols = len(m[0]) if ncols is None else ncols
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(len(m)) if m[i][c]), None)
        if piv is None:
            continue
        prow = m.pop(piv)
        p = prow[c]
        rest = {}
        for r in m:
            f = r[c]
            if f:
                nr = _primitive([p * r[j] - f * prow[j] if j >= c else 0 for j in range(ncols)], c)
                if nr is not None:
                    rest[nr] = None
            else:
                rest[r] = None
        m = list(rest)
        rank += 1
        if not m:
            break
    return rank


def rank(m) -> int:
    """Exact rank over Q (fraction-free elimination on row-scaled integers)."""
    rows = _rows_of(m)
    if not rows:
        return 0
    return int_rank(_integer_rows(rows), len(rows[0]))


def _rref(rows: list[list[Fraction]], ncols: int | None = None):
    """Reduced row echelon form; pivots searched in the first ``ncols`` columns."""
    a = [list(r) for r in rows]
    if not a:
        return a, []
    ncols = len(a[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        if piv != 1:
            a[r] = [x / piv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rref(m) -> tuple[list[Vector], list[int]]:
    a, piv = _rref(_rows_of(m))
    return [tuple(r) for r in a[: len(piv)]], piv


def kernel_basis(m) -> list[Vector]:
    """Basis of the right null space, one vector per free column."""
    rows = _rows_of(m)
    ncols = len(rows[0])
    red, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][f]
        basis.append(tuple(v))
    return basis


def solve(m, b) -> Vector | None:
    """One solution of ``m x = b`` or ``None`` when inconsistent."""
    rows = _rows_of(m)
    ncols = len(rows[0])
    aug = [r + [as_rational(x)] for r, x in zip(rows, b)]
    red, pivots = _rref(aug, ncols)
    if any(all(x == 0 for x in r[:ncols]) and r[ncols] != 0 for r in red):
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return tuple(x)


# ---------------------------------------------------------------------------
# subspaces as canonical row-reduced bases


def span(vectors: Iterable[Sequence], dim: int) -> tuple[Vector, ...]:
    """Canonical (RREF) basis of the span; equal subspaces give equal tuples."""
    vs = [list(as_vector(v)) for v in vectors]
    vs = [v for v in vs if any(v)]
    if not vs:
        return ()
    red, piv = _rref(vs, dim)
    return tuple(tuple(r) for r in red[: len(piv)])


def contains(basis: Sequence[Vector], v: Sequence, dim: int) -> bool:
    return len(span(list(basis) + [v], dim)) == len(basis)


def coordinates(basis: Sequence[Vector], v: Sequence) -> Vector | None:
    """Coordinates of ``v`` in ``basis`` (basis vectors as columns)."""
    if not basis:
        return () if not any(v) else None
    m = [list(r) for r in zip(*basis)]
    return solve(m, v)


# ---------------------------------------------------------------------------
# symmetric forms


class Signature(tuple):
    """(positive, negative, zero) counts of a symmetric form."""

    def __new__(cls, positive: int, negative: int, zero: int):
        return super().__new__(cls, (positive, negative, zero))

    positive = property(lambda s: s[0])
    negative = property(lambda s: s[1])
    zero = property(lambda s: s[2])

    def __repr__(self) -> str:
        return f"Signature(positive={self[0]}, negative={self[1]}, zero={self[2]})"


def signature(m) -> Signature:
    """Inertia of a symmetric rational matrix by congruence diagonalization."""
    if not isinstance(m, RatMatrix):
        m = RatMatrix(m)
    if not m.is_symmetric():
        raise NotSymmetric("signature requires a symmetric matrix")
    a = [list(r) for r in m.entries]
    n = m.rows
    pos = neg = 0
    active = list(range(n))
    while active:
        k = active[0]
        if a[k][k] == 0:
            j = next((j for j in active if a[j][j] != 0), None)
            if j is not None:
                k = j
            else:
                j = next((j for j in active[1:] if a[k][j] != 0), None)
                if j is None:
                    active.remove(k)
                    continue
                # x_k <- x_k + x_j makes the diagonal entry 2 a[k][j] != 0
                for i in range(n):
                    a[k][i] += a[j][i]
                for i in range(n):
                    a[i][k] += a[i][j]
        piv = a[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        for i in active:
            f = a[i][k] / piv
            if f:
                for c in range(n):
                    a[i][c] -= f * a[k][c]
                for r in range(n):
                    a[r][i] -= f * a[r][k]
    return Signature(pos, neg, n - pos - neg)


# ---------------------------------------------------------------------------
# polynomial matrices


class PolyMatrix:
    """Square matrix with :class:`UniPoly` entries (a curve ``g(t)``)."""

    __slots__ = ("entries", "n")

    def __init__(self, entries: Sequence[Sequence]):
        rows = [tuple(UniPoly._lift(x) if not isinstance(x, str) else parse_poly(x) for x in r) for r in entries]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("polynomial matrix must be square and non-empty")
        self.entries: tuple[tuple[UniPoly, ...], ...] = tuple(rows)
        self.n = n

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> PolyMatrix:
        return cls([list(r) for r in zip(*columns)])

    @classmethod
    def constant(cls, m: RatMatrix) -> PolyMatrix:
        return cls([[UniPoly.constant(x) for x in r] for r in m.entries])

    @classmethod
    def scaling(cls, n: int) -> PolyMatrix:
        return cls([[UniPoly.t() if i == j else UniPoly() for j in range(n)] for i in range(n)])

    def __getitem__(self, ij) -> UniPoly:
        i, j = ij
        return self.entries[i][j]

    def col(self, j: int) -> tuple[UniPoly, ...]:
        return tuple(r[j] for r in self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def at(self, t0) -> RatMatrix:
        return RatMatrix([[p(t0) for p in r] for r in self.entries])

    def det(self) -> UniPoly:
        return _poly_det([list(r) for r in self.entries])

    def adjugate(self) -> list[list[UniPoly]]:
        n = self.n
        if n == 1:
            return [[UniPoly.constant(1)]]
        adj = [[UniPoly()] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [
                    [self.entries[r][c] for c in range(n) if c != j] for r in range(n) if r != i
                ]
                cof = _poly_det(minor)
                adj[j][i] = cof if (i + j) % 2 == 0 else -cof
        return adj

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(p) for p in r) for r in self.entries)
        return f"PolyMatrix[{body}]"


def _poly_det(a: list[list[UniPoly]]) -> UniPoly:
    """Fraction-free (Bareiss) determinant over Q[t] with exact divisions."""
    n = len(a)
    a = [list(r) for r in a]
    sign, prev = 1, UniPoly.constant(1)
    for k in range(n - 1):
        p = next((i for i in range(k, n) if a[i][k]), None)
        if p is None:
            return UniPoly()
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = UniPoly()
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d
