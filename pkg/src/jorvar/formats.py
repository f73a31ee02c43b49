"""Text formats: ``.jalg`` structure constants and ``g(t)`` witness matrices.

A ``.jalg`` file starts with ``dim <n>`` followed by lines ``i j k p/q``
(1-based, ``i <= j``) for each nonzero constant.  A witness file starts with
``dim <n>`` followed by ``n`` rows of ``n`` polynomial tokens such as
``-1/2*t^2+t``; column ``j`` holds the new basis vector ``j`` in old coordinates.
``#`` starts a comment in both formats.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Algebra, AlgebraError
from .exactla import PolyMatrix, format_poly, parse_poly


class FormatError(ValueError):
    """Malformed input text; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if body:
            yield lineno, body


def _header(lines) -> int:
    try:
        lineno, toks = next(lines)
    except StopIteration:
        raise FormatError("empty input, expected 'dim <n>'") from None
    if len(toks) != 2 or toks[0] != "dim":
        raise FormatError("expected 'dim <n>'", lineno)
    try:
        n = int(toks[1])
    except ValueError:
        raise FormatError(f"bad dimension {toks[1]!r}", lineno) from None
    if n < 1:
        raise FormatError("dimension must be positive", lineno)
    return n


def parse_jalg(text: str, label: str | None = None) -> Algebra:
    lines = _tokens(text)
    n = _header(lines)
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    seen = set()
    for lineno, toks in lines:
        if len(toks) != 4:
            raise FormatError("expected 'i j k p/q'", lineno)
        try:
            i, j, k = (int(x) for x in toks[:3])
            val = Fraction(toks[3])
        except ValueError:
            raise FormatError(f"bad entry {' '.join(toks)!r}", lineno) from None
        if not all(1 <= x <= n for x in (i, j, k)):
            raise FormatError("index out of range", lineno)
        if i > j:
            raise FormatError("entries must have i <= j", lineno)
        if (i, j, k) in seen:
            raise FormatError(f"duplicate entry for c_{i}{j}^{k}", lineno)
        seen.add((i, j, k))
        c[i - 1][j - 1][k - 1] = val
        c[j - 1][i - 1][k - 1] = val
    try:
        return Algebra(n, c, label)
    except AlgebraError as exc:
        raise FormatError(str(exc)) from exc


def _fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def dump_jalg(a: Algebra, comment: str | None = None) -> str:
    out = []
    if comment:
        out.append(f"# {comment}")
    out.append(f"dim {a.dim}")
    n = a.dim
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                x = a.c[i][j][k]
                if x:
                    out.append(f"{i + 1} {j + 1} {k + 1} {_fmt(x)}")
    return "\n".join(out) + "\n"


def parse_witness(text: str) -> PolyMatrix:
    lines = _tokens(text)
    n = _header(lines)
    rows = []
    for lineno, toks in lines:
        if len(toks) != n:
            raise FormatError(f"expected {n} polynomial entries", lineno)
        try:
            rows.append([parse_poly(tok) for tok in toks])
        except ValueError as exc:
            raise FormatError(str(exc), lineno) from None
        if len(rows) > n:
            raise FormatError(f"more than {n} rows", lineno)
    if len(rows) != n:
        raise FormatError(f"expected {n} rows, found {len(rows)}")
    return PolyMatrix(rows)


def dump_witness(g: PolyMatrix, comment: str | None = None) -> str:
    out = [f"# {comment}"] if comment else []
    out.append(f"dim {g.n}")
    for r in g.entries:
        out.append(" ".join(format_poly(p) for p in r))
    return "\n".join(out) + "\n"
