"""Exact rational linear algebra.

Everything downstream rests on "is this entry zero?" tests, so all
arithmetic here is exact: arbitrary-precision rationals for matrices,
arbitrary-precision integers for characteristic polynomials.  No
floating point appears anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import SingularMatrixError

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Render as "p" or "p/q"; never decimal."""
    value = _coerce(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


@dataclass(frozen=True)
class RatMatrix:
    """Dense row-major matrix over exact rationals."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @staticmethod
    def from_rows(rows) -> RatMatrix:
        data = [tuple(_coerce(x) for x in row) for row in rows]
        r = len(data)
        c = len(data[0]) if data else 0
        if any(len(row) != c for row in data):
            raise ValueError("rows must all have the same length")
        return RatMatrix(r, c, tuple(x for row in data for x in row))

    @staticmethod
    def identity(n: int) -> RatMatrix:
        return RatMatrix(n, n, tuple(
            _ONE if i == j else _ZERO for i in range(n) for j in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> RatMatrix:
        return RatMatrix(rows, cols, (_ZERO,) * (rows * cols))

    def at(self, i: int, j: int) -> Fraction:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index ({i}, {j}) out of range")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> RatMatrix:
        return RatMatrix(self.cols, self.rows, tuple(
            self.entries[i * self.cols + j]
            for j in range(self.cols) for i in range(self.rows)))

    def __add__(self, other: RatMatrix) -> RatMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RatMatrix(self.rows, self.cols, tuple(
            a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RatMatrix(self.rows, self.cols, tuple(
            a - b for a, b in zip(self.entries, other.entries)))

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            for j in range(other.cols):
                acc = _ZERO
                for k in range(self.cols):
                    a = self.entries[base + k]
                    if a:
                        acc += a * other.entries[k * other.cols + j]
                out.append(acc)
        return RatMatrix(self.rows, other.cols, tuple(out))

    def scale(self, factor) -> RatMatrix:
        factor = _coerce(factor)
        return RatMatrix(self.rows, self.cols,
                         tuple(factor * x for x in self.entries))

    def submatrix(self, row_idx, col_idx) -> RatMatrix:
        row_idx = tuple(row_idx)
        col_idx = tuple(col_idx)
        return RatMatrix(len(row_idx), len(col_idx), tuple(
            self.entries[i * self.cols + j] for i in row_idx for j in col_idx))

    def hstack(self, other: RatMatrix) -> RatMatrix:
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        out = []
        for i in range(self.rows):
            out.extend(self.row(i))
            out.extend(other.row(i))
        return RatMatrix(self.rows, self.cols + other.cols, tuple(out))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)


def _rref_rows(data: list[list[Fraction]]) -> list[int]:
    """In-place Gauss-Jordan; returns the pivot columns.

    Pivot choice is deterministic: columns in order, first row (smallest
    index) with a non-zero entry.  Star-set selection downstream depends
    on this rule being stable.
    """
    if not data:
        return []
    n_rows = len(data)
    n_cols = len(data[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = None
        for i in range(r, n_rows):
            if data[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            data[r], data[pivot_row] = data[pivot_row], data[r]
        p = data[r][c]
        if p != 1:
            inv = 1 / p
            data[r] = [x * inv for x in data[r]]
        for i in range(n_rows):
            if i == r:
                continue
            f = data[i][c]
            if f:
                row_r = data[r]
                data[i] = [a - f * b for a, b in zip(data[i], row_r)]
        pivots.append(c)
        r += 1
    return pivots


def rref(matrix: RatMatrix) -> tuple[RatMatrix, tuple[int, ...], int]:
    """Reduced row echelon form, pivot columns, and rank."""
    data = matrix.to_rows()
    pivots = _rref_rows(data)
    if not data:
        return matrix, (), 0
    return RatMatrix.from_rows(data), tuple(pivots), len(pivots)


def rank(matrix: RatMatrix) -> int:
    data = matrix.to_rows()
    return len(_rref_rows(data))


def solve(matrix: RatMatrix, rhs: RatMatrix) -> RatMatrix | None:
    """Solve M X = RHS for square M; None when M is singular."""
    n = matrix.rows
    if matrix.cols != n or rhs.rows != n:
        raise ValueError("shape mismatch")
    if n == 0:
        return RatMatrix.zeros(0, rhs.cols)
    data = matrix.hstack(rhs).to_rows()
    pivots = _rref_rows(data)
    if pivots != list(range(n)):
        return None
    return RatMatrix.from_rows([row[n:] for row in data])


def invert(matrix: RatMatrix) -> RatMatrix:
    """Exact inverse; raises SingularMatrixError when none exists."""
    if matrix.rows != matrix.cols:
        raise ValueError("only square matrices can be inverted")
    result = solve(matrix, RatMatrix.identity(matrix.rows))
    if result is None:
        raise SingularMatrixError("matrix is singular")
    return result


def nullspace_basis(matrix: RatMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space, one vector per free column.

    Vector i has a 1 at the i-th free column (ascending), so the basis
    is deterministic.
    """
    reduced, pivots, _ = rref(matrix)
    pivot_set = set(pivots)
    free_cols = [c for c in range(matrix.cols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        vec = [_ZERO] * matrix.cols
        vec[f] = _ONE
        for i, p in enumerate(pivots):
            vec[p] = -reduced.at(i, f)
        basis.append(tuple(vec))
    return basis


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients lowest degree first.

    Trailing zero coefficients are stripped; the zero polynomial is the
    empty tuple.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x: Fraction) -> Fraction:
        x = _coerce(x)
        acc = _ZERO
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                x = "x" if e == 1 else f"x^{e}"
                term = x if mag == 1 else f"{mag}{x}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def char_poly(matrix: RatMatrix, convention: str = "monic") -> IntPolynomial:
    """Characteristic polynomial of a square integer matrix.

    convention="monic" gives det(xI - A); convention="det" gives
    det(A - xI).  The two differ by a sign exactly when the order is
    odd.  Computed by the Faddeev-LeVerrier recursion, which stays in
    integers throughout for an integer input.
    """
    if matrix.rows != matrix.cols:
        raise ValueError("characteristic polynomial needs a square matrix")
    if convention not in ("monic", "det"):
        raise ValueError("convention must be 'monic' or 'det'")
    n = matrix.rows
    a: list[list[int]] = []
    for i in range(n):
        row = []
        for x in matrix.row(i):
            if x.denominator != 1:
                raise ValueError("matrix entries must be integers")
            row.append(x.numerator)
        a.append(row)

    # det(xI - A) = x^n + c_1 x^(n-1) + ... + c_n
    coeffs_desc = [1]
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)]
              for i in range(n)]
        tr = sum(am[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("trace not divisible; non-integer input?")
        ck = -(tr // k)
        coeffs_desc.append(ck)
        m = am
        for i in range(n):
            m[i][i] += ck

    poly = IntPolynomial(tuple(reversed(coeffs_desc)))
    if convention == "det" and n % 2 == 1:
        poly = -poly
    return poly


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    top = isqrt(n)
    while d <= top:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _deflate(coeffs: list[Fraction], root: Fraction) -> list[Fraction] | None:
    """Divide by (x - root); None when the remainder is non-zero."""
    out_desc: list[Fraction] = []
    acc = _ZERO
    for c in reversed(coeffs):
        acc = acc * root + c
        out_desc.append(acc)
    remainder = out_desc.pop()
    if remainder != 0:
        return None
    return out_desc[::-1]


def rational_roots(poly: IntPolynomial) -> list[tuple[Fraction, int]]:
    """All rational roots with exact multiplicities, sorted descending.

    Candidates come from the rational root bound p | constant term,
    q | leading coefficient; multiplicities by repeated exact division.
    """
    if poly.is_zero():
        raise ValueError("the zero polynomial has every root")
    coeffs = list(poly.coefficients)
    found: dict[Fraction, int] = {}

    zero_mult = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        zero_mult += 1
    if zero_mult:
        found[_ZERO] = zero_mult
    if len(coeffs) <= 1:
        return sorted(found.items(), key=lambda t: t[0], reverse=True)

    current = [Fraction(c) for c in coeffs]
    candidates = []
    for p in _divisors(coeffs[0]):
        for q in _divisors(coeffs[-1]):
            r = Fraction(p, q)
            candidates.extend((r, -r))
    # Roots of any exact quotient are roots of the original, so one
    # candidate sweep over successively deflated polynomials suffices.
    for cand in sorted(set(candidates), reverse=True):
        while len(current) > 1:
            reduced = _deflate(current, cand)
            if reduced is None:
                break
            found[cand] = found.get(cand, 0) + 1
            current = reduced
    return sorted(found.items(), key=lambda t: t[0], reverse=True)
