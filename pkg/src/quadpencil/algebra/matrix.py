"""Dense exact matrices.

Rational matrices are plain tuples of row tuples of ``Fraction``; integer
matrices used for abelian-group presentations get their own small type.
Determinants go through Bareiss fraction-free elimination on integers after
clearing row denominators, which is much faster than Fraction elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import SingularMatrix, SizeMismatch
from .rational import Rational, common_denominator, q

QMatrix = tuple[tuple[Fraction, ...], ...]


def qmatrix(rows: Sequence[Sequence[Rational]]) -> QMatrix:
    out = tuple(tuple(q(x) for x in row) for row in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise SizeMismatch("ragged matrix")
    return out


def identity(n: int) -> QMatrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def diag(values: Sequence[Rational]) -> QMatrix:
    vals = [q(v) for v in values]
    n = len(vals)
    return tuple(tuple(vals[i] if i == j else Fraction(0) for j in range(n)) for i in range(n))


def shape(a: QMatrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def transpose(a: QMatrix) -> QMatrix:
    return tuple(zip(*a)) if a else ()


def integer_form(a: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """``(m, c)`` with ``a == m / c`` entrywise, ``m`` integral and ``c`` the common denominator."""
    c = common_denominator(x for row in a for x in row)
    return [[x.numerator * (c // x.denominator) for x in row] for row in a], c


def matmul(a: QMatrix, b: QMatrix) -> QMatrix:
    if shape(a)[1] != shape(b)[0]:
        raise SizeMismatch(f"cannot multiply {shape(a)} by {shape(b)}")
    # integer products, one Fraction per entry
    ia, ca = integer_form(a)
    ib, cb = integer_form(b)
    bt = list(zip(*ib))
    den = ca * cb
    return tuple(tuple(Fraction(sum(x * y for x, y in zip(row, col)), den) for col in bt) for row in ia)


def matvec(a: QMatrix, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def scale(c: Rational, a: QMatrix) -> QMatrix:
    c = q(c)
    return tuple(tuple(c * x for x in row) for row in a)


def add(a: QMatrix, b: QMatrix) -> QMatrix:
    if shape(a) != shape(b):
        raise SizeMismatch(f"cannot add {shape(a)} and {shape(b)}")
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def lincomb(s: Rational, a: QMatrix, t: Rational, b: QMatrix) -> QMatrix:
    """Return ``s*a + t*b``."""
    s, t = q(s), q(t)
    return tuple(tuple(s * x + t * y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def is_square(a: QMatrix) -> bool:
    return all(len(r) == len(a) for r in a)


def is_symmetric(a: QMatrix) -> bool:
    n = len(a)
    return is_square(a) and all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def is_diagonal(a: QMatrix) -> bool:
    return all(x == 0 for i, row in enumerate(a) for j, x in enumerate(row) if i != j)


def diagonal(a: QMatrix) -> tuple[Fraction, ...]:
    return tuple(a[i][i] for i in range(len(a)))


def bareiss_det(m: list[list[int]]) -> int:
    """Determinant of a square integer matrix; ``m`` is overwritten."""
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def det(a: Sequence[Sequence[Fraction | int]]) -> Fraction:
    n = len(a)
    if any(len(r) != n for r in a):
        raise SizeMismatch("determinant of a non-square matrix")
    scale_back = 1
    rows: list[list[int]] = []
    for row in a:
        row = [q(x) for x in row]
        c = common_denominator(row)
        scale_back *= c
        rows.append([x.numerator * (c // x.denominator) for x in row])
    return Fraction(bareiss_det(rows), scale_back)


def _rref(a: QMatrix) -> tuple[list[list[Fraction]], list[int]]:
    m = [list(r) for r in a]
    rows, cols = shape(a)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: QMatrix) -> int:
    return len(_rref(a)[1])


def nullspace(a: QMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of ``{v : a v = 0}``, one vector per free column."""
    m, pivots = _rref(a)
    cols = shape(a)[1]
    basis = []
    for free in (c for c in range(cols) if c not in pivots):
        v = [Fraction(0)] * cols
        v[free] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -m[row][free]
        basis.append(tuple(v))
    return basis


def inverse(a: QMatrix) -> QMatrix:
    n = len(a)
    if not is_square(a):
        raise SizeMismatch("inverse of a non-square matrix")
    aug = tuple(tuple(row) + identity(n)[i] for i, row in enumerate(a))
    m, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return tuple(tuple(row[n:]) for row in m)


@dataclass(frozen=True)
class IntegerMatrix:
    """Row-major integer matrix, the presentation format for abelian groups."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise SizeMismatch("integer matrix must be nonempty")
        if len(self.entries) != self.rows * self.cols:
            raise SizeMismatch("entries length must equal rows*cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntegerMatrix:
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise SizeMismatch("ragged or empty matrix")
        return cls(len(rows), len(rows[0]), tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise SizeMismatch("incompatible shapes")
        a, b = self.to_rows(), other.to_rows()
        return IntegerMatrix.from_rows(
            [[sum(a[i][t] * b[t][j] for t in range(self.cols)) for j in range(other.cols)]
             for i in range(self.rows)])

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix.from_rows([list(c) for c in zip(*self.to_rows())])

    def det(self) -> int:
        if self.rows != self.cols:
            raise SizeMismatch("determinant of a non-square matrix")
        return bareiss_det(self.to_rows())
