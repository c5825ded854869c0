"""Pencils of quadrics and the diagonal slice.

A :class:`SlicePoint` is a ``2 x (n+1)`` matrix with rows ``a`` and ``b``;
it lies in the slice ``W`` when every ``2 x 2`` minor is nonzero. Embedding it
gives the diagonal pencil ``(diag(a), diag(b))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

from .algebra import matrix as mx
from .algebra.forms import BinaryForm, factor_form, is_squarefree
from .algebra.matrix import QMatrix
from .algebra.poly import interpolate, rational_roots
from .algebra.rational import Rational, q, q_str
from .errors import DependentPencil, NotInSlice, NotSmooth, SizeMismatch


def _proportional(u, v) -> bool:
    """True when the two vectors span at most a line."""
    i = next((i for i, x in enumerate(u) if x), None)
    if i is None:
        return True
    return all(u[i] * y == v[i] * x for x, y in zip(u, v))


@dataclass(frozen=True)
class QuadricPencil:
    """Two symmetric ``(n+1) x (n+1)`` rational matrices spanning a pencil."""

    q1: QMatrix
    q2: QMatrix

    def __post_init__(self):
        q1, q2 = mx.qmatrix(self.q1), mx.qmatrix(self.q2)
        object.__setattr__(self, "q1", q1)
        object.__setattr__(self, "q2", q2)
        if mx.shape(q1) != mx.shape(q2) or not mx.is_square(q1):
            raise SizeMismatch("pencil matrices must be square of the same size")
        if len(q1) < 2:
            raise SizeMismatch("pencil matrices must be at least 2 x 2")
        if not (mx.is_symmetric(q1) and mx.is_symmetric(q2)):
            raise ValueError("pencil matrices must be symmetric")
        if _proportional(sum(q1, ()), sum(q2, ())):
            raise DependentPencil("Q1 and Q2 are linearly dependent")

    @property
    def n(self) -> int:
        return len(self.q1) - 1

    @property
    def is_diagonal(self) -> bool:
        return mx.is_diagonal(self.q1) and mx.is_diagonal(self.q2)

    def member(self, s: Rational, t: Rational) -> QMatrix:
        return mx.lincomb(s, self.q1, t, self.q2)

    def congruent(self, b: QMatrix) -> QuadricPencil:
        """The pencil ``(B^T Q1 B, B^T Q2 B)``."""
        bt = mx.transpose(b)
        return QuadricPencil(mx.matmul(bt, mx.matmul(self.q1, b)), mx.matmul(bt, mx.matmul(self.q2, b)))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "Q1": [[q_str(x) for x in row] for row in self.q1],
            "Q2": [[q_str(x) for x in row] for row in self.q2],
        }

    @classmethod
    def from_json(cls, data: dict) -> QuadricPencil:
        p = cls(mx.qmatrix(data["Q1"]), mx.qmatrix(data["Q2"]))
        if "n" in data and int(data["n"]) != p.n:
            raise SizeMismatch(f"declared n={data['n']} but matrices are {p.n + 1} x {p.n + 1}")
        return p


@dataclass(frozen=True)
class SlicePoint:
    """Columns ``(a_i, b_i)``; a candidate point of the diagonal slice."""

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    def __post_init__(self):
        a, b = tuple(q(x) for x in self.a), tuple(q(x) for x in self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if len(a) != len(b) or len(a) < 2:
            raise SizeMismatch("rows a and b must have the same length >= 2")

    @classmethod
    def of(cls, a: Sequence[Rational], b: Sequence[Rational]) -> SlicePoint:
        return cls(tuple(q(x) for x in a), tuple(q(x) for x in b))

    @classmethod
    def from_columns(cls, columns) -> SlicePoint:
        return cls(tuple(c[0] for c in columns), tuple(c[1] for c in columns))

    @property
    def n(self) -> int:
        return len(self.a) - 1

    def column(self, i: int) -> tuple[Fraction, Fraction]:
        return self.a[i], self.b[i]

    def columns(self) -> list[tuple[Fraction, Fraction]]:
        return list(zip(self.a, self.b))

    def minor(self, i: int, j: int) -> Fraction:
        return self.a[i] * self.b[j] - self.a[j] * self.b[i]

    @property
    def in_slice(self) -> bool:
        return all(m != 0 for m in minors(self))

    def to_json(self) -> dict:
        return {"n": self.n, "a": [q_str(x) for x in self.a], "b": [q_str(x) for x in self.b]}

    @classmethod
    def from_json(cls, data: dict) -> SlicePoint:
        w = cls.of(data["a"], data["b"])
        if "n" in data and int(data["n"]) != w.n:
            raise SizeMismatch(f"declared n={data['n']} but rows have length {w.n + 1}")
        return w


def minors(w: SlicePoint) -> list[Fraction]:
    """``a_i b_j - a_j b_i`` for all ``i < j`` in lexicographic order."""
    return [w.minor(i, j) for i, j in combinations(range(w.n + 1), 2)]


def first_vanishing_minor(w: SlicePoint) -> tuple[int, int] | None:
    return next(((i, j) for i, j in combinations(range(w.n + 1), 2) if w.minor(i, j) == 0), None)


def is_smooth_diagonal(w: SlicePoint) -> bool:
    """Smoothness of ``sum a_i x_i^2 = sum b_i x_i^2 = 0``: all minors nonzero."""
    return first_vanishing_minor(w) is None


def require_slice(w: SlicePoint) -> None:
    bad = first_vanishing_minor(w)
    if bad is not None:
        raise NotInSlice(f"minor ({bad[0]},{bad[1]}) vanishes")


@lru_cache(maxsize=1024)
def discriminant_form(p: QuadricPencil) -> BinaryForm:
    """``det(x0*Q1 + x1*Q2)`` as a degree ``n+1`` form.

    Evaluates ``det(Q1 + s*Q2)`` at ``s = 0..n+1`` and interpolates; the
    interpolant's ascending coefficients are exactly the form's coefficients
    in descending powers of ``x0``.
    """
    deg = p.n + 1
    xs = list(range(deg + 1))
    # c*Q1 and c*Q2 are integral, so each sample is an integer determinant
    (i1, i2), c = _integral_pair(p)
    ys = [Fraction(mx.bareiss_det([[x + s * y for x, y in zip(r1, r2)] for r1, r2 in zip(i1, i2)]), c ** deg)
          for s in xs]
    return BinaryForm.homogenize(interpolate(xs, ys), deg)


def _integral_pair(p: QuadricPencil) -> tuple[tuple[list[list[int]], list[list[int]]], int]:
    both, c = mx.integer_form(p.q1 + p.q2)
    size = p.n + 1
    return (both[:size], both[size:]), c


def is_smooth(p: QuadricPencil) -> bool:
    """The complete intersection is smooth iff the discriminant form is squarefree."""
    f = discriminant_form(p)
    return not f.is_zero() and is_squarefree(f)


def theta(w: SlicePoint) -> BinaryForm:
    """``prod(a_i*x0 + b_i*x1)``."""
    require_slice(w)
    return BinaryForm.product(BinaryForm.linear(a, b) for a, b in w.columns())


def embed(w: SlicePoint) -> QuadricPencil:
    require_slice(w)
    return QuadricPencil(mx.diag(w.a), mx.diag(w.b))


@dataclass(frozen=True)
class Diagonalization:
    """``basis^T Q_i basis`` is diagonal with diagonals ``point.a``, ``point.b``."""

    basis: QMatrix
    point: SlicePoint

    def to_json(self) -> dict:
        return {"basis": [[q_str(x) for x in row] for row in self.basis], "point": self.point.to_json()}


@dataclass(frozen=True)
class Obstruction:
    """The discriminant form does not split over Q; these factors are the reason."""

    factors: tuple[BinaryForm, ...]

    def to_json(self) -> dict:
        return {"obstruction": [f.to_json() for f in self.factors]}


def _invertible_member(p: QuadricPencil) -> tuple[Fraction, Fraction]:
    """First ``(s, t)`` in (1,0), (0,1), (1,1), (1,2), ... with ``det(s*Q1 + t*Q2) != 0``."""
    candidates = [(1, 0), (0, 1)] + [(1, j) for j in range(1, p.n + 2)]
    for s, t in candidates:
        if mx.det(p.member(s, t)) != 0:
            return Fraction(s), Fraction(t)
    raise NotSmooth("every tried pencil member is singular")


def _primitive(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = gcd(*ints)
    lead = next(x for x in ints if x)
    if lead < 0:
        g = -g
    return tuple(Fraction(x // g) for x in ints)


def simultaneous_diagonalize(p: QuadricPencil) -> Diagonalization | Obstruction:
    """Find ``B`` with ``B^T Q1 B`` and ``B^T Q2 B`` diagonal, over Q.

    Picks an invertible member ``M`` of the pencil and another member ``N``;
    for each eigenvalue ``mu`` of ``M^-1 N`` (a root of ``det(mu*M - N)``) the
    kernel of ``mu*M - N`` is a line, and distinct eigenvalues give
    ``M``- and ``N``-orthogonal eigenvectors. When some eigenvalue is
    irrational the irreducible nonlinear factors of the discriminant form
    are returned as an :class:`Obstruction` instead.
    """
    if not is_smooth(p):
        raise NotSmooth("simultaneous diagonalization needs a smooth pencil")
    if p.is_diagonal:
        return Diagonalization(mx.identity(p.n + 1), SlicePoint(mx.diagonal(p.q1), mx.diagonal(p.q2)))
    s, t = _invertible_member(p)
    m = p.member(s, t)
    other = p.q2 if s != 0 else p.q1
    xs = list(range(p.n + 2))
    char = interpolate(xs, [mx.det(mx.lincomb(mu, m, -1, other)) for mu in xs])
    roots = rational_roots(char)
    if len(roots) < p.n + 1:
        _, factors = factor_form(discriminant_form(p))
        return Obstruction(tuple(f for f, _ in factors if f.degree > 1))
    cols = []
    for mu in roots:
        (v,) = mx.nullspace(mx.lincomb(mu, m, -1, other))
        cols.append(_primitive(v))
    basis = mx.transpose(tuple(cols))
    d = p.congruent(basis)
    assert mx.is_diagonal(d.q1) and mx.is_diagonal(d.q2)
    return Diagonalization(basis, SlicePoint(mx.diagonal(d.q1), mx.diagonal(d.q2)))
