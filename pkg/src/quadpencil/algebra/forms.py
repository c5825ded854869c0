"""Binary forms with rational coefficients.

A form of degree ``d`` is stored as ``coeffs = (c_0, ..., c_d)`` meaning
``sum(c_j * x0**(d-j) * x1**j)``: descending powers of ``x0``. Setting
``t = x1/x0`` the same tuple is the ascending coefficient list of the
dehomogenization ``f(1, t)``, which is how univariate routines are reused.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Sequence

from ..errors import SingularMatrix, ZeroForm
from .matrix import QMatrix, qmatrix
from .poly import UPoly, factor_rational, sylvester_det
from .rational import Rational, q, q_str


@dataclass(frozen=True)
class BinaryForm:
    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(q(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if self.degree < 0 or len(coeffs) != self.degree + 1:
            raise ValueError(f"a degree-{self.degree} form needs {self.degree + 1} coefficients")

    @classmethod
    def of(cls, coeffs: Sequence[Rational]) -> BinaryForm:
        return cls(len(coeffs) - 1, tuple(q(c) for c in coeffs))

    @classmethod
    def linear(cls, a: Rational, b: Rational) -> BinaryForm:
        """The form ``a*x0 + b*x1``."""
        return cls(1, (q(a), q(b)))

    @classmethod
    def one(cls) -> BinaryForm:
        return cls(0, (Fraction(1),))

    @classmethod
    def product(cls, forms) -> BinaryForm:
        out = cls.one()
        for f in forms:
            out = out * f
        return out

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, x0: Rational, x1: Rational) -> Fraction:
        x0, x1 = q(x0), q(x1)
        d = self.degree
        return sum((c * x0 ** (d - j) * x1 ** j for j, c in enumerate(self.coeffs)), Fraction(0))

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            out = [Fraction(0)] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return BinaryForm(self.degree + other.degree, tuple(out))
        c = q(other)
        return BinaryForm(self.degree, tuple(c * x for x in self.coeffs))

    __rmul__ = __mul__

    def __add__(self, other: BinaryForm) -> BinaryForm:
        if self.degree != other.degree:
            raise ValueError("adding forms of different degrees")
        return BinaryForm(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> BinaryForm:
        return self * -1

    def __sub__(self, other: BinaryForm) -> BinaryForm:
        return self + (-other)

    def d_x0(self) -> BinaryForm:
        d = self.degree
        if d == 0:
            raise ValueError("derivative of a constant form")
        return BinaryForm(d - 1, tuple((d - j) * c for j, c in enumerate(self.coeffs[:-1])))

    def d_x1(self) -> BinaryForm:
        d = self.degree
        if d == 0:
            raise ValueError("derivative of a constant form")
        return BinaryForm(d - 1, tuple(j * c for j, c in enumerate(self.coeffs) if j > 0))

    def dehomogenize(self) -> UPoly:
        """``f(1, t)`` as a univariate polynomial in ``t = x1/x0``."""
        return UPoly(self.coeffs)

    @classmethod
    def homogenize(cls, f: UPoly, degree: int) -> BinaryForm:
        if f.degree > degree:
            raise ValueError("polynomial degree exceeds the form degree")
        return cls(degree, f.coeffs + (Fraction(0),) * (degree + 1 - len(f.coeffs)))

    def ratio_to(self, other: BinaryForm) -> Fraction | None:
        """The scalar ``c`` with ``self == c * other``, if one exists and is nonzero."""
        if self.degree != other.degree or self.is_zero() or other.is_zero():
            return None
        j = next(i for i, c in enumerate(other.coeffs) if c)
        c = self.coeffs[j] / other.coeffs[j]
        if c == 0 or any(a != c * b for a, b in zip(self.coeffs, other.coeffs)):
            return None
        return c

    def proportional(self, other: BinaryForm) -> bool:
        return self.ratio_to(other) is not None

    def __str__(self) -> str:
        d = self.degree
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "*".join(m for m in (
                "" if d - j == 0 else ("x0" if d - j == 1 else f"x0^{d - j}"),
                "" if j == 0 else ("x1" if j == 1 else f"x1^{j}"),
            ) if m)
            if not mono:
                terms.append(q_str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{q_str(c)}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [q_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> BinaryForm:
        return cls(int(data["degree"]), tuple(q(c) for c in data["coeffs"]))


def homogeneous_resultant(f: BinaryForm, g: BinaryForm) -> Fraction:
    """Resultant of two forms at their formal degrees.

    Zero exactly when ``f`` and ``g`` share a projective root over the
    algebraic closure, a root at ``[0:1]`` included.
    """
    return sylvester_det(f.coeffs, g.coeffs)


def is_squarefree(f: BinaryForm) -> bool:
    """True iff ``f`` has no repeated projective root over the closure.

    By Euler's identity ``d*f = x0*f_x0 + x1*f_x1``, a repeated root of ``f``
    is a common root of the two partials, so the test is the nonvanishing of
    their homogeneous resultant.
    """
    if f.is_zero():
        raise ZeroForm("the zero form has no well-defined roots")
    if f.degree <= 1:
        return True
    return homogeneous_resultant(f.d_x0(), f.d_x1()) != 0


def moebius_act(m: Sequence[Sequence[Rational]] | QMatrix, f: BinaryForm) -> BinaryForm:
    """``p(a*x0 + c*x1, b*x0 + d*x1)`` for ``m = [[a, b], [c, d]]``.

    This is ``p(m^T v)`` for the column ``v = (x0, x1)``, hence a left
    action: ``moebius_act(m1, moebius_act(m2, f)) == moebius_act(m1 @ m2, f)``.
    """
    (a, b), (c, d) = qmatrix(m)
    if a * d - b * c == 0:
        raise SingularMatrix("Moebius matrix must be invertible")
    deg = f.degree
    # (a x0 + c x1)^k and (b x0 + d x1)^k expanded once
    first = [_linear_power(a, c, k) for k in range(deg + 1)]
    second = [_linear_power(b, d, k) for k in range(deg + 1)]
    out = BinaryForm(deg, (Fraction(0),) * (deg + 1))
    for j, coeff in enumerate(f.coeffs):
        if coeff:
            out = out + (first[deg - j] * second[j]) * coeff
    return out


def _linear_power(u: Fraction, v: Fraction, k: int) -> BinaryForm:
    return BinaryForm(k, tuple(comb(k, j) * u ** (k - j) * v ** j for j in range(k + 1)))


def factor_form(f: BinaryForm) -> tuple[Fraction, list[tuple[BinaryForm, int]]]:
    """Factor over Q into ``content * prod(p_i ** e_i)``.

    Each ``p_i`` is an irreducible form with coprime integer coefficients and
    positive first nonzero coefficient; a root at ``[0:1]`` shows up as the
    factor ``x0``.
    """
    if f.is_zero():
        raise ZeroForm("cannot factor the zero form")
    g = f.dehomogenize()
    content, factors = factor_rational(g)
    out = []
    for p, e in factors:
        prim, c = _primitive_form(BinaryForm.homogenize(p, p.degree))
        out.append((prim, e))
        content *= c ** e
    missing = f.degree - g.degree
    if missing:
        out.append((BinaryForm.linear(1, 0), missing))
    return content, out


def _primitive_form(f: BinaryForm) -> tuple[BinaryForm, Fraction]:
    """``(p, c)`` with ``f = c * p``, ``p`` integral, primitive, first nonzero coefficient positive."""
    den = lcm(*(c.denominator for c in f.coeffs))
    ints = [int(c * den) for c in f.coeffs]
    g = gcd(*ints)
    if next(x for x in ints if x) < 0:
        g = -g
    return BinaryForm(f.degree, tuple(Fraction(x // g) for x in ints)), Fraction(g, den)
