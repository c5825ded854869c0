"""Dense univariate polynomials over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .matrix import det
from .rational import Rational, q


def _strip(coeffs: Iterable[Fraction]) -> tuple[Fraction, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class UPoly:
    """Polynomial ``sum(coeffs[i] * t**i)``; trailing zeros are stripped."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(q(c) for c in self.coeffs))

    @classmethod
    def constant(cls, c: Rational) -> UPoly:
        return cls((q(c),))

    @classmethod
    def x(cls) -> UPoly:
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def from_roots(cls, roots: Iterable[Rational], lead: Rational = 1) -> UPoly:
        out = cls.constant(lead)
        for r in roots:
            out = out * cls((-q(r), Fraction(1)))
        return out

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t: Rational) -> Fraction:
        t = q(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other: UPoly) -> UPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return UPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> UPoly:
        return UPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: UPoly) -> UPoly:
        return self + (-other)

    def __mul__(self, other) -> UPoly:
        if not isinstance(other, UPoly):
            return UPoly(tuple(q(other) * c for c in self.coeffs))
        if self.is_zero() or other.is_zero():
            return UPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UPoly(tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, other: UPoly) -> tuple[UPoly, UPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.lc
        for k in range(len(quo) - 1, -1, -1):
            c = rem[k + other.degree] / lead
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UPoly(tuple(quo)), UPoly(tuple(rem[: other.degree] if other.degree > 0 else ()))

    def __floordiv__(self, other: UPoly) -> UPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: UPoly) -> UPoly:
        return divmod(self, other)[1]

    def deriv(self) -> UPoly:
        return UPoly(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def monic(self) -> UPoly:
        return self * (1 / self.lc) if self.coeffs else self

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c:
                mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                coef = str(c) if (not mono or abs(c) != 1) else ("-" if c < 0 else "")
                terms.append(f"{coef}{'*' if coef not in ('', '-') and mono else ''}{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def poly_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd (zero only if both inputs are zero)."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def sylvester_det(f_desc: Sequence[Fraction], g_desc: Sequence[Fraction]) -> Fraction:
    """Determinant of the Sylvester matrix of two coefficient vectors.

    Coefficients are given highest power first at their *formal* degrees
    ``len - 1``, leading zeros allowed; this is the homogeneous resultant of
    the corresponding binary forms.
    """
    m, n = len(f_desc) - 1, len(g_desc) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + list(f_desc) + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + list(g_desc) + [Fraction(0)] * (size - n - 1 - i))
    return det(rows)


def resultant(f: UPoly, g: UPoly) -> Fraction:
    """Resultant ``lc(f)^deg(g) * lc(g)^deg(f) * prod(beta_j - alpha_i)``.

    ``alpha_i`` are the roots of ``f`` and ``beta_j`` those of ``g``; this is
    the Sylvester determinant with the rows of ``g`` placed first. It
    vanishes exactly when ``f`` and ``g`` share a root over the closure.
    A zero input yields 0.
    """
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    return sylvester_det(g.coeffs[::-1], f.coeffs[::-1])


def interpolate(xs: Sequence[Rational], ys: Sequence[Rational]) -> UPoly:
    """Unique polynomial of degree < len(xs) through the points (Newton form)."""
    xs = [q(x) for x in xs]
    dd = [q(y) for y in ys]
    n = len(xs)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    out = UPoly.constant(dd[-1]) if n else UPoly()
    for i in range(n - 2, -1, -1):
        out = out * UPoly((-xs[i], Fraction(1))) + UPoly.constant(dd[i])
    return out


def factor_rational(f: UPoly) -> tuple[Fraction, list[tuple[UPoly, int]]]:
    """Factor over Q into ``content * prod(p_i ** e_i)`` with monic irreducible ``p_i``.

    Delegates to sympy's univariate factorization over QQ.
    """
    import sympy

    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    t = sympy.Symbol("t")
    sp = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)], t, domain="QQ")
    content, factors = sp.factor_list()
    out = []
    for fac, mult in factors:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs())]
        p = UPoly(tuple(coeffs))
        content_fix = p.lc
        out.append((p.monic(), int(mult)))
        content *= sympy.Rational(content_fix.numerator, content_fix.denominator) ** mult
    out.sort(key=lambda pe: (pe[0].degree, pe[0].coeffs))
    return Fraction(int(sympy.Rational(content).p), int(sympy.Rational(content).q)), out


def rational_roots(f: UPoly) -> list[Fraction]:
    """Distinct rational roots, ascending."""
    _, factors = factor_rational(f)
    return sorted(-p.coeffs[0] for p, _ in factors if p.degree == 1)
