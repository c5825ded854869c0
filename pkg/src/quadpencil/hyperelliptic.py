"""Hyperelliptic curves attached to pencils with odd ``n = 2g + 1``.

The curve is ``y^2 = det(x*Q1 + z*Q2)`` in the weighted projective plane
with weights ``(1, 1, g + 1)``. A pair ``(M, A)`` in GL2 x GL_(n+1) moves
both the pencil and the points of its curve::

    pencil:  ((A^-1)^T (a Q1 + b Q2) A^-1, (A^-1)^T (c Q1 + d Q2) A^-1)
    point:   ((M^-1)^T (x, z), y / det A)

and the new form is ``det(A)^-2 * moebius_act(M, F)``, so curve points go to
curve points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import matrix as mx
from .algebra.forms import BinaryForm, factor_form, is_squarefree, moebius_act
from .algebra.matrix import QMatrix
from .algebra.rational import Rational, q, q_str
from .errors import BadGenus, EvenN, NotOnCurve, NotSmooth, SingularMatrix, SizeMismatch
from .groups import ProjectiveLinePoint, frame_action
from .pencils import QuadricPencil, discriminant_form, is_smooth
from .picard import CyclicMap, pic_binary_forms, pic_complete_intersections, pullback_map
from .algebra.snf import AbelianGroup


@dataclass(frozen=True)
class HyperellipticModel:
    """``y^2 = form(x, z)`` with ``form`` squarefree of degree ``2g + 2``.

    ``g = 1`` is admitted (from ``n = 3``) but marked ``below_range``.
    """

    g: int
    form: BinaryForm

    def __post_init__(self):
        if self.g < 1:
            raise BadGenus(f"genus must be at least 1, got {self.g}")
        if self.form.degree != 2 * self.g + 2:
            raise SizeMismatch(f"genus {self.g} needs a form of degree {2 * self.g + 2}")
        if not is_squarefree(self.form):
            raise NotSmooth("the branch form is not squarefree")

    @property
    def below_range(self) -> bool:
        return self.g < 2

    def to_json(self) -> dict:
        out = {"g": self.g, "F": self.form.to_json()}
        if self.below_range:
            out["warning"] = "genus 1: elliptic double cover, outside the hyperelliptic range"
        return out


@dataclass(frozen=True)
class WeightedPoint:
    """``[x : z : y]`` with weights ``(1, 1, weight)``, stored with ``z = 1`` or ``(x, z) = (1, 0)``."""

    x: Fraction
    z: Fraction
    y: Fraction
    weight: int

    def __post_init__(self):
        x, z, y = q(self.x), q(self.z), q(self.y)
        if x == 0 and z == 0:
            raise ValueError("(x, z) = (0, 0) is not a point of the curve's ambient space")
        t = 1 / z if z != 0 else 1 / x
        object.__setattr__(self, "x", x * t)
        object.__setattr__(self, "z", z * t)
        object.__setattr__(self, "y", y * t ** self.weight)

    @classmethod
    def of(cls, x: Rational, z: Rational, y: Rational, g: int) -> WeightedPoint:
        return cls(q(x), q(z), q(y), g + 1)

    def to_json(self) -> dict:
        return {"x": q_str(self.x), "z": q_str(self.z), "y": q_str(self.y)}


@dataclass(frozen=True)
class GammaElement:
    m: QMatrix
    a: QMatrix

    def __post_init__(self):
        m, a = mx.qmatrix(self.m), mx.qmatrix(self.a)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "a", a)
        if mx.shape(m) != (2, 2) or mx.det(m) == 0:
            raise SingularMatrix("M must be an invertible 2 x 2 matrix")
        if not mx.is_square(a) or mx.det(a) == 0:
            raise SingularMatrix("A must be an invertible square matrix")

    @classmethod
    def scalar(cls, size: int, lam: Rational) -> GammaElement:
        """``(diag(l^2, l^2), diag(l, ..., l))``, which acts trivially."""
        lam = q(lam)
        return cls(mx.diag([lam * lam] * 2), mx.diag([lam] * size))


def gamma_equal(g1: GammaElement, g2: GammaElement) -> bool:
    """Whether ``g2 = g1 * scalar(l)`` for some rational ``l``."""
    if mx.shape(g1.a) != mx.shape(g2.a):
        return False
    i, j = next((i, j) for i, row in enumerate(g1.a) for j, x in enumerate(row) if x)
    lam = g2.a[i][j] / g1.a[i][j]
    return g2.a == mx.scale(lam, g1.a) and g2.m == mx.scale(lam * lam, g1.m)


def associate(p: QuadricPencil) -> HyperellipticModel:
    if p.n % 2 == 0:
        raise EvenN(f"n = {p.n} is even; the curve needs n = 2g + 1")
    if not is_smooth(p):
        raise NotSmooth("the pencil is singular")
    return HyperellipticModel((p.n - 1) // 2, discriminant_form(p))


def curve_contains(model: HyperellipticModel, pt: WeightedPoint) -> bool:
    if pt.weight != model.g + 1:
        return False
    return pt.y * pt.y == model.form(pt.x, pt.z)


def gamma_act(gamma: GammaElement, p: QuadricPencil, pt: WeightedPoint) -> tuple[QuadricPencil, WeightedPoint]:
    if len(gamma.a) != p.n + 1:
        raise SizeMismatch("A does not match the pencil size")
    model = associate(p)
    if not curve_contains(model, pt):
        raise NotOnCurve("the point does not satisfy y^2 = F(x, z)")
    q1, q2 = frame_action(gamma.m, gamma.a, (p.q1, p.q2))
    new_pencil = QuadricPencil(q1, q2)
    x, z = mx.matvec(mx.transpose(mx.inverse(gamma.m)), (pt.x, pt.z))
    new_pt = WeightedPoint(x, z, pt.y / mx.det(gamma.a), pt.weight)
    assert curve_contains(associate(new_pencil), new_pt)
    return new_pencil, new_pt


def transformed_form(gamma: GammaElement, form: BinaryForm) -> BinaryForm:
    """``det(A)^-2 * moebius_act(M, form)``: the branch form after ``gamma``."""
    return moebius_act(gamma.m, form) * (1 / mx.det(gamma.a) ** 2)


def weierstrass_divisor(model: HyperellipticModel) -> tuple[list[ProjectiveLinePoint], list[BinaryForm]]:
    """Split the branch form over Q into rational branch points and irreducible factors."""
    _, factors = factor_form(model.form)
    assert all(e == 1 for _, e in factors)
    points, rest = [], []
    for f, _ in factors:
        if f.degree == 1:
            c0, c1 = f.coeffs
            points.append(ProjectiveLinePoint(-c1, c0))
        else:
            rest.append(f)
    assert len(points) + sum(f.degree for f in rest) == model.form.degree
    return points, rest


def _check_genus(g: int) -> None:
    if g < 2:
        raise BadGenus(f"genus must be at least 2, got {g}")


def hg_comparison_map(g: int) -> CyclicMap:
    """The injective map from the binary-forms Picard group into that of the moduli stack.

    An isomorphism for even ``g``; multiplication by 2 for odd ``g``.
    """
    _check_genus(g)
    source = pic_binary_forms(2 * g + 1).order
    factor = 1 if g % 2 == 0 else 2
    return CyclicMap(source, factor * source, factor)


def pic_hg(g: int) -> AbelianGroup:
    alpha = hg_comparison_map(g)
    assert alpha.injective
    return AbelianGroup.cyclic(alpha.target_order)


def verify_pic_triangle(g: int) -> bool:
    """Check that the Picard comparison maps force ``Pic(H_g)`` onto the level -2 group.

    With ``alpha`` the map from :func:`hg_comparison_map` and ``beta`` the
    level pullback ``-1 -> -2`` for ``n = 2g + 1``, every homomorphism ``h``
    with ``h o alpha = beta`` is enumerated; the triangle holds when at least
    one exists and each is bijective.
    """
    _check_genus(g)
    n = 2 * g + 1
    alpha = hg_comparison_map(g)
    beta = pullback_map(n, -1, -2)
    target = pic_complete_intersections(n).order
    if beta.target_order != target or alpha.source_order != beta.source_order:
        return False
    if pic_hg(g).order != target:
        return False
    hs = [
        CyclicMap(alpha.target_order, target, h)
        for h in range(target)
        if (h * alpha.target_order) % target == 0 and alpha.then(CyclicMap(alpha.target_order, target, h)).multiplier == beta.multiplier
    ]
    return bool(hs) and all(h.injective and h.image_order == target for h in hs)
