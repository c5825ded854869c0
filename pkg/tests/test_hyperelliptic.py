from fractions import Fraction

import pytest

from quadpencil.algebra import matrix as mx
from quadpencil.algebra.forms import BinaryForm, moebius_act
from quadpencil.errors import BadGenus, EvenN, NotOnCurve, NotSmooth
from quadpencil.groups import ProjectiveLinePoint
from quadpencil.hyperelliptic import (
    GammaElement,
    HyperellipticModel,
    WeightedPoint,
    associate,
    curve_contains,
    gamma_act,
    gamma_equal,
    pic_hg,
    transformed_form,
    verify_pic_triangle,
    weierstrass_divisor,
)
from quadpencil.pencils import QuadricPencil, SlicePoint, discriminant_form, embed
from quadpencil.picard import pic_complete_intersections
from quadpencil.sampling import Lcg, random_invertible
from quadpencil.suites import gamma_curve_suite, random_curve_instance

P5 = embed(SlicePoint.of([1] * 6, range(6)))


def lin(a, b):
    return BinaryForm.linear(a, b)


def test_associate():
    model = associate(P5)
    assert model.g == 2 and not model.below_range
    assert model.form == BinaryForm.product(lin(1, i) for i in range(6))
    low = associate(embed(SlicePoint.of([1] * 4, range(4))))
    assert low.g == 1 and low.below_range and "warning" in low.to_json()
    with pytest.raises(NotSmooth):
        associate(QuadricPencil(mx.identity(6), mx.diag([0, 1, 1, 3, 4, 5])))
    with pytest.raises(EvenN):
        associate(embed(SlicePoint.of([1] * 5, range(5))))


def test_weighted_point_normalization():
    p = WeightedPoint.of(2, 4, 16, g=2)
    assert (p.x, p.z, p.y) == (Fraction(1, 2), 1, Fraction(1, 4))
    assert WeightedPoint.of(3, 0, 5, g=2) == WeightedPoint.of(1, 0, Fraction(5, 27), g=2)
    with pytest.raises(ValueError):
        WeightedPoint.of(0, 0, 1, g=2)


def test_curve_contains():
    model = associate(P5)
    assert curve_contains(model, WeightedPoint.of(-3, 1, 0, g=2))
    # leading coefficient 1 is a square: the points [1:0:+-1]
    assert curve_contains(model, WeightedPoint.of(1, 0, 1, g=2))
    assert curve_contains(model, WeightedPoint.of(1, 0, -1, g=2))
    assert not curve_contains(model, WeightedPoint.of(1, 1, 1, g=2))
    # F(1, 1) = 720 is not a square; the point with y^2 = 720 after scaling does exist for (2, 2)
    assert not curve_contains(model, WeightedPoint.of(1, 1, 27, g=2))


def test_gamma_identity_and_errors():
    pt = WeightedPoint.of(0, 1, 0, g=2)
    e = GammaElement(mx.identity(2), mx.identity(6))
    assert gamma_act(e, P5, pt) == (P5, pt)
    with pytest.raises(NotOnCurve):
        gamma_act(e, P5, WeightedPoint.of(1, 1, 1, g=2))


def test_gamma_pure_congruence():
    rng = Lcg(3)
    model = associate(P5)
    pt = WeightedPoint.of(1, 0, 1, g=2)
    a = random_invertible(rng, 6)
    new_pencil, new_pt = gamma_act(GammaElement(mx.identity(2), a), P5, pt)
    det_a = mx.det(a)
    # the pencil moves by congruence with A^-1, so F scales by det(A^-1)^2
    assert discriminant_form(new_pencil) == model.form * (1 / det_a ** 2)
    assert new_pt == WeightedPoint.of(1, 0, 1 / det_a, g=2)
    # congruence by A itself scales F by det(A)^2
    assert discriminant_form(P5.congruent(a)) == model.form * det_a ** 2


def test_gamma_scalar_class_acts_trivially():
    pencil, pt = random_curve_instance(Lcg(4), 5)
    for lam in (2, Fraction(-1, 3)):
        s = GammaElement.scalar(6, lam)
        assert gamma_equal(GammaElement(mx.identity(2), mx.identity(6)), s)
        assert gamma_act(s, pencil, pt) == (pencil, pt)


def test_gamma_transformed_form():
    rng = Lcg(6)
    pencil, pt = random_curve_instance(rng, 5)
    gamma = GammaElement(random_invertible(rng, 2), random_invertible(rng, 6))
    new_pencil, new_pt = gamma_act(gamma, pencil, pt)
    expected = moebius_act(gamma.m, associate(pencil).form) * mx.det(gamma.a) ** -2
    assert discriminant_form(new_pencil) == expected == transformed_form(gamma, associate(pencil).form)
    assert curve_contains(associate(new_pencil), new_pt)


@pytest.mark.parametrize("n", [5, 7])
def test_gamma_suite(n):
    assert gamma_curve_suite(n, 15, seed=n)


def test_manufactured_points_lie_on_curves():
    rng = Lcg(8)
    for n in (3, 5, 7):
        pencil, pt = random_curve_instance(rng, n)
        assert curve_contains(associate(pencil), pt)


def test_weierstrass_split():
    points, rest = weierstrass_divisor(associate(P5))
    assert points == [ProjectiveLinePoint.affine(-i) for i in (5, 4, 3, 2, 1, 0)] or \
        sorted(points, key=lambda p: p.x) == [ProjectiveLinePoint.affine(-i) for i in (5, 4, 3, 2, 1, 0)]
    assert rest == []
    x, z = lin(1, 0), lin(0, 1)
    form = BinaryForm.of([1, 0, -2]) * x * z * (x + z) * (x - z)
    points, rest = weierstrass_divisor(HyperellipticModel(2, form))
    assert len(points) == 4 and [f.degree for f in rest] == [2]
    assert set(points) == {ProjectiveLinePoint(0, 1), ProjectiveLinePoint(1, 0),
                           ProjectiveLinePoint.affine(1), ProjectiveLinePoint.affine(-1)}
    assert len(points) + sum(f.degree for f in rest) == 6


@pytest.mark.parametrize("g, order", [(2, 10), (3, 28), (5, 44)])
def test_pic_hg(g, order):
    assert pic_hg(g).order == order


def test_pic_triangle():
    for g in range(2, 11):
        assert verify_pic_triangle(g)
        assert pic_hg(g).order == pic_complete_intersections(2 * g + 1).order
        assert pic_hg(g).order == (4 * g + 2 if g % 2 == 0 else 8 * g + 4)
    with pytest.raises(BadGenus):
        pic_hg(1)
    with pytest.raises(BadGenus):
        verify_pic_triangle(1)


def test_model_validation():
    with pytest.raises(NotSmooth):
        HyperellipticModel(2, BinaryForm.of([1, 0, 0, 0, 0, 0, 0]))
    with pytest.raises(ValueError):
        HyperellipticModel(2, BinaryForm.of([1, 0, 1]))
