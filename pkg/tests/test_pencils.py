from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import small_rationals
from quadpencil.algebra import matrix as mx
from quadpencil.algebra.forms import BinaryForm, is_squarefree
from quadpencil.errors import DependentPencil, NotInSlice, NotSmooth, SizeMismatch
from quadpencil.pencils import (
    Diagonalization,
    Obstruction,
    QuadricPencil,
    SlicePoint,
    discriminant_form,
    embed,
    first_vanishing_minor,
    is_smooth,
    is_smooth_diagonal,
    minors,
    simultaneous_diagonalize,
    theta,
)
from quadpencil.sampling import Lcg, random_invertible, random_slice_point, random_unimodular

W0 = SlicePoint.of([1, 1, 1, 1], [0, 1, 2, 3])


def lin(a, b):
    return BinaryForm.linear(a, b)


def sympy_discriminant(p: QuadricPencil) -> BinaryForm:
    """Independent oracle: symbolic determinant of x0*Q1 + x1*Q2."""
    x0, x1 = sympy.symbols("x0 x1")
    size = p.n + 1
    m = sympy.Matrix(size, size, lambda i, j: x0 * sympy.Rational(str(p.q1[i][j])) + x1 * sympy.Rational(str(p.q2[i][j])))
    poly = sympy.Poly(m.det(method="berkowitz"), x0, x1)
    coeffs = [poly.coeff_monomial(x0 ** (size - j) * x1 ** j) for j in range(size + 1)]
    return BinaryForm(size, tuple(Fraction(int(c.p), int(c.q)) for c in coeffs))


def test_minors_examples():
    assert minors(W0) == [1, 2, 3, 1, 2, 1]
    assert all(m == 0 for m in minors(SlicePoint.of([1, 2, 4, 8], [1, 2, 4, 8])))
    assert minors(SlicePoint.of([1, 0, 0], [0, 1, 0]))[0] == 1


def test_is_smooth_diagonal_examples():
    assert is_smooth_diagonal(W0)
    assert not is_smooth_diagonal(SlicePoint.of([1, 2, 3, 4], [2, 4, 5, 6]))
    assert first_vanishing_minor(SlicePoint.of([1, 0, 1, 1], [0, 0, 1, 2])) == (0, 1)


def test_discriminant_examples():
    expected = lin(1, 0) * lin(1, 1) * lin(1, 2) * lin(1, 3)
    assert discriminant_form(embed(W0)) == expected
    p = QuadricPencil(mx.identity(4), mx.diag([1, 1, 1, 2]))
    assert discriminant_form(p) == lin(1, 1) * lin(1, 1) * lin(1, 1) * lin(1, 2)


def test_discriminant_matches_symbolic_determinant():
    rng = Lcg(11)
    for n in (1, 2, 3, 4):
        for _ in range(3):
            w = random_slice_point(rng, n)
            p = embed(w).congruent(random_invertible(rng, n + 1))
            assert discriminant_form(p) == sympy_discriminant(p)


def test_is_smooth_examples():
    assert is_smooth(embed(W0))
    assert not is_smooth(QuadricPencil(mx.identity(4), mx.diag([0, 1, 1, 3])))
    c = random_unimodular(Lcg(3), 4)
    assert is_smooth(embed(W0).congruent(c))


def test_theta_examples():
    assert theta(W0) == lin(1, 0) * lin(1, 1) * lin(1, 2) * lin(1, 3)
    assert theta(SlicePoint.of([1, 0, 1, 1], [0, 1, 1, 2])) == lin(1, 0) * lin(0, 1) * lin(1, 1) * lin(1, 2)
    with pytest.raises(NotInSlice):
        theta(SlicePoint.of([1, 2, 3, 4], [2, 4, 5, 6]))


def test_embed():
    p = embed(W0)
    assert p.q1 == mx.identity(4) and p.q2 == mx.diag([0, 1, 2, 3])
    with pytest.raises(NotInSlice):
        embed(SlicePoint.of([1, 2, 3, 4], [2, 4, 5, 6]))


def test_pencil_validation():
    with pytest.raises(DependentPencil):
        QuadricPencil(mx.identity(3), mx.scale(2, mx.identity(3)))
    with pytest.raises(ValueError):
        QuadricPencil(mx.qmatrix([[1, 2], [0, 1]]), mx.identity(2))
    with pytest.raises(SizeMismatch):
        QuadricPencil(mx.identity(3), mx.identity(2))
    with pytest.raises(SizeMismatch):
        QuadricPencil.from_json({"n": 4, "Q1": [[1, 0], [0, 1]], "Q2": [[0, 0], [0, 1]]})


def test_json_round_trips():
    p = embed(SlicePoint.of([1, Fraction(1, 2), 3], [2, -1, Fraction(-7, 3)]))
    assert QuadricPencil.from_json(p.to_json()) == p
    assert SlicePoint.from_json(W0.to_json()) == W0


@st.composite
def slice_candidates(draw):
    n = draw(st.integers(3, 6))
    a = draw(st.lists(small_rationals, min_size=n + 1, max_size=n + 1))
    b = draw(st.lists(small_rationals, min_size=n + 1, max_size=n + 1))
    return SlicePoint(tuple(a), tuple(b))


@given(slice_candidates())
def test_three_way_smoothness_equivalence(w):
    nonzero = all(m != 0 for m in minors(w))
    assert is_smooth_diagonal(w) == nonzero
    form = BinaryForm.product(lin(a, b) for a, b in w.columns())
    if form.is_zero():
        assert not nonzero
        return
    assert is_squarefree(form) == nonzero
    try:
        p = QuadricPencil(mx.diag(w.a), mx.diag(w.b))
    except DependentPencil:
        assert not nonzero
        return
    assert is_smooth(p) == nonzero
    assert discriminant_form(p) == form


def test_congruence_scales_discriminant():
    rng = Lcg(5)
    for n in (2, 3, 4):
        p = embed(random_slice_point(rng, n)).congruent(random_invertible(rng, n + 1))
        b = random_invertible(rng, n + 1)
        assert discriminant_form(p.congruent(b)) == discriminant_form(p) * mx.det(b) ** 2


def test_diagonalize_identity_on_diagonal_input():
    result = simultaneous_diagonalize(embed(W0))
    assert isinstance(result, Diagonalization)
    assert result.basis == mx.identity(4) and result.point == W0


def test_diagonalize_round_trip():
    rng = Lcg(8)
    for n in (3, 4, 5):
        for _ in range(3):
            p = embed(random_slice_point(rng, n)).congruent(random_unimodular(rng, n + 1))
            result = simultaneous_diagonalize(p)
            assert isinstance(result, Diagonalization)
            d = p.congruent(result.basis)
            assert mx.is_diagonal(d.q1) and mx.is_diagonal(d.q2)
            assert theta(result.point) == discriminant_form(p) * mx.det(result.basis) ** 2


def test_diagonalize_obstruction():
    # tridiagonal Q2 with irreducible characteristic polynomial t^4 + 2t^3 - 3t^2 - 4t + 1
    q2 = mx.qmatrix([[-1, 1, 0, 0], [1, -1, 1, 0], [0, 1, -1, 1], [0, 0, 1, 1]])
    result = simultaneous_diagonalize(QuadricPencil(mx.identity(4), q2))
    assert isinstance(result, Obstruction)
    (factor,) = result.factors
    assert factor.degree == 4
    assert factor.proportional(discriminant_form(QuadricPencil(mx.identity(4), q2)))
    assert sympy.Poly([int(c) for c in factor.coeffs], sympy.Symbol("t")).is_irreducible


def test_diagonalize_partial_obstruction():
    q1 = mx.diag([1, 1, 1, 1])
    q2 = mx.qmatrix([[1, 1, 0, 0], [1, -1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 1]])
    result = simultaneous_diagonalize(QuadricPencil(q1, q2))
    assert isinstance(result, Obstruction)
    assert sorted(f.degree for f in result.factors) == [2, 2]


def test_diagonalize_rejects_singular():
    with pytest.raises(NotSmooth):
        simultaneous_diagonalize(QuadricPencil(mx.identity(4), mx.diag([0, 1, 1, 3])))
