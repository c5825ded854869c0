from fractions import Fraction
from math import gcd

import pytest

from quadpencil.algebra import matrix as mx
from quadpencil.algebra.snf import AbelianGroup
from quadpencil.errors import BadParams, LevelMismatch, NotDivisor
from quadpencil.groups import GkElement, Permutation, central_element, identity
from quadpencil.picard import (
    CharacterTriple,
    CyclicMap,
    kernel_character,
    kernel_character_value,
    lattice,
    pic_binary_forms,
    pic_complete_intersections,
    picard_group,
    pullback_map,
    verify_kernel_character,
)
from quadpencil.sampling import Lcg

LEVELS = [*range(-6, 0), *range(1, 7)]


def test_lattice_examples():
    lat = lattice(3, -2)
    assert lat.d == 4
    assert lat.basis == (CharacterTriple(1, -1, 0), CharacterTriple(0, 0, 1))
    assert lattice(4, -1).basis == (CharacterTriple(5, -2, 0), CharacterTriple(0, 0, 1))
    assert CharacterTriple(6, -6, 1) in lat
    assert CharacterTriple(1, 1, 0) not in lat
    with pytest.raises(BadParams):
        lattice(2, -1)
    with pytest.raises(BadParams):
        lattice(3, 0)


def test_lattice_coordinates_round_trip():
    for n in range(3, 20):
        for k in LEVELS:
            lat = lattice(n, k)
            for x in range(-3, 4):
                for delta in (0, 1):
                    chi = lat.psi(x, delta)
                    assert chi in lat and lat.psi_inverse(chi) == (x, delta)


@pytest.mark.parametrize("n, k, triple", [(3, -2, (6, -6, 1)), (4, -1, (10, -4, 1)), (5, 3, (15, 15, 1))])
def test_kernel_character_examples(n, k, triple):
    assert kernel_character(n, k).to_json() == list(triple)


def test_kernel_character_always_in_lattice():
    for n in range(3, 40):
        for k in LEVELS:
            assert kernel_character(n, k) in lattice(n, k)
            assert (n * lattice(n, k).d) % 2 == 0


def test_kernel_character_value_examples():
    assert kernel_character_value(identity(3, -2), 3, -2) == 1
    s = Permutation((1, 0, 2, 3))
    g = GkElement(-2, mx.identity(2), (3, 3, 3, 3), s)
    assert kernel_character_value(g, 3, -2) == -Fraction(1, 3 ** 24)
    m = mx.qmatrix([[2, 1], [1, 3]])
    assert kernel_character_value(GkElement(-2, m, (1, 1, 1, 1), Permutation.identity(4)), 3, -2) == 5 ** 6
    with pytest.raises(LevelMismatch):
        kernel_character_value(identity(3, -1), 3, -2)


def test_kernel_character_trivial_on_center():
    rng = Lcg(1)
    for n in (3, 4, 7):
        for k in (-3, -1, 2):
            assert kernel_character_value(central_element(n, k, rng.nonzero_rational()), n, k) == 1


@pytest.mark.parametrize("n", range(3, 9))
@pytest.mark.parametrize("k", [-1, -2, -3])
def test_verify_kernel_character(n, k):
    result = verify_kernel_character(n, k, trials=30, seed=n * 10 + k)
    assert result, result.counterexample


@pytest.mark.parametrize("n, k, order", [(3, -2, 12), (4, -2, 4), (5, -1, 10)])
def test_picard_examples(n, k, order):
    assert picard_group(n, k) == AbelianGroup.cyclic(order)


def test_picard_sweep():
    for n in range(3, 65):
        for k in LEVELS:
            g = picard_group(n, k)
            assert g.is_cyclic and g.order == gcd(abs(2 * k), n + 1) * n


@pytest.mark.parametrize("n, order", [(4, 4), (5, 10), (7, 28)])
def test_pic_complete_intersections(n, order):
    assert pic_complete_intersections(n).order == order


@pytest.mark.parametrize("n, order", [(4, 4), (5, 10), (6, 6)])
def test_pic_binary_forms(n, order):
    assert pic_binary_forms(n).order == order


def test_closed_forms_agree_with_snf():
    for n in range(3, 65):
        assert pic_complete_intersections(n) == picard_group(n, -2)
        assert pic_binary_forms(n) == picard_group(n, -1)


def test_pullback_examples():
    assert pullback_map(3, -1, -2) == CyclicMap(6, 12, 2)
    assert pullback_map(4, -1, -2) == CyclicMap(4, 4, 1)
    assert pullback_map(5, -2, -2).multiplier == 1
    with pytest.raises(NotDivisor):
        pullback_map(3, -2, -3)


def test_pullback_injective_and_functorial():
    for n in range(3, 21):
        for c, b in ((-1, -2), (-1, -3), (-2, -4)):
            f = pullback_map(n, c, b)
            dc, db = lattice(n, c).d, lattice(n, b).d
            assert f.multiplier == db // dc
            assert f.image_order == dc * n and f.injective
        chain = pullback_map(n, -1, -2).then(pullback_map(n, -2, -4))
        assert chain == pullback_map(n, -1, -4)


def test_cyclic_map_validation():
    with pytest.raises(BadParams):
        CyclicMap(4, 6, 1)
    m = CyclicMap(6, 12, 2)
    assert m(5) == 10 and m.to_json() == {"source": 6, "target": 12, "multiplier": 2}
