"""Characters and Picard groups of the quotients ``[W / G_k]``.

A character of the level-``k`` group is a triple ``(ell, a, delta)``: power
of ``det M``, common torus exponent and sign. It is well defined on the
quotient exactly when ``2*k*ell == (n+1)*a``; such triples form a lattice
isomorphic to ``Z + Z/2`` with ``d = gcd(|2k|, n+1)`` and coordinates
``(x, delta) -> ((n+1)/d * x, 2k/d * x, delta)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .algebra import matrix as mx
from .algebra.matrix import IntegerMatrix
from .algebra.snf import AbelianGroup
from .errors import BadParams, LevelMismatch, NotDivisor
from .groups import GkElement, act, central_element
from .pencils import SlicePoint, minors
from .sampling import CheckResult, Lcg, random_gk, random_slice_point


def _check_params(n: int, k: int) -> None:
    if n < 3:
        raise BadParams(f"n must be at least 3, got {n}")
    if k == 0:
        raise BadParams("the level k must be nonzero")


@dataclass(frozen=True)
class CharacterTriple:
    ell: int
    a: int
    delta: int

    def __post_init__(self):
        if self.delta not in (0, 1):
            raise BadParams("delta is a sign character exponent, 0 or 1")

    def __add__(self, other: CharacterTriple) -> CharacterTriple:
        return CharacterTriple(self.ell + other.ell, self.a + other.a, (self.delta + other.delta) % 2)

    def __rmul__(self, c: int) -> CharacterTriple:
        return CharacterTriple(c * self.ell, c * self.a, (c * self.delta) % 2)

    def to_json(self) -> list[int]:
        return [self.ell, self.a, self.delta]


@dataclass(frozen=True)
class CharacterLattice:
    n: int
    k: int

    @property
    def d(self) -> int:
        return gcd(abs(2 * self.k), self.n + 1)

    def psi(self, x: int, delta: int) -> CharacterTriple:
        d = self.d
        return CharacterTriple((self.n + 1) // d * x, 2 * self.k // d * x, delta % 2)

    def psi_inverse(self, chi: CharacterTriple) -> tuple[int, int]:
        if chi not in self:
            raise BadParams(f"{chi} is not a character of level {self.k}")
        return chi.ell * self.d // (self.n + 1), chi.delta

    @property
    def basis(self) -> tuple[CharacterTriple, CharacterTriple]:
        return self.psi(1, 0), self.psi(0, 1)

    def __contains__(self, chi: CharacterTriple) -> bool:
        return 2 * self.k * chi.ell == (self.n + 1) * chi.a


def lattice(n: int, k: int) -> CharacterLattice:
    _check_params(n, k)
    return CharacterLattice(n, k)


def kernel_character(n: int, k: int) -> CharacterTriple:
    """The character of ``prod_{i<j}(a_i b_j - a_j b_i)``: ``(n(n+1)/2, kn, 1)``."""
    _check_params(n, k)
    chi = CharacterTriple(n * (n + 1) // 2, k * n, 1)
    assert chi in lattice(n, k)
    return chi


def kernel_character_value(g: GkElement, n: int, k: int) -> Fraction:
    if g.k != k:
        raise LevelMismatch(f"element has level {g.k}, expected {k}")
    if g.n != n:
        raise BadParams(f"element has n={g.n}, expected {n}")
    return mx.det(g.m) ** (n * (n + 1) // 2) * prod(g.lambdas) ** (k * n) * g.sigma.sign


def minor_product(w: SlicePoint) -> Fraction:
    return prod(minors(w), start=Fraction(1))


def verify_kernel_character(n: int, k: int, trials: int = 100, seed: int = 0, central_trials: int = 20) -> CheckResult:
    """Check ``f(g.w) / f(w)`` against :func:`kernel_character_value` on seeded random inputs.

    ``f`` is the product of all ``2 x 2`` minors. Also checks the value is 1 on
    random central elements.
    """
    _check_params(n, k)
    rng = Lcg(seed)
    checked = 0
    for trial in range(trials):
        g = random_gk(rng, n, k)
        w = random_slice_point(rng, n)
        ratio = minor_product(act(g, w)) / minor_product(w)
        expected = kernel_character_value(g, n, k)
        checked += 1
        if ratio != expected:
            return CheckResult(False, checked, {"trial": trial, "g": g.to_json(), "w": w.to_json(),
                                                "ratio": str(ratio), "expected": str(expected)})
    for trial in range(central_trials):
        c = central_element(n, k, rng.nonzero_rational())
        checked += 1
        if kernel_character_value(c, n, k) != 1:
            return CheckResult(False, checked, {"central": c.to_json()})
    return CheckResult(True, checked)


def picard_group(n: int, k: int) -> AbelianGroup:
    """``Z + Z/2`` in lattice coordinates, modulo the kernel character, via Smith normal form."""
    lat = lattice(n, k)
    d = lat.d
    assert (n * d) % 2 == 0
    x, delta = lat.psi_inverse(kernel_character(n, k))
    assert (x, delta) == (n * d // 2, 1)
    # generators: e_x (free), e_delta (order 2)
    relations = IntegerMatrix.from_rows([[x, delta], [0, 2]])
    group = AbelianGroup.from_relations(relations)
    assert group.is_cyclic and group.order == d * n, (n, k, group)
    return group


def pic_complete_intersections(n: int) -> AbelianGroup:
    """Closed form at level -2: ``Z/n`` (n even), ``Z/2n`` (n = 1 mod 4), ``Z/4n`` (n = 3 mod 4)."""
    _check_params(n, -2)
    factor = 1 if n % 2 == 0 else (2 if n % 4 == 1 else 4)
    group = AbelianGroup.cyclic(factor * n)
    assert group == picard_group(n, -2)
    return group


def pic_binary_forms(n: int) -> AbelianGroup:
    """Closed form at level -1: ``Z/n`` (n even), ``Z/2n`` (n odd)."""
    _check_params(n, -1)
    group = AbelianGroup.cyclic(n if n % 2 == 0 else 2 * n)
    assert group == picard_group(n, -1)
    return group


@dataclass(frozen=True)
class CyclicMap:
    """The homomorphism ``Z/source_order -> Z/target_order``, ``1 -> multiplier``."""

    source_order: int
    target_order: int
    multiplier: int

    def __post_init__(self):
        if self.source_order < 1 or self.target_order < 1 or self.multiplier < 0:
            raise BadParams("orders must be positive and the multiplier non-negative")
        if (self.multiplier * self.source_order) % self.target_order:
            raise BadParams("multiplier does not define a homomorphism")

    def __call__(self, x: int) -> int:
        return (x * self.multiplier) % self.target_order

    def then(self, other: CyclicMap) -> CyclicMap:
        """``other o self``."""
        if self.target_order != other.source_order:
            raise BadParams("maps do not compose")
        return CyclicMap(self.source_order, other.target_order, (self.multiplier * other.multiplier) % other.target_order)

    @property
    def image_order(self) -> int:
        return self.target_order // gcd(self.multiplier, self.target_order)

    @property
    def injective(self) -> bool:
        return self.image_order == self.source_order

    def to_json(self) -> dict:
        return {"source": self.source_order, "target": self.target_order, "multiplier": self.multiplier}


def pullback_map(n: int, c: int, b: int) -> CyclicMap:
    """Pullback along the level change ``G_b -> G_c`` for ``c | b``.

    A level-``c`` character ``(ell, a, delta)`` pulls back to
    ``(ell, (b/c) * a, delta)``; in lattice coordinates the generator goes to
    ``d_b / d_c`` times the generator.
    """
    if c == 0 or b % c:
        raise NotDivisor(f"{c} does not divide {b}")
    src, dst = lattice(n, c), lattice(n, b)
    gen = src.psi(1, 0)
    pulled = CharacterTriple(gen.ell, (b // c) * gen.a, gen.delta)
    x, delta = dst.psi_inverse(pulled)
    assert delta == 0 and x == dst.d // src.d
    out = CyclicMap(src.d * n, dst.d * n, x % (dst.d * n))
    assert out.injective
    return out
