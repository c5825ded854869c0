"""Seeded property suites shared by the command line and the test suite.

Each suite returns a :class:`CheckResult`; on failure ``counterexample``
holds the exact JSON inputs of the first failing case, so it can be replayed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .algebra import matrix as mx
from .errors import BadParams, DependentPencil
from .groups import (
    GkElement,
    Permutation,
    act,
    central_element,
    compose,
    equal_in_gk,
    f_equivariance_check,
    identity,
    inverse,
    theta_equivariance_check,
)
from .hyperelliptic import GammaElement, WeightedPoint, associate, gamma_act, transformed_form
from .oracle import jacobian_smooth_oracle, oracle_primes
from .pencils import QuadricPencil, SlicePoint, discriminant_form, embed, is_smooth
from .picard import (
    picard_group,
    pic_binary_forms,
    pic_complete_intersections,
    verify_kernel_character,
)
from .algebra.forms import BinaryForm
from .sampling import (
    CheckResult,
    Lcg,
    random_diagonal_candidate,
    random_gk,
    random_invertible,
    random_slice_point,
)

ACTION_LEVELS = (-3, -2, -1, 1, 2)


def _fail(checked: int, **payload) -> CheckResult:
    return CheckResult(False, checked, payload)


def kernel_character_suite(n: int, k: int, trials: int, seed: int) -> CheckResult:
    return verify_kernel_character(n, k, trials, seed)


def theta_equivariance_suite(n: int, trials: int, seed: int) -> CheckResult:
    rng = Lcg(seed)
    for trial in range(trials):
        g, w = random_gk(rng, n, -1), random_slice_point(rng, n)
        if not theta_equivariance_check(g, w):
            return _fail(trial + 1, g=g.to_json(), w=w.to_json())
    return CheckResult(True, trials)


def _torus_permutation(rng: Lcg, n: int) -> GkElement:
    return GkElement(-2, mx.identity(2), tuple(rng.nonzero_rational() for _ in range(n + 1)),
                     Permutation(rng.permutation(n + 1)))


def _pure_moebius(rng: Lcg, n: int) -> GkElement:
    return GkElement(-2, random_invertible(rng, 2), (Fraction(1),) * (n + 1), Permutation.identity(n + 1))


def f_equivariance_suite(n: int, trials: int, seed: int) -> CheckResult:
    """Random elements, cycling through torus-and-permutation, pure GL2 and general ones.

    The first two kinds are also compared against their closed forms:
    diagonals ``lambda_i^-2 * (a, b)_{sigma^-1(i)}`` and ``M`` applied to the
    pair of diagonals.
    """
    rng = Lcg(seed)
    for trial in range(trials):
        kind = trial % 3
        g = (_torus_permutation, _pure_moebius, lambda r, m: random_gk(r, m, -2))[kind](rng, n)
        w = random_slice_point(rng, n)
        ok = f_equivariance_check(g, w)
        v = embed(act(g, w))
        a1, b1 = mx.diagonal(v.q1), mx.diagonal(v.q2)
        if kind == 0:
            moved = g.sigma.permute(w.columns())
            ok = ok and all(a1[i] == g.lambdas[i] ** -2 * moved[i][0] and b1[i] == g.lambdas[i] ** -2 * moved[i][1]
                            for i in range(n + 1))
        elif kind == 1:
            (ma, mb), (mc, md) = g.m
            ok = ok and all(a1[i] == ma * w.a[i] + mb * w.b[i] and b1[i] == mc * w.a[i] + md * w.b[i]
                            for i in range(n + 1))
        if not ok:
            return _fail(trial + 1, g=g.to_json(), w=w.to_json())
    return CheckResult(True, trials)


def action_law_suite(n: int, trials: int, seed: int) -> CheckResult:
    """Action law, group axioms and central triviality across several levels."""
    rng = Lcg(seed)
    for trial in range(trials):
        k = ACTION_LEVELS[trial % len(ACTION_LEVELS)]
        g, h, f = random_gk(rng, n, k), random_gk(rng, n, k), random_gk(rng, n, k)
        w = random_slice_point(rng, n)
        c = central_element(n, k, rng.nonzero_rational())
        e = identity(n, k)
        ok = (
            act(compose(g, h), w) == act(g, act(h, w))
            and act(e, w) == w
            and act(c, w) == w
            and equal_in_gk(compose(compose(g, h), f), compose(g, compose(h, f)))
            and equal_in_gk(compose(g, inverse(g)), e)
            and equal_in_gk(compose(e, g), g)
            and equal_in_gk(compose(g, c), g)
        )
        if not ok:
            return _fail(trial + 1, k=k, g=g.to_json(), h=h.to_json(), f=f.to_json(), w=w.to_json())
    return CheckResult(True, trials)


def pic_table_suite(n_max: int) -> CheckResult:
    """SNF Picard groups against the closed forms for ``3 <= n <= n_max`` and ``|k| <= 6``."""
    if n_max < 3:
        raise BadParams("n_max must be at least 3")
    checked = 0
    for n in range(3, n_max + 1):
        for k in [*range(-6, 0), *range(1, 7)]:
            # picard_group asserts cyclicity and the order formula itself
            try:
                picard_group(n, k)
            except AssertionError as exc:
                return _fail(checked + 1, n=n, k=k, error=str(exc))
            checked += 1
        try:
            pic_complete_intersections(n)
            pic_binary_forms(n)
        except AssertionError as exc:
            return _fail(checked + 1, n=n, error=str(exc))
        checked += 2
    return CheckResult(True, checked)


def random_curve_instance(rng: Lcg, n: int):
    """A random smooth pencil (not diagonal) and a rational point on its curve.

    The point is manufactured: pick ``(x, z)``, then rescale one column of a
    random slice point by ``v = theta(x, z)`` so the value becomes ``v^2``.
    """
    g = (n - 1) // 2
    while True:
        x, z = rng.rational(), rng.rational()
        if x or z:
            break
    while True:
        w = random_slice_point(rng, n)
        v = BinaryForm.product(BinaryForm.linear(a, b) for a, b in w.columns())(x, z)
        if v:
            break
    cols = w.columns()
    cols[0] = (cols[0][0] * v, cols[0][1] * v)
    b = random_invertible(rng, n + 1)
    pencil = embed(SlicePoint.from_columns(cols)).congruent(b)
    return pencil, WeightedPoint.of(x, z, v * mx.det(b), g)


def gamma_curve_suite(n: int, trials: int, seed: int) -> CheckResult:
    if n % 2 == 0 or n < 3:
        raise BadParams("the curve suite needs odd n >= 3")
    rng = Lcg(seed)
    for trial in range(trials):
        pencil, pt = random_curve_instance(rng, n)
        gamma = GammaElement(random_invertible(rng, 2), random_invertible(rng, n + 1))
        try:
            new_pencil, new_pt = gamma_act(gamma, pencil, pt)
            ok = discriminant_form(new_pencil) == transformed_form(gamma, associate(pencil).form)
        except AssertionError:
            ok = False
        if not ok:
            return _fail(trial + 1, pencil=pencil.to_json(), point=pt.to_json(),
                         gamma={"m": [[str(x) for x in r] for r in gamma.m], "A": [[str(x) for x in r] for r in gamma.a]})
    return CheckResult(True, trials)


def oracle_suite(n: int, smooth: int, singular: int, seed: int, bound: int = 5) -> CheckResult:
    """Compare ``is_smooth`` with the finite-field oracle on random integer diagonal pencils.

    Draws candidates until ``smooth`` smooth and ``singular`` singular ones
    have been tested, each at two primes from :func:`oracle_primes`.
    """
    rng = Lcg(seed)
    primes = oracle_primes(bound)
    need = {True: smooth, False: singular}
    checked = 0
    while need[True] or need[False]:
        w = random_diagonal_candidate(rng, n, bound)
        p = _diagonal_pencil(w)
        if p is None:
            continue
        expected = is_smooth(p)
        if not need[expected]:
            continue
        need[expected] -= 1
        for prime in primes:
            checked += 1
            if jacobian_smooth_oracle(p, prime) != expected:
                return _fail(checked, pencil=p.to_json(), prime=prime, expected=expected)
    return CheckResult(True, checked)


def _diagonal_pencil(w: SlicePoint) -> QuadricPencil | None:
    try:
        return QuadricPencil(mx.diag(w.a), mx.diag(w.b))
    except DependentPencil:
        return None


SUITES: dict[str, Callable[..., CheckResult]] = {
    "kernel-character": lambda n, k, trials, seed, n_max: kernel_character_suite(n, k, trials, seed),
    "equivariance-theta": lambda n, k, trials, seed, n_max: theta_equivariance_suite(n, trials, seed),
    "equivariance-f": lambda n, k, trials, seed, n_max: f_equivariance_suite(n, trials, seed),
    "action-laws": lambda n, k, trials, seed, n_max: action_law_suite(n, trials, seed),
    "pic-table": lambda n, k, trials, seed, n_max: pic_table_suite(n_max),
    "gamma-curve": lambda n, k, trials, seed, n_max: gamma_curve_suite(n, trials, seed),
    "oracle-smoothness": lambda n, k, trials, seed, n_max: oracle_suite(n, trials, trials, seed),
}
