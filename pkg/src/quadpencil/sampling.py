"""Deterministic random inputs for property checks.

The generator is a 64-bit linear congruential generator with Knuth's MMIX
constants, so a seed replays to the same inputs on any platform. Draws use
the high 32 bits of the state.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import matrix as mx
from .algebra.matrix import QMatrix
from .groups import GkElement, Permutation
from .pencils import SlicePoint

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK = (1 << 64) - 1


@dataclass
class CheckResult:
    """Outcome of a seeded property check; falsy on failure."""

    passed: bool
    checked: int
    counterexample: dict | None = None

    def __bool__(self) -> bool:
        return self.passed


class Lcg:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u32(self) -> int:
        self.state = (self.state * MULTIPLIER + INCREMENT) & MASK
        return self.state >> 32

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in ``[lo, hi]`` (modulo bias is negligible for small ranges)."""
        return lo + self.next_u32() % (hi - lo + 1)

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]

    def rational(self) -> Fraction:
        return Fraction(self.randint(-9, 9), self.randint(1, 9))

    def nonzero_rational(self) -> Fraction:
        while True:
            x = self.rational()
            if x:
                return x

    def permutation(self, size: int) -> tuple[int, ...]:
        images = list(range(size))
        for i in range(size - 1, 0, -1):
            j = self.randint(0, i)
            images[i], images[j] = images[j], images[i]
        return tuple(images)


def random_slice_point(rng: Lcg, n: int):
    while True:
        w = SlicePoint(tuple(rng.rational() for _ in range(n + 1)), tuple(rng.rational() for _ in range(n + 1)))
        if w.in_slice:
            return w


def random_diagonal_candidate(rng: Lcg, n: int, bound: int):
    """Integer columns in ``[-bound, bound]``, not necessarily in the slice (no zero column)."""
    cols = []
    while len(cols) < n + 1:
        c = (rng.randint(-bound, bound), rng.randint(-bound, bound))
        if c != (0, 0):
            cols.append(c)
    return SlicePoint.from_columns(cols)


def random_invertible(rng: Lcg, size: int) -> QMatrix:
    while True:
        m = tuple(tuple(rng.rational() for _ in range(size)) for _ in range(size))
        if mx.det(m) != 0:
            return mx.qmatrix(m)


def random_unimodular(rng: Lcg, size: int, steps: int | None = None) -> QMatrix:
    """Integer matrix of determinant ``+-1``: a product of random elementary moves."""
    rows = [[int(i == j) for j in range(size)] for i in range(size)]
    for _ in range(steps if steps is not None else 2 * size):
        i, j = rng.randint(0, size - 1), rng.randint(0, size - 1)
        if i == j:
            rows[i] = [-x for x in rows[i]]
            continue
        c = rng.randint(-2, 2)
        rows[i] = [x + c * y for x, y in zip(rows[i], rows[j])]
    return mx.qmatrix(rows)


def random_gk(rng: Lcg, n: int, k: int):
    return GkElement(
        k,
        random_invertible(rng, 2),
        tuple(rng.nonzero_rational() for _ in range(n + 1)),
        Permutation(rng.permutation(n + 1)),
    )
