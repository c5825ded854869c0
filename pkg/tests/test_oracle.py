from itertools import product

import pytest

from quadpencil.algebra import matrix as mx
from quadpencil.errors import BadPrime, TooLarge
from quadpencil.oracle import is_prime, jacobian_smooth_oracle, oracle_primes, reduce_mod
from quadpencil.pencils import QuadricPencil, SlicePoint, embed, is_smooth
from quadpencil.sampling import Lcg, random_diagonal_candidate, random_slice_point, random_unimodular
from quadpencil.suites import oracle_suite


def naive_oracle(p: QuadricPencil, q: int) -> bool:
    """Plain loops over P^n(F_q); small q only."""
    a1, a2 = (a.tolist() for a in reduce_mod(p, q))
    size = p.n + 1
    for x in product(range(q), repeat=size):
        lead = next((v for v in x if v), None)
        if lead != 1:
            continue
        g1 = [sum(a1[i][j] * x[j] for j in range(size)) % q for i in range(size)]
        g2 = [sum(a2[i][j] * x[j] for j in range(size)) % q for i in range(size)]
        if sum(g * v for g, v in zip(g1, x)) % q or sum(g * v for g, v in zip(g2, x)) % q:
            continue
        if all((g1[i] * g2[j] - g1[j] * g2[i]) % q == 0 for i in range(size) for j in range(size)):
            return False
    return True


def test_spec_examples_at_101():
    w = SlicePoint.of([1, 1, 1, 1], [0, 1, 2, 3])
    assert jacobian_smooth_oracle(embed(w), 101, "points")
    singular = QuadricPencil(mx.identity(4), mx.diag([0, 1, 1, 3]))
    assert not jacobian_smooth_oracle(singular, 101, "points")
    assert not jacobian_smooth_oracle(singular, 101, "pencil")


def test_bad_reduction_is_possible():
    # minor (0, 1) equals 7, so the reduction mod 7 acquires a singular point
    w = SlicePoint.of([1, 1, 1, 1], [0, 7, 20, 35])
    assert is_smooth(embed(w))
    assert not jacobian_smooth_oracle(embed(w), 7)


@pytest.mark.parametrize("q", [7, 11, 13])
def test_strategies_agree_with_naive_scan(q):
    rng = Lcg(q)
    for n in (2, 3):
        for _ in range(6):
            w = random_diagonal_candidate(rng, n, 3)
            try:
                p = QuadricPencil(mx.diag(w.a), mx.diag(w.b))
            except ValueError:
                continue
            if rng.randint(0, 1):
                p = p.congruent(random_unimodular(rng, n + 1))
            expected = naive_oracle(p, q)
            assert jacobian_smooth_oracle(p, q, "points") == expected
            assert jacobian_smooth_oracle(p, q, "pencil") == expected


def test_strategies_agree_on_dense_pencils():
    rng = Lcg(2)
    for _ in range(5):
        p = embed(random_slice_point(rng, 3)).congruent(random_unimodular(rng, 4))
        for q in (17, 23):
            try:
                assert jacobian_smooth_oracle(p, q, "points") == jacobian_smooth_oracle(p, q, "pencil")
            except BadPrime:
                pass


def test_errors():
    w = SlicePoint.of([1, 1, 1, 1], ["1/101", 1, 2, 3])
    with pytest.raises(BadPrime):
        jacobian_smooth_oracle(embed(w), 101)
    with pytest.raises(BadPrime):
        jacobian_smooth_oracle(embed(SlicePoint.of([1, 1, 1, 1], [0, 1, 2, 3])), 100)
    with pytest.raises(TooLarge):
        jacobian_smooth_oracle(embed(SlicePoint.of([1] * 6, range(6))), 101)


def test_oracle_primes():
    primes = oracle_primes(5)
    assert primes == [241, 409]
    for q in primes:
        assert is_prime(q) and q > 50
        assert all(pow(a % q, (q - 1) // 2, q) == 1 for a in (-1, 2, 3, 5))


def test_agreement_small_run():
    assert oracle_suite(3, 10, 10, seed=4)
    assert oracle_suite(4, 10, 10, seed=5)
