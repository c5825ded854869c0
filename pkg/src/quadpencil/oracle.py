"""Finite-field Jacobian criterion, an independent check of smoothness.

``jacobian_smooth_oracle(p, q)`` reduces the pencil mod an odd prime ``q`` and
returns False iff some point of ``P^n(F_q)`` lies on both quadrics with a
Jacobian of rank < 2. Two exhaustive strategies give the same answer:

``"points"``
    scan every point of ``P^n(F_q)``; cost ``~ q^n (n+1)^2``.
``"pencil"``
    at a singular point ``x`` the gradients ``Q1 x`` and ``Q2 x`` are
    dependent over ``F_q``, i.e. ``(s Q1 + t Q2) x = 0`` for some
    ``[s:t]`` in ``P^1(F_q)``. Scan those ``q + 1`` members and search each
    kernel for a point of the intersection; cost ``~ q (n+1)^3``.

The answer concerns ``F_q``-points only. Use :func:`oracle_primes` to pick
primes at which this is conclusive for small-entry diagonal pencils.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from .errors import BadPrime, TooLarge
from .pencils import QuadricPencil

MAX_N = 4
POINT_SCAN_LIMIT = 2_000_000


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    i = 2
    while i * i <= m:
        if m % i == 0:
            return False
        i += 1
    return True


def reduce_mod(p: QuadricPencil, q: int) -> tuple[np.ndarray, np.ndarray]:
    if q < 3 or not is_prime(q):
        raise BadPrime(f"{q} is not an odd prime")
    out = []
    for mat in (p.q1, p.q2):
        rows = []
        for row in mat:
            r = []
            for x in row:
                if x.denominator % q == 0:
                    raise BadPrime(f"denominator of {x} is divisible by {q}")
                r.append(x.numerator * pow(x.denominator, -1, q) % q)
            rows.append(r)
        out.append(np.array(rows, dtype=np.int64))
    return out[0], out[1]


def oracle_primes(bound: int, count: int = 2, minimum: int = 101) -> list[int]:
    """Primes at which the oracle decides diagonal pencils with entries in ``[-bound, bound]``.

    Each returned prime exceeds ``2*bound**2``, so no nonzero ``2 x 2`` minor
    vanishes mod ``q`` and smooth pencils stay smooth. It also makes ``-1``
    and every integer up to ``bound`` a square mod ``q``; the singular
    points of such a pencil are then ``F_q``-rational (a zero column gives a
    coordinate point, proportional columns ``c_j = r c_i`` give a point with
    ``x_i^2 = -r x_j^2``), so singular pencils are caught as well.
    """
    out = []
    cand = max(minimum, 2 * bound * bound + 1, 3)
    while len(out) < count:
        if is_prime(cand) and all(pow(a % cand, (cand - 1) // 2, cand) == 1 for a in [-1, *range(2, bound + 1)]):
            out.append(cand)
        cand += 1
    return out


def _singular_among(x: np.ndarray, a1: np.ndarray, a2: np.ndarray, q: int) -> bool:
    """Whether any row of ``x`` is a singular point of ``{Q1 = Q2 = 0}`` mod ``q``."""
    g1 = (x @ a1) % q
    g2 = (x @ a2) % q
    on = ((g1 * x).sum(axis=1) % q == 0) & ((g2 * x).sum(axis=1) % q == 0)
    if not on.any():
        return False
    g1, g2 = g1[on], g2[on]
    m = g1.shape[1]
    dep = np.ones(g1.shape[0], dtype=bool)
    for i in range(m):
        for j in range(i + 1, m):
            dep &= (g1[:, i] * g2[:, j] - g1[:, j] * g2[:, i]) % q == 0
    return bool(dep.any())


def _projective_points(dim: int, q: int):
    """Chunks of normalized points of ``P^(dim-1)(F_q)``: first nonzero coordinate is 1."""
    for lead in range(dim):
        tail = dim - lead - 1
        if tail == 0:
            pts = np.zeros((1, dim), dtype=np.int64)
            pts[0, lead] = 1
            yield pts
            continue
        # split on the coordinate after the lead to bound memory
        rest = tail - 1
        grid = np.array(list(product(range(q), repeat=rest)), dtype=np.int64).reshape(-1, rest) if rest else np.zeros((1, 0), dtype=np.int64)
        for v in range(q):
            pts = np.zeros((grid.shape[0], dim), dtype=np.int64)
            pts[:, lead] = 1
            pts[:, lead + 1] = v
            pts[:, lead + 2:] = grid
            yield pts


def _scan_points(a1, a2, q) -> bool:
    return not any(_singular_among(pts, a1, a2, q) for pts in _projective_points(a1.shape[0], q))


def _kernel_mod(m: np.ndarray, q: int) -> np.ndarray:
    """Basis of the kernel of ``m`` over ``F_q``, as rows."""
    a = [[int(x) % q for x in row] for row in m]
    nr, nc = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(nc):
        p = next((i for i in range(r, nr) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = pow(a[r][c], -1, q)
        a[r] = [x * inv % q for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % q for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(nc) if c not in pivots):
        v = [0] * nc
        v[free] = 1
        for row, pc in enumerate(pivots):
            v[pc] = -a[row][free] % q
        basis.append(v)
    return np.array(basis, dtype=np.int64).reshape(-1, nc)


def _scan_pencil(a1, a2, q) -> bool:
    members = [(0, 1)] + [(1, t) for t in range(q)]
    for s, t in members:
        kernel = _kernel_mod((s * a1 + t * a2) % q, q)
        dim = kernel.shape[0]
        if dim == 0:
            continue
        if dim >= 4:
            # a quadratic form in >= 3 variables has a nontrivial zero over F_q
            # (Chevalley-Warning); every point of the kernel has dependent gradients
            return False
        for coeffs in _projective_points(dim, q):
            if _singular_among((coeffs @ kernel) % q, a1, a2, q):
                return False
    return True


def jacobian_smooth_oracle(p: QuadricPencil, q: int, method: str = "auto") -> bool:
    """True iff no ``F_q``-point of the reduced intersection is singular."""
    if p.n > MAX_N:
        raise TooLarge(f"oracle is limited to n <= {MAX_N}")
    a1, a2 = reduce_mod(p, q)
    if method == "auto":
        method = "points" if q ** p.n <= POINT_SCAN_LIMIT else "pencil"
    if method == "points":
        return _scan_points(a1, a2, q)
    if method == "pencil":
        return _scan_pencil(a1, a2, q)
    raise ValueError(f"unknown oracle method {method!r}")
