"""The groups acting on the diagonal slice.

An element of the level-``k`` group is stored as a representative
``(M, lambdas, sigma)`` with ``M`` in GL2, ``lambdas`` a torus element and
``sigma`` a permutation of the ``n + 1`` columns. Representatives differing by
``(diag(l^-k, l^-k), (l, ..., l), id)`` define the same element; compare them
with :func:`equal_in_gk`, never with ``==``.

Action on a slice point (column ``i`` of the result)::

    lambda_i**k * M @ column[sigma^-1(i)]
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Sequence

from .algebra import matrix as mx
from .algebra.forms import moebius_act
from .algebra.matrix import QMatrix
from .algebra.rational import Rational, q, q_str
from .algebra.snf import AbelianGroup
from .algebra.matrix import IntegerMatrix
from .errors import (
    BadParams,
    LevelMismatch,
    NotDivisor,
    PointsNotDistinct,
    SingularMatrix,
    SizeMismatch,
    TooManyPoints,
    WrongLevel,
)
from .pencils import SlicePoint, embed, require_slice, theta

DEFAULT_CAP = 9


@dataclass(frozen=True)
class Permutation:
    """``images[i]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation of 0..{len(images) - 1}")

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(size)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition ``self o other``: apply ``other`` first."""
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> Permutation:
        out = [0] * self.size
        for i, j in enumerate(self.images):
            out[j] = i
        return Permutation(tuple(out))

    @property
    def sign(self) -> int:
        seen = [False] * self.size
        s = 1
        for start in range(self.size):
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                length += 1
            if length and length % 2 == 0:
                s = -s
        return s

    def matrix(self) -> QMatrix:
        """The permutation matrix sending ``e_i`` to ``e_sigma(i)``."""
        return mx.qmatrix([[int(self.images[j] == i) for j in range(self.size)] for i in range(self.size)])

    def permute(self, values: Sequence) -> tuple:
        """``(values[sigma^-1(0)], ..., values[sigma^-1(n)])``."""
        inv = self.inverse()
        return tuple(values[inv(i)] for i in range(self.size))


@dataclass(frozen=True)
class GkElement:
    k: int
    m: QMatrix
    lambdas: tuple[Fraction, ...]
    sigma: Permutation

    def __post_init__(self):
        m = mx.qmatrix(self.m)
        lambdas = tuple(q(x) for x in self.lambdas)
        sigma = self.sigma if isinstance(self.sigma, Permutation) else Permutation(tuple(self.sigma))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "lambdas", lambdas)
        object.__setattr__(self, "sigma", sigma)
        if self.k == 0:
            raise BadParams("the level k must be nonzero")
        if mx.shape(m) != (2, 2) or mx.det(m) == 0:
            raise SingularMatrix("M must be an invertible 2 x 2 matrix")
        if any(x == 0 for x in lambdas):
            raise ValueError("torus coordinates must be nonzero")
        if sigma.size != len(lambdas):
            raise SizeMismatch("sigma and lambdas have different sizes")

    @property
    def n(self) -> int:
        return len(self.lambdas) - 1

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "m": [[q_str(x) for x in row] for row in self.m],
            "lambdas": [q_str(x) for x in self.lambdas],
            "sigma": list(self.sigma.images),
        }

    @classmethod
    def from_json(cls, data: dict) -> GkElement:
        return cls(int(data["k"]), mx.qmatrix(data["m"]), tuple(q(x) for x in data["lambdas"]),
                   Permutation(tuple(data["sigma"])))


def _check_pair(g: GkElement, h: GkElement) -> None:
    if g.k != h.k:
        raise LevelMismatch(f"levels {g.k} and {h.k} differ")
    if g.n != h.n:
        raise SizeMismatch(f"sizes n={g.n} and n={h.n} differ")


def identity(n: int, k: int) -> GkElement:
    return GkElement(k, mx.identity(2), (Fraction(1),) * (n + 1), Permutation.identity(n + 1))


def compose(g: GkElement, h: GkElement) -> GkElement:
    """``(M_g M_h, lambda_g * sigma_g(lambda_h), sigma_g o sigma_h)``."""
    _check_pair(g, h)
    moved = g.sigma.permute(h.lambdas)
    return GkElement(g.k, mx.matmul(g.m, h.m), tuple(x * y for x, y in zip(g.lambdas, moved)), g.sigma * h.sigma)


def inverse(g: GkElement) -> GkElement:
    lam = tuple(1 / g.lambdas[g.sigma(j)] for j in range(g.n + 1))
    return GkElement(g.k, mx.inverse(g.m), lam, g.sigma.inverse())


def central_element(n: int, k: int, lam: Rational) -> GkElement:
    """``(diag(l^-k, l^-k), (l, ..., l), id)``, trivial in the level-``k`` group."""
    lam = q(lam)
    s = lam ** -k
    return GkElement(k, mx.diag([s, s]), (lam,) * (n + 1), Permutation.identity(n + 1))


def equal_in_gk(g: GkElement, h: GkElement) -> bool:
    """Whether ``h = g * central_element(l)`` for some nonzero rational ``l``."""
    _check_pair(g, h)
    if g.sigma != h.sigma:
        return False
    lam = h.lambdas[0] / g.lambdas[0]
    if any(y != lam * x for x, y in zip(g.lambdas, h.lambdas)):
        return False
    return h.m == mx.scale(lam ** -g.k, g.m)


def act(g: GkElement, w: SlicePoint) -> SlicePoint:
    if g.n != w.n:
        raise SizeMismatch(f"element has n={g.n} but point has n={w.n}")
    require_slice(w)
    cols = []
    for i, (a, b) in enumerate(g.sigma.permute(w.columns())):
        s = g.lambdas[i] ** g.k
        (m00, m01), (m10, m11) = g.m
        cols.append((s * (m00 * a + m01 * b), s * (m10 * a + m11 * b)))
    out = SlicePoint.from_columns(cols)
    require_slice(out)
    return out


def reduce_level(g: GkElement, a: int) -> GkElement:
    """Image under the level change ``k -> a`` for ``a | k``: ``lambda_i -> lambda_i**(k/a)``."""
    if a == 0 or g.k % a:
        raise NotDivisor(f"{a} does not divide {g.k}")
    e = g.k // a
    return GkElement(a, g.m, tuple(x ** e for x in g.lambdas), g.sigma)


def kernel_of_reduce(b: int, a: int, n: int) -> AbelianGroup:
    """``(Z/m)^(n+1)`` modulo its diagonal, ``m = |b/a|``, computed by Smith normal form."""
    if a == 0 or b % a:
        raise NotDivisor(f"{a} does not divide {b}")
    m = abs(b // a)
    size = n + 1
    rows = [[m * int(i == j) for j in range(size)] for i in range(size)]
    rows.append([1] * size)
    return AbelianGroup.from_relations(IntegerMatrix.from_rows(rows))


def normalize_projective(m: QMatrix) -> QMatrix:
    """Scale so the first nonzero entry (row-major) is 1."""
    lead = next(x for row in m for x in row if x)
    return mx.scale(1 / lead, m)


def psi(g: GkElement) -> tuple[QMatrix, QMatrix]:
    """``([M], [diag(lambda) A_sigma])`` in ``PGL2 x PGL_(n+1)``; level -2 only."""
    if g.k != -2:
        raise WrongLevel(f"psi is defined at level -2, got {g.k}")
    return normalize_projective(g.m), normalize_projective(mx.matmul(mx.diag(g.lambdas), g.sigma.matrix()))


def _common_scalar(left: Sequence[QMatrix], right: Sequence[QMatrix]) -> Fraction | None:
    flat_l = [x for m in left for row in m for x in row]
    flat_r = [x for m in right for row in m for x in row]
    j = next((i for i, x in enumerate(flat_r) if x), None)
    if j is None:
        return None
    c = flat_l[j] / flat_r[j]
    if c == 0 or any(x != c * y for x, y in zip(flat_l, flat_r)):
        return None
    return c


def frame_action(m: QMatrix, a: QMatrix, pair: tuple[QMatrix, QMatrix]) -> tuple[QMatrix, QMatrix]:
    """``((A^-1)^T (a V1 + b V2) A^-1, (A^-1)^T (c V1 + d V2) A^-1)`` for ``m = [[a, b], [c, d]]``."""
    ainv = mx.inverse(a)
    ainv_t = mx.transpose(ainv)
    (ma, mb), (mc, md) = m
    v1, v2 = pair
    return (
        mx.matmul(ainv_t, mx.matmul(mx.lincomb(ma, v1, mb, v2), ainv)),
        mx.matmul(ainv_t, mx.matmul(mx.lincomb(mc, v1, md, v2), ainv)),
    )


def f_equivariance_check(g: GkElement, w: SlicePoint) -> bool:
    """``embed(g . w)`` against ``psi(g) . embed(w)``, equal up to one common scalar."""
    left = embed(act(g, w))
    m, a = psi(g)
    v = embed(w)
    right = frame_action(m, a, (v.q1, v.q2))
    return _common_scalar((left.q1, left.q2), right) is not None


def theta_equivariance_check(g: GkElement, w: SlicePoint) -> bool:
    """``theta(g . w)`` proportional to ``moebius_act(M, theta(w))``; level -1 only."""
    if g.k != -1:
        raise WrongLevel(f"theta equivariance is stated at level -1, got {g.k}")
    return theta(act(g, w)).proportional(moebius_act(g.m, theta(w)))


@dataclass(frozen=True)
class ProjectiveLinePoint:
    """``[x:y]`` scaled so the last nonzero coordinate is 1."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        x, y = q(self.x), q(self.y)
        if x == 0 and y == 0:
            raise ValueError("[0:0] is not a point")
        if y != 0:
            x, y = x / y, Fraction(1)
        else:
            x = Fraction(1)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def affine(cls, t: Rational) -> ProjectiveLinePoint:
        return cls(q(t), Fraction(1))

    @classmethod
    def infinity(cls) -> ProjectiveLinePoint:
        return cls(Fraction(1), Fraction(0))

    def moved_by(self, m: QMatrix) -> ProjectiveLinePoint:
        (a, b), (c, d) = m
        return ProjectiveLinePoint(a * self.x + b * self.y, c * self.x + d * self.y)

    def __str__(self) -> str:
        return f"[{q_str(self.x)}:{q_str(self.y)}]"

    def to_json(self) -> list[str]:
        return [q_str(self.x), q_str(self.y)]

    @classmethod
    def from_json(cls, data) -> ProjectiveLinePoint:
        return cls(q(data[0]), q(data[1]))


def config(w: SlicePoint) -> list[ProjectiveLinePoint]:
    require_slice(w)
    return [ProjectiveLinePoint(a, b) for a, b in w.columns()]


@dataclass(frozen=True)
class ConfigAut:
    moebius: QMatrix
    perm: Permutation

    def __mul__(self, other: ConfigAut) -> ConfigAut:
        return ConfigAut(normalize_projective(mx.matmul(self.moebius, other.moebius)), self.perm * other.perm)

    def to_json(self) -> dict:
        return {"m": [[q_str(x) for x in row] for row in self.moebius], "sigma": list(self.perm.images)}


def _frame(u0: ProjectiveLinePoint, u1: ProjectiveLinePoint, u2: ProjectiveLinePoint) -> QMatrix:
    """Matrix sending ``[1:0], [0:1], [1:1]`` to ``u0, u1, u2``."""
    basis = mx.qmatrix([[u0.x, u1.x], [u0.y, u1.y]])
    alpha, beta = mx.matvec(mx.inverse(basis), (u2.x, u2.y))
    return mx.qmatrix([[alpha * u0.x, beta * u1.x], [alpha * u0.y, beta * u1.y]])


def config_aut_group(points: Sequence[ProjectiveLinePoint], cap: int = DEFAULT_CAP) -> list[ConfigAut]:
    """All Moebius classes permuting ``points``, with the induced permutations.

    A Moebius map is fixed by the images of three points, so it suffices to
    try every ordered triple of targets for ``points[0..2]``: about
    ``(n+1)^3`` candidates, each checked in ``O(n)``, instead of all
    ``(n+1)!`` permutations.
    """
    size = len(points)
    if size > cap:
        raise TooManyPoints(f"{size} points exceeds the cap {cap}")
    if size < 3:
        raise BadParams("need at least 3 points")
    if len(set(points)) != size:
        raise PointsNotDistinct("configuration points must be distinct")
    index = {p: i for i, p in enumerate(points)}
    source = _frame(*points[:3])
    source_inv = mx.inverse(source)
    found = []
    for triple in permutations(range(size), 3):
        m = normalize_projective(mx.matmul(_frame(*(points[i] for i in triple)), source_inv))
        images = [index.get(p.moved_by(m)) for p in points]
        if None not in images:
            found.append(ConfigAut(m, Permutation(tuple(images))))
    found.sort(key=lambda c: c.perm.images)
    assert found and found[0].perm == Permutation.identity(size)
    members = set(found)
    assert all(x * y in members for x in found for y in found), "not closed under composition"
    return found


def stabilizer_cardinality(w: SlicePoint, k: int, cap: int = DEFAULT_CAP) -> int:
    """``|k|^n`` times the order of the configuration automorphism group."""
    if k == 0:
        raise BadParams("the level k must be nonzero")
    return abs(k) ** w.n * len(config_aut_group(config(w), cap))


def sign_kernel_elements(w: SlicePoint) -> list[GkElement]:
    """The ``2^n`` classes ``(id, (+-1, ...), id)`` at level -2, first sign fixed to +1."""
    require_slice(w)
    n = w.n
    return [
        GkElement(-2, mx.identity(2), (Fraction(1),) + tuple(Fraction(e) for e in eps), Permutation.identity(n + 1))
        for eps in product((1, -1), repeat=n)
    ]
