"""Smith normal form and finitely generated abelian groups."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from ..errors import BadParams
from .matrix import IntegerMatrix


def smith_normal_form(m: IntegerMatrix) -> tuple[list[int], IntegerMatrix, IntegerMatrix]:
    """Return ``(factors, left, right)`` with ``left @ m @ right`` diagonal.

    The diagonal holds the invariant factors ``factors`` (non-negative, each
    dividing the next, zeros last). Both transforms are unimodular. The pivot
    is always the nonzero entry of least absolute value in the remaining
    block, first in row-major order on ties, so the output is deterministic.
    """
    a = m.to_rows()
    nr, nc = m.rows, m.cols
    left = IntegerMatrix.identity(nr).to_rows()
    right = IntegerMatrix.identity(nc).to_rows()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        # row[dst] += c * row[src]
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + c * y for x, y in zip(left[dst], left[src])]

    def add_col(dst, src, c):
        for row in a:
            row[dst] += c * row[src]
        for row in right:
            row[dst] += c * row[src]

    for t in range(min(nr, nc)):
        while True:
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = a[t][t]
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            if any(a[i][t] for i in range(t + 1, nr)) or any(a[t][j] for j in range(t + 1, nc)):
                continue
            bad = next((i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]

    factors = [a[i][i] for i in range(min(nr, nc))]
    return factors, IntegerMatrix.from_rows(left), IntegerMatrix.from_rows(right)


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^free_rank + Z/f_1 + ... + Z/f_r`` with ``f_1 | f_2 | ... | f_r``."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(f) for f in self.torsion))
        if self.free_rank < 0:
            raise BadParams("free rank must be non-negative")
        if any(f < 2 for f in self.torsion):
            raise BadParams("invariant factors must be at least 2")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise BadParams("invariant factors must form a divisibility chain")

    @classmethod
    def cyclic(cls, order: int) -> AbelianGroup:
        if order < 1:
            raise BadParams("cyclic group order must be positive")
        return cls(0, (order,) if order > 1 else ())

    @classmethod
    def from_invariant_factors(cls, factors, generators: int) -> AbelianGroup:
        nonzero = [f for f in factors if f != 0]
        return cls(generators - len(nonzero), tuple(f for f in nonzero if f > 1))

    @classmethod
    def from_relations(cls, relations: IntegerMatrix) -> AbelianGroup:
        """Quotient of ``Z^cols`` by the row span of ``relations``."""
        factors, _, _ = smith_normal_form(relations)
        return cls.from_invariant_factors(factors, relations.cols)

    @property
    def order(self) -> int | None:
        """Cardinality, or ``None`` for an infinite group."""
        return None if self.free_rank else prod(self.torsion)

    @property
    def is_cyclic(self) -> bool:
        return (self.free_rank == 0 and len(self.torsion) <= 1) or (
            self.free_rank == 1 and not self.torsion)

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{f}" for f in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: dict) -> AbelianGroup:
        return cls(int(data["free_rank"]), tuple(int(f) for f in data["torsion"]))
