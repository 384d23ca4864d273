"""Dominant weights of su(r+1) and the label arithmetic built on them.

Dual Dynkin labels are rational with denominator N = r+1, so they are kept
scaled by N and stay integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence


@dataclass(frozen=True)
class Weight:
    """A dominant integral weight given by its Dynkin labels."""

    labels: tuple[int, ...]

    def __init__(self, labels: Sequence[int]):
        labels = tuple(int(x) for x in labels)
        if not labels:
            raise ValueError("a weight needs at least one Dynkin label")
        if any(x < 0 for x in labels):
            raise ValueError(f"Dynkin labels must be non-negative: {labels}")
        object.__setattr__(self, "labels", labels)

    @property
    def rank(self) -> int:
        return len(self.labels)

    def __getitem__(self, i: int) -> int:
        # 1-based, as the labels are written λ_1..λ_r
        if not 1 <= i <= self.rank:
            raise IndexError(i)
        return self.labels[i - 1]

    def __str__(self) -> str:
        return ",".join(map(str, self.labels))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)


@dataclass(frozen=True)
class ScaledDualLabels:
    """N times the dual Dynkin labels λ^1..λ^r."""

    rank: int
    scaled: tuple[int, ...]

    @property
    def N(self) -> int:
        return self.rank + 1

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.rank:
            raise IndexError(i)
        return self.scaled[i - 1]


def inverse_cartan_scaled(rank: int) -> list[list[int]]:
    """N times the inverse Cartan matrix of A_r: min(i,j)*(N-max(i,j))."""
    N = rank + 1
    return [[min(i, j) * (N - max(i, j)) for j in range(1, N)] for i in range(1, N)]


def scaled_dual(labels: Sequence[int]) -> tuple[int, ...]:
    """N-scaled dual labels of an arbitrary (possibly non-dominant) label vector."""
    F = inverse_cartan_scaled(len(labels))
    return tuple(sum(f * x for f, x in zip(row, labels)) for row in F)


def dual_labels(w: Weight) -> ScaledDualLabels:
    return ScaledDualLabels(w.rank, scaled_dual(w.labels))


def conjugate(w: Weight) -> Weight:
    return Weight(w.labels[::-1])


def _check_ranks(*ws: Weight) -> int:
    ranks = {w.rank for w in ws}
    if len(ranks) != 1:
        raise ValueError(f"weights of different rank: {[str(w) for w in ws]}")
    return ranks.pop()


def integrality_ok(lam: Weight, mu: Weight, nu: Weight) -> bool:
    """True iff λ^i + μ^i + ν^i is an integer for every i."""
    r = _check_ranks(lam, mu, nu)
    N = r + 1
    a, b, c = dual_labels(lam), dual_labels(mu), dual_labels(nu)
    return all((a.scaled[i] + b.scaled[i] + c.scaled[i]) % N == 0 for i in range(r))


class IntegralityError(ValueError):
    """The triple lies in incompatible congruence classes."""


@dataclass(frozen=True)
class CouplingQuery:
    """A triple (λ, μ, ν) with the integers n_i, N_i, N'_i of the initial triangle.

    The tuples n, Ncap, Nprime are 0-based storage of the 1-based n_1..n_r etc.
    """

    lam: Weight
    mu: Weight
    nu: Weight
    n: tuple[int, ...]
    Ncap: tuple[int, ...]
    Nprime: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.lam.rank


def derived_quantities(lam: Weight, mu: Weight, nu: Weight) -> CouplingQuery:
    """Compute n_i, N_i and N'_i; raises IntegralityError across congruence classes."""
    r = _check_ranks(lam, mu, nu)
    if not integrality_ok(lam, mu, nu):
        raise IntegralityError(f"λ^i+μ^i+ν^i not integral for ({lam}), ({mu}), ({nu})")
    N = r + 1
    ld, md, nd = dual_labels(lam).scaled, dual_labels(mu).scaled, dual_labels(nu).scaled

    n = []
    for i in range(1, r + 1):
        s = ld[r - i] + md[r - i] - nd[i - 1]
        n.append(s // N)
    Ncap = []
    for i in range(1, r + 1):
        prev = n[i - 2] if i > 1 else 0
        Ncap.append(prev - n[i - 1] + mu[r - i + 1])
    Nprime = [nu[i] - Ncap[i - 1] for i in range(1, r + 1)]
    return CouplingQuery(lam, mu, nu, tuple(n), tuple(Ncap), tuple(Nprime))


def epsilon_coords(labels: Sequence[int]) -> list[int]:
    """Coordinates in the permutation realization: x_k = sum_{j>=k} λ_j, x_N = 0."""
    r = len(labels)
    x = [0] * (r + 1)
    for k in range(r - 1, -1, -1):
        x[k] = x[k + 1] + labels[k]
    return x


def weyl_dimension(w: Weight) -> int:
    """Dimension of the irreducible module with highest weight w."""
    x = epsilon_coords([a + 1 for a in w.labels])
    N = len(x)
    num = prod(x[i] - x[j] for i in range(N) for j in range(i + 1, N))
    den = prod(j - i for i in range(N) for j in range(i + 1, N))
    return num // den
