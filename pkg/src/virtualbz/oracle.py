"""Classical tensor product multiplicities, independent of the triangle code.

Weight multiplicities come from Freudenthal's recursion; products are
decomposed with the Klimyk (Racah-Speiser) rule. The Weyl group of A_r acts
by permuting the N = r+1 coordinates x_k = sum_{j>=k} λ_j (x_N = 0).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Mapping

from .weights import Weight, _check_ranks, conjugate, epsilon_coords, inverse_cartan_scaled

Labels = tuple[int, ...]


def positive_roots(rank: int) -> list[Labels]:
    """Positive roots α_i + ... + α_j of A_r in Dynkin coordinates."""
    roots = []
    for i in range(rank):
        for j in range(i, rank):
            v = [0] * rank
            v[i] += 1
            v[j] += 1
            if i > 0:
                v[i - 1] -= 1
            if j < rank - 1:
                v[j + 1] -= 1
            roots.append(tuple(v))
    return roots


def simple_roots(rank: int) -> list[Labels]:
    return [tuple(2 if k == i else -1 if abs(k - i) == 1 else 0 for k in range(rank)) for i in range(rank)]


def _form(rank: int):
    """N times the Killing-normalized inner product on Dynkin coordinates."""
    F = inverse_cartan_scaled(rank)

    def ip(x, y):
        return sum(x[i] * F[i][j] * y[j] for i in range(rank) for j in range(rank))

    return ip


def _from_eps(x) -> Labels:
    return tuple(x[k] - x[k + 1] for k in range(len(x) - 1))


def dominant_conjugate(labels: Labels) -> Labels:
    return _from_eps(sorted(epsilon_coords(labels), reverse=True))


def _root_coords_scaled(labels: Labels) -> list[int]:
    F = inverse_cartan_scaled(len(labels))
    return [sum(f * x for f, x in zip(row, labels)) for row in F]


def _dominated(lam: Labels, mu: Labels) -> bool:
    """λ - μ is a non-negative integer combination of simple roots."""
    N = len(lam) + 1
    diff = [a - b for a, b in zip(lam, mu)]
    return all(c >= 0 and c % N == 0 for c in _root_coords_scaled(diff))


@dataclass(frozen=True)
class WeightMultiplicityTable:
    highest: Weight
    entries: Mapping[Labels, int]

    def total(self) -> int:
        return sum(self.entries.values())


def _dominant_weights(lam: Labels) -> list[Labels]:
    """Dominant weights of M_λ, highest first (by height)."""
    seen = {lam}
    frontier = [lam]
    roots = positive_roots(len(lam))
    while frontier:
        nxt = []
        for w in frontier:
            for a in roots:
                v = tuple(x - y for x, y in zip(w, a))
                if min(v) >= 0 and v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    N = len(lam) + 1
    return sorted(seen, key=lambda w: sum(_root_coords_scaled(tuple(a - b for a, b in zip(lam, w)))) // N)


def _orbit(w: Labels) -> set[Labels]:
    return {_from_eps(p) for p in set(permutations(epsilon_coords(w)))}


@lru_cache(maxsize=None)
def _table(lam: Labels) -> dict[Labels, int]:
    r = len(lam)
    ip = _form(r)
    roots = positive_roots(r)
    rho = (1,) * r
    lr = tuple(a + b for a, b in zip(lam, rho))
    norm_top = ip(lr, lr)
    dom_mult: dict[Labels, int] = {}

    def mult(w: Labels) -> int:
        dw = dominant_conjugate(w)
        return dom_mult.get(dw, 0) if _dominated(lam, dw) else 0

    for mu in _dominant_weights(lam):
        if mu == lam:
            dom_mult[mu] = 1
            continue
        num = 0
        for a in roots:
            k = 1
            while True:
                v = tuple(x + k * y for x, y in zip(mu, a))
                m = mult(v)
                if m == 0:
                    break
                num += m * ip(v, a)
                k += 1
        mr = tuple(a + b for a, b in zip(mu, rho))
        den = norm_top - ip(mr, mr)
        # Freudenthal: (|λ+ρ|² - |μ+ρ|²) m(μ) = 2 Σ_{α>0} Σ_k m(μ+kα)(μ+kα, α)
        assert (2 * num) % den == 0
        dom_mult[mu] = 2 * num // den
    out = {}
    for mu, m in dom_mult.items():
        if m:
            for w in _orbit(mu):
                out[w] = m
    return out


def weight_multiplicities(w: Weight) -> WeightMultiplicityTable:
    return WeightMultiplicityTable(w, dict(_table(w.labels)))


def _reflect_to_dominant(labels: Labels) -> tuple[int, Labels | None]:
    """Sign and dominant image of a ρ-shifted weight; sign 0 on a wall."""
    x = epsilon_coords(labels)
    if len(set(x)) < len(x):
        return 0, None
    # sign of the sorting permutation = parity of inversions
    inv = sum(1 for i in range(len(x)) for j in range(i + 1, len(x)) if x[i] < x[j])
    return (-1) ** inv, _from_eps(sorted(x, reverse=True))


@lru_cache(maxsize=None)
def _decompose(lam: Labels, mu: Labels) -> tuple[tuple[Labels, int], ...]:
    r = len(lam)
    acc: Counter = Counter()
    for w, m in _table(lam).items():
        shifted = tuple(a + b + 1 for a, b in zip(w, mu))
        sign, dom = _reflect_to_dominant(shifted)
        if sign:
            acc[tuple(x - 1 for x in dom)] += sign * m
    assert all(c >= 0 for c in acc.values())
    return tuple(sorted((k, c) for k, c in acc.items() if c))


def tensor_decompose(lam: Weight, mu: Weight) -> dict[Weight, int]:
    """{ν: T_{λ,μ}^ν} for every ν occurring in M_λ ⊗ M_μ."""
    _check_ranks(lam, mu)
    return {Weight(k): c for k, c in _decompose(lam.labels, mu.labels)}


def triple_multiplicity(lam: Weight, mu: Weight, nu: Weight) -> int:
    """Multiplicity of the singlet in M_λ ⊗ M_μ ⊗ M_ν."""
    _check_ranks(lam, mu, nu)
    return dict(_decompose(lam.labels, mu.labels)).get(conjugate(nu).labels, 0)
