"""Counting true BZ triangles of a given weight.

Three independent routes:

* ``multiplicity_sum``: the explicit nested sum over the linear coefficients,
  with the max/min limits written out per variable;
* ``count_integer_points(polytope_of(...))``: generic exact counting over the
  non-negativity polytope in coefficient space;
* ``list_true_triangles``: the triangles themselves, recovered from the points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .lattice import CoefficientVector, compose, initial_triangle, virtual_basis
from .polytope import InequalitySystem, count_integer_points, integer_points
from .triangle import GeneralTriangle, HexagonId, d as d_id, eta as eta_id
from .weights import (
    CouplingQuery,
    Weight,
    _check_ranks,
    conjugate,
    derived_quantities,
    dual_labels,
    integrality_ok,
)


def var_name(h: HexagonId) -> str:
    return f"eta_{h.i}" if h.kind == "eta" else f"d_{h.i}_{h.j}"


def summation_order(rank: int) -> list[HexagonId]:
    """d_{1,1}; d_{2,1}, d_{1,2}; ...; d_{r-2,1}..d_{1,r-2}; η_{r-1}..η_1."""
    order = []
    for k in range(1, rank - 1):
        order += [d_id(k + 1 - j, j) for j in range(1, k + 1)]
    order += [eta_id(l) for l in range(rank - 1, 0, -1)]
    return order


@dataclass(frozen=True)
class Affine:
    """const + sum coef * variable, variables named as in ``var_name``."""

    const: int = 0
    coefs: Mapping[str, int] = field(default_factory=dict)

    def __add__(self, other):
        if isinstance(other, int):
            return Affine(self.const + other, self.coefs)
        coefs = dict(self.coefs)
        for v, c in other.coefs.items():
            coefs[v] = coefs.get(v, 0) + c
        return Affine(self.const + other.const, {v: c for v, c in coefs.items() if c})

    __radd__ = __add__

    def __neg__(self):
        return Affine(-self.const, {v: -c for v, c in self.coefs.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, Affine) else -other)

    def __rsub__(self, other):
        return -self + other

    def __rmul__(self, k: int):
        if k == 0:
            return Affine()
        return Affine(k * self.const, {v: k * c for v, c in self.coefs.items()})

    def value(self, env: Mapping[str, int]) -> int:
        return self.const + sum(c * env[v] for v, c in self.coefs.items())

    def __str__(self) -> str:
        parts = [str(self.const)] if self.const or not self.coefs else []
        for v, c in self.coefs.items():
            parts.append(("+" if c > 0 else "-") + (v if abs(c) == 1 else f"{abs(c)}*{v}"))
        return "".join(parts).lstrip("+")


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


@dataclass(frozen=True)
class SummationBounds:
    """Per summation variable, in nesting order: (lower terms, upper terms)."""

    order: tuple[str, ...]
    bounds: Mapping[str, tuple[tuple[Affine, ...], tuple[Affine, ...]]]

    def check_order(self) -> None:
        """Every limit may only mention variables bound further out."""
        bound: set[str] = set()
        for v in self.order:
            lo, hi = self.bounds[v]
            for term in lo + hi:
                unbound = set(term.coefs) - bound
                if unbound:
                    raise AssertionError(f"limit {term} of {v} uses unbound {sorted(unbound)}")
            bound.add(v)

    def describe(self) -> str:
        lines = []
        for v in self.order:
            lo, hi = self.bounds[v]
            lines.append(f"max{{{', '.join(map(str, lo))}}} <= {v} <= min{{{', '.join(map(str, hi))}}}")
        return "\n".join(lines)


def summation_bounds(q: CouplingQuery) -> SummationBounds:
    """Limits of the nested sum for rank r >= 3; absent d_{i,j} count as 0."""
    r = q.rank
    if r < 3:
        raise ValueError("nested-sum limits are defined for rank >= 3")
    lam, mu = q.lam, q.mu

    def D(i, j):
        if i >= 1 and j >= 1 and i + j <= r - 1:
            return Affine(0, {f"d_{i}_{j}": 1})
        return Affine()

    def E(l):
        return Affine(0, {f"eta_{l}": 1}) if 1 <= l <= r - 1 else Affine()

    def n(i):
        return Affine(q.n[i - 1])

    def Nc(i):
        return Affine(q.Ncap[i - 1])

    def Np(i):
        return Affine(q.Nprime[i - 1])

    def la(i):
        return Affine(lam[i])

    def m(i):
        return Affine(mu[i])

    b: dict[str, tuple[tuple[Affine, ...], tuple[Affine, ...]]] = {}
    for h in summation_order(r):
        if h.kind == "d":
            i, j = h.i, h.j
            if i == 1 and j == 1:
                lo = (Affine(0),)
                hi = (m(1), la(r))
            elif j == 1:
                lo = (D(i - 1, 1),)
                hi = (la(r - i + 1) + D(i - 1, 1),)
            elif i == 1:
                lo = (D(1, j - 1),
                      -m(j - 1) + D(1, j - 1) + D(2, j - 1) - (1 - _delta(j, 2)) * D(2, j - 2))
                hi = (m(j) + D(1, j - 1), la(r) - D(1, j - 1) + D(2, j - 1))
            else:
                lo = (D(i, j - 1) + D(i - 1, j) - D(i - 1, j - 1),
                      -m(j - 1) + D(i, j - 1) + D(i + 1, j - 1) - (1 - _delta(j, 2)) * D(i + 1, j - 2))
                hi = (la(r - i + 1) - D(i, j - 1) + D(i + 1, j - 1) + D(i - 1, j),)
        else:
            l = h.i
            if l == r - 1:
                lo = (D(r - 2, 1), -Np(r))
                hi = (la(2) + D(r - 2, 1), n(r), Nc(r))
            elif l == 1:
                lo = (-Nc(1), D(1, r - 2), -Np(2) + E(2),
                      -m(r - 2) + D(1, r - 2) - D(2, r - 3) + E(2))
                hi = (n(1), m(r - 1) + D(1, r - 2), la(r) - D(1, r - 2) + E(2),
                      n(2) + D(1, r - 2) - E(2), Np(1), Nc(2) + E(2))
            else:
                lo = (D(l - 1, r - l) - D(l - 1, r - l - 1) + D(l, r - l - 1),
                      -Np(l + 1) + E(l + 1),
                      -m(r - l - 1) + E(l + 1) - (1 - _delta(l, r - 2)) * D(l + 1, r - l - 2) + D(l, r - l - 1))
                hi = (la(r - l + 1) - D(l, r - l - 1) + D(l - 1, r - l) + E(l + 1),
                      n(l + 1) + D(l, r - l - 1) - E(l + 1),
                      Nc(l + 1) + E(l + 1))
        b[var_name(h)] = (lo, hi)
    return SummationBounds(tuple(var_name(h) for h in summation_order(r)), b)


def _nested_count(sb: SummationBounds) -> int:
    order = sb.order
    index = {v: k for k, v in enumerate(order)}
    compiled = []
    for v in order:
        lo, hi = sb.bounds[v]
        compiled.append((
            [(t.const, [(index[u], c) for u, c in t.coefs.items()]) for t in lo],
            [(t.const, [(index[u], c) for u, c in t.coefs.items()]) for t in hi],
        ))
    vals = [0] * len(order)
    last = len(order) - 1

    def ev(terms):
        return [const + sum(c * vals[u] for u, c in lin) for const, lin in terms]

    def rec(k: int) -> int:
        lo_terms, hi_terms = compiled[k]
        lo, hi = max(ev(lo_terms)), min(ev(hi_terms))
        if hi < lo:
            return 0  # empty ranges contribute nothing
        if k == last:
            return hi - lo + 1
        total = 0
        for x in range(lo, hi + 1):
            vals[k] = x
            total += rec(k + 1)
        return total

    return rec(0)


def multiplicity_sum(lam: Weight, mu: Weight, nu: Weight, order_check: bool = False) -> int:
    """T_{λ,μ,ν} from the explicit nested sum; 0 across congruence classes."""
    r = _check_ranks(lam, mu, nu)
    if not integrality_ok(lam, mu, nu):
        return 0
    q = derived_quantities(lam, mu, nu)
    if r == 1:
        return int(q.Nprime[0] >= 0 and q.n[0] >= 0 and q.Ncap[0] >= 0)
    if r == 2:
        from .closed_form import su3_multiplicity
        return su3_multiplicity(lam, mu, nu)
    sb = summation_bounds(q)
    if order_check:
        sb.check_order()
    return _nested_count(sb)


def polytope_of(lam: Weight, mu: Weight, nu: Weight, t0: GeneralTriangle | None = None) -> InequalitySystem:
    """Non-negativity of every entry of T0 + sum c_h V_h, over the coefficients c_h.

    Variables follow the summation order. ``t0`` defaults to the initial
    triangle; any other triangle of the same weight gives a translated polytope.
    """
    r = _check_ranks(lam, mu, nu)
    if t0 is None:
        t0 = initial_triangle(lam, mu, nu)
    basis = virtual_basis(r)
    ids = summation_order(r)
    rows = []
    for e, base in enumerate(t0.values):
        rows.append((tuple(basis[h].values[e] for h in ids), -base))
    return InequalitySystem([var_name(h) for h in ids], rows)


def count_polytope(lam: Weight, mu: Weight, nu: Weight) -> int:
    if not integrality_ok(lam, mu, nu):
        return 0
    return count_integer_points(polytope_of(lam, mu, nu))


def list_true_triangles(lam: Weight, mu: Weight, nu: Weight) -> list[GeneralTriangle]:
    """All true triangles of weight (λ, μ, ν)."""
    r = _check_ranks(lam, mu, nu)
    if not integrality_ok(lam, mu, nu):
        return []
    t0 = initial_triangle(lam, mu, nu)
    ids = summation_order(r)
    out = []
    for point in integer_points(polytope_of(lam, mu, nu, t0)):
        t = compose(t0, dict(zip(ids, point)))
        assert all(x >= 0 for x in t.values)
        out.append(t)
    return out


def coefficient_vector(rank: int, point: Iterable[int]) -> CoefficientVector:
    return CoefficientVector.from_ids(dict(zip(summation_order(rank), point)))


def decompose(lam: Weight, mu: Weight, order_check: bool = False) -> dict[Weight, int]:
    """{κ: T_{λ,μ}^κ} from the nested sum over candidates κ = λ + μ - Σ m_i α_i."""
    r = lam.rank
    N = r + 1
    top = tuple(a + b for a, b in zip(lam.labels, mu.labels))
    # κ dominant has non-negative dual labels, so m_i <= (λ+μ)^i
    limits = [x // N for x in dual_labels(Weight(top)).scaled]
    out = {}
    for m in itertools.product(*(range(k + 1) for k in limits)):
        labels = list(top)
        for i, mi in enumerate(m):
            labels[i] -= 2 * mi
            if i > 0:
                labels[i - 1] += mi
            if i < r - 1:
                labels[i + 1] += mi
        if min(labels) < 0:
            continue
        kappa = Weight(labels)
        t = multiplicity_sum(lam, mu, conjugate(kappa), order_check=order_check)
        if t:
            out[kappa] = t
    return dict(sorted(out.items(), key=lambda kv: kv[0].labels, reverse=True))
