"""Distinguished triangles and the affine lattice of triangles of fixed weight."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .triangle import (
    GeneralTriangle,
    HexagonId,
    TriangleError,
    TriangleShape,
    add_scaled,
    entry_keys,
    hexagon_at,
    hexagon_cells,
    hexagon_residuals,
    l_at,
    m_at,
    n_at,
    outer_labels,
)
from .weights import Weight, _check_ranks, derived_quantities


def _from_cells(r: int, m, n, l) -> GeneralTriangle:
    """Build a triangle from per-cell callables m(a, b), n(a, b), l(a, b)."""
    entries = {}
    for a in range(r):
        for b in range(a + 1):
            entries[m_at(r, a, b)] = m(a, b)
            entries[n_at(r, a, b)] = n(a, b)
            entries[l_at(r, a, b)] = l(a, b)
    return GeneralTriangle(r, entries)


def highest_triangle(lam: Weight, mu: Weight) -> GeneralTriangle:
    """The unique true triangle of weight (λ, μ, λ^+ + μ^+)."""
    r = _check_ranks(lam, mu)
    return _from_cells(
        r,
        lambda a, b: lam[a + 1],
        lambda a, b: 0,
        lambda a, b: mu[b + 1],
    )


def root_triangle(rank: int, i: int) -> GeneralTriangle:
    """A generalized triangle of weight (0, 0, α_i)."""
    if not 1 <= i <= rank:
        raise ValueError(f"root index {i} out of range for rank {rank}")
    r = rank
    c = r - i
    entries = {k: 0 for k in entry_keys(r)}
    entries[m_at(r, c, c)] = 1
    entries[n_at(r, c, c)] = -1
    entries[l_at(r, c, c)] = 1
    if i >= 2:
        entries[m_at(r, c + 1, c + 1)] = -1
    if i < r:
        entries[l_at(r, c - 1, c - 1)] = -1
    return GeneralTriangle(r, entries)


def initial_triangle(lam: Weight, mu: Weight, nu: Weight) -> GeneralTriangle:
    """The asymmetric initial triangle of weight (λ, μ, ν).

    The diagonal cells U(a, a) carry N'_{r-a}, n_{r-a}, N_{r-a}; every other
    cell carries (λ_{a+1}, 0, μ_{b+1}). Raises IntegralityError when the
    triple mixes congruence classes.
    """
    q = derived_quantities(lam, mu, nu)
    r = q.rank
    return _from_cells(
        r,
        lambda a, b: q.Nprime[r - a - 1] if a == b else lam[a + 1],
        lambda a, b: q.n[r - a - 1] if a == b else 0,
        lambda a, b: q.Ncap[r - a - 1] if a == b else mu[b + 1],
    )


def _stencil(r: int, a: int, b: int) -> dict:
    """±1 pattern around hexagon D(a, b); +1 points outside the triangle are dropped."""
    minus = [
        n_at(r, a, b), l_at(r, a, b),
        m_at(r, a + 1, b + 1), n_at(r, a + 1, b + 1),
        l_at(r, a + 1, b), m_at(r, a + 1, b),
    ]
    plus = [m_at(r, a, b), n_at(r, a + 1, b), l_at(r, a + 1, b + 1)]
    if a + 2 <= r - 1:
        plus.append(m_at(r, a + 2, b + 1))
    if b >= 1:
        plus.append(l_at(r, a, b - 1))
    if b + 1 <= a:
        plus.append(n_at(r, a, b + 1))
    entries = dict.fromkeys(minus, -1)
    entries.update(dict.fromkeys(plus, 1))
    return entries


@dataclass(frozen=True)
class VirtualBasis:
    shape: TriangleShape
    basis: Mapping[HexagonId, GeneralTriangle]

    def __len__(self) -> int:
        return len(self.basis)

    def __getitem__(self, h: HexagonId) -> GeneralTriangle:
        return self.basis[h]

    @property
    def ids(self) -> tuple[HexagonId, ...]:
        return tuple(self.basis)


@lru_cache(maxsize=None)
def virtual_basis(rank: int | TriangleShape) -> VirtualBasis:
    """One weight-zero triangle per hexagon, keyed by η_l / d_{i,j}."""
    shape = rank if isinstance(rank, TriangleShape) else TriangleShape(rank)
    r = shape.rank
    basis = {}
    for a, b in hexagon_cells(r):
        v = GeneralTriangle(r, _stencil(r, a, b))
        if any(outer_labels(v)[k] != (0,) * r for k in range(3)):
            raise TriangleError(f"virtual triangle at {(a, b)} has non-zero weight")
        basis[hexagon_at(r, a, b)] = v
    return VirtualBasis(shape, dict(sorted(basis.items())))


@dataclass(frozen=True)
class CoefficientVector:
    """Linear coefficients η_1..η_{r-1} and d_{i,j}."""

    eta: tuple[int, ...] = ()
    d: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def items(self):
        for l, c in enumerate(self.eta, start=1):
            yield HexagonId("eta", l), c
        for (i, j), c in self.d.items():
            yield HexagonId("d", i, j), c

    @classmethod
    def from_ids(cls, values: Mapping[HexagonId, int]) -> "CoefficientVector":
        etas = sorted((h.i, c) for h, c in values.items() if h.kind == "eta")
        if [l for l, _ in etas] != list(range(1, len(etas) + 1)):
            raise ValueError("η coefficients must be indexed 1..r-1 without gaps")
        ds = {(h.i, h.j): c for h, c in values.items() if h.kind == "d"}
        return cls(tuple(c for _, c in etas), ds)


def compose(t0: GeneralTriangle, coeffs: CoefficientVector | Mapping[HexagonId, int],
            basis: VirtualBasis | None = None) -> GeneralTriangle:
    """t0 plus the given integer combination of virtual triangles."""
    if basis is None:
        basis = virtual_basis(t0.rank)
    if basis.shape.rank != t0.rank:
        raise TriangleError("shape mismatch between triangle and basis")
    items = coeffs.items() if isinstance(coeffs, (CoefficientVector, dict)) else coeffs.items()
    t = t0
    for h, c in items:
        if h not in basis.basis:
            raise TriangleError(f"no virtual triangle {h} at rank {t0.rank}")
        t = add_scaled(t, c, basis[h])
    return t


def coefficients_of(t: GeneralTriangle, t0: GeneralTriangle) -> dict[HexagonId, int]:
    """Solve t = t0 + sum c_h V_h exactly; raises if t - t0 is not in the span."""
    r = t.rank
    basis = virtual_basis(r)
    ids = basis.ids
    diff = [x - y for x, y in zip(t.values, t0.values)]
    # exact Gaussian elimination on the E x H system
    rows = [[Fraction(basis[h].values[e]) for h in ids] + [Fraction(diff[e])]
            for e in range(len(diff))]
    H = len(ids)
    piv_row = 0
    pivots = []
    for col in range(H):
        p = next((k for k in range(piv_row, len(rows)) if rows[k][col] != 0), None)
        if p is None:
            raise TriangleError("virtual basis is rank deficient")
        rows[piv_row], rows[p] = rows[p], rows[piv_row]
        pv = rows[piv_row][col]
        rows[piv_row] = [x / pv for x in rows[piv_row]]
        for k in range(len(rows)):
            if k != piv_row and rows[k][col] != 0:
                f = rows[k][col]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[piv_row])]
        pivots.append(piv_row)
        piv_row += 1
    if any(row[-1] != 0 for row in rows[piv_row:]):
        raise TriangleError("triangle difference is not a combination of virtual triangles")
    sol = {}
    for h, pr in zip(ids, pivots):
        x = rows[pr][-1]
        if x.denominator != 1:
            raise TriangleError("non-integral coefficients")
        sol[h] = int(x)
    return sol


def basis_rank(rank: int) -> int:
    """Rank of the virtual basis as a set of vectors (exact elimination)."""
    basis = virtual_basis(rank)
    vecs = [[Fraction(x) for x in v.values] for v in basis.basis.values()]
    found = 0
    ncols = len(entry_keys(rank))
    for col in range(ncols):
        p = next((k for k in range(found, len(vecs)) if vecs[k][col] != 0), None)
        if p is None:
            continue
        vecs[found], vecs[p] = vecs[p], vecs[found]
        for k in range(len(vecs)):
            if k != found and vecs[k][col] != 0:
                f = vecs[k][col] / vecs[found][col]
                vecs[k] = [x - f * y for x, y in zip(vecs[k], vecs[found])]
        found += 1
    return found
