"""Generalized BZ triangles of su(r+1).

Geometry used throughout: the triangle is a row-stack of r(r+1)/2 small
upward triangles U(a, b), 0 <= b <= a < r, each carrying three entries

    top            m(a, b) = m_{a-b+1, N-b}
    bottom-left    n(a, b) = n_{b+1, a+2}
    bottom-right   l(a, b) = l_{N-1-a, N-a+b}

and one hexagon per downward triangle D(a, b), 0 <= b <= a < r-1, whose
six vertices are the lower pair of U(a, b), the top/bottom-right of
U(a+1, b) and the top/bottom-left of U(a+1, b+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .weights import Weight

FAMILIES = ("m", "n", "l")

EntryKey = tuple[str, int, int]


@dataclass(frozen=True)
class TriangleShape:
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")

    @property
    def N(self) -> int:
        return self.rank + 1

    @property
    def entry_count(self) -> int:
        return 3 * self.rank * (self.rank + 1) // 2

    @property
    def hexagon_count(self) -> int:
        return self.rank * (self.rank - 1) // 2


def m_at(r: int, a: int, b: int) -> EntryKey:
    return ("m", a - b + 1, r + 1 - b)


def n_at(r: int, a: int, b: int) -> EntryKey:
    return ("n", b + 1, a + 2)


def l_at(r: int, a: int, b: int) -> EntryKey:
    return ("l", r - a, r + 1 - a + b)


def position(r: int, key: EntryKey) -> tuple[int, int]:
    """Upward-triangle coordinates (a, b) holding an entry."""
    fam, i, j = key
    N = r + 1
    if not (fam in FAMILIES and 1 <= i < j <= N):
        raise KeyError(key)
    if fam == "m":
        b = N - j
        return i - 1 + b, b
    if fam == "n":
        return j - 2, i - 1
    a = N - 1 - i
    return a, j - 1 - i


@lru_cache(maxsize=None)
def render_rows(r: int) -> tuple[tuple[EntryKey, ...], ...]:
    """Entry keys row by row, as the triangle is drawn: tops, then bottom pairs."""
    rows = []
    for a in range(r):
        rows.append(tuple(m_at(r, a, b) for b in range(a + 1)))
        pair_row = []
        for b in range(a + 1):
            pair_row += [n_at(r, a, b), l_at(r, a, b)]
        rows.append(tuple(pair_row))
    return tuple(rows)


@lru_cache(maxsize=None)
def entry_keys(r: int) -> tuple[EntryKey, ...]:
    return tuple(k for row in render_rows(r) for k in row)


@lru_cache(maxsize=None)
def entry_index(r: int) -> dict[EntryKey, int]:
    return {k: i for i, k in enumerate(entry_keys(r))}


@dataclass(frozen=True, order=True)
class HexagonId:
    """Hexagon label: ('eta', l, 0) for η_l or ('d', i, j) for d_{i,j}."""

    kind: str
    i: int
    j: int = 0

    def __str__(self) -> str:
        return f"eta_{self.i}" if self.kind == "eta" else f"d_{self.i},{self.j}"

    def cell(self, r: int) -> tuple[int, int]:
        """Downward-triangle coordinates (a, b)."""
        if self.kind == "eta":
            if not 1 <= self.i <= r - 1:
                raise ValueError(f"{self} out of range for rank {r}")
            return r - 1 - self.i, r - 1 - self.i
        if not (self.i >= 1 and self.j >= 1 and self.i + self.j <= r - 1):
            raise ValueError(f"{self} out of range for rank {r}")
        return r - 1 - self.i, self.j - 1


def eta(l: int) -> HexagonId:
    return HexagonId("eta", l)


def d(i: int, j: int) -> HexagonId:
    return HexagonId("d", i, j)


def hexagon_at(r: int, a: int, b: int) -> HexagonId:
    if a == b:
        return eta(r - 1 - a)
    return d(r - 1 - a, b + 1)


@lru_cache(maxsize=None)
def hexagon_cells(r: int) -> tuple[tuple[int, int], ...]:
    return tuple((a, b) for a in range(r - 1) for b in range(a + 1))


def hexagon_vertices(r: int, a: int, b: int) -> tuple[EntryKey, ...]:
    """The six vertices in cyclic order, starting at the upper-left."""
    return (
        n_at(r, a, b),
        l_at(r, a, b),
        m_at(r, a + 1, b + 1),
        n_at(r, a + 1, b + 1),
        l_at(r, a + 1, b),
        m_at(r, a + 1, b),
    )


@lru_cache(maxsize=None)
def hexagon_identities(r: int) -> tuple[tuple[tuple[EntryKey, EntryKey], tuple[EntryKey, EntryKey]], ...]:
    """Three opposite-side identities per hexagon, as (side, opposite side)."""
    out = []
    for a, b in hexagon_cells(r):
        v = hexagon_vertices(r, a, b)
        sides = [(v[k], v[(k + 1) % 6]) for k in range(6)]
        for k in range(3):
            out.append((sides[k], sides[k + 3]))
    return tuple(out)


def hexagon_residuals(entries: Mapping[EntryKey, int], r: int) -> list[int]:
    """Two independent residuals per hexagon; all zero iff hexagon-consistent."""
    missing = [k for k in entry_keys(r) if k not in entries]
    if missing:
        raise KeyError(f"missing entries: {missing}")
    res = []
    ids = hexagon_identities(r)
    for h in range(len(ids) // 3):
        for (p, q), (s, t) in ids[3 * h: 3 * h + 2]:
            res.append(entries[p] + entries[q] - entries[s] - entries[t])
    return res


class TriangleError(ValueError):
    pass


class GeneralTriangle:
    """An integer triangle satisfying every hexagon condition.

    Entries are held as a tuple in drawing order (see ``entry_keys``).
    """

    __slots__ = ("rank", "values", "_hash")

    def __init__(self, rank: int, values: Iterable[int] | Mapping[EntryKey, int], check: bool = True):
        if isinstance(values, Mapping):
            keys = entry_keys(rank)
            extra = set(values) - set(keys)
            if extra:
                raise TriangleError(f"unknown entries {sorted(extra)}")
            values = tuple(int(values.get(k, 0)) for k in keys)
        else:
            values = tuple(int(v) for v in values)
        if len(values) != 3 * rank * (rank + 1) // 2:
            raise TriangleError(f"rank {rank} needs {3 * rank * (rank + 1) // 2} entries, got {len(values)}")
        self.rank = rank
        self.values = values
        self._hash = None
        if check:
            bad = [x for x in hexagon_residuals(self, rank) if x]
            if bad:
                raise TriangleError("hexagon conditions violated")

    # mapping protocol, keyed by EntryKey
    def __getitem__(self, key: EntryKey) -> int:
        return self.values[entry_index(self.rank)[key]]

    def __contains__(self, key) -> bool:
        return key in entry_index(self.rank)

    def keys(self):
        return entry_keys(self.rank)

    def items(self):
        return zip(entry_keys(self.rank), self.values)

    def as_dict(self) -> dict[EntryKey, int]:
        return dict(self.items())

    @property
    def shape(self) -> TriangleShape:
        return TriangleShape(self.rank)

    def __eq__(self, other) -> bool:
        return isinstance(other, GeneralTriangle) and self.rank == other.rank and self.values == other.values

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, self.values))
        return self._hash

    def __repr__(self) -> str:
        return f"GeneralTriangle(rank={self.rank}, values={self.values})"

    def __str__(self) -> str:
        return render(self)

    def __add__(self, other: "GeneralTriangle") -> "GeneralTriangle":
        return add_scaled(self, 1, other)

    def __sub__(self, other: "GeneralTriangle") -> "GeneralTriangle":
        return add_scaled(self, -1, other)

    def __neg__(self) -> "GeneralTriangle":
        return GeneralTriangle(self.rank, tuple(-x for x in self.values), check=False)

    def rows(self) -> list[list[int]]:
        return [[self[k] for k in row] for row in render_rows(self.rank)]

    @classmethod
    def zero(cls, rank: int) -> "GeneralTriangle":
        return cls(rank, (0,) * (3 * rank * (rank + 1) // 2), check=False)


def add_scaled(t: GeneralTriangle, c: int, v: GeneralTriangle) -> GeneralTriangle:
    """t + c*v; hexagon consistency is preserved by linearity."""
    if t.rank != v.rank:
        raise TriangleError(f"shape mismatch: rank {t.rank} vs {v.rank}")
    if c == 0:
        return t
    return GeneralTriangle(t.rank, tuple(x + c * y for x, y in zip(t.values, v.values)), check=False)


def is_true(t: GeneralTriangle) -> bool:
    return all(x >= 0 for x in t.values)


def outer_labels(t: GeneralTriangle) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Boundary label vectors (λ, μ, ν); may be negative for generalized triangles."""
    r, N = t.rank, t.rank + 1
    lam = tuple(t[("m", i, N)] + t[("n", 1, i + 1)] for i in range(1, N))
    mu = tuple(t[("n", i, N)] + t[("l", 1, i + 1)] for i in range(1, N))
    nu = tuple(t[("l", i, N)] + t[("m", 1, i + 1)] for i in range(1, N))
    return lam, mu, nu


def outer_weights(t: GeneralTriangle) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    return outer_labels(t)


def has_weight(t: GeneralTriangle, lam: Weight, mu: Weight, nu: Weight) -> bool:
    return outer_labels(t) == (lam.labels, mu.labels, nu.labels)


def _fmt(x: int, bar: bool) -> str:
    if bar and x < 0:
        return f"{-x}\u0304"
    return str(x)


def render(t: GeneralTriangle, bar: bool = False) -> str:
    """Text drawing in the usual row layout, rows centred.

    With ``bar=True`` negative entries are written with a combining overbar.
    """
    rows = [[_fmt(x, bar) for x in row] for row in t.rows()]
    width = max(len(s) for row in rows for s in row)
    r = t.rank
    cols = 4 * r - 1
    lines = []
    for k, row in enumerate(rows):
        a = k // 2
        grid = [""] * cols
        if k % 2 == 0:
            # tops of U(a, b) sit above the centre of each small triangle
            for b, s in enumerate(row):
                grid[2 * (r - 1 - a) + 4 * b + 1] = s
        else:
            for b in range(a + 1):
                grid[2 * (r - 1 - a) + 4 * b] = row[2 * b]
                grid[2 * (r - 1 - a) + 4 * b + 2] = row[2 * b + 1]
        lines.append(" ".join(s.rjust(width) for s in grid).rstrip())
    return "\n".join(lines)
