"""Exact integer-point counting for bounded rational inequality systems.

Fourier-Motzkin elimination (with Imbert's history test to discard
redundant combinations) projects the system onto every prefix of the
variable list; the projections give exact per-variable bounds for a nested
enumeration.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterator, Sequence


class UnboundedError(ValueError):
    pass


@dataclass(frozen=True)
class Inequality:
    """coeffs . x >= rhs"""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction

    def holds(self, point: Sequence[int]) -> bool:
        return sum(c * x for c, x in zip(self.coeffs, point)) >= self.rhs


@dataclass(frozen=True)
class InequalitySystem:
    variables: tuple[str, ...]
    inequalities: tuple[Inequality, ...]

    def __init__(self, variables: Sequence[str], inequalities):
        variables = tuple(variables)
        ineqs = []
        for ineq in inequalities:
            if not isinstance(ineq, Inequality):
                coeffs, rhs = ineq
                ineq = Inequality(tuple(Fraction(c) for c in coeffs), Fraction(rhs))
            if len(ineq.coeffs) != len(variables):
                raise ValueError(f"inequality has {len(ineq.coeffs)} coefficients, expected {len(variables)}")
            ineqs.append(ineq)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "inequalities", tuple(ineqs))

    def __len__(self) -> int:
        return len(self.inequalities)

    def contains(self, point: Sequence[int]) -> bool:
        return all(q.holds(point) for q in self.inequalities)

    def to_text(self) -> str:
        return "\n".join(format_inequality(q, self.variables) for q in self.inequalities) + "\n"

    @classmethod
    def from_text(cls, text: str, variables: Sequence[str] | None = None) -> "InequalitySystem":
        return parse_system(text, variables)


def _fmt_num(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_inequality(q: Inequality, variables: Sequence[str]) -> str:
    parts = []
    for c, v in zip(q.coeffs, variables):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        term = f"{_fmt_num(abs(c))}*{v}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"{sign} {term}")
    lhs = " ".join(parts) if parts else "0"
    return f"{lhs} >= {_fmt_num(q.rhs)}"


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)\s*\*\s*([A-Za-z_][A-Za-z0-9_]*)")


def parse_inequality(line: str, variables: Sequence[str]) -> Inequality:
    if ">=" not in line:
        raise ValueError(f"not an inequality: {line!r}")
    lhs, rhs = line.split(">=")
    lhs = lhs.strip()
    coeffs = [Fraction(0)] * len(variables)
    index = {v: i for i, v in enumerate(variables)}
    if lhs != "0":
        pos = 0
        for m in _TERM.finditer(lhs):
            if lhs[pos:m.start()].strip():
                raise ValueError(f"cannot parse {line!r}")
            sign, num, var = m.groups()
            if var not in index:
                raise ValueError(f"unknown variable {var!r}")
            c = Fraction(num)
            coeffs[index[var]] += -c if sign == "-" else c
            pos = m.end()
        if lhs[pos:].strip():
            raise ValueError(f"cannot parse {line!r}")
    return Inequality(tuple(coeffs), Fraction(rhs.strip()))


def parse_system(text: str, variables: Sequence[str] | None = None) -> InequalitySystem:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if variables is None:
        seen: list[str] = []
        for ln in lines:
            for m in _TERM.finditer(ln.split(">=")[0]):
                if m.group(3) not in seen:
                    seen.append(m.group(3))
        variables = seen
    return InequalitySystem(variables, [parse_inequality(ln, variables) for ln in lines])


# -- elimination ------------------------------------------------------------

def _integral(coeffs: Sequence[Fraction], rhs: Fraction) -> tuple[tuple[int, ...], int]:
    den = lcm(*(c.denominator for c in coeffs), rhs.denominator)
    ic = [int(c * den) for c in coeffs]
    irhs = int(rhs * den)
    g = 0
    for c in ic:
        g = gcd(g, c)
    if g > 1:
        ic = [c // g for c in ic]
        irhs = -((-irhs) // g)  # ceil: integer points only
    return tuple(ic), irhs


# integer row: (coeffs, rhs, history) with history a bitmask of source rows
_Row = tuple[tuple[int, ...], int, int]


def _prune(rows: list[_Row]) -> list[_Row]:
    """Keep the tightest row per normal, then drop rows whose history contains another's."""
    best: dict[tuple[int, ...], _Row] = {}
    for row in rows:
        old = best.get(row[0])
        if old is None or row[1] > old[1]:
            best[row[0]] = row
    ordered = sorted(best.values(), key=lambda row: row[2].bit_count())
    kept: list[_Row] = []
    for row in ordered:
        h = row[2]
        if any(k[2] & h == k[2] for k in kept):
            continue
        kept.append(row)
    return kept


def _combine(p: _Row, q: _Row, k: int) -> _Row:
    # p has positive, q negative coefficient on variable k
    a, b = p[0][k], -q[0][k]
    coeffs = [b * x + a * y for x, y in zip(p[0], q[0])]
    rhs = b * p[1] + a * q[1]
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    if g > 1:
        coeffs = [c // g for c in coeffs]
        rhs = -((-rhs) // g)  # ceil: integer points only
    return tuple(coeffs), rhs, p[2] | q[2]


class Infeasible(Exception):
    pass


def project(rows: list[_Row], nvars: int) -> list[list[_Row]]:
    """Projections P_k onto the first k variables, indexed by k = 0..nvars.

    Right-hand sides are rounded up after dividing by the row gcd, so each
    P_k contains the projection of every integer point (possibly tighter than
    the rational shadow, never looser on integers). Rows built from more than
    step+1 originals (Imbert) or whose history contains another row's
    (Chernikov) are redundant and dropped.
    """
    levels: list[list[_Row]] = [[] for _ in range(nvars + 1)]
    current = _prune(rows)
    levels[nvars] = current
    for step, k in enumerate(range(nvars - 1, -1, -1), start=1):
        pos = [row for row in current if row[0][k] > 0]
        neg = [row for row in current if row[0][k] < 0]
        if not pos or not neg:
            raise UnboundedError(f"variable {k} has no {'lower' if not pos else 'upper'} bound")
        new = [row for row in current if row[0][k] == 0]
        for p in pos:
            for q in neg:
                row = _combine(p, q, k)
                if row[2].bit_count() > step + 1:
                    continue
                if not any(row[0]):
                    if row[1] > 0:
                        raise Infeasible
                    continue
                new.append(row)
        current = _prune(new)
        levels[k] = current
    for coeffs, rhs, _ in levels[0]:
        if rhs > 0:
            raise Infeasible
    return levels


def _bounds_table(levels: list[list[_Row]], nvars: int):
    """For variable k: rows of P_{k+1} with non-zero coefficient on k."""
    table = []
    for k in range(nvars):
        lo, hi = [], []
        for coeffs, rhs, _ in levels[k + 1]:
            c = coeffs[k]
            if c > 0:
                lo.append((coeffs[:k], rhs, c))
            elif c < 0:
                hi.append((coeffs[:k], rhs, c))
        table.append((lo, hi))
    return table


def integer_points(system: InequalitySystem) -> Iterator[tuple[int, ...]]:
    """Yield every integer point of a bounded system in lexicographic order."""
    n = len(system.variables)
    rows = []
    for i, q in enumerate(system.inequalities):
        coeffs, rhs = _integral(q.coeffs, q.rhs)
        rows.append((coeffs, rhs, 1 << i))
    if n == 0:
        if all(rhs <= 0 for _, rhs, _ in rows):
            yield ()
        return
    try:
        levels = project(rows, n)
    except Infeasible:
        return
    table = _bounds_table(levels, n)
    point = [0] * n

    def rec(k: int):
        lo_rows, hi_rows = table[k]
        prefix = point[:k]
        lo = None
        for pc, rhs, c in lo_rows:
            s = rhs - sum(a * x for a, x in zip(pc, prefix))
            v = -((-s) // c)
            if lo is None or v > lo:
                lo = v
        hi = None
        for pc, rhs, c in hi_rows:
            s = rhs - sum(a * x for a, x in zip(pc, prefix))
            v = s // c  # c < 0: x <= s / c
            if hi is None or v < hi:
                hi = v
        for x in range(lo, hi + 1):
            point[k] = x
            if k + 1 == n:
                if all(sum(a * x for a, x in zip(c, point)) >= rhs for c, rhs, _ in rows):
                    yield tuple(point)
            else:
                yield from rec(k + 1)

    yield from rec(0)


def count_integer_points(system: InequalitySystem) -> int:
    """Exact number of integer points; raises UnboundedError for unbounded systems."""
    return sum(1 for _ in integer_points(system))
