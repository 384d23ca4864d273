"""Closed-form results for su(3) and su(4).

Every limit and inequality is stored as text in the label notation

    la_i, mu_i, nu_i    Dynkin labels
    la^i, mu^i, nu^i    dual Dynkin labels
    K                   threshold
    d, eta_1, ...       summation variables

and parsed into exact linear forms. Dual labels carry a factor 1/N, so all
evaluation happens on N times the expression.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .weights import Weight, _check_ranks, dual_labels, integrality_ok

_TOKEN = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*?\s*)?((?:la|mu|nu)[\^_]\d|K|d|eta_\d)?")


@dataclass(frozen=True)
class LinearForm:
    """const + sum coef * atom; atoms are label symbols, K or summation variables."""

    text: str
    coefs: tuple[tuple[str, int], ...]
    const: int = 0

    @classmethod
    def parse(cls, text: str) -> "LinearForm":
        coefs: dict[str, int] = {}
        const = 0
        pos = 0
        s = text.strip()
        first = True
        while pos < len(s):
            m = _TOKEN.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse {text!r} at {s[pos:]!r}")
            sign, num, atom = m.groups()
            if not first and sign is None:
                raise ValueError(f"missing operator in {text!r}")
            if num is None and atom is None:
                raise ValueError(f"dangling sign in {text!r}")
            k = (-1 if sign == "-" else 1) * (int(num) if num else 1)
            if atom is None:
                const += k
            else:
                coefs[atom] = coefs.get(atom, 0) + k
            pos = m.end()
            first = False
        return cls(text.strip(), tuple((a, c) for a, c in coefs.items() if c), const)

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        coefs = dict(self.coefs)
        for a, c in other.coefs:
            coefs[a] = coefs.get(a, 0) - c
        return LinearForm(f"({self.text}) - ({other.text})",
                          tuple((a, c) for a, c in coefs.items() if c), self.const - other.const)

    def scaled_value(self, env: Mapping[str, int], N: int) -> int:
        """N times the value; env maps label atoms to N-scaled values, others unscaled."""
        total = N * self.const
        for a, c in self.coefs:
            if a[:2] in ("la", "mu", "nu"):
                total += c * env[a]
            else:
                total += c * N * env[a]
        return total


def label_env(lam: Weight, mu: Weight, nu: Weight) -> dict[str, int]:
    """N-scaled values of every la_i, la^i, mu_i, ... atom."""
    r = _check_ranks(lam, mu, nu)
    N = r + 1
    env = {}
    for name, w in (("la", lam), ("mu", mu), ("nu", nu)):
        dual = dual_labels(w).scaled
        for i in range(1, r + 1):
            env[f"{name}_{i}"] = N * w[i]
            env[f"{name}^{i}"] = dual[i - 1]
    return env


def _exact(scaled: int, N: int) -> int:
    if scaled % N:
        raise ArithmeticError("limit is not an integer; integrality should have been checked")
    return scaled // N


@dataclass(frozen=True)
class Inequality:
    """lhs <= rhs."""

    lhs: LinearForm
    rhs: LinearForm

    @classmethod
    def parse(cls, text: str) -> "Inequality":
        a, b = text.split("<=")
        return cls(LinearForm.parse(a), LinearForm.parse(b))

    def __str__(self) -> str:
        return f"{self.lhs.text} <= {self.rhs.text}"

    def slack(self, env: Mapping[str, int], N: int) -> Fraction:
        return Fraction((self.rhs - self.lhs).scaled_value(env, N), N)

    def holds(self, env: Mapping[str, int], N: int) -> bool:
        return (self.rhs - self.lhs).scaled_value(env, N) >= 0


def _system(lines: str) -> tuple[Inequality, ...]:
    return tuple(Inequality.parse(ln) for ln in lines.strip().splitlines() if ln.strip())


# su(3): limits of the single sum over η
SU3_LOWER = tuple(map(LinearForm.parse, [
    "0",
    "la^2 + mu^1 - mu^2 - nu^1",
    "-la^1 + la^2 + mu^1 - nu^2",
]))
SU3_UPPER = tuple(map(LinearForm.parse, [
    "mu_1",
    "la_2",
    "la^2 + mu^2 - nu^1",
    "la^1 + mu^1 - nu^2",
    "-la^1 + la^2 + mu^1 - nu^1 + nu^2",
    "la^2 + mu^1 - mu^2 + nu^1 - nu^2",
]))

SU3_NONVANISHING = _system("""
0 <= la_1
0 <= la_2
0 <= mu_1
0 <= mu_2
0 <= nu_1
0 <= nu_2
la^1 - la^2 + mu^1 - mu^2 <= nu^1
-la^1 + mu^2 <= nu^1
la^2 - mu^1 <= nu^1
nu^1 <= la^2 + mu^2
-la^1 + la^2 - mu^1 + mu^2 <= nu^2
la^1 - mu^2 <= nu^2
-la^2 + mu^1 <= nu^2
nu^2 <= la^1 + mu^1
-la^2 - mu^1 + mu^2 <= nu^1 - nu^2
-la^1 + la^2 - mu^2 <= nu^1 - nu^2
nu^1 - nu^2 <= la^1 - mu^1 + mu^2
nu^1 - nu^2 <= -la^1 + la^2 + mu^1
""")

SU3_THRESHOLD = _system("""
K <= la_1
K <= la_2
K <= mu_1
K <= mu_2
K <= nu_1
K <= nu_2
la^1 - la^2 + mu^1 - mu^2 + K <= nu^1
-la^1 + mu^2 + K <= nu^1
la^2 - mu^1 + K <= nu^1
nu^1 <= la^2 + mu^2 - K
-la^1 + la^2 - mu^1 + mu^2 + K <= nu^2
la^1 - mu^2 + K <= nu^2
-la^2 + mu^1 + K <= nu^2
nu^2 <= la^1 + mu^1 - K
-la^2 - mu^1 + mu^2 + K <= nu^1 - nu^2
-la^1 + la^2 - mu^2 + K <= nu^1 - nu^2
nu^1 - nu^2 <= la^1 - mu^1 + mu^2 - K
nu^1 - nu^2 <= -la^1 + la^2 + mu^1 - K
""")

# su(4): limits of the triple sum, outermost first
SU4_LIMITS = {
    "d": (("0",), ("mu_1", "la_3")),
    "eta_2": (("d", "-la^1 + la^2 + mu^1 - nu^3"),
              ("la_2 + d", "la^1 + mu^1 - nu^3", "-la^1 + la^2 + mu^1 - nu^2 + nu^3")),
    "eta_1": (("la^3 + mu^2 - mu^3 - nu^1", "d",
               "-la^2 + la^3 - mu^1 + mu^2 - nu^2 + nu^3 + eta_2", "-mu_1 + d + eta_2"),
              ("la^3 + mu^3 - nu^1", "mu_2 + d", "la_3 - d + eta_2", "la^2 + mu^2 - nu^2 + d - eta_2",
               "la^3 + mu^2 - mu^3 + nu^1 - nu^2", "-la^2 + la^3 - mu^1 + mu^2 - nu^1 + nu^2 + eta_2")),
}
SU4_LIMITS = {v: (tuple(map(LinearForm.parse, lo)), tuple(map(LinearForm.parse, hi)))
              for v, (lo, hi) in SU4_LIMITS.items()}

# |x| <= y is written as the two lines x <= y and -x <= y
SU4_NONVANISHING = _system("""
0 <= la_1
0 <= la_2
0 <= la_3
0 <= mu_1
0 <= mu_2
0 <= mu_3
0 <= nu_1
0 <= nu_2
0 <= nu_3
la^3 - mu^1 <= nu^1
la^3 - la_3 - mu^1 + mu_1 <= nu^1
-la^1 + mu^3 <= nu^1
-la^1 + la_1 + mu^3 - mu_3 <= nu^1
nu^1 <= la^3 + mu^3
la^2 - mu^2 <= nu^2
-la^2 + mu^2 <= nu^2
la^2 - la_2 - mu^2 + mu_2 <= nu^2
-la^2 + la_2 + mu^2 - mu_2 <= nu^2
la^1 - la^3 + mu^1 - mu^3 <= nu^2
-la^1 + la^3 - mu^1 + mu^3 <= nu^2
nu^2 <= la^2 + mu^2
la^1 - mu^3 <= nu^3
la^1 - la_1 - mu^3 + mu_3 <= nu^3
-la^3 + mu^1 <= nu^3
-la^3 + la_3 + mu^1 - mu_1 <= nu^3
nu^3 <= la^1 + mu^1
la^2 - la^3 - mu^1 <= nu^1 - nu_1
-la^1 + mu^2 - mu^3 <= nu^1 - nu_1
la^1 - la^2 + mu^1 - mu^2 <= nu^1 - nu_1
nu^1 - nu_1 <= la^2 - la^3 + mu^3
nu^1 - nu_1 <= la^3 + mu^2 - mu^3
-la^1 + la^3 + mu_2 - mu^2 <= nu^2 - nu_2
la_2 - la^2 - mu^1 + mu^3 <= nu^2 - nu_2
la^1 - la^3 + mu_2 - mu^2 <= nu^2 - nu_2
la_2 - la^2 + mu^1 - mu^3 <= nu^2 - nu_2
-la^2 + mu^2 - mu_2 <= nu^2 - nu_2
la^2 - la_2 - mu^2 <= nu^2 - nu_2
nu^2 - nu_2 <= la^2 - la_2 + mu^2
nu^2 - nu_2 <= la^2 + mu^2 - mu_2
la^2 - la^1 - mu^3 <= nu^3 - nu_3
-la^3 + mu^2 - mu^1 <= nu^3 - nu_3
la^3 - la^2 + mu^3 - mu^2 <= nu^3 - nu_3
nu^3 - nu_3 <= la^2 - la^1 + mu^1
nu^3 - nu_3 <= la^1 + mu^2 - mu^1
-la^1 + la^3 - mu^2 <= nu^1 - nu^3
-la^2 - mu^1 + mu^3 <= nu^1 - nu^3
la_2 - la^2 + mu_2 - mu^2 <= nu^1 - nu^3
nu^1 - nu^3 <= -la^1 + la^3 + mu^2
nu^1 - nu^3 <= la^2 - mu^1 + mu^3
nu^1 - nu^3 <= la^2 - la_2 + mu^2 - mu_2
""")


def _require_rank(r: int, *ws: Weight) -> None:
    got = _check_ranks(*ws)
    if got != r:
        raise ValueError(f"expected rank {r} (su({r + 1})), got rank {got}")


def su3_multiplicity(lam: Weight, mu: Weight, nu: Weight) -> int:
    _require_rank(2, lam, mu, nu)
    if not integrality_ok(lam, mu, nu):
        return 0
    env = label_env(lam, mu, nu)
    lo = max(_exact(f.scaled_value(env, 3), 3) for f in SU3_LOWER)
    hi = min(_exact(f.scaled_value(env, 3), 3) for f in SU3_UPPER)
    return max(0, hi - lo + 1)


def su4_multiplicity(lam: Weight, mu: Weight, nu: Weight) -> int:
    _require_rank(3, lam, mu, nu)
    if not integrality_ok(lam, mu, nu):
        return 0
    env = label_env(lam, mu, nu)

    def limits(var):
        lo, hi = SU4_LIMITS[var]
        return (max(_exact(f.scaled_value(env, 4), 4) for f in lo),
                min(_exact(f.scaled_value(env, 4), 4) for f in hi))

    total = 0
    d_lo, d_hi = limits("d")
    for d in range(d_lo, d_hi + 1):
        env["d"] = d
        e2_lo, e2_hi = limits("eta_2")
        for e2 in range(e2_lo, e2_hi + 1):
            env["eta_2"] = e2
            e1_lo, e1_hi = limits("eta_1")
            total += max(0, e1_hi - e1_lo + 1)
    return total


def violated(system, lam: Weight, mu: Weight, nu: Weight, K: int = 0) -> list[tuple[Inequality, Fraction]]:
    """Inequalities of ``system`` that fail, with their (negative) slack."""
    env = label_env(lam, mu, nu)
    env["K"] = K
    N = lam.rank + 1
    return [(q, q.slack(env, N)) for q in system if not q.holds(env, N)]


def su3_nonvanishing(lam: Weight, mu: Weight, nu: Weight) -> bool:
    _require_rank(2, lam, mu, nu)
    return integrality_ok(lam, mu, nu) and not violated(SU3_NONVANISHING, lam, mu, nu)


def su4_nonvanishing(lam: Weight, mu: Weight, nu: Weight) -> bool:
    _require_rank(3, lam, mu, nu)
    return integrality_ok(lam, mu, nu) and not violated(SU4_NONVANISHING, lam, mu, nu)


def su3_threshold(lam: Weight, mu: Weight, nu: Weight, K: int) -> bool:
    """True iff T_{λ,μ,ν} > K."""
    _require_rank(2, lam, mu, nu)
    if K < 0:
        raise ValueError("K must be non-negative")
    return integrality_ok(lam, mu, nu) and not violated(SU3_THRESHOLD, lam, mu, nu, K)


def explain(system, lam: Weight, mu: Weight, nu: Weight, K: int = 0) -> list[str]:
    """Human-readable report of why a non-vanishing/threshold query failed."""
    lines = []
    if not integrality_ok(lam, mu, nu):
        lines.append("la^i + mu^i + nu^i is not an integer for some i (congruence classes do not match)")
    env = label_env(lam, mu, nu)
    env["K"] = K
    N = lam.rank + 1
    for q, slack in violated(system, lam, mu, nu, K):
        lhs = Fraction(q.lhs.scaled_value(env, N), N)
        rhs = Fraction(q.rhs.scaled_value(env, N), N)
        lines.append(f"{q}   [{lhs} <= {rhs} fails]")
    return lines
