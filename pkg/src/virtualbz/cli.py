"""Command-line front end.

    virtualbz multiplicity su3 1,1 1,1 1,1
    virtualbz decompose su3 1,1 1,1 --oracle
    virtualbz triangles su4 1,0,1 1,0,1 1,0,1
    virtualbz nonvanishing su4 1,0,0 1,0,0 0,1,0
    virtualbz threshold su3 2,2 2,2 2,2 --K 2
    virtualbz polytope su3 1,1 1,1 1,1
    virtualbz crosscheck su3 --max-label 3

Exit codes: 0 success, 1 usage error, 2 cross-check discrepancy.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import re
import sys
from dataclasses import dataclass
from typing import Sequence

from . import closed_form, oracle
from .enumerator import (
    count_polytope,
    decompose,
    list_true_triangles,
    multiplicity_sum,
    polytope_of,
)
from .triangle import render
from .weights import Weight, integrality_ok, weyl_dimension

MODES = ("multiplicity", "decompose", "triangles", "nonvanishing", "threshold", "polytope", "crosscheck")
N_WEIGHTS = {"multiplicity": 3, "decompose": 2, "triangles": 3, "nonvanishing": 3,
             "threshold": 3, "polytope": 3, "crosscheck": 0}

EXIT_OK, EXIT_USAGE, EXIT_DISCREPANCY = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class QuerySpec:
    algebra: str
    rank: int
    mode: str
    weights: list[Weight]
    K: int | None = None
    json: bool = False
    oracle: bool = False
    emit_polytope: bool = False
    max_label: int = 2
    sample: int | None = None
    seed: int = 0
    order_check: bool = False


def parse_algebra(token: str) -> int:
    m = re.fullmatch(r"su\(?(\d+)\)?", token.strip().lower())
    if not m or int(m.group(1)) < 2:
        raise UsageError(f"unknown algebra {token!r}; expected su2, su3, ...")
    return int(m.group(1)) - 1


def parse_weight(token: str, rank: int) -> Weight:
    try:
        labels = [int(x) for x in token.split(",")]
    except ValueError:
        raise UsageError(f"malformed weight {token!r}; expected comma-separated Dynkin labels") from None
    if len(labels) != rank:
        raise UsageError(f"weight {token!r} has {len(labels)} labels, su({rank + 1}) needs {rank}")
    if any(x < 0 for x in labels):
        raise UsageError(f"weight {token!r} has a negative label")
    return Weight(labels)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="virtualbz", description="su(N) tensor product multiplicities from BZ triangles")
    p.add_argument("mode", choices=MODES)
    p.add_argument("algebra", help="su2, su3, su4, ...")
    p.add_argument("weights", nargs="*", help="comma-separated Dynkin labels")
    p.add_argument("--K", type=int, help="threshold for mode=threshold")
    p.add_argument("--oracle", action="store_true", help="add the classical (Freudenthal/Klimyk) result")
    p.add_argument("--emit-polytope", action="store_true", help="also print the inequality system")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--max-label", type=int, default=2, help="label bound for crosscheck")
    p.add_argument("--sample", type=int, help="crosscheck a random sample of this size instead")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--order-check", action="store_true", help="assert the summation order is legal")
    return p


def parse_args(argv: Sequence[str]) -> QuerySpec:
    a = build_parser().parse_args(argv)
    rank = parse_algebra(a.algebra)
    need = N_WEIGHTS[a.mode]
    if len(a.weights) != need:
        raise UsageError(f"mode {a.mode} takes {need} weights, got {len(a.weights)}")
    weights = [parse_weight(t, rank) for t in a.weights]
    if a.K is not None and a.mode != "threshold":
        raise UsageError("--K only applies to mode threshold")
    if a.mode == "threshold":
        if a.K is None or a.K < 0:
            raise UsageError("threshold needs --K with a non-negative integer")
        if rank != 2:
            raise UsageError("threshold inequalities exist for su3 only")
    if a.mode == "nonvanishing" and rank not in (2, 3):
        raise UsageError("non-vanishing inequalities exist for su3 and su4 only")
    if a.max_label < 0:
        raise UsageError("--max-label must be non-negative")
    return QuerySpec(a.algebra.lower(), rank, a.mode, weights, a.K, a.json, a.oracle,
                     a.emit_polytope, a.max_label, a.sample, a.seed, a.order_check)


def render_json(record: dict) -> str:
    return json.dumps(record, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _labels(ws) -> list[list[int]]:
    return [list(w.labels) for w in ws]


def _crosscheck_triples(spec: QuerySpec):
    r, M = spec.rank, spec.max_label
    if spec.sample is None:
        for labels in itertools.product(range(M + 1), repeat=3 * r):
            yield tuple(Weight(labels[k * r:(k + 1) * r]) for k in range(3))
        return
    rng = random.Random(spec.seed)
    picked = set()
    while len(picked) < spec.sample:
        picked.add(tuple(Weight([rng.randint(0, M) for _ in range(r)]) for _ in range(3)))
    yield from sorted(picked, key=lambda t: [w.labels for w in t])


def crosscheck_row(lam: Weight, mu: Weight, nu: Weight, order_check: bool = False) -> dict:
    row = {
        "triple": _labels((lam, mu, nu)),
        "sum": multiplicity_sum(lam, mu, nu, order_check=order_check),
        "polytope": count_polytope(lam, mu, nu),
        "triangles": len(list_true_triangles(lam, mu, nu)),
        "oracle": oracle.triple_multiplicity(lam, mu, nu),
    }
    r = lam.rank
    if r == 2:
        row["closed_form"] = closed_form.su3_multiplicity(lam, mu, nu)
    elif r == 3:
        row["closed_form"] = closed_form.su4_multiplicity(lam, mu, nu)
    row["agree"] = len({v for k, v in row.items() if k not in ("triple",)}) == 1
    return row


def run(spec: QuerySpec, out=None) -> int:
    out = out or sys.stdout
    ws = spec.weights
    record: dict = {"algebra": spec.algebra, "mode": spec.mode, "weights": _labels(ws)}
    status = EXIT_OK
    text: list[str] = []

    if spec.mode == "multiplicity":
        t = multiplicity_sum(*ws, order_check=spec.order_check)
        record["result"] = t
        text.append(str(t))
        if spec.oracle:
            o = oracle.triple_multiplicity(*ws)
            record["oracle"] = o
            text.append(f"oracle: {o}")
            if o != t:
                status = EXIT_DISCREPANCY
        if spec.emit_polytope and integrality_ok(*ws):
            system = polytope_of(*ws)
            record["polytope"] = system.to_text().splitlines()
            text.append(system.to_text().rstrip())

    elif spec.mode == "decompose":
        dec = decompose(*ws, order_check=spec.order_check)
        record["result"] = [{"weight": list(k.labels), "multiplicity": v, "dimension": weyl_dimension(k)}
                            for k, v in dec.items()]
        for k, v in dec.items():
            text.append(f"{k}  x{v}  (dim {weyl_dimension(k)})")
        if spec.oracle:
            od = oracle.tensor_decompose(*ws)
            record["oracle"] = [{"weight": list(k.labels), "multiplicity": v}
                                for k, v in sorted(od.items(), key=lambda kv: kv[0].labels, reverse=True)]
            same = od == dec
            text.append("oracle: agrees" if same else "oracle: DISAGREES")
            if not same:
                status = EXIT_DISCREPANCY

    elif spec.mode == "triangles":
        tris = list_true_triangles(*ws)
        record["result"] = [t.rows() for t in tris]
        text.append(f"{len(tris)} true triangle(s)")
        for t in tris:
            text += ["", render(t)]

    elif spec.mode in ("nonvanishing", "threshold"):
        if spec.mode == "threshold":
            ok = closed_form.su3_threshold(*ws, spec.K)
            system, K = closed_form.SU3_THRESHOLD, spec.K
            record["K"] = K
        elif spec.rank == 2:
            ok = closed_form.su3_nonvanishing(*ws)
            system, K = closed_form.SU3_NONVANISHING, 0
        else:
            ok = closed_form.su4_nonvanishing(*ws)
            system, K = closed_form.SU4_NONVANISHING, 0
        record["result"] = ok
        text.append(str(ok).lower())
        if not ok:
            why = closed_form.explain(system, *ws, K=K)
            record["explain"] = why
            text += ["violated:"] + [f"  {w}" for w in why]

    elif spec.mode == "polytope":
        if not integrality_ok(*ws):
            raise UsageError("triple fails integrality; no lattice of triangles exists")
        system = polytope_of(*ws)
        record["variables"] = list(system.variables)
        record["result"] = system.to_text().splitlines()
        text.append(system.to_text().rstrip())

    elif spec.mode == "crosscheck":
        rows = [crosscheck_row(*t, order_check=spec.order_check)
                for t in _crosscheck_triples(spec) if integrality_ok(*t)]
        bad = [row for row in rows if not row["agree"]]
        record["max_label"] = spec.max_label
        record["checked"] = len(rows)
        record["discrepancies"] = len(bad)
        record["results"] = rows
        for row in bad:
            text.append(f"DISCREPANCY {row}")
        text.append(f"checked {len(rows)} triples, {len(bad)} discrepancies")
        if bad:
            status = EXIT_DISCREPANCY

    out.write(render_json(record) if spec.json else "\n".join(text) + "\n")
    return status


def main(argv: Sequence[str] | None = None) -> int:
    try:
        spec = parse_args(sys.argv[1:] if argv is None else argv)
        return run(spec)
    except UsageError as e:
        print(f"virtualbz: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
