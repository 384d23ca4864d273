import itertools
import random
import sys

import pytest

from virtualbz.weights import Weight, integrality_ok


def all_triples(rank, max_label, integral_only=True):
    for labels in itertools.product(range(max_label + 1), repeat=3 * rank):
        t = tuple(Weight(labels[k * rank:(k + 1) * rank]) for k in range(3))
        if not integral_only or integrality_ok(*t):
            yield t


def random_triples(rank, max_label, count, seed, integral_only=True):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        t = tuple(Weight([rng.randint(0, max_label) for _ in range(rank)]) for _ in range(3))
        if not integral_only or integrality_ok(*t):
            out.append(t)
    return out


@pytest.fixture
def W():
    return lambda *labels: Weight(labels)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
