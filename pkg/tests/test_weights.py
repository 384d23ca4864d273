import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from virtualbz.weights import (
    IntegralityError,
    Weight,
    conjugate,
    derived_quantities,
    dual_labels,
    integrality_ok,
    weyl_dimension,
)


def cartan(r):
    return [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(r)] for i in range(r)]


def solve_cartan(labels):
    """Dual labels by solving C x = λ with exact Gaussian elimination."""
    r = len(labels)
    A = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(cartan(r), labels)]
    for c in range(r):
        p = next(k for k in range(c, r) if A[k][c])
        A[c], A[p] = A[p], A[c]
        A[c] = [x / A[c][c] for x in A[c]]
        for k in range(r):
            if k != c:
                A[k] = [x - A[k][c] * y for x, y in zip(A[k], A[c])]
    return [row[-1] for row in A]


def gt_count(labels):
    """Number of Gelfand-Tsetlin patterns with top row given by the partition of λ."""
    top = [sum(labels[k:]) for k in range(len(labels))] + [0]

    def below(row):
        ranges = [range(row[i + 1], row[i] + 1) for i in range(len(row) - 1)]
        return [list(x) for x in itertools.product(*ranges)]

    def count(row):
        if len(row) == 1:
            return 1
        return sum(count(nxt) for nxt in below(row))

    return count(top)


weights = st.integers(1, 5).flatmap(lambda r: st.lists(st.integers(0, 4), min_size=r, max_size=r))


def test_weight_rejects_negative_labels():
    with pytest.raises(ValueError):
        Weight((1, -1))


@pytest.mark.parametrize("labels, scaled", [((0, 0), (0, 0)), ((1, 1), (3, 3)), ((1, 0), (2, 1))])
def test_dual_labels_su3(labels, scaled):
    assert dual_labels(Weight(labels)).scaled == scaled


@given(weights)
def test_dual_labels_match_cartan_inverse(labels):
    N = len(labels) + 1
    assert [Fraction(x, N) for x in dual_labels(Weight(labels)).scaled] == solve_cartan(labels)


@given(st.integers(1, 5).flatmap(lambda r: st.tuples(
    st.lists(st.integers(0, 4), min_size=r, max_size=r),
    st.lists(st.integers(0, 4), min_size=r, max_size=r),
    st.integers(0, 3), st.integers(0, 3))))
def test_dual_labels_linear(args):
    x, y, a, b = args
    combo = Weight([a * p + b * q for p, q in zip(x, y)])
    dx, dy = dual_labels(Weight(x)).scaled, dual_labels(Weight(y)).scaled
    assert dual_labels(combo).scaled == tuple(a * p + b * q for p, q in zip(dx, dy))


@pytest.mark.parametrize("labels, conj", [((1, 0), (0, 1)), ((1, 2, 3), (3, 2, 1)), ((5,), (5,))])
def test_conjugate(labels, conj):
    assert conjugate(Weight(labels)).labels == conj


@given(weights)
def test_conjugate_involution_and_dimension(labels):
    w = Weight(labels)
    assert conjugate(conjugate(w)) == w
    assert weyl_dimension(w) == weyl_dimension(conjugate(w))


def test_integrality_examples(W):
    assert integrality_ok(W(1, 1), W(1, 1), W(1, 1))
    assert not integrality_ok(W(1, 0), W(0, 0), W(0, 0))
    for r in range(1, 7):
        z = Weight.zero(r)
        assert integrality_ok(z, z, z)


@given(st.integers(1, 4).flatmap(lambda r: st.lists(
    st.lists(st.integers(0, 3), min_size=r, max_size=r), min_size=3, max_size=3)))
def test_integrality_permutation_invariant(ls):
    ws = [Weight(x) for x in ls]
    expect = integrality_ok(*ws)
    assert all(integrality_ok(*p) == expect for p in itertools.permutations(ws))


def test_integrality_is_triality(W):
    # su(N) congruence class: sum_k k*λ_k mod N
    for r in (1, 2, 3, 4):
        N = r + 1
        for labels in itertools.product(range(2), repeat=3 * r):
            ws = [Weight(labels[k * r:(k + 1) * r]) for k in range(3)]
            cls = sum(sum((i + 1) * x for i, x in enumerate(w.labels)) for w in ws)
            assert integrality_ok(*ws) == (cls % N == 0)


def test_derived_quantities_adjoint_cube(W):
    q = derived_quantities(W(1, 1), W(1, 1), W(1, 1))
    assert q.n == (1, 1)
    assert q.Ncap == (0, 1)
    assert q.Nprime == (1, 0)


def test_derived_quantities_zero():
    for r in range(1, 7):
        z = Weight.zero(r)
        q = derived_quantities(z, z, z)
        assert q.n == q.Ncap == q.Nprime == (0,) * r


@given(st.integers(1, 5).flatmap(lambda r: st.tuples(
    st.lists(st.integers(0, 4), min_size=r, max_size=r),
    st.lists(st.integers(0, 4), min_size=r, max_size=r))))
def test_highest_coupling_has_zero_n(args):
    lam, mu = Weight(args[0]), Weight(args[1])
    nu = Weight([a + b for a, b in zip(conjugate(lam).labels, conjugate(mu).labels)])
    q = derived_quantities(lam, mu, nu)
    assert q.n == (0,) * lam.rank
    assert all(a + b == c for a, b, c in zip(q.Ncap, q.Nprime, nu.labels))


def test_derived_quantities_rejects_congruence_mismatch(W):
    with pytest.raises(IntegralityError):
        derived_quantities(W(1, 0), W(0, 0), W(0, 0))


@pytest.mark.parametrize("labels, dim", [((0, 0), 1), ((1, 1), 8), ((1, 0, 0), 4), ((1, 0), 3), ((2, 0), 6)])
def test_weyl_dimension_examples(labels, dim):
    assert weyl_dimension(Weight(labels)) == dim


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_weyl_dimension_counts_gt_patterns(rank):
    for labels in itertools.product(range(3), repeat=rank):
        assert weyl_dimension(Weight(labels)) == gt_count(labels)
