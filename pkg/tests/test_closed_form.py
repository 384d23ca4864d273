import pytest

from conftest import all_triples, random_triples
from virtualbz.closed_form import (
    SU3_NONVANISHING,
    SU3_THRESHOLD,
    SU4_NONVANISHING,
    Inequality,
    LinearForm,
    explain,
    label_env,
    su3_multiplicity,
    su3_nonvanishing,
    su3_threshold,
    su4_multiplicity,
    su4_nonvanishing,
    violated,
)
from virtualbz.enumerator import multiplicity_sum
from virtualbz.oracle import triple_multiplicity
from virtualbz.weights import Weight


def W(*labels):
    return Weight(labels)


def test_system_sizes():
    assert len(SU3_NONVANISHING) == 18
    assert len(SU3_THRESHOLD) == 18
    assert all("K" in str(q) for q in SU3_THRESHOLD)


def test_linear_form_scaled_value():
    env = label_env(W(1, 0), W(0, 1), W(0, 0))
    # la^1 = 2/3, mu^2 = 2/3
    assert LinearForm.parse("la^1").scaled_value(env, 3) == 2
    assert LinearForm.parse("la^1 + mu^2 - 2*la_1").scaled_value(env, 3) == -2
    q = Inequality.parse("la^1 <= mu^2")
    assert q.holds(env, 3) and q.slack(env, 3) == 0


@pytest.mark.parametrize("t,expected", [
    (((1, 1), (1, 1), (1, 1)), 2),
    (((0, 0), (0, 0), (0, 0)), 1),
    (((1, 0), (0, 1), (0, 0)), 1),
    (((2, 2), (2, 2), (2, 2)), 3),
    (((1, 0), (1, 0), (0, 0)), 0),
])
def test_su3_values(t, expected):
    assert su3_multiplicity(*map(Weight, t)) == expected


@pytest.mark.parametrize("t,expected", [
    (((0, 0, 0),) * 3, 1),
    (((1, 0, 0), (1, 0, 0), (0, 1, 0)), 1),
    (((1, 0, 0),) * 3, 0),
])
def test_su4_values(t, expected):
    assert su4_multiplicity(*map(Weight, t)) == expected


def test_su4_adjoint_cube_agrees():
    a = W(1, 0, 1)
    assert su4_multiplicity(a, a, a) == multiplicity_sum(a, a, a) == triple_multiplicity(a, a, a) == 2


def test_wrong_rank():
    with pytest.raises(ValueError):
        su3_multiplicity(W(1, 0, 0), W(1, 0, 0), W(0, 1, 0))
    with pytest.raises(ValueError):
        su4_nonvanishing(W(1, 1), W(1, 1), W(1, 1))
    with pytest.raises(ValueError):
        su3_threshold(W(1, 1), W(1, 1), W(1, 1), -1)


def test_nonvanishing_examples():
    assert su3_nonvanishing(W(1, 1), W(1, 1), W(1, 1))
    assert not su3_nonvanishing(W(1, 0), W(1, 0), W(0, 0))
    assert not su3_nonvanishing(W(0, 0), W(0, 0), W(1, 1))
    assert su4_nonvanishing(W(0, 0, 0), W(0, 0, 0), W(0, 0, 0))
    assert not su4_nonvanishing(W(1, 0, 0), W(1, 0, 0), W(1, 0, 0))
    assert su4_nonvanishing(W(1, 0, 0), W(1, 0, 0), W(0, 1, 0))


def test_threshold_examples():
    a = W(1, 1)
    assert su3_threshold(a, a, a, 1)
    assert not su3_threshold(a, a, a, 2)
    b = W(2, 2)
    flips = [K for K in range(6) if su3_threshold(b, b, b, K) != su3_threshold(b, b, b, K + 1)]
    assert flips == [triple_multiplicity(b, b, b) - 1] == [2]


def test_explain_names_violated_line():
    lines = explain(SU3_NONVANISHING, W(0, 0), W(0, 0), W(1, 1))
    assert lines and all("fails" in ln for ln in lines)
    assert explain(SU3_NONVANISHING, W(1, 1), W(1, 1), W(1, 1)) == []
    assert "congruence" in explain(SU3_NONVANISHING, W(1, 0), W(1, 0), W(0, 0))[0]


def test_su3_exhaustive_small():
    for t in all_triples(2, 3, integral_only=False):
        T = multiplicity_sum(*t)
        assert su3_multiplicity(*t) == T
        assert su3_nonvanishing(*t) == (T > 0)
        for K in range(4):
            assert su3_threshold(*t, K) == (T > K)


def test_threshold_zero_is_nonvanishing():
    for t in all_triples(2, 3, integral_only=False):
        assert su3_threshold(*t, 0) == su3_nonvanishing(*t)


def test_su4_sample():
    for t in random_triples(3, 3, 150, seed=41, integral_only=False):
        T = multiplicity_sum(*t)
        assert su4_multiplicity(*t) == T
        assert su4_nonvanishing(*t) == (T > 0), (t, violated(SU4_NONVANISHING, *t))
