import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from virtualbz.polytope import (
    Inequality,
    InequalitySystem,
    UnboundedError,
    count_integer_points,
    format_inequality,
    integer_points,
    parse_inequality,
    parse_system,
)

PLANAR = """
1*x >= 1
-1*x >= -4
1*y >= 6
1*x + 1*y >= 8
-1*x - 1*y >= -14
-1*x + 1*y >= 4
1*x - 1*y >= -8
"""


def brute(system, box):
    n = len(system.variables)
    return sum(1 for p in itertools.product(range(-box, box + 1), repeat=n) if system.contains(p))


def test_planar_example():
    assert count_integer_points(parse_system(PLANAR)) == 16


def test_planar_nested_sum_form():
    # outer sum over x with y in [max(6, x+4, 8-x), min(x+8, 14-x)]
    total = sum(max(0, min(x + 8, 14 - x) - max(6, x + 4, 8 - x) + 1) for x in range(1, 5))
    assert total == 16


def test_single_point():
    assert count_integer_points(InequalitySystem(["x"], [((1,), 0), ((-1,), 0)])) == 1


def test_empty_variable_list():
    assert count_integer_points(InequalitySystem([], [((), 0), ((), -3)])) == 1
    assert count_integer_points(InequalitySystem([], [((), 1)])) == 0


def test_infeasible_is_zero():
    assert count_integer_points(InequalitySystem(["x", "y"], [((1, 0), 3), ((-1, 0), -2), ((0, 1), 0), ((0, -1), 0)])) == 0


def test_no_integer_point_in_thin_slab():
    # 1 <= 2x <= 1 has a rational but no integer solution
    s = InequalitySystem(["x", "y"], [((2, 0), 1), ((-2, 0), -1), ((0, 1), 0), ((0, -1), -5)])
    assert count_integer_points(s) == 0


def test_unbounded_raises():
    with pytest.raises(UnboundedError):
        count_integer_points(InequalitySystem(["x", "y"], [((1, 0), 0), ((-1, 0), -3), ((0, 1), 0)]))


def test_rational_coefficients():
    s = InequalitySystem(["x"], [((Fraction(1, 3),), Fraction(1, 2)), ((-1,), -7)])
    # x >= 3/2, x <= 7
    assert count_integer_points(s) == 6


def test_points_are_sorted_and_inside():
    s = parse_system(PLANAR)
    pts = list(integer_points(s))
    assert pts == sorted(set(pts))
    assert all(s.contains(p) for p in pts)
    assert (4, 10) in pts


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        InequalitySystem(["x"], [((1, 2), 0)])


def test_text_round_trip():
    s = parse_system(PLANAR)
    assert parse_system(s.to_text(), s.variables) == s
    assert s.to_text().splitlines()[3] == "1*x + 1*y >= 8"


def test_format_edge_cases():
    assert format_inequality(Inequality((Fraction(0), Fraction(0)), Fraction(-2)), ["a", "b"]) == "0 >= -2"
    q = Inequality((Fraction(-1, 2), Fraction(3)), Fraction(5, 3))
    line = format_inequality(q, ["a", "b"])
    assert line == "-1/2*a + 3*b >= 5/3"
    assert parse_inequality(line, ["a", "b"]) == q


@pytest.mark.parametrize("bad", ["x <= 3", "1*z >= 0", "1*x junk >= 0"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_inequality(bad, ["x"])


rows = st.lists(
    st.tuples(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.integers(-6, 6)),
    max_size=6,
)


@settings(max_examples=150, deadline=None)
@given(rows)
def test_matches_brute_force_in_box(extra):
    box = 3
    base = []
    for k in range(3):
        e = [0, 0, 0]
        e[k] = 1
        base.append((tuple(e), -box))
        e = [0, 0, 0]
        e[k] = -1
        base.append((tuple(e), -box))
    s = InequalitySystem(["a", "b", "c"], base + [(tuple(c), r) for c, r in extra])
    assert count_integer_points(s) == brute(s, box)
