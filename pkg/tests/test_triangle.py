import math

from hypothesis import given, settings, strategies as st
import numpy as np
import pytest

from rieszcap.errors import DomainError
from rieszcap.finite_capacity import finite_capacity
from rieszcap.triangle import (
    TriangleShape,
    heron_denominator,
    ratio_R,
    triangle_capacity,
    triangle_energy,
    triangle_points,
)

EXPONENT_PAIRS = [(-4.0, -3.0), (-3.0, -1.0), (-2.5, -1.5), (-3.0, -0.5), (-1.5, -0.7)]
H = 1e-6


def dR_da(a, b, p, q):
    return (ratio_R(a + H, b, p, q) - ratio_R(a - H, b, p, q)) / (2 * H)


def random_sides(rng):
    while True:
        a, b = rng.uniform(0.05, 1.0, size=2)
        if a + b > 1.0 + 1e-6:
            return a, b


# --- examples -------------------------------------------------------------------

def test_equilateral_p_minus_one():
    cap, eq = triangle_capacity(TriangleShape(1, 1, 1), -1.0)
    assert cap == pytest.approx(2 / 3, rel=1e-14)
    np.testing.assert_allclose(eq.weights, 1 / 3, rtol=1e-14)
    assert eq.interior


def test_short_sides_use_longest_edge():
    cap, eq = triangle_capacity(TriangleShape(0.3, 0.4, 1.0), -1.0)
    assert cap == pytest.approx(0.5, rel=1e-14)
    assert eq.weights == (0.5, 0.5, 0.0)
    assert not eq.interior


def test_equilateral_p_minus_two():
    assert triangle_capacity(TriangleShape(1, 1, 1), -2.0)[0] == pytest.approx(0.8164965809, rel=1e-10)


def test_ratio_regular_triangle():
    assert ratio_R(1.0, 1.0, -4.0, -3.0) == pytest.approx((2 / 3) ** (1 / 12), rel=1e-14)


def test_ratio_two_point_limit():
    assert ratio_R(1.0, 1e-9, -4.0, -3.0) == pytest.approx(0.5 ** (1 / 12), rel=1e-9)


def test_ratio_inside_bounds():
    p, q = -3.0, -1.0
    e = 1 / p - 1 / q
    assert 0.5 ** e <= ratio_R(0.75, 0.75, p, q) <= (2 / 3) ** e


# --- Heron ------------------------------------------------------------------------

@pytest.mark.parametrize("args, value", [((1, 1, 1), 3.0), ((1, 1, 4), 0.0), ((1, 1, 4.41), -1.8081)])
def test_heron_examples(args, value):
    expanded, factored = heron_denominator(*args)
    assert expanded == pytest.approx(value, abs=1e-12)
    assert factored == pytest.approx(value, abs=1e-12)


def test_heron_factorization_random(rng):
    for A, B, C in rng.uniform(0.01, 10.0, size=(1000, 3)):
        expanded, factored = heron_denominator(A, B, C)
        assert factored == pytest.approx(expanded, rel=1e-12, abs=1e-12 * max(A, B, C) ** 2)


def test_heron_rejects_nonpositive():
    with pytest.raises(DomainError):
        heron_denominator(0.0, 1.0, 1.0)


# --- validation ------------------------------------------------------------------------

@pytest.mark.parametrize("sides", [(1.2, 0.5, 1.0), (0.0, 0.5, 1.0), (0.5, math.inf, 1.0)])
def test_invalid_shapes(sides):
    with pytest.raises(DomainError):
        TriangleShape(*sides)


def test_from_sides_sorts():
    assert TriangleShape.from_sides(2.0, 0.5, 1.8) == TriangleShape(0.5, 1.8, 2.0)


def test_nonnegative_p_rejected():
    with pytest.raises(DomainError):
        triangle_capacity(TriangleShape(1, 1, 1), 0.0)


def test_points_need_triangle_inequality():
    with pytest.raises(DomainError):
        triangle_points(TriangleShape(0.3, 0.4, 1.0))
    pts = triangle_points(TriangleShape(0.6, 0.8, 1.0))
    d = lambda i, j: np.linalg.norm(pts[i] - pts[j])
    assert (d(1, 2), d(0, 2), d(0, 1)) == pytest.approx((0.6, 0.8, 1.0), rel=1e-14)


@pytest.mark.parametrize("args", [(0.5, 0.4, -3, -1), (1.0, 1.0, -2, -2), (1.0, 1.0, -2, 0.5), (1.5, 1.0, -3, -1)])
def test_ratio_domain(args):
    with pytest.raises(DomainError):
        ratio_R(*args)


# --- agreement with the general solver ----------------------------------------------------

def test_agrees_with_general_solver(rng):
    for _ in range(1000):
        a, b = random_sides(rng)
        c = float(rng.uniform(0.2, 5.0))
        p = float(-rng.uniform(0.1, 8.0))
        shape = TriangleShape(min(a, b) * c, max(a, b) * c, c)
        cap, eq = triangle_capacity(shape, p)
        res = finite_capacity(triangle_points(shape), p)
        assert res.capacity == pytest.approx(cap, rel=1e-10)
        assert res.unique
        np.testing.assert_allclose(res.measures[0].weights, eq.weights, atol=1e-9)


@settings(max_examples=200, deadline=None)
@given(st.floats(0.05, 1.0), st.floats(0.05, 1.0), st.floats(-8.0, -0.05))
def test_equilibrium_is_probability(a, b, p):
    _, eq = triangle_capacity(TriangleShape(a, b, 1.0), p)
    assert min(eq.weights) >= 0.0
    assert sum(eq.weights) == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(st.floats(0.05, 1.0), st.floats(0.05, 1.0), st.floats(-8.0, -0.05))
def test_lagrange_exceeds_half_longest(a, b, p):
    t = -p
    energy, eq = triangle_energy(TriangleShape(a, b, 1.0), p)
    if a ** t + b ** t > 1.0 + 1e-9:
        assert eq.lagrange > 0.5
    assert energy == eq.lagrange


def test_branch_continuity():
    for t in (0.5, 1.0, 2.0, 3.5):
        a = 0.7
        b = (1.0 - a ** t) ** (1.0 / t)
        below = triangle_energy(TriangleShape(a, b * (1 - 1e-9), 1.0), -t)[0]
        above = triangle_energy(TriangleShape(a, b * (1 + 1e-9), 1.0), -t)[0]
        assert abs(above - below) < 1e-8
        assert below == 0.5


# --- ratio structure ----------------------------------------------------------------------------

@pytest.mark.parametrize("p, q", EXPONENT_PAIRS)
def test_ratio_bounds(rng, p, q):
    e = 1 / p - 1 / q
    lo, hi = 0.5 ** e, (2 / 3) ** e
    for _ in range(500):
        a, b = random_sides(rng)
        R = ratio_R(a, b, p, q)
        assert lo * (1 - 1e-12) <= R <= hi * (1 + 1e-12)
        if abs(a - 1) > 1e-3 or abs(b - 1) > 1e-3:
            assert R < hi * (1 - 1e-12)


@pytest.mark.parametrize("p, q", EXPONENT_PAIRS)
def test_symmetry(rng, p, q):
    for _ in range(200):
        a, b = random_sides(rng)
        assert ratio_R(a, b, p, q) == pytest.approx(ratio_R(b, a, p, q), rel=1e-14)


@pytest.mark.parametrize("p, q", [(-4.0, -3.0), (-3.0, -1.0), (-2.5, -1.5)])
def test_constant_where_both_sides_short(p, q):
    r, s = -p, -q
    expected = 2.0 ** (1 / r - 1 / s)
    grid = np.linspace(0.0, 1.0, 60)[1:]
    hits = 0
    for a in grid:
        for b in grid:
            if a + b >= 1 and a ** s + b ** s <= 1:
                assert ratio_R(a, b, p, q) == pytest.approx(expected, rel=1e-13)
                hits += 1
    assert hits > 0


@pytest.mark.parametrize("p, q", EXPONENT_PAIRS)
def test_increasing_between_curves(rng, p, q):
    r, s = -p, -q
    checked = 0
    while checked < 200:
        a, b = rng.uniform(0.05, 0.999, size=2)
        if a + b >= 1 and a ** s + b ** s > 1 + 1e-4 and a ** r + b ** r < 1 - 1e-4:
            assert dR_da(a, b, p, q) > 0
            checked += 1


@pytest.mark.parametrize("p, q", EXPONENT_PAIRS)
def test_along_critical_curve(p, q):
    r = -p
    a = np.linspace(0.0, 1.0, 401)[1:-1]
    b = (1.0 - a ** r) ** (1.0 / r)
    keep = a + b >= 1
    R = np.array([ratio_R(x, y, p, q) for x, y in zip(a[keep], b[keep])])
    mid = np.argmin(np.abs(a[keep] - b[keep]))
    assert R.argmax() == mid
    assert R[mid] > max(R[0], R[-1])


@pytest.mark.parametrize("p, q", EXPONENT_PAIRS)
def test_increasing_along_edges_and_diagonal(p, q):
    r = -p
    b = np.linspace(0.0, 1.0, 201)[1:]
    for R in ([ratio_R(1.0, x, p, q) for x in b], [ratio_R(x, 1.0, p, q) for x in b]):
        assert np.all(np.diff(R) > 0)
    lo = 0.5 ** (1.0 / r)
    d = np.linspace(lo, 1.0, 202)[1:-1]
    diag = [ratio_R(x, x, p, q) for x in d]
    assert np.all(np.diff(diag) > 0)


@pytest.mark.parametrize("p, q", EXPONENT_PAIRS)
def test_increasing_in_shorter_side(rng, p, q):
    r = -p
    checked = 0
    while checked < 200:
        a, b = np.sort(rng.uniform(0.05, 0.999, size=2))
        if b - a > 1e-4 and a ** r + b ** r > 1 + 1e-4:
            assert dR_da(a, b, p, q) > 0
            checked += 1
