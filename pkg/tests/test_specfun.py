import math

from hypothesis import given, settings, strategies as st
import numpy as np
import pytest
from scipy.integrate import quad

from rieszcap.errors import DomainError
from rieszcap.specfun import agm, complete_elliptic_k, gamma, log_gamma


def test_gamma_examples():
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert gamma(5) == 24
    # mpmath, 30 digits: 0.919062526848883233846823727522
    assert gamma(1.75) == pytest.approx(0.919062526848883233846823727522, rel=1e-13)


@settings(max_examples=300, deadline=None)
@given(st.floats(min_value=0.1, max_value=50.0))
def test_gamma_recurrence(x):
    assert gamma(x + 1.0) == pytest.approx(x * gamma(x), rel=1e-12)


def test_gamma_half_squared():
    assert gamma(0.5) ** 2 == pytest.approx(math.pi, rel=1e-12)


def test_gamma_matches_math_module():
    xs = np.linspace(0.05, 60.0, 997)
    err = max(abs(gamma(x) / math.gamma(x) - 1.0) for x in xs)
    assert err < 1e-13


def test_log_gamma_large_argument():
    assert log_gamma(500.5) == pytest.approx(math.lgamma(500.5), rel=1e-14)


@pytest.mark.parametrize("bad", [0.0, -1.0, float("nan"), float("inf")])
def test_gamma_domain(bad):
    with pytest.raises(DomainError):
        gamma(bad)


def _k_quad(k):
    return quad(lambda t: 1.0 / math.sqrt(1.0 - (k * math.sin(t)) ** 2), 0.0, math.pi / 2, epsabs=1e-13, epsrel=1e-13, limit=200)[0]


def test_elliptic_examples():
    assert complete_elliptic_k(0.0) == math.pi / 2
    assert complete_elliptic_k(0.999999) > 7.0
    # mpmath quadrature of the defining integral: 1.99530277766472953827
    assert complete_elliptic_k(0.8) == pytest.approx(1.99530277766472953827, rel=1e-13)


def test_elliptic_agrees_with_quadrature():
    for k in list(np.arange(0.0, 0.95, 0.1)) + [0.99]:
        assert complete_elliptic_k(k) == pytest.approx(_k_quad(k), rel=1e-10)


def test_elliptic_strictly_increasing():
    ks = np.linspace(0.0, 0.9999, 2001)
    vals = [complete_elliptic_k(k) for k in ks]
    assert all(b > a for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("bad", [1.0, 1.5, -0.1])
def test_elliptic_domain(bad):
    with pytest.raises(DomainError):
        complete_elliptic_k(bad)


def test_agm_known_value():
    # Gauss's constant: 1 / agm(1, sqrt 2)
    assert 1.0 / agm(1.0, math.sqrt(2.0)) == pytest.approx(0.8346268416740731862814297, rel=1e-15)
