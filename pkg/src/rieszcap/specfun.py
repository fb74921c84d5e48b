"""Gamma function and complete elliptic integral of the first kind.

Both are evaluated in plain double precision without external dependencies.
The elliptic integral takes the *modulus* ``k`` (not the parameter ``m = k**2``)::

    K(k) = integral_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta)
"""
import math

from .errors import DomainError

# Godfrey's Lanczos coefficients, g = 607/128.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_COEF = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def _lanczos_sum(z):
    s = _LANCZOS_COEF[0]
    for i in range(len(_LANCZOS_COEF) - 1, 0, -1):
        s += _LANCZOS_COEF[i] / (z + i)
    return s


def gamma(x: float) -> float:
    """Gamma function for ``x > 0``.

    Raises
    ------
    DomainError
        If ``x`` is not a finite positive number.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"gamma requires a finite positive argument, got {x!r}")
    if x < 0.5:
        return gamma(x + 1.0) / x
    if x == math.floor(x) and x <= 30:
        return float(math.factorial(int(x) - 1))
    z = x - 1.0
    t = z + _LANCZOS_G + 0.5
    # split the power so that t**(z + 0.5) does not overflow before exp(-t) scales it
    half = t ** (0.5 * (z + 0.5))
    return _SQRT_2PI * half * math.exp(-t) * half * _lanczos_sum(z)


def log_gamma(x: float) -> float:
    """Natural log of ``gamma(x)`` for ``x > 0``; safe for large arguments."""
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"log_gamma requires a finite positive argument, got {x!r}")
    if x < 0.5:
        return log_gamma(x + 1.0) - math.log(x)
    z = x - 1.0
    t = z + _LANCZOS_G + 0.5
    return 0.5 * math.log(2.0 * math.pi) + (z + 0.5) * math.log(t) - t + math.log(_lanczos_sum(z))


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two nonnegative numbers."""
    if a < 0 or b < 0:
        raise DomainError("agm requires nonnegative arguments")
    if a == 0.0 or b == 0.0:
        return 0.0
    for _ in range(64):
        if abs(a - b) < 1e-15 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def complete_elliptic_k(k: float) -> float:
    """Complete elliptic integral of the first kind, modulus convention.

    ``complete_elliptic_k(0) == pi/2`` and the value diverges logarithmically
    as ``k -> 1``.
    """
    k = float(k)
    if not math.isfinite(k) or k < 0.0 or k >= 1.0:
        raise DomainError(f"complete_elliptic_k requires 0 <= k < 1, got {k!r}")
    kprime = math.sqrt((1.0 - k) * (1.0 + k))
    return math.pi / (2.0 * agm(1.0, kprime))
