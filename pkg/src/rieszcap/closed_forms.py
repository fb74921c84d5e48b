"""Closed-form Riesz capacities of regular point sets, intervals, balls,
ellipses and ellipsoids.

Only parameter pairs with an explicit formula are evaluated. Anything else
raises :class:`UnsupportedParameterError` instead of returning an
approximation.
"""
from dataclasses import dataclass
import math

from .errors import DomainError, UnsupportedParameterError
from .specfun import complete_elliptic_k, gamma

__all__ = [
    "BallSpec",
    "EllipseSpec",
    "EllipsoidSpec",
    "regular_kpoint_capacity",
    "interval_capacity",
    "ball_capacity",
    "unit_ball_capacity",
    "ball_supported",
    "disk_capacity_negative",
    "ellipse_log_capacity",
    "ellipse_newtonian_capacity",
    "ellipsoid_cap1",
    "ellipsoid_cap2",
]


@dataclass(frozen=True)
class BallSpec:
    n: int
    radius: float = 1.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"ball dimension must be an integer >= 1, got {self.n!r}")
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise DomainError(f"ball radius must be positive, got {self.radius!r}")


@dataclass(frozen=True)
class EllipseSpec:
    """Filled ellipse with semi-axes 1 and ``b``."""

    b: float

    def __post_init__(self):
        if not (0.0 <= self.b <= 1.0):
            raise DomainError(f"ellipse semi-minor axis must lie in [0, 1], got {self.b!r}")


@dataclass(frozen=True)
class EllipsoidSpec:
    """Solid 3-D ellipsoid with semi-axes 1, 1, ``b``."""

    b: float

    def __post_init__(self):
        if not (0.0 < self.b <= 1.0):
            raise DomainError(f"ellipsoid third semi-axis must lie in (0, 1], got {self.b!r}")


def _require_negative(p):
    if not p < 0:
        raise DomainError(f"finite sets have zero capacity for p >= 0 (got p={p!r})")


def regular_kpoint_capacity(k: int, d: float, p: float) -> float:
    """Capacity of the vertex set of a regular simplex with ``k`` vertices and
    diameter ``d``: ``((k-1)/k)**(-1/p) * d``."""
    _require_negative(p)
    if int(k) != k or k < 2:
        raise DomainError(f"k must be an integer >= 2, got {k!r}")
    if not d > 0:
        raise DomainError(f"diameter must be positive, got {d!r}")
    return ((k - 1) / k) ** (-1.0 / p) * d


def interval_capacity(length: float, p: float) -> float:
    """``2**(1/p) * length`` for ``p <= -1``."""
    if not p <= -1:
        raise UnsupportedParameterError(f"interval capacity is only available for p <= -1 (got p={p!r})")
    if length < 0:
        raise DomainError(f"interval length must be nonnegative, got {length!r}")
    return 2.0 ** (1.0 / p) * length


def disk_capacity_negative(p: float) -> float:
    """Unit disk in the plane, ``-2 < p < 0``."""
    if not -2.0 < p < 0.0:
        raise UnsupportedParameterError(f"disk formula needs -2 < p < 0 (got p={p!r})")
    return 2.0 * (math.sqrt(math.pi) * gamma(1.0 - p / 2.0) / gamma((1.0 - p) / 2.0)) ** (1.0 / p)


def _unit_ball(n, p):
    if p <= -2:
        return 2.0 ** (1.0 + 1.0 / p)
    if n == 1 and p <= -1:
        return 2.0 ** (1.0 + 1.0 / p)
    if p == 0 and n in (1, 2, 3):
        return (0.5, 1.0, 2.0 * math.exp(-0.5))[n - 1]
    if n >= 3 and p == n - 2:
        return 1.0
    if n >= 2 and p == n - 1:
        return (gamma(n / 2.0) / (gamma(0.5) * gamma((n + 1) / 2.0))) ** (1.0 / (n - 1))
    if n == 2 and -2 < p < 0:
        return disk_capacity_negative(p)
    return None


def ball_supported(n: int, p: float) -> bool:
    return _unit_ball(int(n), float(p)) is not None


def unit_ball_capacity(n: int, p: float) -> float:
    value = _unit_ball(int(n), float(p))
    if value is None:
        raise UnsupportedParameterError(f"no closed form for the unit ball with n={n}, p={p}")
    return value


def ball_capacity(spec: BallSpec, p: float) -> float:
    """Riesz p-capacity of the closed ball ``spec``.

    Supported pairs: ``p <= -2`` (any n), ``p <= -1`` for n = 1, ``p = 0`` for
    n <= 3, ``p = n - 2`` for n >= 3, ``p = n - 1`` for n >= 2, and
    ``-2 < p < 0`` for n = 2. Capacity scales linearly with the radius.
    """
    return unit_ball_capacity(spec.n, p) * spec.radius


def ellipse_log_capacity(spec: EllipseSpec) -> float:
    return (1.0 + spec.b) / 2.0


def ellipse_newtonian_capacity(spec: EllipseSpec) -> float:
    """1-capacity ``1/K(sqrt(1 - b^2))``; zero for the degenerate segment b = 0."""
    if spec.b == 0.0:
        return 0.0
    k = math.sqrt((1.0 - spec.b) * (1.0 + spec.b))
    return 1.0 / complete_elliptic_k(k)


def ellipsoid_cap1(spec: EllipsoidSpec) -> float:
    if spec.b == 1.0:
        return 1.0
    e = math.sqrt((1.0 - spec.b) * (1.0 + spec.b))
    return e / math.asin(e)


def ellipsoid_cap2(spec: EllipsoidSpec) -> float:
    if spec.b == 1.0:
        return 1.0 / math.sqrt(2.0)
    b = spec.b
    e = math.sqrt((1.0 - b) * (1.0 + b))
    x = e / b  # sqrt(b^-2 - 1)
    # log(x + sqrt(x^2 + 1)) written through log1p for small x
    asinh = math.log1p(x + x * x / (1.0 + math.sqrt(x * x + 1.0)))
    return math.sqrt(e / (2.0 * asinh))
