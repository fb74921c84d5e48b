"""Closed-form capacity of three-point sets and the capacity ratio R(a, b).

Side naming follows the usual convention: ``c`` is the longest side, and the
equilibrium weights ``(x, y, z)`` sit at the two endpoints of ``c`` (``x``,
``y``) and at the opposite vertex (``z``); ``y`` and ``z`` are ``a`` apart,
``z`` and ``x`` are ``b`` apart.
"""
from dataclasses import dataclass
import math

import numpy as np

from .errors import DomainError

__all__ = [
    "TriangleShape",
    "TriangleEquilibrium",
    "triangle_capacity",
    "triangle_energy",
    "triangle_points",
    "ratio_R",
    "heron_denominator",
]

_DEGENERATE_TOL = 1e-12


@dataclass(frozen=True)
class TriangleShape:
    a: float
    b: float
    c: float

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if not all(math.isfinite(v) for v in (a, b, c)):
            raise DomainError("side lengths must be finite")
        if not (0 < a <= c and 0 < b <= c):
            raise DomainError(f"need 0 < a, b <= c, got a={a}, b={b}, c={c}")

    @property
    def euclidean(self) -> bool:
        """Whether the three distances are realized by points in the plane.

        The capacity formula only uses the distances, so non-Euclidean triples
        (``a + b < c``) are still evaluated; they cannot be placed in the plane.
        """
        return self.a + self.b >= self.c * (1.0 - _DEGENERATE_TOL)

    @classmethod
    def from_sides(cls, s1, s2, s3) -> "TriangleShape":
        """Sort three side lengths so that the longest becomes ``c``."""
        a, b, c = sorted((float(s1), float(s2), float(s3)))
        return cls(a, b, c)


@dataclass(frozen=True)
class TriangleEquilibrium:
    weights: tuple  # (x, y, z)
    lagrange: float  # lambda / 2, equal to the energy

    @property
    def interior(self) -> bool:
        return self.weights[2] > 0.0


def heron_denominator(A, B, C):
    """``2(AB + BC + CA) - (A^2 + B^2 + C^2)`` and its four-factor form.

    The value is 16 times the squared area of a triangle with sides
    ``sqrt(A), sqrt(B), sqrt(C)``. Returns ``(expanded, factored)``.
    """
    if min(A, B, C) <= 0:
        raise DomainError("heron_denominator needs positive arguments")
    expanded = 2.0 * (A * B + B * C + C * A) - (A * A + B * B + C * C)
    ra, rb, rc = math.sqrt(A), math.sqrt(B), math.sqrt(C)
    factored = (ra + rb - rc) * (rb + rc - ra) * (rc + ra - rb) * (ra + rb + rc)
    return expanded, factored


def triangle_energy(shape: TriangleShape, p: float):
    """Energy and equilibrium weights of the vertex set, ``p < 0``."""
    if not p < 0:
        raise DomainError(f"three-point capacity needs p < 0, got p={p!r}")
    t = -float(p)
    A, B, C = shape.a ** t, shape.b ** t, shape.c ** t
    if A + B <= C:
        return C / 2.0, TriangleEquilibrium((0.5, 0.5, 0.0), C / 2.0)
    # 4AB - (A + B - C)^2 equals the Heron denominator but cancels less
    den = 4.0 * A * B - (A + B - C) ** 2
    half_lambda = 2.0 * A * B * C / den
    # the raw weights are proportional to these; normalizing by their own sum
    # keeps the total at one when the Heron terms cancel
    raw = (A * (B + C - A), B * (C + A - B), C * (A + B - C))
    total = math.fsum(raw)
    w = tuple(v / total for v in raw)
    return half_lambda, TriangleEquilibrium(w, half_lambda)


def triangle_capacity(shape: TriangleShape, p: float):
    """Riesz p-capacity of a three-point set with the given side lengths.

    Returns ``(capacity, TriangleEquilibrium)``. When ``a^t + b^t <= c^t``
    (``t = -p``) the measure sits on the endpoints of the longest side and the
    capacity is ``2^(-1/t) c``; otherwise all three points carry mass.
    """
    energy, eq = triangle_energy(shape, p)
    return energy ** (-1.0 / p), eq


def triangle_points(shape: TriangleShape) -> np.ndarray:
    """Planar coordinates ordered as the weights: endpoints of ``c`` on the
    x-axis, then the apex."""
    if not shape.euclidean:
        raise DomainError(f"distances {shape.a}, {shape.b}, {shape.c} violate the triangle inequality")
    a, b, c = shape.a, shape.b, shape.c
    u = (b * b + c * c - a * a) / (2.0 * c)
    v = math.sqrt(max(b * b - u * u, 0.0))
    return np.array([[0.0, 0.0], [c, 0.0], [u, v]])


def ratio_R(a: float, b: float, p: float, q: float) -> float:
    """``cap_q(T) / cap_p(T)`` for the triangle with sides ``a, b, 1``."""
    if not (p < 0 and q < 0) or p == q:
        raise DomainError("ratio_R needs distinct negative exponents")
    if not (0 < a <= 1 and 0 < b <= 1):
        raise DomainError("ratio_R needs 0 < a, b <= 1")
    shape = TriangleShape(a, b, 1.0)
    if not shape.euclidean:
        raise DomainError(f"ratio_R needs a + b >= 1, got a + b = {a + b}")
    return triangle_capacity(shape, q)[0] / triangle_capacity(shape, p)[0]
