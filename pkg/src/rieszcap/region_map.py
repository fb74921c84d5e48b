"""Candidate maximizers of cap_q / cap_p over the (p, q) plane.

Three canonical sets are compared: the ball, the regular (n+1)-point set and
the two-point set. The ball ratio is only reported where a closed form is
known at both exponents.
"""
import csv
from dataclasses import dataclass
import io
import math
from typing import Optional

import numpy as np

from .closed_forms import ball_supported, unit_ball_capacity
from .errors import DomainError
from .serialize import format_float
from .specfun import gamma

__all__ = [
    "RegionSample",
    "q_star",
    "threshold_p",
    "sample_region",
    "emit_grid",
    "CSV_HEADER",
]

CSV_HEADER = ["p", "q", "n", "ratio_ball", "ratio_simplex", "ratio_twopoint", "winner", "theorem_tag"]
_TIE = 1e-12
# preferred label among tied maxima: smallest set first
_PREFERENCE = ("two-point", "simplex", "ball")


@dataclass(frozen=True)
class RegionSample:
    p: float
    q: float
    n: int
    ratio_ball: Optional[float]
    ratio_simplex: float
    ratio_twopoint: float
    winner: str
    theorem_tag: str

    def row(self):
        return [
            format_float(self.p),
            format_float(self.q),
            str(self.n),
            "" if self.ratio_ball is None else format_float(self.ratio_ball),
            format_float(self.ratio_simplex),
            format_float(self.ratio_twopoint),
            self.winner,
            self.theorem_tag,
        ]


def _root_function(q):
    return 2.0 * math.sqrt(math.pi) * gamma(1.0 - q / 2.0) - 3.0 * gamma((1.0 - q) / 2.0)


_Q_STAR = None


def q_star() -> float:
    """Root in (-1, 0) of ``2 sqrt(pi) G(1 - q/2) - 3 G((1 - q)/2)``, by bisection."""
    global _Q_STAR
    if _Q_STAR is None:
        lo, hi = -1.0, 0.0  # f(lo) = pi - 3 > 0, f(hi) = -sqrt(pi) < 0
        while hi - lo > 1e-14:
            mid = 0.5 * (lo + hi)
            if _root_function(mid) > 0:
                lo = mid
            else:
                hi = mid
        _Q_STAR = 0.5 * (lo + hi)
    return _Q_STAR


def threshold_p(q: float) -> float:
    """Largest p for which the regular triangle beats the disk, ``-2 < q < q*``."""
    qs = q_star()
    if not -2.0 < q < qs:
        raise DomainError(f"threshold_p needs -2 < q < q* = {qs:.6f}, got q={q!r}")
    ratio = 2.0 * math.sqrt(math.pi) * gamma(1.0 - q / 2.0) / (3.0 * gamma((1.0 - q) / 2.0))
    return q * math.log(4.0 / 3.0) / math.log(ratio)


def _theorem_tag(p, q, n):
    if p == q:
        return "diagonal"
    if n == 1 and p <= -1 and q <= -1:
        return "onedim_lowerleft"
    if n == 1 and -1 < p < 0 and q <= -1:
        return "onedim_lowermiddle"
    if n == 2 and p < q <= -2:
        return "2deqtriangle(a)"
    if n == 2 and q < p < 0 and q <= -2:
        return "2deqtriangle(b)"
    if n == 2 and -2 < q < q_star() and p < threshold_p(q):
        return "symmetrybreaking2dim"
    return "heuristic-comparison"


def sample_region(p: float, q: float, n: int) -> RegionSample:
    """Candidate ratios and winner at one point of the parameter plane."""
    if not (p < 0 and q < 0):
        raise DomainError(f"sample_region needs p, q < 0 (got p={p!r}, q={q!r})")
    if int(n) != n or n < 1:
        raise DomainError(f"dimension must be a positive integer, got {n!r}")
    n = int(n)
    expo = 1.0 / p - 1.0 / q
    simplex = (n / (n + 1.0)) ** expo
    twopoint = 0.5 ** expo
    ball = None
    if ball_supported(n, p) and ball_supported(n, q):
        ball = unit_ball_capacity(n, q) / unit_ball_capacity(n, p)
    tag = _theorem_tag(p, q, n)
    if tag in ("diagonal", "onedim_lowerleft"):
        winner = "constant"
    else:
        present = {"two-point": twopoint, "simplex": simplex}
        if ball is not None:
            present["ball"] = ball
        top = max(present.values())
        winner = next(lbl for lbl in _PREFERENCE if lbl in present and present[lbl] >= top * (1 - _TIE))
    return RegionSample(p, q, n, ball, simplex, twopoint, winner, tag)


def _axis(lo, hi, steps):
    if steps < 1:
        raise DomainError("steps must be positive")
    if steps == 1 or lo == hi:  # a zero-width axis is a single sample
        return np.array([lo])
    return np.linspace(lo, hi, steps)


def emit_grid(p_range, q_range, steps, n, out=None):
    """Write the CSV grid (p varies fastest) to ``out``; return the text if
    ``out`` is None. ``steps`` is one count for both axes or a pair."""
    if isinstance(steps, (tuple, list)):
        sp, sq = steps
    else:
        sp = sq = steps
    if int(sp) != sp or int(sq) != sq or sp < 1 or sq < 1:
        raise DomainError(f"steps must be positive integers, got {steps!r}")
    ps = _axis(float(p_range[0]), float(p_range[1]), int(sp))
    qs = _axis(float(q_range[0]), float(q_range[1]), int(sq))
    buf = io.StringIO() if out is None else out
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for q in qs:
        for p in ps:
            writer.writerow(sample_region(float(p), float(q), n).row())
    if out is None:
        return buf.getvalue()
    return None
