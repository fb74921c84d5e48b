"""Derivative-free search for point configurations maximizing cap_q / cap_p.

Each restart draws a random configuration and runs a sequence of Nelder-Mead
stages whose initial simplex size shrinks geometrically from 0.3 to 1e-5 of
the diameter; the best point is recentred and rescaled to diameter 1 between
stages. The ratio is invariant under dilations and isometries, so this only
removes flat directions.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import math
import os

import numpy as np
from scipy.optimize import minimize

from .errors import DegenerateConfigurationError, DomainError, SearchFailureError
from .finite_capacity import Configuration, finite_capacity, finite_energy
from .geometry import diameter

__all__ = [
    "SearchProblem",
    "SearchResult",
    "optimize_ratio",
    "capacity_ratio",
    "merge_close_points",
    "normalize_configuration",
    "classify_configuration",
    "equilibrium_supports",
]

MERGE_TOL = 1e-9


@dataclass(frozen=True)
class SearchProblem:
    n: int
    k: int
    p: float
    q: float
    restarts: int = 20
    iterations: int = 800
    seed: int = 0

    def __post_init__(self):
        if self.k < 2 or self.n < 1:
            raise DomainError("need k >= 2 points in dimension n >= 1")
        if not (self.p < 0 and self.q < 0) or self.p == self.q:
            raise DomainError("need distinct negative exponents p and q")
        if self.restarts < 1 or self.iterations < 1:
            raise DomainError("restarts and iterations must be positive")


@dataclass
class SearchResult:
    configuration: Configuration
    ratio: float
    classification: str
    restart: int
    traces: list = field(default_factory=list)  # per restart: [(evaluation, best ratio), ...]
    merged_points: int = 0

    def to_dict(self) -> dict:
        return {
            "ratio": self.ratio,
            "classification": self.classification,
            "best_restart": self.restart,
            "points": [[float(v) for v in row] for row in self.configuration.points],
            "merged_points": self.merged_points,
            "traces": [[[int(i), float(r)] for i, r in tr] for tr in self.traces],
        }


def merge_close_points(points, rel_tol=MERGE_TOL):
    """Drop points within ``rel_tol * diameter`` of an earlier kept point."""
    pts = np.asarray(points, dtype=float)
    diam = diameter(pts)
    if diam == 0.0:
        return pts[:1]
    keep = []
    for x in pts:
        if all(np.linalg.norm(x - y) >= rel_tol * diam for y in keep):
            keep.append(x)
    return np.array(keep)


def normalize_configuration(points):
    """Centre at the centroid and rescale to diameter 1."""
    pts = np.asarray(points, dtype=float)
    pts = pts - pts.mean(axis=0)
    diam = diameter(pts)
    if diam == 0.0:
        raise DegenerateConfigurationError("configuration collapsed to a point")
    return pts / diam


def capacity_ratio(config, p, q):
    """``cap_q / cap_p`` of a finite configuration (near-coincident points merged)."""
    pts = merge_close_points(np.asarray(config.points if isinstance(config, Configuration) else config, float))
    if len(pts) < 2:
        raise DegenerateConfigurationError("fewer than two distinct points")
    cfg = Configuration(pts)
    return finite_energy(cfg, q) ** (-1.0 / q) / finite_energy(cfg, p) ** (-1.0 / p)


def equilibrium_supports(config, exponent):
    """Supports of all equilibrium measures for the given exponent."""
    res = finite_capacity(Configuration(merge_close_points(_points(config))), exponent)
    return [m.support for m in res.measures], res


def _points(config):
    return config.points if isinstance(config, Configuration) else np.asarray(config, dtype=float)


def classify_configuration(config, exponent, tol=1e-3):
    """Label a configuration by the support of its equilibrium measure.

    ``"two-point"`` for a two-point support, ``"regular-simplex-m"`` for an
    ``m``-point support with all pairwise distances equal within ``tol``
    (relative to the diameter), ``"other"`` otherwise, including when several
    distinct equilibrium measures exist.
    """
    pts = merge_close_points(_points(config))
    if len(pts) < 2:
        return "other"
    supports, res = equilibrium_supports(pts, exponent)
    if len(res.measures) != 1 or res.family_dimension:
        return "other"
    S = supports[0]
    if len(S) == 2:
        return "two-point"
    sub = pts[list(S)]
    d = np.sqrt(((sub[:, None, :] - sub[None, :, :]) ** 2).sum(-1))[np.triu_indices(len(S), 1)]
    if d.max() - d.min() <= tol * diameter(pts):
        return f"regular-simplex-{len(S)}"
    return "other"


def _run_restart(problem, index):
    rng = np.random.default_rng([problem.seed, index])
    n, k = problem.n, problem.k
    dim = n * k
    evals = 0
    best = {"f": math.inf, "x": None}
    trace = []

    def objective(x):
        nonlocal evals
        evals += 1
        try:
            r = capacity_ratio(x.reshape(k, n), problem.p, problem.q)
        except DegenerateConfigurationError:
            return math.inf
        f = -r
        if f < best["f"]:
            best["f"], best["x"] = f, x.copy()
            trace.append((evals, r))
        return f

    x = normalize_configuration(rng.uniform(-0.5, 0.5, size=(k, n))).ravel()
    objective(x)
    scales = np.geomspace(0.3, 1e-5, 8)
    per_stage = max(problem.iterations // len(scales), dim + 2)
    for scale in scales:
        if evals >= problem.iterations:
            break
        start = best["x"] if best["x"] is not None else x
        try:
            start = normalize_configuration(start.reshape(k, n)).ravel()
        except DegenerateConfigurationError:
            start = normalize_configuration(rng.uniform(-0.5, 0.5, size=(k, n))).ravel()
        simplex = np.vstack([start, start + scale * rng.standard_normal((dim, dim))])
        minimize(
            objective,
            start,
            method="Nelder-Mead",
            options={
                "initial_simplex": simplex,
                "maxfev": min(per_stage, problem.iterations - evals),
                "xatol": 1e-13,
                "fatol": 1e-15,
            },
        )
    return best["f"], best["x"], trace


def optimize_ratio(problem: SearchProblem, workers=None) -> SearchResult:
    """Multi-restart maximization of ``cap_q / cap_p`` over ``k`` points in R^n.

    Deterministic for a fixed problem (including ``seed``) regardless of
    ``workers``; ties between restarts go to the lowest restart index.
    """
    if workers is None:
        workers = int(os.environ.get("RIESZ_THREADS", "1") or 1)
    indices = range(problem.restarts)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(lambda i: _run_restart(problem, i), indices))
    else:
        runs = [_run_restart(problem, i) for i in indices]

    best_i = None
    for i, (f, x, _) in enumerate(runs):
        if x is not None and math.isfinite(f) and (best_i is None or f < runs[best_i][0]):
            best_i = i
    if best_i is None:
        raise SearchFailureError("no restart produced a configuration with two distinct points")
    f, x, _ = runs[best_i]
    raw = x.reshape(problem.k, problem.n)
    merged = merge_close_points(raw)
    config = Configuration(normalize_configuration(merged))
    return SearchResult(
        configuration=config,
        ratio=-f,
        classification=classify_configuration(config, problem.q),
        restart=best_i,
        traces=[tr for _, _, tr in runs],
        merged_points=problem.k - len(merged),
    )
