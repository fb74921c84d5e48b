"""Riesz p-capacity (p < 0) of finite point configurations.

For p < 0 the energy of a probability vector ``w`` on points ``x_1..x_k`` is
``w @ Q @ w`` with ``Q[i, j] = |x_i - x_j|**(-p)``, and the energy of the set
is the maximum over the probability simplex. A maximizer is a critical point
of the restriction to its own support face, i.e. it solves::

    Q_S w = V * 1,   sum(w) = 1,   w > 0

so the global maximum is found by scanning every support and keeping the
largest feasible critical energy. Faces whose system is singular (families of
maximizers) go through an SVD plus a small LP.
"""
from dataclasses import dataclass, field
from math import comb
from typing import Optional

import numpy as np
from scipy.optimize import linprog

from . import _kernels
from .errors import DegenerateConfigurationError, DomainError, ResourceLimitError
from .geometry import diameter, extreme_point_indices
from .serialize import format_points, parse_points

__all__ = [
    "Configuration",
    "KernelMatrix",
    "DiscreteMeasure",
    "CapacityResult",
    "kernel_matrix",
    "critical_point_on_support",
    "finite_capacity",
    "capacity",
    "bjorck_reduce",
    "kkt_certificate",
    "finite_energy",
    "DEFAULT_MAX_POINTS",
]

DEFAULT_MAX_POINTS = 16
DUPLICATE_TOL = 1e-12
RANK_TOL = 1e-10
WEIGHT_TOL = 1e-12
TIE_TOL = 1e-12
KKT_TOL = 1e-9


@dataclass(frozen=True)
class Configuration:
    """Ordered finite point set in R^n, stored as a ``(k, n)`` array."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim == 1:
            pts = pts.reshape(-1, 1) if pts.size else pts.reshape(0, 1)
        if pts.ndim != 2:
            raise DomainError("points must form a (k, n) array")
        if not np.all(np.isfinite(pts)):
            raise DomainError("coordinates must be finite")
        pts = pts.copy()
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def k(self) -> int:
        return self.points.shape[0]

    @property
    def n(self) -> int:
        return self.points.shape[1]

    @property
    def diameter(self) -> float:
        return diameter(self.points)

    def subset(self, indices) -> "Configuration":
        return Configuration(self.points[list(indices)])

    def scaled(self, s: float) -> "Configuration":
        return Configuration(self.points * s)

    @classmethod
    def from_text(cls, text: str) -> "Configuration":
        rows = parse_points(text)
        if not rows:
            return cls(np.zeros((0, 1)))
        return cls(np.array(rows))

    @classmethod
    def read(cls, path) -> "Configuration":
        with open(path) as fh:
            return cls.from_text(fh.read())

    def to_text(self, header: Optional[str] = None) -> str:
        return format_points(self.points, header)

    def write(self, path, header=None):
        with open(path, "w") as fh:
            fh.write(self.to_text(header))


@dataclass(frozen=True)
class KernelMatrix:
    entries: np.ndarray
    t: float

    @property
    def k(self) -> int:
        return self.entries.shape[0]


@dataclass
class DiscreteMeasure:
    """Probability weights on the configuration points.

    ``directions`` is empty for an isolated maximizer. For a face carrying an
    affine family of critical points it holds an orthonormal basis (rows) of
    the family's direction space, so that ``weights + a @ directions`` stays a
    maximizer for every small enough coefficient vector ``a``.
    """

    weights: np.ndarray
    directions: np.ndarray = field(default_factory=lambda: np.zeros((0, 0)))

    def __post_init__(self):
        self.weights = np.asarray(self.weights, dtype=float)
        if self.directions.size == 0:
            self.directions = np.zeros((0, self.weights.size))

    @property
    def support(self) -> tuple:
        return tuple(int(i) for i in np.flatnonzero(self.weights > WEIGHT_TOL))

    @property
    def family_dimension(self) -> int:
        return self.directions.shape[0]

    def energy(self, Q) -> float:
        E = Q.entries if isinstance(Q, KernelMatrix) else np.asarray(Q)
        return float(self.weights @ E @ self.weights)

    def to_dict(self) -> dict:
        out = {"weights": [float(w) for w in self.weights], "support": list(self.support)}
        if self.family_dimension:
            out["directions"] = [[float(v) for v in row] for row in self.directions]
        return out


@dataclass
class CapacityResult:
    energy: float
    capacity: float
    p: float
    measures: list
    unique: bool
    family_dimension: int
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {
            "energy": self.energy,
            "capacity": self.capacity,
            "p": self.p,
            "measures": [m.to_dict() for m in self.measures],
            "unique": self.unique,
            "family_dimension": self.family_dimension,
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _as_config(config) -> Configuration:
    return config if isinstance(config, Configuration) else Configuration(config)


def _entries(Q) -> np.ndarray:
    return Q.entries if isinstance(Q, KernelMatrix) else np.asarray(Q, dtype=float)


def kernel_matrix(config, p: float) -> KernelMatrix:
    """``Q[i, j] = |x_i - x_j|**(-p)`` with zero diagonal.

    Raises :class:`DegenerateConfigurationError` if two points lie closer than
    ``1e-12 * diameter``.
    """
    if not p < 0:
        raise DomainError(f"kernel matrix requires p < 0, got p={p!r}")
    config = _as_config(config)
    pts = config.points
    diff = pts[:, None, :] - pts[None, :, :]
    dist = np.sqrt((diff * diff).sum(-1))
    k = config.k
    if k >= 2:
        diam = dist.max()
        off = dist[~np.eye(k, dtype=bool)]
        if diam == 0.0 or off.min() < DUPLICATE_TOL * diam:
            raise DegenerateConfigurationError("configuration contains coincident points")
    t = -float(p)
    Q = dist ** t
    np.fill_diagonal(Q, 0.0)
    Q.setflags(write=False)
    return KernelMatrix(Q, t)


@dataclass
class _FaceSolution:
    weights: np.ndarray  # restricted to the face
    energy: float
    directions: np.ndarray  # (d, m)
    near_cutoff: bool


def _solve_face(E, S):
    """Rank-revealing solve of the critical-point system on the face ``S``."""
    m = len(S)
    Qs = E[np.ix_(S, S)]
    # the bordered system is only well scaled when Q is O(1)
    unit = Qs.max()
    M = np.zeros((m + 1, m + 1))
    M[:m, :m] = Qs / unit
    M[:m, m] = 1.0
    M[m, :m] = 1.0
    rhs = np.zeros(m + 1)
    rhs[m] = 1.0
    U, s, Vt = np.linalg.svd(M)
    cutoff = RANK_TOL * s[0]
    r = int((s > cutoff).sum())
    near = bool(np.any((s > cutoff) & (s < 100.0 * cutoff)) or np.any((s <= cutoff) & (s > 0.01 * cutoff)))
    z = Vt[:r].T @ ((U[:, :r].T @ rhs) / s[:r])
    if np.linalg.norm(M @ z - rhs) > 1e-9 * max(1.0, s[0] * np.linalg.norm(z)):
        return None  # inconsistent: no critical point on this face
    w0 = z[:m]
    null = Vt[r:, :m]
    d = null.shape[0]
    if d == 0:
        if w0.min() <= -WEIGHT_TOL:
            return None
        w = np.clip(w0, 0.0, None)
        w /= w.sum()
        return _FaceSolution(w, float(w @ Qs @ w), np.zeros((0, m)), near)
    # largest minimum weight over the affine family: max s s.t. w0 + N^T a >= s
    c = np.zeros(d + 1)
    c[-1] = -1.0
    A_ub = np.hstack([-null.T, np.ones((m, 1))])
    bounds = [(None, None)] * d + [(None, 1.0)]
    res = linprog(c, A_ub=A_ub, b_ub=w0, bounds=bounds, method="highs")
    if res.status != 0 or res.x[-1] <= WEIGHT_TOL:
        return None  # family only touches the boundary; lower faces cover it
    w = w0 + null.T @ res.x[:d]
    w = np.clip(w, 0.0, None)
    w /= w.sum()
    basis = np.linalg.qr(null.T)[0].T
    return _FaceSolution(w, float(w @ Qs @ w), basis, near)


def critical_point_on_support(Q, S):
    """Critical points of ``w @ Q @ w`` on the open face with support ``S``.

    Returns a list with at most one ``(DiscreteMeasure, energy)`` pair; the
    energy equals the Lagrange value ``lambda/2``. A singular face yields a
    measure whose ``directions`` span the family of critical points. An empty
    list means the face has no critical point with strictly positive weights.
    """
    E = _entries(Q)
    S = sorted(int(i) for i in S)
    if len(S) < 2:
        raise DomainError("a support needs at least two points")
    sol = _solve_face(E, S)
    if sol is None:
        return []
    k = E.shape[0]
    w = np.zeros(k)
    w[S] = sol.weights
    dirs = np.zeros((sol.directions.shape[0], k))
    dirs[:, S] = sol.directions
    return [(DiscreteMeasure(w, dirs), sol.energy)]


def _masks_to_indices(mask):
    mask = int(mask)
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _same_measure(a, b):
    return np.abs(a.weights - b.weights).max() < 1e-9


def finite_capacity(config, p: float, *, reduce: bool = True, max_points: int = DEFAULT_MAX_POINTS,
                    backend: Optional[str] = None) -> CapacityResult:
    """Energy, capacity and every equilibrium measure of a finite set, p < 0.

    For ``p < -2`` (and ``reduce=True``) only extreme points of the convex hull
    and supports of at most ``n + 1`` points are scanned. Otherwise all
    ``2**k`` supports are scanned, which is refused above ``max_points``.
    """
    if not p < 0:
        raise DomainError(f"finite sets have infinite energy for p >= 0 (got p={p!r})")
    config = _as_config(config)
    p = float(p)
    k = config.k
    if k == 0:
        return CapacityResult(0.0, 0.0, p, [], True, 0)
    if k == 1:
        return CapacityResult(0.0, 0.0, p, [DiscreteMeasure(np.ones(1))], True, 0)

    Q = kernel_matrix(config, p)
    E = Q.entries
    if p < -2 and reduce:
        idx = extreme_point_indices(config.points)
        max_size = min(config.n + 1, len(idx))
        n_faces = sum(comb(len(idx), m) for m in range(2, max_size + 1))
        if n_faces > 2 ** max_points:
            raise ResourceLimitError(f"{n_faces} supports exceed the scan limit 2**{max_points}")
    else:
        idx = list(range(k))
        max_size = k
        if k > max_points:
            hint = " (bjorck_reduce applies only for p < -2)" if p >= -2 else ""
            raise ResourceLimitError(
                f"{k} points need 2**{k} supports; limit is {max_points} points without Bjorck reduction{hint}"
            )
    idx = np.asarray(idx, dtype=np.intp)
    Er = np.ascontiguousarray(E[np.ix_(idx, idx)])

    scan = _kernels.BACKENDS[backend] if backend else _kernels.scan_supports
    unit = Er.max()
    masks, status, energy = scan(Er / unit, max_size)
    energy = energy * unit

    feasible = status == 1
    candidates = []  # (energy, support, precomputed solution or None)
    for mask in masks[~feasible]:
        S = _masks_to_indices(mask)
        sol = _solve_face(Er, S)
        if sol is not None:
            candidates.append((sol.energy, S, sol))
    vmax = max([c[0] for c in candidates] + [float(energy[feasible].max()) if feasible.any() else -np.inf])
    floor = vmax * (1.0 - TIE_TOL)
    tied = [c for c in candidates if c[0] >= floor]
    tied += [(float(en), _masks_to_indices(mask), None)
             for mask, en in zip(masks[feasible], energy[feasible]) if en >= floor]
    tied.sort(key=lambda c: (len(c[1]), c[1]))

    measures, notes, family_dim = [], [], 0
    for _, S, sol in tied:
        if sol is None:
            sol = _solve_face(Er, S)
            if sol is None:
                continue
        w = np.zeros(k)
        w[idx[S]] = sol.weights
        dirs = np.zeros((sol.directions.shape[0], k))
        dirs[:, idx[S]] = sol.directions
        meas = DiscreteMeasure(w, dirs)
        if sol.near_cutoff:
            notes.append(f"rank decision near cutoff on support {sorted(int(i) for i in idx[S])}")
        if any(_same_measure(meas, other) for other in measures):
            continue
        measures.append(meas)
        family_dim = max(family_dim, meas.family_dimension)

    v = max(m.energy(E) for m in measures)
    return CapacityResult(
        energy=v,
        capacity=v ** (-1.0 / p),
        p=p,
        measures=measures,
        unique=len(measures) == 1 and family_dim == 0,
        family_dimension=family_dim,
        notes=notes,
    )


def capacity(config, p: float, **kwargs) -> float:
    """Shorthand for ``finite_capacity(config, p).capacity``."""
    return finite_capacity(config, p, **kwargs).capacity


def bjorck_reduce(config, p: float) -> Configuration:
    """Keep only the extreme points of the convex hull (valid for p < -2)."""
    if not p < -2:
        raise DomainError(f"hull reduction is only valid for p < -2 (got p={p!r})")
    config = _as_config(config)
    return config.subset(extreme_point_indices(config.points))


def kkt_certificate(Q, measure, rel_tol: float = KKT_TOL):
    """First-order optimality check for a measure on the simplex.

    The measure passes when its potential ``(Q w)_i`` equals the energy on the
    support and does not exceed it off the support, both to ``rel_tol``
    relative. Returns ``(passed, report)``.
    """
    E = _entries(Q)
    w = measure.weights if isinstance(measure, DiscreteMeasure) else np.asarray(measure, dtype=float)
    if abs(w.sum() - 1.0) > 1e-9 or w.min() < -WEIGHT_TOL:
        raise DomainError("measure must be a probability vector")
    pot = E @ w
    V = float(w @ pot)
    on = w > WEIGHT_TOL
    tol = rel_tol * V
    dev_on = np.abs(pot[on] - V)
    excess_off = pot[~on] - V
    passed = bool(np.all(dev_on <= tol) and np.all(excess_off <= tol))
    violation = max(dev_on.max(initial=0.0), excess_off.max(initial=0.0))
    report = {
        "energy": V,
        "potentials": [float(x) for x in pot],
        "support": [int(i) for i in np.flatnonzero(on)],
        "max_violation": float(violation),
    }
    return passed, report


def finite_energy(config, p: float, *, reduce: bool = True, max_points: int = DEFAULT_MAX_POINTS) -> float:
    """Maximal energy only, skipping measure extraction (used in inner loops)."""
    if not p < 0:
        raise DomainError(f"finite sets have infinite energy for p >= 0 (got p={p!r})")
    config = _as_config(config)
    if config.k < 2:
        return 0.0
    E = kernel_matrix(config, p).entries
    if p < -2 and reduce:
        idx = extreme_point_indices(config.points)
        max_size = min(config.n + 1, len(idx))
    else:
        idx = list(range(config.k))
        max_size = config.k
        if config.k > max_points:
            raise ResourceLimitError(f"{config.k} points exceed the scan limit of {max_points}")
    Er = np.ascontiguousarray(E[np.ix_(idx, idx)])
    unit = Er.max()
    masks, status, energy = _kernels.scan_supports(Er / unit, max_size)
    best = -np.inf
    feasible = status == 1
    if feasible.any():
        best = float(energy[feasible].max()) * unit
    for mask in masks[~feasible]:
        sol = _solve_face(Er, _masks_to_indices(mask))
        if sol is not None:
            best = max(best, sol.energy)
    return best
