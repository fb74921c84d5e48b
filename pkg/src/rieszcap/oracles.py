"""Brute-force reference solvers, independent of the support scan.

``grid_energy`` evaluates the quadratic form on a lattice of the probability
simplex and polishes the best lattice points with SLSQP.
"""
from functools import lru_cache
from itertools import combinations

import numpy as np
from scipy.optimize import minimize


@lru_cache(maxsize=16)
def simplex_lattice(k, N):
    """All weight vectors with entries in {0, 1/N, ..., 1} summing to 1."""
    bars = np.array(list(combinations(range(N + k - 1), k - 1)), dtype=np.int64).reshape(-1, k - 1)
    edges = np.hstack([np.full((len(bars), 1), -1), bars, np.full((len(bars), 1), N + k - 1)])
    counts = np.diff(edges, axis=1) - 1
    return counts / N


def default_resolution(k):
    return {1: 1, 2: 200, 3: 200, 4: 60, 5: 36}.get(k, 12)


def polish(Q, w0):
    k = len(w0)
    res = minimize(
        lambda w: -(w @ Q @ w),
        w0,
        jac=lambda w: -2.0 * (Q @ w),
        method="SLSQP",
        bounds=[(0.0, 1.0)] * k,
        constraints=[{"type": "eq", "fun": lambda w: w.sum() - 1.0, "jac": lambda w: np.ones(k)}],
        options={"ftol": 1e-16, "maxiter": 500},
    )
    w = np.clip(res.x, 0.0, None)
    w /= w.sum()
    return float(w @ Q @ w)


def grid_energy(Q, N=None, n_polish=8):
    """Maximum of ``w @ Q @ w`` over the simplex by lattice search plus polish."""
    Q = np.asarray(Q, dtype=float)
    k = Q.shape[0]
    if k == 1:
        return 0.0
    W = simplex_lattice(k, N or default_resolution(k))
    vals = np.einsum("ij,jk,ik->i", W, Q, W)
    best = float(vals.max())
    for i in np.argsort(vals)[::-1][:n_polish]:
        best = max(best, polish(Q, W[i]))
    return best


def random_start_energy(Q, starts=20, seed=0):
    """Multi-start SLSQP; exact for concave cases (-2 < p < 0)."""
    Q = np.asarray(Q, dtype=float)
    rng = np.random.default_rng(seed)
    return max(polish(Q, rng.dirichlet(np.ones(Q.shape[0]))) for _ in range(starts))
