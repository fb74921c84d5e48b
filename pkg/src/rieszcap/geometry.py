"""Extreme points of finite point sets."""
import numpy as np
from scipy.optimize import linprog


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_2d(points, rel_tol=1e-12):
    """Indices of the vertices of the convex hull of planar points
    (Andrew's monotone chain), counter-clockwise. Points on hull edges are
    not vertices."""
    pts = np.asarray(points, dtype=float)
    k = len(pts)
    if k <= 2:
        return list(range(k))
    order = sorted(range(k), key=lambda i: (pts[i, 0], pts[i, 1]))
    span = np.ptp(pts, axis=0).max()
    eps = rel_tol * span * span

    def chain(seq):
        out = []
        for i in seq:
            while len(out) >= 2 and _cross(pts[out[-2]], pts[out[-1]], pts[i]) <= eps:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    hull = lower[:-1] + upper[:-1]
    if not hull:  # every point coincides
        return [order[0]]
    return hull


def in_convex_hull(x, others, tol=1e-10):
    """Whether ``x`` is a convex combination of the rows of ``others``."""
    others = np.asarray(others, dtype=float)
    m = len(others)
    if m == 0:
        return False
    A_eq = np.vstack([others.T, np.ones(m)])
    b_eq = np.concatenate([np.asarray(x, dtype=float), [1.0]])
    res = linprog(np.zeros(m), A_eq=A_eq, b_eq=b_eq, bounds=[(0, None)] * m, method="highs")
    if res.status != 0:
        return False
    return np.abs(A_eq @ res.x - b_eq).max() <= tol * max(1.0, np.abs(b_eq).max())


def extreme_point_indices(points):
    """Sorted indices of the extreme points of the convex hull."""
    pts = np.asarray(points, dtype=float)
    k, n = pts.shape
    if k <= 2:
        return list(range(k))
    if n == 1:
        return sorted({int(np.argmin(pts[:, 0])), int(np.argmax(pts[:, 0]))})
    if n == 2:
        return sorted(hull_2d(pts))
    keep = []
    for i in range(k):
        others = np.delete(pts, i, axis=0)
        if not in_convex_hull(pts[i], others):
            keep.append(i)
    return keep


def diameter(points):
    pts = np.asarray(points, dtype=float)
    if len(pts) < 2:
        return 0.0
    diff = pts[:, None, :] - pts[None, :, :]
    return float(np.sqrt((diff * diff).sum(-1)).max())
