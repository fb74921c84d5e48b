"""Named acceptance suites, shared by ``rieszcap verify`` and the test suite.

Each suite returns a :class:`Check`; ``detail`` records the worst observed
deviation so a failing run says by how much.
"""
from dataclasses import dataclass
import math

import numpy as np

from .closed_forms import (
    EllipseSpec,
    EllipsoidSpec,
    ellipse_log_capacity,
    ellipse_newtonian_capacity,
    ellipsoid_cap1,
    ellipsoid_cap2,
    unit_ball_capacity,
)
from .finite_capacity import (
    Configuration,
    bjorck_reduce,
    finite_capacity,
    kernel_matrix,
    kkt_certificate,
)
from .geometry import extreme_point_indices
from .oracles import grid_energy
from .region_map import _root_function, q_star, sample_region, threshold_p
from .shape_search import SearchProblem, optimize_ratio
from .triangle import TriangleShape, ratio_R, triangle_capacity, triangle_points


@dataclass
class Check:
    name: str
    passed: bool
    detail: str

    def line(self):
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name:<22} {self.detail}"


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def regular_simplex(k, d=1.0):
    """Vertices of a regular simplex with k vertices and edge length d, in R^k."""
    return np.eye(k) * (d / math.sqrt(2.0))


def kite(r):
    h = (4.0 / 3.0) ** (1.0 / r)
    s = math.sqrt(3.0) / 2.0
    return np.array([[0.0, 0.0], [0.5, s], [-0.5, s], [0.0, h]])


def tetrahedron(p):
    l = 2.0 ** (-1.0 / p)
    h = math.sqrt((1.0 - l * l / 2.0) / 4.0)
    return np.array([[h, l / 2, 0.0], [h, -l / 2, 0.0], [-h, 0.0, l / 2], [-h, 0.0, -l / 2]])


def _random_triangle(rng):
    c = rng.uniform(0.5, 2.0)
    while True:
        a, b = rng.uniform(0.0, c, size=2)
        if a > 0 and b > 0 and a + b >= c:
            return a, b, c


def suite_triangle(seed=101):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(1000):
        a, b, c = _random_triangle(rng)
        shape = TriangleShape(a, b, c)
        pts = triangle_points(shape)
        for p in (-0.5, -1.0, -2.0, -3.0, -5.0):
            worst = max(worst, _rel(triangle_capacity(shape, p)[0], finite_capacity(pts, p).capacity))
    return Check("triangle", worst <= 1e-10, f"max rel err {worst:.2e} (tol 1e-10)")


def suite_kpoint():
    worst, ok_measure = 0.0, True
    for k in range(2, 9):
        for d in (0.5, 1.0, 3.0):
            pts = regular_simplex(k, d)
            for p in (-0.5, -1.0, -2.0, -4.0):
                res = finite_capacity(pts, p)
                worst = max(worst, _rel(res.capacity, ((k - 1) / k) ** (-1.0 / p) * d))
                if not res.unique or np.abs(res.measures[0].weights - 1.0 / k).max() > 1e-10:
                    ok_measure = False
    return Check("kpoint", worst <= 1e-10 and ok_measure,
                 f"max rel err {worst:.2e} (tol 1e-10); uniform+unique: {ok_measure}")


def suite_threeptratio(seed=103):
    rng = np.random.default_rng(seed)
    violation = 0.0
    for _ in range(5000):
        while True:
            a, b = rng.uniform(0.0, 1.0, size=2)
            if a > 0 and b > 0 and a + b >= 1:
                break
        p = rng.uniform(-8.0, -0.05)
        q = rng.uniform(p, 0.0)
        if q in (p, 0.0):
            continue
        e = 1.0 / p - 1.0 / q
        R = ratio_R(a, b, p, q)
        violation = max(violation, 0.5 ** e - 1e-9 - R, R - (2.0 / 3.0) ** e - 1e-9)
    eq_err = 0.0
    for p, q in ((-4.0, -3.0), (-1.0, -0.5), (-6.0, -0.2), (-2.5, -2.0)):
        eq_err = max(eq_err, abs(ratio_R(1.0, 1.0, p, q) - (2.0 / 3.0) ** (1.0 / p - 1.0 / q)))
    ok = violation <= 0.0 and eq_err <= 1e-10
    return Check("threeptratio", ok, f"worst bound excess {violation:.2e}; equality err {eq_err:.2e}")


def suite_search(restarts=20):
    a = optimize_ratio(SearchProblem(2, 3, -4.0, -3.0, restarts=restarts, seed=1))
    b = optimize_ratio(SearchProblem(2, 3, -3.0, -4.0, restarts=restarts, seed=1))
    ea = abs(a.ratio - (2.0 / 3.0) ** (1.0 / 12.0))
    eb = abs(b.ratio - 2.0 ** (1.0 / 12.0))
    ok = ea <= 1e-4 and eb <= 1e-4 and a.classification == "regular-simplex-3" and b.classification == "two-point"
    return Check("search", ok, f"(a) err {ea:.1e} {a.classification}; (b) err {eb:.1e} {b.classification}")


def suite_qstar():
    qs = q_star()
    res = abs(_root_function(qs))
    ok = abs(qs + 0.856) <= 1e-3 and res < 1e-10
    return Check("qstar", ok, f"q*={qs:.12f}, residual {res:.1e}")


def suite_symmetry_breaking():
    thr = threshold_p(-1.5)
    s = sample_region(-10.0, -1.5, 2)
    ok = abs(thr + 2.387) <= 1e-2 and s.ratio_ball is not None and s.ratio_simplex > s.ratio_ball
    return Check("symmetry-breaking", ok,
                 f"threshold_p(-1.5)={thr:.6f}; simplex {s.ratio_simplex:.6f} vs ball {s.ratio_ball:.6f}")


def suite_kite():
    pts = kite(3.0)
    rp = finite_capacity(pts, -3.0)
    rq = finite_capacity(pts, -4.0)
    supports = {m.support for m in rp.measures}
    e1 = _rel(rp.capacity, (2.0 / 3.0) ** (1.0 / 3.0))
    e2 = _rel(rq.capacity, 2.0 ** (-0.25) * (4.0 / 3.0) ** (1.0 / 3.0))
    e3 = _rel(rq.capacity / rp.capacity, 2.0 ** (1.0 / 3.0 - 0.25))
    ok = (e1 <= 1e-10 and e2 <= 1e-10 and e3 <= 1e-9 and len(rp.measures) >= 2
          and {(0, 3), (0, 1, 2)} <= supports)
    return Check("kite", ok, f"cap err {e1:.1e}, q-cap err {e2:.1e}, ratio err {e3:.1e}, supports {sorted(supports)}")


def suite_tetrahedron():
    p = -3.0
    pts = tetrahedron(p)
    res = finite_capacity(pts, p)
    Q = kernel_matrix(pts, p)
    mu0 = np.array([0.0, 0.0, 0.5, 0.5])
    mu1 = np.array([0.5, 0.5, 0.0, 0.0])
    cert = kkt_certificate(Q, mu0)[0] and kkt_certificate(Q, mu1)[0]
    found = all(any(np.abs(m.weights - mu).max() < 1e-9 for m in res.measures) for mu in (mu0, mu1))
    ok = (abs(res.energy - 1.0) <= 1e-10 and abs(res.capacity - 1.0) <= 1e-10
          and res.family_dimension == 1 and cert and found)
    return Check("tetrahedron", ok,
                 f"energy {res.energy:.15f}, family_dimension {res.family_dimension}, extremes certified {cert}")


def suite_onedim(seed=109):
    rng = np.random.default_rng(seed)
    worst_cap, worst_ratio, strict_ok = 0.0, 0.0, True
    for _ in range(200):
        k = int(rng.integers(2, 11))
        x = np.sort(rng.uniform(-3.0, 3.0, size=k))
        diam = x[-1] - x[0]
        if np.diff(x).min() < 1e-3 * diam:
            x = np.linspace(x[0], x[-1], k) + rng.uniform(-0.1, 0.1, k) * diam / k
            x.sort()
            diam = x[-1] - x[0]
        cfg = Configuration(x.reshape(-1, 1))
        p, q = rng.uniform(-6.0, -1.0, size=2)
        cp, cq = finite_capacity(cfg, p).capacity, finite_capacity(cfg, q).capacity
        worst_cap = max(worst_cap, _rel(cp, 2.0 ** (1.0 / p) * diam), _rel(cq, 2.0 ** (1.0 / q) * diam))
        worst_ratio = max(worst_ratio, _rel(cq / cp, 2.0 ** (1.0 / q - 1.0 / p)))
        if k >= 3:
            pm = rng.uniform(-0.999, -0.001)
            if not finite_capacity(cfg, pm).capacity > 2.0 ** (1.0 / pm) * diam:
                strict_ok = False
    ok = worst_cap <= 1e-10 and worst_ratio <= 1e-10 and strict_ok
    return Check("onedim", ok, f"cap err {worst_cap:.1e}, ratio err {worst_ratio:.1e}, strict (-1,0): {strict_ok}")


def suite_diameter_bounds(seed=110):
    rng = np.random.default_rng(seed)
    ps = np.linspace(-6.0, -0.1, 12)
    bound_violation, monotone = 0.0, True
    for _ in range(500):
        k = int(rng.integers(2, 9))
        n = int(rng.integers(1, 4))
        cfg = Configuration(rng.normal(size=(k, n)))
        diam = cfg.diameter
        caps = [finite_capacity(cfg, p).capacity for p in ps]
        for p, c in zip(ps, caps):
            r = c / diam
            bound_violation = max(bound_violation, 2.0 ** (1.0 / p) - r, r - 1.0)
        if not all(c1 > c2 for c1, c2 in zip(caps, caps[1:])):
            monotone = False
    # two-point sets sit exactly on the lower bound; allow rounding only
    ok = bound_violation <= 1e-12 and monotone
    return Check("diameter-bounds", ok, f"worst bound excess {bound_violation:.1e}; strictly decreasing: {monotone}")


def suite_bjorck(seed=111):
    rng = np.random.default_rng(seed)
    worst, max_support = 0.0, 0
    for _ in range(100):
        k = int(rng.integers(5, 31))
        r = np.sqrt(rng.uniform(size=k))
        th = rng.uniform(0, 2 * np.pi, size=k)
        cloud = np.column_stack([r * np.cos(th), r * np.sin(th)])
        hull = extreme_point_indices(cloud)
        if len(hull) > 12:
            cloud = cloud[sorted(rng.choice(hull, size=12, replace=False))]
        # exhaustive reference: whole cloud when small, otherwise its hull points
        direct_pts = cloud if len(cloud) <= 12 else cloud[extreme_point_indices(cloud)]
        for p in (-2.5, -3.0, -6.0):
            reduced = finite_capacity(bjorck_reduce(Configuration(cloud), p), p)
            direct = finite_capacity(direct_pts, p, reduce=False)
            worst = max(worst, _rel(reduced.capacity, direct.capacity))
            max_support = max([max_support] + [len(m.support) for m in direct.measures + reduced.measures])
    ok = worst <= 1e-10 and max_support <= 3
    return Check("bjorck", ok, f"max rel err {worst:.1e}; largest support {max_support}")


def suite_ellipse():
    b = np.linspace(0.0, 1.0, 1000)
    ell = np.array([ellipse_newtonian_capacity(EllipseSpec(x)) / ellipse_log_capacity(EllipseSpec(x)) for x in b])
    be = np.linspace(0.0, 1.0, 1001)[1:]
    eps = np.array([ellipsoid_cap2(EllipsoidSpec(x)) / ellipsoid_cap1(EllipsoidSpec(x)) for x in be])
    inc = bool(np.all(np.diff(ell) > 0) and np.all(np.diff(eps) > 0))
    e1 = abs(ell[-1] - 2.0 / math.pi)
    e2 = abs(eps[-1] - 1.0 / math.sqrt(2.0))
    ok = inc and e1 <= 1e-9 and e2 <= 1e-9 and ell[0] == 0.0
    return Check("ellipse", ok, f"increasing {inc}; endpoint errs {e1:.1e}, {e2:.1e}")


def suite_hausdorff(seed=113):
    rng = np.random.default_rng(seed)
    monotone, worst_small = True, 0.0
    for _ in range(50):
        k = int(rng.integers(3, 9))
        pts = rng.normal(size=(k, 2))
        u = rng.normal(size=(k, 2))
        u /= np.linalg.norm(u, axis=1, keepdims=True)
        for p in (-0.5, -2.0, -4.0):
            base = finite_capacity(pts, p).capacity
            deltas = [abs(finite_capacity(pts + eps * u, p).capacity - base) for eps in (1e-2, 1e-4, 1e-6)]
            if not (deltas[0] > deltas[1] > deltas[2]):
                monotone = False
            worst_small = max(worst_small, deltas[2])
    ok = monotone and worst_small < 1e-4
    return Check("hausdorff", ok, f"monotone decay {monotone}; max |dcap| at 1e-6: {worst_small:.1e}")


def suite_oracle(seed=114):
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(200):
        k = int(rng.integers(2, 6))
        n = int(rng.integers(1, 4))
        p = float(rng.choice([-0.5, -1.0, -1.5, -3.0, -5.0]))
        pts = rng.normal(size=(k, n))
        exact = finite_capacity(pts, p).energy
        ref = grid_energy(kernel_matrix(pts, p).entries)
        worst = max(worst, _rel(ref, exact))
    return Check("oracle", worst <= 1e-6, f"max rel gap to lattice oracle {worst:.1e} (tol 1e-6)")


def suite_ball_values():
    """Quoted unit-ball values (sanity companion to the closed forms)."""
    errs = [
        abs(unit_ball_capacity(3, 1) - 1.0),
        abs(unit_ball_capacity(2, 1) - 2.0 / math.pi),
        abs(unit_ball_capacity(3, 2) - 1.0 / math.sqrt(2.0)),
        abs(unit_ball_capacity(2, -1) - 4.0 / math.pi),
    ]
    return Check("ball-values", max(errs) <= 1e-12, f"max err {max(errs):.1e}")


SUITES = {
    "triangle": suite_triangle,
    "kpoint": suite_kpoint,
    "threeptratio": suite_threeptratio,
    "search": suite_search,
    "qstar": suite_qstar,
    "symmetry-breaking": suite_symmetry_breaking,
    "kite": suite_kite,
    "tetrahedron": suite_tetrahedron,
    "onedim": suite_onedim,
    "diameter-bounds": suite_diameter_bounds,
    "bjorck": suite_bjorck,
    "ellipse": suite_ellipse,
    "hausdorff": suite_hausdorff,
    "oracle": suite_oracle,
}


def run(names=None):
    names = list(SUITES) if not names else names
    return [SUITES[name]() for name in names]
