"""Pure numpy support scan, used when the compiled extension is unavailable.

Faces of equal size are solved as one batch, so the Python overhead is per
support size rather than per support.
"""
from itertools import combinations

import numpy as np

_BATCH = 4096


def _batches(k, m):
    it = combinations(range(k), m)
    while True:
        chunk = [c for _, c in zip(range(_BATCH), it)]
        if not chunk:
            return
        yield np.array(chunk, dtype=np.intp)


def scan_supports(Q, max_size, flag_tol=1e-8, weight_tol=1e-12):
    """Scan every support of size 2..max_size of the kernel matrix ``Q``.

    Returns ``(masks, status, energy)``: bit masks of the supports whose
    augmented system is either solvable with nonnegative weights (status 1) or
    numerically suspect and in need of the rank-revealing path (status 2),
    together with the critical energy (NaN for status 2).
    """
    Q = np.ascontiguousarray(Q, dtype=np.float64)
    k = Q.shape[0]
    out_mask, out_status, out_energy = [], [], []
    bits = np.left_shift(np.int64(1), np.arange(k, dtype=np.int64))
    for m in range(2, min(max_size, k) + 1):
        rhs = np.zeros(m + 1)
        rhs[m] = 1.0
        for idx in _batches(k, m):
            nb = idx.shape[0]
            M = np.zeros((nb, m + 1, m + 1))
            M[:, :m, :m] = Q[idx[:, :, None], idx[:, None, :]]
            M[:, :m, m] = 1.0
            M[:, m, :m] = 1.0
            sv = np.linalg.svd(M, compute_uv=False)
            flagged = sv[:, -1] < flag_tol * sv[:, 0]
            masks = bits[idx].sum(axis=1)
            good = ~flagged
            if good.any():
                z = np.linalg.solve(M[good], np.broadcast_to(rhs, (int(good.sum()), m + 1))[..., None])[..., 0]
                feasible = z[:, :m].min(axis=1) > -weight_tol
                out_mask.append(masks[good][feasible])
                out_status.append(np.ones(int(feasible.sum()), dtype=np.int8))
                out_energy.append(-z[feasible, m])
            if flagged.any():
                nf = int(flagged.sum())
                out_mask.append(masks[flagged])
                out_status.append(np.full(nf, 2, dtype=np.int8))
                out_energy.append(np.full(nf, np.nan))
    if not out_mask:
        return np.zeros(0, np.int64), np.zeros(0, np.int8), np.zeros(0)
    return np.concatenate(out_mask), np.concatenate(out_status), np.concatenate(out_energy)
