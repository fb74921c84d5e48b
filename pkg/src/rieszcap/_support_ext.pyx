# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled support scan; same contract as ``_support_py.scan_supports``."""
import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, NAN
from libc.stdlib cimport malloc, free
from libcpp.vector cimport vector

cnp.import_array()


cdef inline long long _gosper(long long v) nogil:
    # Gosper's hack: next integer with the same number of set bits
    cdef long long c = v & -v
    cdef long long r = v + c
    return (((r ^ v) >> 2) // c) | r


cdef int _solve_face(const double[:, ::1] Q, int* idx, int m, double* A, double* z,
                     double flag_tol, double weight_tol, double* energy) nogil:
    """Gaussian elimination with partial pivoting on the augmented system.
    Returns 0 infeasible, 1 feasible, 2 flagged."""
    cdef int n = m + 1
    cdef int i, j, r, piv
    cdef double scale = 0.0, best, tmp, f
    for i in range(m):
        for j in range(m):
            A[i * n + j] = Q[idx[i], idx[j]]
            if A[i * n + j] > scale:
                scale = A[i * n + j]
        A[i * n + m] = 1.0
        A[m * n + i] = 1.0
        z[i] = 0.0
    A[m * n + m] = 0.0
    z[m] = 1.0
    if scale < 1.0:
        scale = 1.0
    for j in range(n):
        piv = j
        best = fabs(A[j * n + j])
        for r in range(j + 1, n):
            if fabs(A[r * n + j]) > best:
                best = fabs(A[r * n + j])
                piv = r
        if best <= flag_tol * scale:
            return 2
        if piv != j:
            for i in range(n):
                tmp = A[j * n + i]
                A[j * n + i] = A[piv * n + i]
                A[piv * n + i] = tmp
            tmp = z[j]
            z[j] = z[piv]
            z[piv] = tmp
        for r in range(j + 1, n):
            f = A[r * n + j] / A[j * n + j]
            if f != 0.0:
                for i in range(j, n):
                    A[r * n + i] -= f * A[j * n + i]
                z[r] -= f * z[j]
    for j in range(n - 1, -1, -1):
        tmp = z[j]
        for i in range(j + 1, n):
            tmp -= A[j * n + i] * z[i]
        z[j] = tmp / A[j * n + j]
    for i in range(m):
        if z[i] <= -weight_tol:
            return 0
    energy[0] = -z[m]
    return 1


def scan_supports(Q, int max_size, double flag_tol=1e-8, double weight_tol=1e-12):
    cdef const double[:, ::1] Qv = np.ascontiguousarray(Q, dtype=np.float64)
    cdef int k = Qv.shape[0]
    cdef int m, i, b, status
    cdef long long mask, limit
    cdef double energy = 0.0
    cdef vector[long long] out_mask
    cdef vector[signed char] out_status
    cdef vector[double] out_energy
    if k > 62:
        raise ValueError("support scan is limited to 62 points")
    if max_size > k:
        max_size = k
    cdef int* idx = <int*> malloc(k * sizeof(int))
    cdef double* A = <double*> malloc((k + 1) * (k + 1) * sizeof(double))
    cdef double* z = <double*> malloc((k + 1) * sizeof(double))
    if idx == NULL or A == NULL or z == NULL:
        free(idx); free(A); free(z)
        raise MemoryError()
    limit = (<long long> 1) << k
    try:
        with nogil:
            for m in range(2, max_size + 1):
                mask = ((<long long> 1) << m) - 1
                while mask < limit:
                    i = 0
                    for b in range(k):
                        if (mask >> b) & 1:
                            idx[i] = b
                            i += 1
                    status = _solve_face(Qv, idx, m, A, z, flag_tol, weight_tol, &energy)
                    if status == 1:
                        out_mask.push_back(mask)
                        out_status.push_back(1)
                        out_energy.push_back(energy)
                    elif status == 2:
                        out_mask.push_back(mask)
                        out_status.push_back(2)
                        out_energy.push_back(NAN)
                    mask = _gosper(mask)
    finally:
        free(idx); free(A); free(z)
    n_out = out_mask.size()
    masks = np.empty(n_out, dtype=np.int64)
    statuses = np.empty(n_out, dtype=np.int8)
    energies = np.empty(n_out, dtype=np.float64)
    cdef long long[::1] mv = masks
    cdef signed char[::1] sv = statuses
    cdef double[::1] ev = energies
    cdef size_t t
    for t in range(n_out):
        mv[t] = out_mask[t]
        sv[t] = out_status[t]
        ev[t] = out_energy[t]
    return masks, statuses, energies

