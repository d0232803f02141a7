# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled non-dominated ranking kernel.

Semantics mirror ``_ranks_py.nondominated_ranks`` exactly: dominator
counting followed by front peeling with per-front decrements.  The pair
relation is Pareto dominance, optionally lifted to constraint domination
(feasible beats infeasible, lower violation beats higher outside the tie
tolerance, Pareto otherwise).
"""

import numpy as np

cimport numpy as cnp

BACKEND = "compiled"


cdef inline bint _dominates(const double[:, ::1] F, const double[::1] cv,
                            bint constrained, double tol,
                            Py_ssize_t j, Py_ssize_t i, Py_ssize_t M) noexcept nogil:
    """Does solution j dominate solution i."""
    cdef double d
    cdef bint fj, fi, lt_any
    cdef Py_ssize_t m
    if constrained:
        fj = cv[j] == 0.0
        fi = cv[i] == 0.0
        if fj and not fi:
            return True
        if fi and not fj:
            return False
        if (not fj) and (not fi):
            d = cv[j] - cv[i]
            if d < -tol:
                return True
            if d > tol:
                return False
    lt_any = False
    for m in range(M):
        if F[j, m] > F[i, m]:
            return False
        if F[j, m] < F[i, m]:
            lt_any = True
    return lt_any


def nondominated_ranks(F, cv, bint constrained, double tol):
    """Assign 1-based front ranks by iterative peeling.

    F is (N, M) float64, cv is (N,) float64 (ignored when constrained is
    false).  Returns (ranks int32 array, front count).
    """
    cdef double[:, ::1] fv = np.ascontiguousarray(F, dtype=np.float64)
    cdef double[::1] cvv = np.ascontiguousarray(cv, dtype=np.float64)
    cdef Py_ssize_t n = fv.shape[0]
    cdef Py_ssize_t M = fv.shape[1]

    counts_arr = np.zeros(n, dtype=np.int64)
    ranks_arr = np.zeros(n, dtype=np.int32)
    remaining_arr = np.arange(n, dtype=np.int64)
    members_arr = np.empty(n, dtype=np.int64)
    cdef long long[::1] counts = counts_arr
    cdef int[::1] ranks = ranks_arr
    cdef long long[::1] remaining = remaining_arr
    cdef long long[::1] members = members_arr

    cdef Py_ssize_t i, j, k, t, c, n_rem, n_mem, n_keep
    cdef long long idx, cmin
    cdef int front = 0

    with nogil:
        for i in range(n):
            c = 0
            for j in range(n):
                if j != i and _dominates(fv, cvv, constrained, tol, j, i, M):
                    c += 1
            counts[i] = c

        n_rem = n
        while n_rem > 0:
            front += 1
            n_mem = 0
            for k in range(n_rem):
                idx = remaining[k]
                if counts[idx] == 0:
                    members[n_mem] = idx
                    n_mem += 1
            if n_mem == 0:
                # Unreachable for a strict partial order; breaks deterministic
                # deadlocks that near-tie tolerance chains could construct.
                cmin = counts[remaining[0]]
                for k in range(1, n_rem):
                    if counts[remaining[k]] < cmin:
                        cmin = counts[remaining[k]]
                for k in range(n_rem):
                    idx = remaining[k]
                    if counts[idx] == cmin:
                        members[n_mem] = idx
                        n_mem += 1
            for k in range(n_mem):
                ranks[members[k]] = front
            n_keep = 0
            for k in range(n_rem):
                idx = remaining[k]
                if ranks[idx] == 0:
                    remaining[n_keep] = idx
                    n_keep += 1
            n_rem = n_keep
            for k in range(n_rem):
                idx = remaining[k]
                c = 0
                for t in range(n_mem):
                    if _dominates(fv, cvv, constrained, tol, members[t], idx, M):
                        c += 1
                counts[idx] -= c

    return ranks_arr, front
