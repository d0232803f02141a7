"""NumPy implementation of non-dominated rank assignment.

Fallback twin of the compiled kernel in ``_ranks.pyx``; both must produce
identical ranks for identical inputs.  The algorithm is iterative peeling
driven by dominator counts: count how many solutions dominate each one,
peel the zero-count set as the next front, subtract the peeled members'
contributions, repeat.  Runs in O(N^2) relation checks and O(N) memory.
"""

import numpy as np

BACKEND = "pure-python"

# Rows per block in the vectorized pairwise passes; bounds temp memory.
_BLOCK = 256


def _dominates_block(F, cv, constrained, tol, rows, cols):
    """Boolean matrix D[a, b]: does solution rows[a] dominate cols[b]."""
    fa = F[rows][:, None, :]
    fb = F[cols][None, :, :]
    le_all = (fa <= fb).all(axis=2)
    lt_any = (fa < fb).any(axis=2)
    pareto = le_all & lt_any
    if not constrained:
        return pareto

    feas_a = (cv[rows] == 0.0)[:, None]
    feas_b = (cv[cols] == 0.0)[None, :]
    both_inf = ~feas_a & ~feas_b
    cvd = cv[rows][:, None] - cv[cols][None, :]
    by_feasibility = feas_a & ~feas_b
    by_violation = both_inf & (cvd < -tol)
    tied = (feas_a & feas_b) | (both_inf & (np.abs(cvd) <= tol))
    return by_feasibility | by_violation | (tied & pareto)


def nondominated_ranks(F, cv, constrained, tol):
    """Assign 1-based front ranks by iterative peeling.

    F is (N, M) float64, cv is (N,) float64 (ignored when constrained is
    false).  Returns (ranks int32 array, front count).
    """
    F = np.ascontiguousarray(F, dtype=np.float64)
    cv = np.ascontiguousarray(cv, dtype=np.float64)
    n = F.shape[0]
    all_idx = np.arange(n)

    counts = np.zeros(n, dtype=np.int64)
    for start in range(0, n, _BLOCK):
        cols = all_idx[start : start + _BLOCK]
        dom = _dominates_block(F, cv, constrained, tol, all_idx, cols)
        counts[cols] = dom.sum(axis=0)

    ranks = np.zeros(n, dtype=np.int32)
    remaining = all_idx
    front = 0
    while remaining.size:
        front += 1
        members = remaining[counts[remaining] == 0]
        if members.size == 0:
            # Unreachable for a strict partial order; breaks deterministic
            # deadlocks that near-tie tolerance chains could construct.
            cmin = counts[remaining].min()
            members = remaining[counts[remaining] == cmin]
        ranks[members] = front
        remaining = remaining[ranks[remaining] == 0]
        if remaining.size:
            for start in range(0, members.size, _BLOCK):
                rows = members[start : start + _BLOCK]
                dom = _dominates_block(F, cv, constrained, tol, rows, remaining)
                counts[remaining] -= dom.sum(axis=0)
    return ranks, front
