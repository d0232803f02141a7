"""Pareto and constraint-domination relations and non-dominated sorting.

Rank assignment runs in a compiled kernel when the extension built from
``_ranks.pyx`` is importable, otherwise in the NumPy twin ``_ranks_py``.
Set ``CMOP_LA_PURE=1`` to force the fallback.
"""

import os
from dataclasses import dataclass
from enum import Enum

import numpy as np

if os.environ.get("CMOP_LA_PURE") == "1":
    from . import _ranks_py as _kernel
else:
    try:
        from . import _ranks as _kernel
    except ImportError:
        from . import _ranks_py as _kernel

__all__ = [
    "CV_TIE_TOL",
    "Verdict",
    "FrontAssignment",
    "kernel_backend",
    "pareto_compare",
    "constrained_compare",
    "nondominated_sort",
    "extract_sets",
]

# Two violation norms within this tolerance count as "similar", falling
# through to the Pareto comparison on objectives.
CV_TIE_TOL = 1e-12


class Verdict(Enum):
    FIRST_DOMINATES = "first-dominates"
    SECOND_DOMINATES = "second-dominates"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class FrontAssignment:
    """1-based front index per solution; rank 1 is the non-dominated set."""

    ranks: np.ndarray
    front_count: int


def kernel_backend() -> str:
    """Which ranking implementation is active: 'compiled' or 'pure-python'."""
    return _kernel.BACKEND


def pareto_compare(a, b) -> Verdict:
    """Pareto dominance under minimization; equal vectors are incomparable."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"objective length mismatch: {a.shape} vs {b.shape}")
    if np.all(a <= b) and np.any(a < b):
        return Verdict.FIRST_DOMINATES
    if np.all(b <= a) and np.any(b < a):
        return Verdict.SECOND_DOMINATES
    return Verdict.INCOMPARABLE


def constrained_compare(a, b, tol: float = CV_TIE_TOL) -> Verdict:
    """Constraint domination: feasibility first, then violation, then Pareto.

    Arguments are evaluated solutions (anything with ``f`` and ``cv``).
    """
    cva, cvb = float(a.cv), float(b.cv)
    feas_a, feas_b = cva == 0.0, cvb == 0.0
    if feas_a and not feas_b:
        return Verdict.FIRST_DOMINATES
    if feas_b and not feas_a:
        return Verdict.SECOND_DOMINATES
    if not feas_a and not feas_b and abs(cva - cvb) > tol:
        return Verdict.FIRST_DOMINATES if cva < cvb else Verdict.SECOND_DOMINATES
    return pareto_compare(a.f, b.f)


def nondominated_sort(objectives, cv=None, mode: str = "unconstrained") -> FrontAssignment:
    """Iterative front peeling over a population.

    ``objectives`` is (N, M); ``cv`` is required for constrained mode.
    """
    F = np.atleast_2d(np.asarray(objectives, dtype=float))
    n = F.shape[0]
    if n == 0:
        raise ValueError("cannot sort an empty population")
    if mode == "unconstrained":
        cv_arr = np.zeros(n)
        constrained = False
    elif mode == "constrained":
        if cv is None:
            raise ValueError("constrained mode needs violation values")
        cv_arr = np.asarray(cv, dtype=float)
        if cv_arr.shape != (n,):
            raise ValueError(f"cv length mismatch: {cv_arr.shape} vs {n} solutions")
        constrained = True
    else:
        raise ValueError(f"unknown mode: {mode!r}")
    ranks, count = _kernel.nondominated_ranks(F, cv_arr, constrained, CV_TIE_TOL)
    return FrontAssignment(ranks=ranks, front_count=int(count))


def extract_sets(sample):
    """Indices of the unconstrained (upo) and constrained (cpo) rank-1 sets."""
    u = nondominated_sort(sample.f, mode="unconstrained")
    c = nondominated_sort(sample.f, cv=sample.cv, mode="constrained")
    return np.flatnonzero(u.ranks == 1), np.flatnonzero(c.ranks == 1)
