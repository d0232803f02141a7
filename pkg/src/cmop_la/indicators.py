"""Set-quality indicators: exact hypervolume, generational distance, coverage.

All indicators assume minimization.  Hypervolume is exact for 2 and 3
objectives (sort-and-sweep, and a sweep over z-slices); higher dimensions
raise rather than silently approximating.
"""

from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .errors import UndefinedIndicatorError, UnsupportedDimensionError

__all__ = [
    "DEFAULT_REF_COORD",
    "NormalizationFrame",
    "frame_of",
    "normalize",
    "reference_point",
    "hypervolume",
    "generational_distance",
    "coverage",
]

# Reference coordinate in normalized objective space.
DEFAULT_REF_COORD = 1.1


@dataclass(frozen=True)
class NormalizationFrame:
    fmin: np.ndarray
    fmax: np.ndarray

    def __post_init__(self):
        fmin = np.asarray(self.fmin, dtype=float)
        fmax = np.asarray(self.fmax, dtype=float)
        object.__setattr__(self, "fmin", fmin)
        object.__setattr__(self, "fmax", fmax)
        if fmin.shape != fmax.shape or np.any(fmin > fmax):
            raise ValueError("frame needs fmin <= fmax elementwise")


def frame_of(points) -> NormalizationFrame:
    """Coordinatewise min/max frame of a point set."""
    p = np.atleast_2d(np.asarray(points, dtype=float))
    return NormalizationFrame(p.min(axis=0), p.max(axis=0))


def normalize(points, frame: NormalizationFrame) -> np.ndarray:
    """Map points into [0, 1] per coordinate; degenerate coordinates go to 0."""
    p = np.atleast_2d(np.asarray(points, dtype=float))
    span = frame.fmax - frame.fmin
    out = np.zeros_like(p)
    ok = span > 0
    out[:, ok] = (p[:, ok] - frame.fmin[ok]) / span[ok]
    return out


def reference_point(m: int, coord: float = DEFAULT_REF_COORD) -> np.ndarray:
    return np.full(m, coord)


def _hv2d(points: np.ndarray, r1: float, r2: float) -> float:
    """Exact 2-D hypervolume of points strictly dominating (r1, r2)."""
    if points.shape[0] == 0:
        return 0.0
    order = np.lexsort((points[:, 1], points[:, 0]))
    pts = points[order]
    hv = 0.0
    best_y = r2
    for x, y in pts:
        if y < best_y:
            hv += (r1 - x) * (best_y - y)
            best_y = y
    return hv


def hypervolume(front, ref) -> float:
    """Exact hypervolume between a front and a reference point.

    Points that do not strictly dominate the reference contribute nothing.
    Supports 2 and 3 objectives.
    """
    ref = np.asarray(ref, dtype=float)
    m = ref.shape[0]
    if m > 3 or m < 2:
        raise UnsupportedDimensionError(f"exact hypervolume supports M in {{2, 3}}, got M={m}")
    pts = np.asarray(front, dtype=float).reshape(-1, m)
    if pts.shape[0] == 0:
        return 0.0
    pts = pts[np.all(pts < ref, axis=1)]
    if pts.shape[0] == 0:
        return 0.0
    if m == 2:
        return _hv2d(pts, ref[0], ref[1])

    # Sweep z-slices: between consecutive z-levels the covered area is the
    # 2-D hypervolume of everything at or below the slice floor.
    zs = np.unique(pts[:, 2])
    levels = np.append(zs, ref[2])
    hv = 0.0
    for k in range(zs.size):
        depth = levels[k + 1] - levels[k]
        if depth <= 0:
            continue
        active = pts[pts[:, 2] <= zs[k], :2]
        hv += _hv2d(active, ref[0], ref[1]) * depth
    return hv


def generational_distance(A, B) -> float:
    """Root of summed squared nearest-neighbor distances from A to B, over |A|."""
    A = np.atleast_2d(np.asarray(A, dtype=float))
    B = np.atleast_2d(np.asarray(B, dtype=float))
    if A.shape[0] == 0 or B.shape[0] == 0:
        raise UndefinedIndicatorError("generational distance needs nonempty sets")
    dists, _ = cKDTree(B).query(A)
    return float(np.sqrt(np.sum(dists**2)) / A.shape[0])


def coverage(A, B, tol: float = 1e-12) -> float:
    """Fraction of B weakly dominated by A.

    A point counts as covered when some member of A Pareto-dominates it or
    matches it within ``tol`` per coordinate.
    """
    A = np.atleast_2d(np.asarray(A, dtype=float))
    B = np.atleast_2d(np.asarray(B, dtype=float))
    if B.shape[0] == 0:
        raise UndefinedIndicatorError("coverage needs a nonempty target set")
    if A.shape[0] == 0:
        return 0.0
    covered = 0
    block = max(1, 2_000_000 // max(1, A.shape[0]))
    for start in range(0, B.shape[0], block):
        chunk = B[start : start + block][None, :, :]
        a = A[:, None, :]
        le_all = (a <= chunk).all(axis=2)
        lt_any = (a < chunk).any(axis=2)
        equalish = (np.abs(a - chunk) <= tol).all(axis=2)
        covered += int(((le_all & lt_any) | equalish).any(axis=0).sum())
    return covered / B.shape[0]
