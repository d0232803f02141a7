"""Statistical kernels shared by the feature extractors.

Conventions are pinned here once so every feature is reproducible:
skewness is the adjusted Fisher-Pearson coefficient, kurtosis is
bias-adjusted excess kurtosis, quartiles interpolate linearly between
order statistics, and zero-variance inputs yield 0 rather than NaN.
"""

from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

__all__ = [
    "Moments",
    "LinearModelDiag",
    "moments",
    "pearson",
    "spearman",
    "lag1_autocorr",
    "quartile_iqr",
    "linear_model",
    "yeo_johnson_transform",
    "yeo_johnson_fit_transform",
]


@dataclass(frozen=True)
class Moments:
    mean: float
    std: float
    min: float
    max: float
    skewness: float
    kurtosis: float

    @property
    def degenerate(self) -> bool:
        return self.std == 0.0


@dataclass(frozen=True)
class LinearModelDiag:
    r2adj: float
    coeff_range: float
    degenerate: bool = False


def moments(series) -> Moments:
    """Mean, sample std, min, max, adjusted skewness and excess kurtosis.

    The skewness adjustment needs at least 3 points and the kurtosis
    adjustment at least 4; shorter series fall back to the unadjusted
    sample statistics.  A constant series reports 0 for both.
    """
    s = np.asarray(series, dtype=float)
    if s.size == 0:
        raise ValueError("moments of an empty series")
    n = s.size
    mean = float(s.mean())
    dev = s - mean
    m2 = float(np.mean(dev**2))
    std = float(s.std(ddof=1)) if n > 1 else 0.0
    if m2 == 0.0:
        return Moments(mean, 0.0, float(s.min()), float(s.max()), 0.0, 0.0)

    g1 = float(np.mean(dev**3)) / m2**1.5
    if n >= 3:
        skew = g1 * np.sqrt(n * (n - 1)) / (n - 2)
    else:
        skew = g1
    g2 = float(np.mean(dev**4)) / m2**2 - 3.0
    if n >= 4:
        kurt = ((n + 1) * g2 + 6.0) * (n - 1) / ((n - 2) * (n - 3))
    else:
        kurt = g2
    return Moments(mean, std, float(s.min()), float(s.max()), float(skew), float(kurt))


def pearson(x, y) -> float:
    """Sample Pearson correlation; 0 when either side has zero variance."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise ValueError(f"length mismatch: {x.shape} vs {y.shape}")
    if x.size < 2:
        raise ValueError("pearson needs at least 2 points")
    xd = x - x.mean()
    yd = y - y.mean()
    sx = float(np.sqrt(np.sum(xd**2)))
    sy = float(np.sqrt(np.sum(yd**2)))
    if sx == 0.0 or sy == 0.0:
        return 0.0
    r = float(np.sum(xd * yd) / (sx * sy))
    return max(-1.0, min(1.0, r))


def spearman(x, y) -> float:
    """Pearson correlation of fractional ranks (ties get average rank)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise ValueError(f"length mismatch: {x.shape} vs {y.shape}")
    return pearson(rankdata(x), rankdata(y))


def lag1_autocorr(series) -> float:
    """First autocorrelation coefficient; 0 for a constant series."""
    s = np.asarray(series, dtype=float)
    if s.size < 3:
        raise ValueError("lag-1 autocorrelation needs at least 3 points")
    dev = s - s.mean()
    denom = float(np.sum(dev**2))
    if denom == 0.0:
        return 0.0
    num = float(np.sum(dev[:-1] * dev[1:]))
    r = num / denom
    return max(-1.0, min(1.0, r))


def quartile_iqr(series) -> float:
    """Q3 - Q1 with linear interpolation between order statistics."""
    s = np.asarray(series, dtype=float)
    if s.size == 0:
        raise ValueError("quartiles of an empty series")
    q1, q3 = np.quantile(s, [0.25, 0.75])
    return float(q3 - q1)


def linear_model(X, y) -> LinearModelDiag:
    """OLS with intercept: adjusted R^2 and the coefficient magnitude range.

    Uses the minimum-norm least-squares solution, so a rank-deficient
    design does not fail; it is reported through the degenerate flag,
    as is a zero-variance response.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim != 2:
        raise ValueError("X must be 2-D (rows of predictors)")
    rows, n = X.shape
    if y.shape != (rows,):
        raise ValueError(f"length mismatch: {rows} rows vs {y.shape} response")
    if rows < n + 2:
        raise ValueError(f"need at least {n + 2} rows for {n} predictors, got {rows}")

    sst = float(np.sum((y - y.mean()) ** 2))
    design = np.column_stack([np.ones(rows), X])
    beta, _, rank, _ = np.linalg.lstsq(design, y, rcond=None)
    coeffs = np.abs(beta[1:])
    coeff_range = float(coeffs.max() - coeffs.min()) if n > 0 else 0.0
    rank_deficient = rank < n + 1

    if sst == 0.0:
        return LinearModelDiag(0.0, coeff_range, degenerate=True)
    ssr = float(np.sum((y - design @ beta) ** 2))
    r2 = 1.0 - ssr / sst
    r2adj = 1.0 - (1.0 - r2) * (rows - 1) / (rows - n - 1)
    return LinearModelDiag(float(r2adj), coeff_range, degenerate=rank_deficient)


def yeo_johnson_transform(x, lam: float) -> np.ndarray:
    """Four-branch power transform of the input values at a fixed exponent."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    pos = x >= 0
    with np.errstate(over="ignore", invalid="ignore"):
        if lam == 0.0:
            out[pos] = np.log1p(x[pos])
        else:
            out[pos] = (np.power(x[pos] + 1.0, lam) - 1.0) / lam
        neg = ~pos
        if lam == 2.0:
            out[neg] = -np.log1p(-x[neg])
        else:
            out[neg] = -(np.power(1.0 - x[neg], 2.0 - lam) - 1.0) / (2.0 - lam)
    return out


# Exponent grid searched by the fit: [-5, 5] in steps of 0.01.
_YJ_GRID = np.arange(-500, 501) / 100.0


def yeo_johnson_fit_transform(series):
    """Fit the transform exponent by grid-searched Gaussian likelihood.

    Returns (lambda, transformed) where the transformed series is
    standardized to zero mean and unit variance.  A constant series maps
    to lambda 1 and an all-zero output.
    """
    s = np.asarray(series, dtype=float)
    if s.size < 3:
        raise ValueError("fit needs at least 3 points")
    if np.ptp(s) == 0.0:
        return 1.0, np.zeros_like(s)

    jac = np.sum(np.sign(s) * np.log1p(np.abs(s)))
    best_lam, best_llf = 1.0, -np.inf
    n = s.size
    for lam in _YJ_GRID:
        t = yeo_johnson_transform(s, lam)
        if not np.all(np.isfinite(t)):
            continue
        var = float(np.mean((t - t.mean()) ** 2))
        if var <= 0.0:
            continue
        llf = -0.5 * n * np.log(var) + (lam - 1.0) * jac
        if llf > best_llf:
            best_llf, best_lam = llf, float(lam)

    t = yeo_johnson_transform(s, best_lam)
    sd = float(t.std())
    if sd == 0.0:
        return best_lam, np.zeros_like(s)
    return best_lam, (t - t.mean()) / sd
