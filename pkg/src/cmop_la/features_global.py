"""Global landscape features computed from one uniform sample set.

Three blocks, one per landscape: the multi-objective block works on
objective values and unconstrained ranks, the violation block on the
violation norm, and the joint block on the interaction between the two
(constrained fronts, their relation to unconstrained fronts, ideal-zone
membership, and front spreads).
"""

import numpy as np
from scipy.spatial import cKDTree
from scipy.spatial.distance import pdist

from . import stats
from .dominance import nondominated_sort
from .feature_vector import FeatureVector
from .indicators import (
    DEFAULT_REF_COORD,
    frame_of,
    generational_distance,
    coverage,
    hypervolume,
    normalize,
    reference_point,
)

__all__ = [
    "MO_GLOBAL_NAMES",
    "CV_GLOBAL_NAMES",
    "MOV_GLOBAL_NAMES",
    "GLOBAL_FEATURE_NAMES",
    "mo_global",
    "cv_global",
    "mov_global",
    "global_features",
]

MO_GLOBAL_NAMES = (
    "upo_n", "uhv", "corr_obj",
    "mean_f", "std_f", "max_f", "skew_f", "kurt_f",
    "kurt_avg", "kurt_min", "kurt_max", "kurt_rnge",
    "skew_avg", "skew_min", "skew_max", "skew_rnge",
    "f_mdl_r2", "f_range_coeff",
)

CV_GLOBAL_NAMES = (
    "min_cv", "skew_cv", "kurt_cv",
    "cv_mdl_r2", "cv_range_coeff", "dist_c_corr",
)

MOV_GLOBAL_NAMES = (
    "fsr", "po_n", "hv", "cpo_upo_n", "hv_uhv_n",
    "GD_cpo_upo", "cover_cpo_upo",
    "corr_cobj_min", "corr_cobj_max", "corr_cf",
    "piz_ob_min", "piz_ob_max", "piz_f",
    "ps_dist_max", "ps_dist_mean", "ps_dist_iqr_mean",
    "pf_dist_max", "pf_dist_mean", "pf_dist_iqr_mean",
)

GLOBAL_FEATURE_NAMES = MO_GLOBAL_NAMES + CV_GLOBAL_NAMES + MOV_GLOBAL_NAMES

# A solution sits in the ideal zone when both its min-max normalized
# quality and its normalized violation fall at or below this cut.
IDEAL_ZONE_CUT = 0.25


class _SampleContext:
    """Shared intermediate results so the three blocks sort only once."""

    def __init__(self, sample):
        size = len(sample)
        if size < sample.problem.n + 2:
            raise ValueError(
                f"need at least n + 2 = {sample.problem.n + 2} samples, got {size}"
            )
        self.sample = sample
        self.frame = frame_of(sample.f)
        self.fn = normalize(sample.f, self.frame)
        self.ref = reference_point(sample.problem.M)
        self.u_assign = nondominated_sort(sample.f, mode="unconstrained")
        self.c_assign = nondominated_sort(sample.f, cv=sample.cv, mode="constrained")
        self.upo = np.flatnonzero(self.u_assign.ranks == 1)
        self.cpo = np.flatnonzero(self.c_assign.ranks == 1)
        self.uhv = hypervolume(self.fn[self.upo], self.ref)


def _minmax(values: np.ndarray) -> np.ndarray:
    span = np.ptp(values)
    if span == 0:
        return np.zeros_like(values, dtype=float)
    return (values - values.min()) / span


def _pearson_flagged(x, y):
    value = stats.pearson(x, y)
    return value, np.ptp(x) == 0 or np.ptp(y) == 0


def mo_global(sample, _ctx=None) -> FeatureVector:
    """Multi-objective block: unconstrained front size and hypervolume,
    objective correlation, rank distribution, and variable scaling."""
    ctx = _ctx or _SampleContext(sample)
    fv = FeatureVector()
    size = len(sample)
    F = sample.f
    m_obj = sample.problem.M

    fv.set("upo_n", ctx.upo.size / size)
    fv.set("uhv", ctx.uhv)

    pair_corrs, pair_flags = [], []
    for a in range(m_obj):
        for b in range(a + 1, m_obj):
            value, flagged = _pearson_flagged(F[:, a], F[:, b])
            pair_corrs.append(value)
            pair_flags.append(flagged)
    fv.set("corr_obj", float(np.mean(pair_corrs)), flagged=any(pair_flags))

    # Rank statistics use ranks normalized by the number of fronts.
    nranks = ctx.u_assign.ranks / ctx.u_assign.front_count
    mom = stats.moments(nranks)
    fv.set("mean_f", mom.mean)
    fv.set("std_f", mom.std)
    fv.set("max_f", mom.max)
    fv.set("skew_f", mom.skewness, flagged=mom.degenerate)
    fv.set("kurt_f", mom.kurtosis, flagged=mom.degenerate)

    per_obj = [stats.moments(F[:, m]) for m in range(m_obj)]
    any_deg = any(m.degenerate for m in per_obj)
    kurts = np.array([m.kurtosis for m in per_obj])
    skews = np.array([m.skewness for m in per_obj])
    fv.set("kurt_avg", kurts.mean(), flagged=any_deg)
    fv.set("kurt_min", kurts.min(), flagged=any_deg)
    fv.set("kurt_max", kurts.max(), flagged=any_deg)
    fv.set("kurt_rnge", np.ptp(kurts), flagged=any_deg)
    fv.set("skew_avg", skews.mean(), flagged=any_deg)
    fv.set("skew_min", skews.min(), flagged=any_deg)
    fv.set("skew_max", skews.max(), flagged=any_deg)
    fv.set("skew_rnge", np.ptp(skews), flagged=any_deg)

    diag = stats.linear_model(sample.x, nranks)
    fv.set("f_mdl_r2", diag.r2adj, flagged=diag.degenerate)
    fv.set("f_range_coeff", diag.coeff_range, flagged=diag.degenerate)
    return fv


def cv_global(sample, _ctx=None) -> FeatureVector:
    """Violation block: violation distribution, variable scaling of the
    violation surface, and violation-distance correlation."""
    _ctx = _ctx or _SampleContext(sample)
    fv = FeatureVector()
    cv = sample.cv

    mom = stats.moments(cv)
    fv.set("min_cv", mom.min)
    fv.set("skew_cv", mom.skewness, flagged=mom.degenerate)
    fv.set("kurt_cv", mom.kurtosis, flagged=mom.degenerate)

    diag = stats.linear_model(sample.x, cv)
    fv.set("cv_mdl_r2", diag.r2adj, flagged=diag.degenerate)
    fv.set("cv_range_coeff", diag.coeff_range, flagged=diag.degenerate)

    # Distance to the nearest feasible sample point (0 for feasible points);
    # with nothing feasible, distance to the least-violating point.
    feasible = cv == 0.0
    if feasible.all():
        dist = np.zeros(len(sample))
    elif feasible.any():
        dist, _ = cKDTree(sample.x[feasible]).query(sample.x)
    else:
        target = sample.x[int(np.argmin(cv))]
        dist = np.sqrt(np.sum((sample.x - target) ** 2, axis=1))
    value, flagged = _pearson_flagged(cv, dist)
    fv.set("dist_c_corr", value, flagged=flagged)
    return fv


def _pairwise_distance_features(fv: FeatureVector, prefix: str, points: np.ndarray):
    unique = np.unique(points, axis=0)
    if unique.shape[0] < 2:
        for suffix in ("max", "mean", "iqr_mean"):
            fv.set(f"{prefix}_{suffix}", 0.0, flagged=True)
        return
    d = pdist(unique)
    fv.set(f"{prefix}_max", float(d.max()))
    fv.set(f"{prefix}_mean", float(d.mean()))
    fv.set(f"{prefix}_iqr_mean", stats.quartile_iqr(d))


def mov_global(sample, _ctx=None) -> FeatureVector:
    """Joint block: feasibility, constrained front and its relation to the
    unconstrained front, objective-violation correlations, ideal zone,
    and front spreads in both spaces."""
    ctx = _ctx or _SampleContext(sample)
    fv = FeatureVector()
    size = len(sample)
    cv = sample.cv
    cpo, upo = ctx.cpo, ctx.upo

    fv.set("fsr", float(np.mean(cv == 0.0)))
    fv.set("po_n", cpo.size / size)
    hv = hypervolume(ctx.fn[cpo], ctx.ref)
    fv.set("hv", hv)
    fv.set("cpo_upo_n", cpo.size / upo.size)
    fv.set("hv_uhv_n", hv / ctx.uhv if ctx.uhv > 0 else 0.0, flagged=ctx.uhv == 0)
    fv.set("GD_cpo_upo", generational_distance(ctx.fn[cpo], ctx.fn[upo]))
    fv.set("cover_cpo_upo", coverage(ctx.fn[cpo], ctx.fn[upo]))

    corrs, flags = zip(*(
        _pearson_flagged(sample.f[:, m], cv) for m in range(sample.problem.M)
    ))
    fv.set("corr_cobj_min", min(corrs), flagged=any(flags))
    fv.set("corr_cobj_max", max(corrs), flagged=any(flags))

    cranks = ctx.c_assign.ranks.astype(float)
    fv.set("corr_cf", stats.spearman(cv, cranks),
           flagged=np.ptp(cv) == 0 or np.ptp(cranks) == 0)

    cv_norm = _minmax(cv)
    in_cv_zone = cv_norm <= IDEAL_ZONE_CUT
    piz_ob = [
        float(np.mean((_minmax(sample.f[:, m]) <= IDEAL_ZONE_CUT) & in_cv_zone))
        for m in range(sample.problem.M)
    ]
    fv.set("piz_ob_min", min(piz_ob))
    fv.set("piz_ob_max", max(piz_ob))
    fv.set("piz_f", float(np.mean((_minmax(cranks) <= IDEAL_ZONE_CUT) & in_cv_zone)))

    _pairwise_distance_features(fv, "ps_dist", sample.x[cpo])
    _pairwise_distance_features(fv, "pf_dist", ctx.fn[cpo])
    return fv


def global_features(sample) -> FeatureVector:
    """All global features of one sample set, sorting only once."""
    ctx = _SampleContext(sample)
    fv = mo_global(sample, _ctx=ctx)
    fv.merge(cv_global(sample, _ctx=ctx))
    fv.merge(mov_global(sample, _ctx=ctx))
    return fv
