"""Random-walk landscape features computed from a walk trace.

Every feature is the mean or the lag-1 autocorrelation of a per-step
series over the walk.  Per-step set statistics (local fronts, local
hypervolumes, violation summaries) include the current solution as the
N-th member of its own neighborhood; pairwise distance statistics
compare the current solution against its N - 1 sampled neighbors.

Objective values and violation norms are min-max normalized over the
whole walk (currents plus neighbors) so that per-step hypervolume and
joint-space distances are comparable along the walk.
"""

from dataclasses import dataclass

import numpy as np

from . import stats
from .dominance import CV_TIE_TOL, nondominated_sort
from .feature_vector import FeatureVector
from .indicators import frame_of, hypervolume, normalize, reference_point

__all__ = ["WALK_FEATURE_NAMES", "StepSeries", "step_series", "walk_features"]

WALK_FEATURE_NAMES = (
    # objective landscape
    "dist_f_avg_rws", "dist_f_r1_rws",
    "dist_f_dist_x_avg_rws", "dist_f_dist_x_avg_r1",
    "nuhv_avg_rws", "nuhv_r1_rws",
    # violation landscape
    "dist_c_avg_rws", "dist_c_r1_rws",
    "dist_c_dist_x_avg_rws", "dist_c_dist_x_r1_rws",
    "ncv_avg_rws", "ncv_r1_rws",
    "nncv_avg_rws", "nncv_r1_rws",
    "bncv_avg_rws", "bncv_r1_rws",
    # joint landscape
    "sup_avg_rws", "sup_r1_rws",
    "inf_avg_rws", "inf_r1_rws",
    "inc_avg_rws", "inc_r1_rws",
    "lnd_avg_rws", "lnd_r1_rws",
    "dist_x_avg_rws", "dist_x_r1_rws",
    "dist_f_c_avg_rws", "dist_f_c_r1_rws",
    "dist_f_c_dist_x_avg_rws", "dist_f_c_dist_x_avg_r1",
    "nhv_avg_rws", "nhv_r1_rws",
    "bhv_avg_rws", "bhv_r1_rws",
    "nfronts_avg_rws", "nfronts_r1_rws",
    "rfbx_rws_avg",
)


@dataclass
class StepSeries:
    """Raw per-step series; one value per walk step."""

    dist_x: np.ndarray
    dist_f: np.ndarray
    dist_c: np.ndarray
    dist_f_c: np.ndarray
    ncv: np.ndarray
    nncv: np.ndarray
    bncv: np.ndarray
    sup: np.ndarray
    inf: np.ndarray
    inc: np.ndarray
    lnd: np.ndarray
    nfronts: np.ndarray
    nuhv: np.ndarray
    nhv: np.ndarray
    bhv: np.ndarray
    feasible: np.ndarray


def _dominance_fractions(f_c, cv_c, nf, ncv, tol=CV_TIE_TOL):
    """Fractions of neighbors dominating / dominated by the current point
    under constraint domination."""
    feas_c = cv_c == 0.0
    feas_b = ncv == 0.0
    le_cb = (f_c <= nf).all(axis=1)
    lt_cb = (f_c < nf).any(axis=1)
    c_pareto_b = le_cb & lt_cb
    b_pareto_c = (nf <= f_c).all(axis=1) & (nf < f_c).any(axis=1)

    both_inf = ~feas_c & ~feas_b
    cvd = cv_c - ncv
    tied = (feas_c & feas_b) | (both_inf & (np.abs(cvd) <= tol))
    c_dom_b = (feas_c & ~feas_b) | (both_inf & (cvd < -tol)) | (tied & c_pareto_b)
    b_dom_c = (~feas_c & feas_b) | (both_inf & (cvd > tol)) | (tied & b_pareto_c)
    return float(np.mean(b_dom_c)), float(np.mean(c_dom_b))


def step_series(walk) -> StepSeries:
    """Evaluate all per-step series of a walk trace."""
    length = len(walk)
    if length < 3:
        raise ValueError("walk features need at least 3 steps")
    n_neigh = walk.nx.shape[1]
    m_obj = walk.f.shape[1]

    all_f = np.vstack([walk.f, walk.nf.reshape(-1, m_obj)])
    obj_frame = frame_of(all_f)
    fn_c = normalize(walk.f, obj_frame)
    fn_b = normalize(walk.nf.reshape(-1, m_obj), obj_frame).reshape(length, n_neigh, m_obj)

    all_cv = np.concatenate([walk.cv, walk.ncv.ravel()])
    cv_span = np.ptp(all_cv)
    if cv_span > 0:
        cvn_c = (walk.cv - all_cv.min()) / cv_span
        cvn_b = (walk.ncv - all_cv.min()) / cv_span
    else:
        cvn_c = np.zeros(length)
        cvn_b = np.zeros_like(walk.ncv)

    ref = reference_point(m_obj)
    out = StepSeries(*(np.zeros(length) for _ in range(15)),
                     feasible=np.zeros(length, dtype=bool))

    for t in range(length):
        out.dist_x[t] = np.mean(np.sqrt(np.sum((walk.nx[t] - walk.x[t]) ** 2, axis=1)))
        df = np.sqrt(np.sum((fn_b[t] - fn_c[t]) ** 2, axis=1))
        out.dist_f[t] = df.mean()
        out.dist_c[t] = np.mean(np.abs(walk.ncv[t] - walk.cv[t]))
        out.dist_f_c[t] = np.mean(np.sqrt(df**2 + (cvn_b[t] - cvn_c[t]) ** 2))

        out.sup[t], out.inf[t] = _dominance_fractions(
            walk.f[t], float(walk.cv[t]), walk.nf[t], walk.ncv[t]
        )
        out.inc[t] = 1.0 - out.sup[t] - out.inf[t]

        # Neighborhood set = current plus neighbors.
        group_f = np.vstack([walk.f[t : t + 1], walk.nf[t]])
        group_cv = np.concatenate([walk.cv[t : t + 1], walk.ncv[t]])
        group_fn = np.vstack([fn_c[t : t + 1], fn_b[t]])

        cassign = nondominated_sort(group_f, cv=group_cv, mode="constrained")
        best = cassign.ranks == 1
        out.lnd[t] = float(np.mean(best))
        out.nfronts[t] = cassign.front_count
        out.bncv[t] = float(group_cv[best].mean())
        out.bhv[t] = hypervolume(group_fn[best], ref)

        uassign = nondominated_sort(group_f, mode="unconstrained")
        out.nuhv[t] = hypervolume(group_fn[uassign.ranks == 1], ref)

        feas = group_cv == 0.0
        out.nhv[t] = hypervolume(group_fn[feas], ref) if feas.any() else 0.0

        out.ncv[t] = walk.cv[t]
        out.nncv[t] = float(group_cv.mean())
        out.feasible[t] = walk.cv[t] == 0.0
    return out


def _avg_r1(fv: FeatureVector, avg_name: str, r1_name: str, series: np.ndarray):
    fv.set(avg_name, float(series.mean()))
    if series.size < 3:
        fv.set(r1_name, 0.0, flagged=True)
    else:
        fv.set(r1_name, stats.lag1_autocorr(series), flagged=np.ptp(series) == 0)


def _ratio_series(fv, avg_name, r1_name, numer, dist_x):
    """Per-step ratio to the decision-space distance; zero-distance steps
    are skipped and flagged."""
    mask = dist_x > 0
    if not mask.any():
        fv.set(avg_name, 0.0, flagged=True)
        fv.set(r1_name, 0.0, flagged=True)
        return
    ratio = numer[mask] / dist_x[mask]
    skipped = not mask.all()
    fv.set(avg_name, float(ratio.mean()), flagged=skipped)
    if ratio.size < 3:
        fv.set(r1_name, 0.0, flagged=True)
    else:
        fv.set(r1_name, stats.lag1_autocorr(ratio),
               flagged=skipped or np.ptp(ratio) == 0)


def walk_features(walk) -> FeatureVector:
    """All random-walk features of one trace."""
    s = step_series(walk)
    fv = FeatureVector()

    _avg_r1(fv, "dist_f_avg_rws", "dist_f_r1_rws", s.dist_f)
    _ratio_series(fv, "dist_f_dist_x_avg_rws", "dist_f_dist_x_avg_r1", s.dist_f, s.dist_x)
    _avg_r1(fv, "nuhv_avg_rws", "nuhv_r1_rws", s.nuhv)

    _avg_r1(fv, "dist_c_avg_rws", "dist_c_r1_rws", s.dist_c)
    _ratio_series(fv, "dist_c_dist_x_avg_rws", "dist_c_dist_x_r1_rws", s.dist_c, s.dist_x)
    _avg_r1(fv, "ncv_avg_rws", "ncv_r1_rws", s.ncv)
    _avg_r1(fv, "nncv_avg_rws", "nncv_r1_rws", s.nncv)
    _avg_r1(fv, "bncv_avg_rws", "bncv_r1_rws", s.bncv)

    _avg_r1(fv, "sup_avg_rws", "sup_r1_rws", s.sup)
    _avg_r1(fv, "inf_avg_rws", "inf_r1_rws", s.inf)
    _avg_r1(fv, "inc_avg_rws", "inc_r1_rws", s.inc)
    _avg_r1(fv, "lnd_avg_rws", "lnd_r1_rws", s.lnd)
    _avg_r1(fv, "dist_x_avg_rws", "dist_x_r1_rws", s.dist_x)
    _avg_r1(fv, "dist_f_c_avg_rws", "dist_f_c_r1_rws", s.dist_f_c)
    _ratio_series(fv, "dist_f_c_dist_x_avg_rws", "dist_f_c_dist_x_avg_r1",
                  s.dist_f_c, s.dist_x)
    _avg_r1(fv, "nhv_avg_rws", "nhv_r1_rws", s.nhv)
    _avg_r1(fv, "bhv_avg_rws", "bhv_r1_rws", s.bhv)
    _avg_r1(fv, "nfronts_avg_rws", "nfronts_r1_rws", s.nfronts.astype(float))

    crossings = s.feasible[1:] != s.feasible[:-1]
    fv.set("rfbx_rws_avg", float(np.mean(crossings)))
    return fv
