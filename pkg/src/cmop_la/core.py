"""Problem model, evaluation, sampling, random walks, and sample-file I/O.

Constraint convention: an inequality value g <= 0 means satisfied, and an
equality is satisfied when |h| falls within the relaxation epsilon.  The
violation norm aggregates the positive parts in quadrature, so cv == 0.0
exactly characterizes feasibility.
"""

import csv
import json
import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import BoundsError, EvaluationError, ParseError, ShapeError

__all__ = [
    "EQUALITY_EPSILON",
    "ProblemSpec",
    "EvaluatedSolution",
    "SampleSet",
    "WalkTrace",
    "compute_violation",
    "evaluate",
    "evaluate_batch",
    "uniform_sample",
    "walk_params",
    "random_walk",
    "load_problem_meta",
    "load_sample_file",
]

# Relaxation applied to equality constraints before penalization.
EQUALITY_EPSILON = 1e-4

# Walk step bound as a fraction of each coordinate's domain range.
WALK_STEP_FRACTION = 0.02


@dataclass(frozen=True)
class ProblemSpec:
    """A box-bounded problem with M objectives and J + K constraints.

    ``evaluator`` maps a decision vector to (f, g, h) tuples; it must be
    deterministic and re-entrant.  Metadata-only specs (external sample
    files) carry ``evaluator=None`` and cannot be sampled or walked.
    """

    name: str
    n: int
    M: int
    J: int
    K: int
    lower: np.ndarray
    upper: np.ndarray
    evaluator: callable = None

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if self.n < 1:
            raise ValueError("need at least one decision variable")
        if self.M < 2:
            raise ValueError("need at least two objectives")
        if self.J < 0 or self.K < 0:
            raise ValueError("constraint counts cannot be negative")
        if lower.shape != (self.n,) or upper.shape != (self.n,):
            raise ShapeError(f"bounds must have length {self.n}")
        if np.any(lower >= upper):
            raise ValueError("lower bounds must be strictly below upper bounds")

    @property
    def range(self) -> np.ndarray:
        return self.upper - self.lower


@dataclass(frozen=True)
class EvaluatedSolution:
    x: np.ndarray
    f: np.ndarray
    g: np.ndarray
    h: np.ndarray
    cv: float

    @property
    def feasible(self) -> bool:
        return self.cv == 0.0


class SampleSet:
    """Evaluated solutions of one problem, stored columnwise for speed."""

    def __init__(self, problem: ProblemSpec, x, f, g, h, cv, seed: int = 0,
                 method: str = "uniform"):
        self.problem = problem
        self.x = np.atleast_2d(np.asarray(x, dtype=float))
        self.f = np.atleast_2d(np.asarray(f, dtype=float))
        self.g = np.asarray(g, dtype=float).reshape(len(self.x), problem.J)
        self.h = np.asarray(h, dtype=float).reshape(len(self.x), problem.K)
        self.cv = np.asarray(cv, dtype=float).reshape(len(self.x))
        self.seed = seed
        self.method = method
        if len(self.x) == 0:
            raise ValueError("a sample set cannot be empty")
        if self.f.shape != (len(self.x), problem.M):
            raise ShapeError(f"objectives must be ({len(self.x)}, {problem.M})")

    def __len__(self) -> int:
        return self.x.shape[0]

    @property
    def solutions(self):
        return [
            EvaluatedSolution(self.x[i], self.f[i], self.g[i], self.h[i], float(self.cv[i]))
            for i in range(len(self))
        ]


@dataclass
class WalkTrace:
    """A bounded-step walk: per-step current solution plus its neighborhood.

    Arrays are indexed (step,) for currents and (step, neighbor,) for the
    N - 1 sampled neighbors; the current counts as the N-th member of its
    own neighborhood.
    """

    problem: ProblemSpec
    x: np.ndarray        # (L, n)
    f: np.ndarray        # (L, M)
    cv: np.ndarray       # (L,)
    nx: np.ndarray       # (L, N-1, n)
    nf: np.ndarray       # (L, N-1, M)
    ncv: np.ndarray      # (L, N-1)
    neighborhood_size: int
    step_fraction: float = WALK_STEP_FRACTION
    seed: int = 0

    def __len__(self) -> int:
        return self.x.shape[0]

    @property
    def steps(self):
        out = []
        for t in range(len(self)):
            current = EvaluatedSolution(self.x[t], self.f[t], np.empty(0), np.empty(0),
                                        float(self.cv[t]))
            neigh = [
                EvaluatedSolution(self.nx[t, b], self.nf[t, b], np.empty(0), np.empty(0),
                                  float(self.ncv[t, b]))
                for b in range(self.nx.shape[1])
            ]
            out.append((current, neigh))
        return out


def compute_violation(g, h, epsilon: float = EQUALITY_EPSILON) -> float:
    """Quadrature norm of constraint infractions; 0.0 means feasible."""
    if epsilon < 0:
        raise ValueError("epsilon must be nonnegative")
    g = np.asarray(g, dtype=float).ravel()
    h = np.asarray(h, dtype=float).ravel()
    if g.size and not np.all(np.isfinite(g)):
        bad = int(np.flatnonzero(~np.isfinite(g))[0])
        raise EvaluationError(f"inequality constraint {bad} is non-finite")
    if h.size and not np.all(np.isfinite(h)):
        bad = int(np.flatnonzero(~np.isfinite(h))[0])
        raise EvaluationError(f"equality constraint {bad} is non-finite")
    gi = np.maximum(0.0, g)
    hi = np.maximum(0.0, np.abs(h) - epsilon)
    return float(np.sqrt(np.sum(gi**2) + np.sum(hi**2)))


def _check_bounds(problem: ProblemSpec, x: np.ndarray):
    bad = np.flatnonzero((x < problem.lower) | (x > problem.upper))
    if bad.size:
        raise BoundsError(bad.tolist())


def _call_evaluator(problem: ProblemSpec, x: np.ndarray):
    if problem.evaluator is None:
        raise EvaluationError(f"problem {problem.name!r} has no evaluator")
    f, g, h = problem.evaluator(x)
    f = np.asarray(f, dtype=float).ravel()
    g = np.asarray(g, dtype=float).ravel()
    h = np.asarray(h, dtype=float).ravel()
    if f.shape != (problem.M,):
        raise ShapeError(f"evaluator returned {f.size} objectives, expected {problem.M}")
    if g.shape != (problem.J,):
        raise ShapeError(f"evaluator returned {g.size} inequality values, expected {problem.J}")
    if h.shape != (problem.K,):
        raise ShapeError(f"evaluator returned {h.size} equality values, expected {problem.K}")
    if not np.all(np.isfinite(f)):
        bad = int(np.flatnonzero(~np.isfinite(f))[0])
        raise EvaluationError(f"objective {bad} is non-finite")
    return f, g, h


def evaluate(problem: ProblemSpec, x) -> EvaluatedSolution:
    """Evaluate one in-bounds decision vector."""
    x = np.asarray(x, dtype=float).ravel()
    if x.shape != (problem.n,):
        raise ShapeError(f"decision vector must have length {problem.n}")
    _check_bounds(problem, x)
    f, g, h = _call_evaluator(problem, x)
    return EvaluatedSolution(x, f, g, h, compute_violation(g, h))


def evaluate_batch(problem: ProblemSpec, X: np.ndarray):
    """Evaluate rows of X; returns (f, g, h, cv) arrays."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    count = X.shape[0]
    F = np.empty((count, problem.M))
    G = np.empty((count, problem.J))
    H = np.empty((count, problem.K))
    CV = np.empty(count)
    for i in range(count):
        f, g, h = _call_evaluator(problem, X[i])
        F[i], G[i], H[i] = f, g, h
        CV[i] = compute_violation(g, h)
    return F, G, H, CV


def uniform_sample(problem: ProblemSpec, count: int = None, seed: int = 0) -> SampleSet:
    """Draw ``count`` i.i.d. uniform points in the box (default n * 10^3)."""
    if count is None:
        count = problem.n * 1000
    if count < 1:
        raise ValueError("sample count must be at least 1")
    rng = np.random.default_rng(seed)
    X = problem.lower + problem.range * rng.random((count, problem.n))
    F, G, H, CV = evaluate_batch(problem, X)
    return SampleSet(problem, X, F, G, H, CV, seed=seed, method="uniform")


def walk_params(n: int):
    """Neighborhood size 2n + 1 and walk length floor((n / N) * 10^3), min 2."""
    N = 2 * n + 1
    length = max(2, math.floor(n / N * 1000))
    return N, length


def _reflect(y: np.ndarray, lower: np.ndarray, upper: np.ndarray) -> np.ndarray:
    over = y > upper
    y[over] = 2.0 * upper[over] - y[over]
    under = y < lower
    y[under] = 2.0 * lower[under] - y[under]
    return np.clip(y, lower, upper)


def random_walk(problem: ProblemSpec, seed: int = 0) -> WalkTrace:
    """Simple reflecting random walk with a uniform neighborhood per step.

    Each move perturbs every coordinate by a uniform draw within +-2% of
    its range, reflecting at the bounds; neighbors are drawn uniformly in
    the same-sized hypercube around the current point, clipped to bounds.
    """
    n = problem.n
    N, length = walk_params(n)
    step = WALK_STEP_FRACTION * problem.range
    rng = np.random.default_rng(seed)

    X = np.empty((length, n))
    NX = np.empty((length, N - 1, n))
    x = problem.lower + problem.range * rng.random(n)
    for t in range(length):
        X[t] = x
        offsets = rng.uniform(-1.0, 1.0, size=(N - 1, n)) * step
        NX[t] = np.clip(x + offsets, problem.lower, problem.upper)
        if t + 1 < length:
            x = _reflect(x + rng.uniform(-1.0, 1.0, size=n) * step,
                         problem.lower, problem.upper)

    F, _, _, CV = evaluate_batch(problem, X)
    NF_flat, _, _, NCV_flat = evaluate_batch(problem, NX.reshape(-1, n))
    return WalkTrace(
        problem=problem,
        x=X,
        f=F,
        cv=CV,
        nx=NX,
        nf=NF_flat.reshape(length, N - 1, problem.M),
        ncv=NCV_flat.reshape(length, N - 1),
        neighborhood_size=N,
        seed=seed,
    )


def load_problem_meta(path) -> ProblemSpec:
    """Read a problem-metadata JSON: {name, n, M, J, K, lower, upper}."""
    with open(path, encoding="utf-8") as fh:
        meta = json.load(fh)
    missing = [k for k in ("name", "n", "M", "J", "K", "lower", "upper") if k not in meta]
    if missing:
        raise ParseError(1, f"problem metadata missing keys {missing}")
    return ProblemSpec(
        name=str(meta["name"]),
        n=int(meta["n"]),
        M=int(meta["M"]),
        J=int(meta["J"]),
        K=int(meta["K"]),
        lower=np.asarray(meta["lower"], dtype=float),
        upper=np.asarray(meta["upper"], dtype=float),
        evaluator=None,
    )


def sample_csv_header(problem: ProblemSpec, with_cv: bool = False):
    cols = (
        [f"x{i + 1}" for i in range(problem.n)]
        + [f"f{i + 1}" for i in range(problem.M)]
        + [f"g{i + 1}" for i in range(problem.J)]
        + [f"h{i + 1}" for i in range(problem.K)]
    )
    return cols + ["cv"] if with_cv else cols


def load_sample_file(path, problem: ProblemSpec) -> SampleSet:
    """Parse a sample CSV against problem metadata.

    Constraint violations are always recomputed from the g/h columns; a
    provided cv column is cross-checked and overridden with a warning if
    it disagrees beyond 1e-9.
    """
    path = Path(path)
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(1, "file is empty") from None
        header = [c.strip() for c in header]
        expected = sample_csv_header(problem)
        has_cv = header == expected + ["cv"]
        if not has_cv and header != expected:
            raise ShapeError(
                f"row 1: header {header!r} does not match problem "
                f"{problem.name!r} (expected {expected} with optional trailing cv)"
            )
        width = len(expected) + (1 if has_cv else 0)

        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != width:
                raise ParseError(lineno, f"expected {width} columns, got {len(row)}")
            try:
                values = [float(v) for v in row]
            except ValueError as exc:
                raise ParseError(lineno, f"non-numeric value ({exc})") from None
            if not all(math.isfinite(v) for v in values):
                raise ParseError(lineno, "non-finite value")
            rows.append(values)

    if not rows:
        raise ParseError(2, "no data rows")
    data = np.asarray(rows)
    n, m, j, k = problem.n, problem.M, problem.J, problem.K
    X = data[:, :n]
    F = data[:, n : n + m]
    G = data[:, n + m : n + m + j]
    H = data[:, n + m + j : n + m + j + k]

    for i in range(len(X)):
        bad = np.flatnonzero((X[i] < problem.lower) | (X[i] > problem.upper))
        if bad.size:
            raise ParseError(i + 2, f"decision vector out of bounds at indices {bad.tolist()}")

    CV = np.array([compute_violation(G[i], H[i]) for i in range(len(X))])
    if has_cv:
        given = data[:, -1]
        bad = np.flatnonzero(np.abs(given - CV) > 1e-9)
        if bad.size:
            warnings.warn(
                f"{path.name}: cv column disagrees with g/h on {bad.size} row(s) "
                f"(first at row {int(bad[0]) + 2}); recomputed values win",
                stacklevel=2,
            )
    return SampleSet(problem, X, F, G, H, CV, seed=0, method="external-file")
