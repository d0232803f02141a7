"""Landscape analysis toolkit for constrained multi-objective optimization.

Samples problems, extracts global and random-walk landscape features over
the objective, violation, and joint objective-violation landscapes,
ingests algorithm performance, and projects instances into a 2-D space.
"""

__version__ = "0.1.0"

from .core import (
    EvaluatedSolution,
    ProblemSpec,
    SampleSet,
    WalkTrace,
    compute_violation,
    evaluate,
    load_problem_meta,
    load_sample_file,
    random_walk,
    uniform_sample,
    walk_params,
)
from .dominance import (
    FrontAssignment,
    Verdict,
    constrained_compare,
    extract_sets,
    kernel_backend,
    nondominated_sort,
    pareto_compare,
)
from .indicators import (
    NormalizationFrame,
    coverage,
    frame_of,
    generational_distance,
    hypervolume,
    normalize,
)
from .problems import BUILTIN_NAMES, builtin_problem, make_bnh, make_free1, make_lin1

__all__ = [
    "__version__",
    "BUILTIN_NAMES",
    "EvaluatedSolution",
    "FrontAssignment",
    "NormalizationFrame",
    "ProblemSpec",
    "SampleSet",
    "Verdict",
    "WalkTrace",
    "builtin_problem",
    "compute_violation",
    "constrained_compare",
    "coverage",
    "evaluate",
    "extract_sets",
    "frame_of",
    "generational_distance",
    "hypervolume",
    "kernel_backend",
    "load_problem_meta",
    "load_sample_file",
    "make_bnh",
    "make_free1",
    "make_lin1",
    "nondominated_sort",
    "normalize",
    "pareto_compare",
    "random_walk",
    "uniform_sample",
    "walk_params",
]
