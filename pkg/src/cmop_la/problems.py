"""Built-in test problems.

Three deliberately simple instances with known structure:

* LIN-1: both objectives live on the line f2 = 1 - f1, so every sample
  point is unconstrained-non-dominated; the single constraint x1 >= 0.2
  makes exactly 80% of the box feasible.
* BNH: two quadratic objectives with a curved feasible region bounded by
  two inequality constraints.
* FREE-1: LIN-1 stripped of its constraint, as an unconstrained control.
"""

import numpy as np

from .core import ProblemSpec

__all__ = ["make_lin1", "make_bnh", "make_free1", "builtin_problem", "BUILTIN_NAMES"]


def make_lin1(n: int = 2) -> ProblemSpec:
    def evaluator(x):
        return (x[0], 1.0 - x[0]), (0.2 - x[0],), ()

    return ProblemSpec(
        name="LIN-1", n=n, M=2, J=1, K=0,
        lower=np.zeros(n), upper=np.ones(n), evaluator=evaluator,
    )


def make_free1(n: int = 2) -> ProblemSpec:
    def evaluator(x):
        return (x[0], 1.0 - x[0]), (), ()

    return ProblemSpec(
        name="FREE-1", n=n, M=2, J=0, K=0,
        lower=np.zeros(n), upper=np.ones(n), evaluator=evaluator,
    )


def make_bnh() -> ProblemSpec:
    def evaluator(x):
        x1, x2 = x[0], x[1]
        f1 = 4.0 * x1**2 + 4.0 * x2**2
        f2 = (x1 - 5.0) ** 2 + (x2 - 5.0) ** 2
        g1 = (x1 - 5.0) ** 2 + x2**2 - 25.0
        g2 = 7.7 - (x1 - 8.0) ** 2 - (x2 + 3.0) ** 2
        return (f1, f2), (g1, g2), ()

    return ProblemSpec(
        name="BNH", n=2, M=2, J=2, K=0,
        lower=np.array([0.0, 0.0]), upper=np.array([5.0, 3.0]), evaluator=evaluator,
    )


_FACTORIES = {
    "LIN-1": make_lin1,
    "BNH": lambda n=2: make_bnh(),
    "FREE-1": make_free1,
}

BUILTIN_NAMES = tuple(_FACTORIES)


def builtin_problem(name: str, n: int = None) -> ProblemSpec:
    """Look up a built-in problem by name, optionally overriding n."""
    if name not in _FACTORIES:
        raise KeyError(f"unknown problem {name!r}; built-ins are {list(_FACTORIES)}")
    if name == "BNH" and n not in (None, 2):
        raise ValueError("BNH is fixed at n=2")
    return _FACTORIES[name]() if n is None else _FACTORIES[name](n)
