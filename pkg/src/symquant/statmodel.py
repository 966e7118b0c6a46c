"""Finite statistical models, sufficiency, completeness, and unitarization.

A model is a row-stochastic matrix ``probs[param][outcome]``.  A statistic
reduces outcomes to fewer values; the expectation operator maps functions
of the statistic to functions of the parameter.  When the statistic is
complete, that operator has a unitary polar factor connecting the two
function spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

import numpy as np

from .groups import ParameterFunction

SUFFICIENCY_TOL = 1e-10
COMPLETENESS_TOL = 1e-10


@dataclass(frozen=True)
class StatisticalModel:
    """Outcome distributions ``probs[i]`` for each parameter value ``params[i]``."""

    params: tuple
    outcomes: tuple
    probs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        object.__setattr__(self, "outcomes", tuple(self.outcomes))
        p = np.asarray(self.probs, dtype=float).copy()
        if p.shape != (len(self.params), len(self.outcomes)):
            raise ValueError("probs shape must be (n_params, n_outcomes)")
        if p.min() < 0:
            raise ValueError("probabilities must be nonnegative")
        if np.abs(p.sum(axis=1) - 1.0).max() > 1e-12:
            raise ValueError("rows must sum to one")
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)


@dataclass(frozen=True)
class Statistic:
    """A reduction of outcomes, as a total map outcome -> value."""

    mapping: Mapping

    def __post_init__(self):
        object.__setattr__(self, "mapping", dict(self.mapping))

    def __call__(self, outcome):
        return self.mapping[outcome]


def identity_statistic(model: StatisticalModel) -> Statistic:
    return Statistic({y: y for y in model.outcomes})


def statistic_values(model: StatisticalModel, stat: Statistic) -> tuple:
    """Distinct statistic values, ordered by first appearance in the outcomes."""
    missing = [y for y in model.outcomes if y not in stat.mapping]
    if missing:
        raise ValueError(f"statistic not defined on outcomes {missing!r}")
    return tuple(dict.fromkeys(stat.mapping[y] for y in model.outcomes))


def _value_columns(model: StatisticalModel, stat: Statistic) -> list[np.ndarray]:
    values = statistic_values(model, stat)
    by_value = {v: [] for v in values}
    for j, y in enumerate(model.outcomes):
        by_value[stat.mapping[y]].append(j)
    return [np.array(by_value[v]) for v in values]


def is_sufficient(model: StatisticalModel, stat: Statistic,
                  tol: float = SUFFICIENCY_TOL) -> bool:
    """True when the outcome distribution given the statistic is parameter-free.

    Statistic values with zero mass under some parameters are compared only
    across the parameters that give them positive mass.
    """
    for cols in _value_columns(model, stat):
        conditionals = []
        for row in model.probs:
            mass = row[cols].sum()
            if mass > 0:
                conditionals.append(row[cols] / mass)
        for cond in conditionals[1:]:
            if np.abs(cond - conditionals[0]).max() > tol:
                return False
    return True


def zero_mass_statistic_values(model: StatisticalModel, stat: Statistic) -> tuple:
    """Statistic values that some parameter never produces (worth flagging)."""
    values = statistic_values(model, stat)
    flagged = []
    for v, cols in zip(values, _value_columns(model, stat)):
        if (model.probs[:, cols].sum(axis=1) <= 0).any():
            flagged.append(v)
    return tuple(flagged)


def expectation_operator(model: StatisticalModel, stat: Statistic) -> np.ndarray:
    """Matrix ``A[i][k] = P(stat = value_k | params[i])``.

    Applied to a function of the statistic (a vector over statistic values,
    ordered as ``statistic_values``) it returns that function's expectation
    as a function of the parameter.
    """
    cols = _value_columns(model, stat)
    return np.column_stack([model.probs[:, c].sum(axis=1) for c in cols])


def is_complete(model: StatisticalModel, stat: Statistic,
                tol: float = COMPLETENESS_TOL) -> bool:
    """True when no nonzero function of the statistic has zero expectation
    under every parameter (trivial null space of the expectation operator)."""
    a = expectation_operator(model, stat)
    if a.shape[0] < a.shape[1]:
        return False
    return bool(np.linalg.svd(a, compute_uv=False)[-1] > tol)


def unitarize(matrix: np.ndarray, tol: float = COMPLETENESS_TOL) -> np.ndarray:
    """Unitary polar factor ``U = A (A^H A)^(-1/2)``.

    Requires the matrix to be injective on functions of the statistic;
    rank-deficient input has no unitary connection.
    """
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2:
        raise ValueError("expected a matrix")
    if a.shape[0] < a.shape[1]:
        raise ValueError("incomplete statistic: no unitary connection")
    u, s, vh = np.linalg.svd(a, full_matrices=False)
    if s[-1] <= tol:
        raise ValueError("incomplete statistic: no unitary connection")
    return u @ vh


def perfect_model(values: Union[ParameterFunction, Sequence]) -> tuple[StatisticalModel, Statistic]:
    """Noise-free experiment: outcomes coincide with the parameter values."""
    if isinstance(values, ParameterFunction):
        values = values.value_set
    values = tuple(values)
    model = StatisticalModel(values, values, np.eye(len(values)))
    return model, identity_statistic(model)
