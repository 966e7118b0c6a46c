"""Seeded random generators for directions, rotations, effects, and models."""

from __future__ import annotations

import numpy as np

from .qubit import Effect, TestSpec, effect_from_test
from .statmodel import StatisticalModel


def random_unit(rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(3)
    return v / np.linalg.norm(v)


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_test_spec(rng: np.random.Generator, outcome: int = 1) -> TestSpec:
    alpha = rng.uniform(0, 1)
    beta = rng.uniform(alpha, 1)
    return TestSpec(random_unit(rng), alpha, beta, outcome)


def random_effect(rng: np.random.Generator) -> Effect:
    return effect_from_test(random_test_spec(rng))


def random_summable_pair(rng: np.random.Generator) -> tuple[Effect, Effect]:
    """Two effects whose matrix sum stays at or below the identity.

    Levels are drawn above 1/2, which caps each ``r + c`` at ``4 - 2(a1+a2)
    <= 2`` for the pair.
    """
    pair = []
    for _ in range(2):
        alpha = rng.uniform(0.5, 1)
        beta = rng.uniform(alpha, 1)
        pair.append(effect_from_test(TestSpec(random_unit(rng), alpha, beta)))
    return pair[0], pair[1]


def random_stochastic_model(rng: np.random.Generator, n_params: int,
                            n_outcomes: int) -> StatisticalModel:
    probs = rng.dirichlet(np.ones(n_outcomes), size=n_params)
    return StatisticalModel(tuple(range(n_params)), tuple(range(n_outcomes)), probs)


def random_complete_model(rng: np.random.Generator, n: int) -> StatisticalModel:
    """Square model bounded away from rank deficiency (diagonally dominant)."""
    probs = 0.5 * np.eye(n) + 0.5 * rng.dirichlet(np.ones(n), size=n)
    return StatisticalModel(tuple(range(n)), tuple(range(n)), probs)
