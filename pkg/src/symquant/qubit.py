"""Spin-1/2 effect calculus on the Bloch sphere.

An effect is a 2x2 Hermitian matrix with spectrum inside [0, 1], stored
in coordinates ``(r, c, u)`` as ``(r*I + c*u.sigma)/2`` with unit ``u``
and ``0 <= c <= 1``, ``c <= r <= 2 - c``.  Pure states are ``r = c = 1``,
density matrices ``r = 1``.  Binary hypothesis tests with level ``alpha``
and power ``beta`` map onto effects via ``r = 2 - alpha - beta``,
``c = beta - alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

_TRIANGLE_TOL = 1e-12
_DIRECTION_TOL = 1e-12

_SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
_SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def pauli_matrices() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    return _SIGMA_X.copy(), _SIGMA_Y.copy(), _SIGMA_Z.copy()


def unit_vector(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise ValueError("expected a 3-vector")
    if abs(np.linalg.norm(v) - 1.0) > _DIRECTION_TOL:
        raise ValueError("expected a unit vector")
    return v


def dot_sigma(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    return v[0] * _SIGMA_X + v[1] * _SIGMA_Y + v[2] * _SIGMA_Z


@dataclass(frozen=True)
class Effect:
    """Coordinates ``(r, c, u)`` of ``(r*I + c*u.sigma)/2``.

    ``u`` is None exactly when ``c`` vanishes (no recoverable direction).
    """

    r: float
    c: float
    u: Optional[np.ndarray]

    def __post_init__(self):
        r, c = float(self.r), float(self.c)
        if c < -_TRIANGLE_TOL or c > 1 + _TRIANGLE_TOL:
            raise ValueError("c must lie in [0, 1]")
        if r < c - _TRIANGLE_TOL or r > 2 - c + _TRIANGLE_TOL:
            raise ValueError("r must lie in [c, 2 - c]")
        u = self.u
        if c < 1e-15:
            c = 0.0
            u = None
        elif u is None:
            raise ValueError("a direction is required when c > 0")
        else:
            u = unit_vector(u)
            u.setflags(write=False)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "u", u)

    @property
    def scaled_axis(self) -> np.ndarray:
        """The vector ``c*u`` (zero when the direction is undefined)."""
        return np.zeros(3) if self.u is None else self.c * self.u

    @property
    def matrix(self) -> np.ndarray:
        return 0.5 * (self.r * np.eye(2, dtype=complex) + dot_sigma(self.scaled_axis))

    @property
    def eigenvalues(self) -> tuple[float, float]:
        return ((self.r - self.c) / 2, (self.r + self.c) / 2)


@dataclass(frozen=True)
class TestSpec:
    """A binary question: direction ``b``, level ``alpha``, power ``beta``,
    and the claimed answer ``outcome`` (+1 or -1)."""

    __test__ = False  # keep pytest from collecting the class

    b: np.ndarray
    alpha: float
    beta: float
    outcome: int = 1

    def __post_init__(self):
        b = unit_vector(self.b)
        b.setflags(write=False)
        alpha, beta = float(self.alpha), float(self.beta)
        if not (-_TRIANGLE_TOL <= alpha <= 1 + _TRIANGLE_TOL
                and -_TRIANGLE_TOL <= beta <= 1 + _TRIANGLE_TOL):
            raise ValueError("alpha and beta must lie in [0, 1]")
        if beta < alpha - _TRIANGLE_TOL:
            raise ValueError("powerless test")
        if self.outcome not in (1, -1):
            raise ValueError("outcome must be +1 or -1")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "outcome", int(self.outcome))


def pure_state(b, outcome: int = 1) -> Effect:
    """Rank-one projector ``(I + outcome*b.sigma)/2``: the state "spin along
    b came out ``outcome``"."""
    if outcome not in (1, -1):
        raise ValueError("outcome must be +1 or -1")
    return Effect(1.0, 1.0, outcome * unit_vector(b))


def effect_from_test(spec: TestSpec) -> Effect:
    """Error-probability weighting of the two pure states.

    Outcome +1 gives ``r = 2 - alpha - beta``, ``c = beta - alpha`` along
    ``b``; outcome -1 gives the complement ``r = alpha + beta`` along
    ``-b``.
    """
    c = spec.beta - spec.alpha
    u = None if c < 1e-15 else spec.outcome * spec.b
    if spec.outcome == 1:
        return Effect(2 - spec.alpha - spec.beta, c, u)
    return Effect(spec.alpha + spec.beta, c, u)


def test_from_effect(effect: Effect) -> TestSpec:
    """Recover ``(alpha, beta, b)`` from an informative effect.

    Inverts ``effect_from_test`` for outcome +1; the round trip
    ``effect_from_test(test_from_effect(E)) == E`` is exact.
    """
    if effect.c <= _DIRECTION_TOL:
        raise ValueError("direction unrecoverable (uninformative effect)")
    alpha = (2 - effect.r - effect.c) / 2
    beta = (2 - effect.r + effect.c) / 2
    return TestSpec(effect.u, alpha, beta, 1)


# the test_* names collide with pytest's default collection pattern
test_from_effect.__test__ = False


def mixed_from_posterior(b, p1: float) -> Effect:
    """State after reporting +1 along ``b`` with posterior error ``p1``:
    ``(I + (1 - 2*p1) b.sigma)/2``."""
    p1 = float(p1)
    if not (0 <= p1 <= 0.5):
        raise ValueError("posterior error must lie in [0, 1/2]")
    c = 1 - 2 * p1
    return Effect(1.0, c, None if c < 1e-15 else unit_vector(b))


def born_pure(a, b) -> float:
    """Transition probability between pure states: ``(1 + a.b)/2``."""
    return 0.5 * (1.0 + float(np.dot(unit_vector(a), unit_vector(b))))


def generalized_probability(a, effect: Effect) -> float:
    """Probability assigned to an effect from the pure state ``a``:
    ``(r + c*(a.u))/2``, which equals ``tr(rho_a E)``."""
    return 0.5 * (effect.r + float(np.dot(unit_vector(a), effect.scaled_axis)))


def test_probability(a, spec: TestSpec) -> float:
    """The same probability in test coordinates:
    ``1 - (alpha+beta)/2 + (beta-alpha)/2 * a.b`` for outcome +1."""
    plus = 1 - 0.5 * (spec.alpha + spec.beta) \
        + 0.5 * (spec.beta - spec.alpha) * float(np.dot(unit_vector(a), spec.b))
    return plus if spec.outcome == 1 else 1 - plus


test_probability.__test__ = False


def complement_effect(effect: Effect) -> Effect:
    """The effect of the opposite report: ``I - E``."""
    u = None if effect.u is None else -effect.u
    return Effect(2 - effect.r, effect.c, u)


def coin_mixture(e1: Effect, e2: Effect) -> Effect:
    """Toss a fair coin between two experiments: coordinates average,
    ``r = (r1+r2)/2`` and ``c*u = (c1*u1 + c2*u2)/2``."""
    r = 0.5 * (e1.r + e2.r)
    cu = 0.5 * (e1.scaled_axis + e2.scaled_axis)
    c = float(np.linalg.norm(cu))
    return Effect(r, c, None if c < 1e-15 else cu / c)


def effect_sum(e1: Effect, e2: Effect) -> Effect:
    """Matrix sum re-read in ``(r, c*u)`` coordinates.

    Defined only when ``E1 + E2 <= I`` (largest eigenvalue at most one).
    """
    r = e1.r + e2.r
    cu = e1.scaled_axis + e2.scaled_axis
    c = float(np.linalg.norm(cu))
    if r + c > 2 + _TRIANGLE_TOL:
        raise ValueError("effect sum exceeds the identity")
    return Effect(r, c, None if c < 1e-15 else cu / c)


def expected_component(spec: TestSpec, lam: int) -> np.ndarray:
    """Directional reading contribution for true value ``lam``.

    ``(1 - 2*alpha) b`` for ``lam = +1`` and ``(2*beta - 1) b`` for
    ``lam = -1``; the two sum to ``2*(beta - alpha) b``, twice the effect
    vector ``c*u``.
    """
    if lam == 1:
        return (1 - 2 * spec.alpha) * spec.b
    if lam == -1:
        return (2 * spec.beta - 1) * spec.b
    raise ValueError("lam must be +1 or -1")


def spin_state_vector(b, outcome: int = 1) -> np.ndarray:
    """Normalized eigenvector of ``b.sigma`` with eigenvalue ``outcome``."""
    if outcome not in (1, -1):
        raise ValueError("outcome must be +1 or -1")
    w, v = np.linalg.eigh(dot_sigma(unit_vector(b)))
    return v[:, 1] if outcome == 1 else v[:, 0]


def rotate_effect(effect: Effect, rotation: np.ndarray) -> Effect:
    """Apply a 3x3 rotation to the effect direction."""
    rot = np.asarray(rotation, dtype=float)
    if rot.shape != (3, 3) or np.abs(rot.T @ rot - np.eye(3)).max() > 1e-10:
        raise ValueError("expected an orthogonal 3x3 matrix")
    u = None if effect.u is None else rot @ effect.u
    return Effect(effect.r, effect.c, u)
