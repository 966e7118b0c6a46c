"""Operator expectations, operator-valued measures, and the projection update.

Observables act on a finite-dimensional state space; a noisy instrument is
a statistical model glued onto an eigenbasis, giving an operator-valued
measure with ``P[y] = tr(rho M(y))``.  The ideal-measurement update pinches
a density matrix to the measurement basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np

from .hilbert import HermitianOperator, SubspaceBasis
from .statmodel import StatisticalModel

PSD_TOL = 1e-10


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, positive semidefinite, unit trace."""

    dim: int
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex).copy()
        if m.shape != (self.dim, self.dim):
            raise ValueError("matrix must be square of size dim")
        if np.abs(m - m.conj().T).max() > 1e-12:
            raise ValueError("matrix must be Hermitian")
        if np.linalg.eigvalsh(m).min() < -PSD_TOL:
            raise ValueError("matrix must be positive semidefinite")
        if abs(np.trace(m).real - 1.0) > 1e-12:
            raise ValueError("trace must be one")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class OperatorValuedMeasure:
    """Outcome-indexed positive operators summing to the identity."""

    dim: int
    outcomes: tuple
    operators: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "outcomes", tuple(self.outcomes))
        ops = np.asarray(self.operators, dtype=complex).copy()
        if ops.shape != (len(self.outcomes), self.dim, self.dim):
            raise ValueError("operators must have shape (n_outcomes, dim, dim)")
        for op in ops:
            if np.abs(op - op.conj().T).max() > PSD_TOL:
                raise ValueError("operators must be Hermitian")
            if np.linalg.eigvalsh(op).min() < -PSD_TOL:
                raise ValueError("operators must be positive semidefinite")
        if np.abs(ops.sum(axis=0) - np.eye(self.dim)).max() > PSD_TOL:
            raise ValueError("operators must sum to the identity")
        ops.setflags(write=False)
        object.__setattr__(self, "operators", ops)


State = Union[np.ndarray, DensityMatrix]


def _density_of(state: State, dim: int) -> np.ndarray:
    if isinstance(state, DensityMatrix):
        if state.dim != dim:
            raise ValueError("state dimension mismatch")
        return state.matrix
    v = np.asarray(state, dtype=complex)
    if v.shape != (dim,):
        raise ValueError("state dimension mismatch")
    if abs(np.linalg.norm(v) - 1.0) > 1e-12:
        raise ValueError("state vector must be normalized")
    return np.outer(v, v.conj())


def pure_density(v: np.ndarray) -> DensityMatrix:
    v = np.asarray(v, dtype=complex)
    return DensityMatrix(v.shape[0], _density_of(v, v.shape[0]))


def expectation(v: np.ndarray, op: HermitianOperator) -> float:
    """``v^H T v`` for a normalized state vector; always real."""
    v = np.asarray(v, dtype=complex)
    if v.shape != (op.dim,):
        raise ValueError("state dimension mismatch")
    if abs(np.linalg.norm(v) - 1.0) > 1e-12:
        raise ValueError("state vector must be normalized")
    value = complex(v.conj() @ op.matrix @ v)
    assert abs(value.imag) < 1e-12
    return value.real


def function_of_operator(op: HermitianOperator, f: Callable[[float], float]) -> HermitianOperator:
    """Spectral calculus: keep the eigenvectors, map the eigenvalues."""
    w, v = np.linalg.eigh(op.matrix)
    fw = np.array([float(f(x)) for x in w])
    m = (v * fw) @ v.conj().T
    return HermitianOperator(op.dim, (m + m.conj().T) / 2)


def povm_from_model(model: StatisticalModel, basis: SubspaceBasis) -> OperatorValuedMeasure:
    """Glue outcome distributions onto an eigenbasis:
    ``M(y) = sum_j probs[j][y] v_j v_j^H``.

    Needs one basis vector per parameter and a complete basis; completeness
    of the measure then follows from row-stochasticity.
    """
    if basis.size != len(model.params):
        raise ValueError("need one basis vector per parameter value")
    if basis.size != basis.dim:
        raise ValueError("basis must span the state space")
    v = basis.vectors
    ops = np.einsum("jy,ja,jb->yab", model.probs, v, v.conj())
    return OperatorValuedMeasure(basis.dim, model.outcomes, ops)


def outcome_distribution(state: State, povm: OperatorValuedMeasure) -> np.ndarray:
    """``P[y] = tr(rho M(y))``, ordered like ``povm.outcomes``."""
    rho = _density_of(state, povm.dim)
    return np.real(np.einsum("ab,yba->y", rho, povm.operators))


def density_from_mixture(weights: Sequence[float],
                         vectors: Sequence[np.ndarray]) -> DensityMatrix:
    """Convex combination of rank-one projectors."""
    w = np.asarray(weights, dtype=float)
    vs = [np.asarray(v, dtype=complex) for v in vectors]
    if len(vs) != w.shape[0]:
        raise ValueError("one weight per vector")
    if w.min() < 0 or abs(w.sum() - 1.0) > 1e-12:
        raise ValueError("weights must be nonnegative and sum to one")
    dim = vs[0].shape[0]
    rho = np.zeros((dim, dim), dtype=complex)
    for wk, v in zip(w, vs):
        if abs(np.linalg.norm(v) - 1.0) > 1e-12:
            raise ValueError("mixture vectors must be normalized")
        rho += wk * np.outer(v, v.conj())
    return DensityMatrix(dim, rho)


def von_neumann_update(state: State, basis: SubspaceBasis) -> DensityMatrix:
    """Ideal measurement without reading the value: ``sum_j P_j rho P_j``.

    The result is diagonal in the measurement basis with the outcome
    probabilities on the diagonal; trace is preserved.
    """
    if basis.size != basis.dim:
        raise ValueError("incomplete basis")
    rho = _density_of(state, basis.dim)
    v = basis.vectors
    diag = np.real(np.einsum("ja,ab,jb->j", v.conj(), rho, v))
    out = np.einsum("j,ja,jb->ab", diag, v, v.conj())
    return DensityMatrix(basis.dim, out)
