"""Unitary representations on weighted function spaces over a finite set.

The regular representation moves points forward along a right action:
``U(g)`` sends the unit mass at ``x`` to the unit mass at ``x.g``.  With
that storage the matrices satisfy ``U(g_i g_j) = U(g_j) U(g_i)``; all
invariants below are stated for this composition order.

Inner products carry explicit point weights (a measure); the default is
the counting measure, so bases over plain coordinate spaces work without
ceremony.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from .groups import (FiniteGroup, GroupAction, InvariantMeasure,
                     ParameterFunction, subgroup_group)

HOMOMORPHISM_TOL = 1e-10
CLUSTER_TOL = 1e-8
_SAMPLED_PAIRS = 2048
_EXHAUSTIVE_ORDER = 64


@dataclass(frozen=True)
class Representation:
    """Per-element unitary matrices over a common space."""

    group: FiniteGroup
    dim: int
    matrices: np.ndarray

    def __post_init__(self):
        n, d = self.group.order, self.dim
        m = np.asarray(self.matrices, dtype=complex).copy()
        if m.shape != (n, d, d):
            raise ValueError("matrices must have shape (order, dim, dim)")
        eye = np.eye(d)
        if np.abs(m[self.group.identity] - eye).max() > HOMOMORPHISM_TOL:
            raise ValueError("identity element must map to the identity matrix")
        for g in range(n):
            if np.abs(m[g].conj().T @ m[g] - eye).max() > HOMOMORPHISM_TOL:
                raise ValueError("matrices must be unitary")
        cay = self.group.cayley
        if n <= _EXHAUSTIVE_ORDER:
            pairs = ((i, j) for i in range(n) for j in range(n))
        else:
            rng = np.random.default_rng(0)
            pairs = zip(*rng.integers(0, n, size=(2, _SAMPLED_PAIRS)))
        for i, j in pairs:
            if np.abs(m[cay[i, j]] - m[j] @ m[i]).max() > HOMOMORPHISM_TOL:
                raise ValueError("composition rule violated")
        m.setflags(write=False)
        object.__setattr__(self, "matrices", m)


@dataclass(frozen=True)
class SubspaceBasis:
    """Rows are vectors, orthonormal under the weighted inner product."""

    dim: int
    vectors: np.ndarray
    weights: Optional[np.ndarray] = None

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=complex).copy()
        if v.ndim != 2 or v.shape[1] != self.dim or v.shape[0] == 0:
            raise ValueError("vectors must be a nonempty (k, dim) array")
        w = self.weights
        w = np.ones(self.dim) if w is None else np.asarray(w, dtype=float).copy()
        if w.shape != (self.dim,) or w.min() < 0:
            raise ValueError("weights must be nonnegative with length dim")
        gram = (v.conj() * w) @ v.T
        if np.abs(gram - np.eye(v.shape[0])).max() > HOMOMORPHISM_TOL:
            raise ValueError("vectors must be orthonormal under the weights")
        v.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "vectors", v)
        object.__setattr__(self, "weights", w)

    @property
    def size(self) -> int:
        return self.vectors.shape[0]


@dataclass(frozen=True)
class HermitianOperator:
    dim: int
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex).copy()
        if m.shape != (self.dim, self.dim):
            raise ValueError("matrix must be square of size dim")
        if np.abs(m - m.conj().T).max() > 1e-12:
            raise ValueError("matrix must be Hermitian")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


def weighted_inner(weights: np.ndarray, u: np.ndarray, v: np.ndarray) -> complex:
    return complex(np.sum(weights * np.conj(u) * v))


def project(basis: SubspaceBasis, vector: np.ndarray) -> np.ndarray:
    """Orthogonal projection onto the basis span (in the basis's geometry)."""
    coeffs = (basis.vectors.conj() * basis.weights) @ vector
    return coeffs @ basis.vectors


def projection_residual(basis: SubspaceBasis, vector: np.ndarray) -> float:
    """Weighted norm of the part of ``vector`` outside the basis span."""
    rest = vector - project(basis, vector)
    return float(np.sqrt(np.real(weighted_inner(basis.weights, rest, rest))))


# ---------------------------------------------------------------------------
# constructions over a group action


def regular_representation(action: GroupAction, measure: InvariantMeasure) -> Representation:
    """Permutation matrices pushing point masses along the right action.

    The measure must be action-invariant; that is what makes these
    matrices unitary on the weighted space.
    """
    w = measure.weights
    if w.shape != (action.space_size,):
        raise ValueError("measure does not match the action space")
    for g in range(action.group.order):
        if np.abs(w[action.table[g]] - w).max() > 1e-12:
            raise ValueError("measure is not invariant under the action")
    d = action.space_size
    mats = np.zeros((action.group.order, d, d), dtype=complex)
    for g in range(action.group.order):
        mats[g, action.table[g], np.arange(d)] = 1.0
    return Representation(action.group, d, mats)


def restrict_representation(rep: Representation, elements: Iterable[int]) -> Representation:
    """The same matrices, reindexed over a subgroup.

    Element ``i`` of the result corresponds to ``sorted(elements)[i]``,
    matching ``subgroup_group``.
    """
    sub = subgroup_group(rep.group, elements)
    elems = tuple(sorted({int(g) for g in elements}))
    return Representation(sub, rep.dim, rep.matrices[list(elems)])


def restrict_to_basis(rep: Representation, basis: SubspaceBasis) -> Representation:
    """Matrix elements of the representation inside an invariant subspace.

    Fails (non-unitary blocks) when the span is not actually invariant.
    """
    b = basis.vectors
    w = basis.weights
    blocks = np.array([(b.conj() * w) @ m @ b.T for m in rep.matrices])
    return Representation(rep.group, basis.size, blocks)


def invariant_subspace(pf: ParameterFunction, measure: InvariantMeasure) -> SubspaceBasis:
    """Orthonormal basis of the functions constant on the label level sets."""
    w = measure.weights
    if w.shape != (pf.space_size,):
        raise ValueError("measure does not match the parameter space")
    vectors = []
    for v in range(len(pf.value_set)):
        ind = (pf.indices == v).astype(complex)
        mass = float(w[pf.indices == v].sum())
        if mass <= 0:
            raise ValueError(f"value {pf.value_set[v]!r} carries no mass")
        vectors.append(ind / np.sqrt(mass))
    return SubspaceBasis(pf.space_size, np.array(vectors), w)


def indicator_basis(pf: ParameterFunction, measure: InvariantMeasure) -> SubspaceBasis:
    """Indicators of the level sets, scaled by sqrt(#values).

    Requires every level set to carry mass 1/#values, the situation
    produced by a transitive action; each vector then has unit weighted
    norm.
    """
    w = measure.weights
    n = len(pf.value_set)
    masses = np.array([w[pf.indices == v].sum() for v in range(n)])
    if np.abs(masses - 1.0 / n).max() > 1e-12:
        raise ValueError("parameter not compatible with transitive structure")
    vectors = np.sqrt(n) * (pf.indices[None, :] == np.arange(n)[:, None]).astype(complex)
    return SubspaceBasis(pf.space_size, vectors, w)


def multiplication_operator(pf: ParameterFunction,
                            embedding: Optional[Union[Mapping, Sequence[float]]] = None
                            ) -> HermitianOperator:
    """Pointwise multiplication by a real coding of the label values.

    Diagonal in the indicator basis with eigenvalue ``embedding[value]``
    on each level set; the coding defaults to 0, 1, ... in value order and
    must be injective.
    """
    coding = _coding(pf, embedding)
    return HermitianOperator(pf.space_size, np.diag(coding[pf.indices]).astype(complex))


def _coding(pf: ParameterFunction, embedding) -> np.ndarray:
    n = len(pf.value_set)
    if embedding is None:
        coding = np.arange(n, dtype=float)
    elif isinstance(embedding, Mapping):
        coding = np.array([float(embedding[v]) for v in pf.value_set])
    else:
        coding = np.asarray(embedding, dtype=float)
        if coding.shape != (n,):
            raise ValueError("embedding must assign one real per value")
    if len(set(coding.tolist())) != n:
        raise ValueError("degenerate coding")
    return coding


def conjugated_operator(op: HermitianOperator, w: np.ndarray) -> HermitianOperator:
    """``W S W^H`` for unitary ``W``; spectrum is preserved."""
    w = np.asarray(w, dtype=complex)
    if w.shape != (op.dim, op.dim):
        raise ValueError("conjugator must match the operator dimension")
    if np.abs(w.conj().T @ w - np.eye(op.dim)).max() > HOMOMORPHISM_TOL:
        raise ValueError("conjugator is not unitary")
    return HermitianOperator(op.dim, w @ op.matrix @ w.conj().T)


def eigen_transport_check(rep: Representation, op: HermitianOperator,
                          value_action: GroupAction, basis: SubspaceBasis,
                          embedding: Optional[Sequence[float]] = None,
                          tol: float = HOMOMORPHISM_TOL) -> bool:
    """Moving an eigenvector with the group moves its eigenvalue with the values.

    ``rep`` and ``value_action`` must be indexed by the same (sub)group;
    ``basis`` holds the level-set indicators, eigenvectors of ``op`` with
    eigenvalues ``coding[k]``.  Checks that ``U(g) f_k`` is an eigenvector
    of ``op`` with eigenvalue ``coding[k.g]`` for every ``g`` and ``k``.
    """
    if rep.group.order != value_action.group.order:
        raise ValueError("representation and value action index different groups")
    coding = np.arange(basis.size, dtype=float) if embedding is None \
        else np.asarray(embedding, dtype=float)
    for k in range(basis.size):
        f = basis.vectors[k]
        if np.abs(op.matrix @ f - coding[k] * f).max() > tol:
            raise ValueError("operator is not diagonal in the given basis")
    for g in range(rep.group.order):
        for k in range(basis.size):
            moved = rep.matrices[g] @ basis.vectors[k]
            target = coding[value_action.table[g, k]]
            if np.abs(op.matrix @ moved - target * moved).max() > tol:
                return False
    return True


# ---------------------------------------------------------------------------
# irreducible decomposition


def _random_hermitian(rng: np.random.Generator, d: int) -> np.ndarray:
    a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (a + a.conj().T) / 2


def _averaged(mats: np.ndarray, h: np.ndarray) -> np.ndarray:
    out = sum(m @ h @ m.conj().T for m in mats)
    return out / len(mats)


def _split_columns(w: np.ndarray, v: np.ndarray, tol: float) -> list[np.ndarray]:
    """Group eigenvector columns by eigenvalue clusters."""
    blocks = []
    start = 0
    for i in range(1, len(w) + 1):
        if i == len(w) or w[i] - w[i - 1] > tol:
            blocks.append(v[:, start:i])
            start = i
    return blocks


def _decompose_block(mats: np.ndarray, cols: np.ndarray,
                     rng: np.random.Generator, tol: float) -> list[np.ndarray]:
    d = cols.shape[1]
    if d == 1:
        return [cols]
    restricted = np.array([cols.conj().T @ m @ cols for m in mats])
    avg = _averaged(restricted, _random_hermitian(rng, d))
    if np.abs(avg - (np.trace(avg) / d) * np.eye(d)).max() < tol:
        return [cols]
    w, v = np.linalg.eigh(avg)
    out = []
    for sub in _split_columns(w, v, tol):
        out.extend(_decompose_block(mats, cols @ sub, rng, tol))
    return out


def decompose_irreducible(rep: Representation, seed: int = 0,
                          tol: float = CLUSTER_TOL) -> list[SubspaceBasis]:
    """Orthogonal irreducible invariant subspaces summing to the whole space.

    Eigenspaces of a group-averaged random Hermitian matrix are invariant;
    recursion stops when the averaged matrix restricted to a block is a
    scalar.  Deterministic for a fixed seed; the block dimension multiset
    is seed-independent.
    """
    rng = np.random.default_rng(seed)
    blocks = _decompose_block(rep.matrices, np.eye(rep.dim, dtype=complex), rng, tol)
    if sum(b.shape[1] for b in blocks) != rep.dim:
        raise RuntimeError("decomposition lost dimensions")
    return [SubspaceBasis(rep.dim, b.T) for b in blocks]


def invariance_residual(rep: Representation, basis: SubspaceBasis) -> float:
    """How far the representation moves the span out of itself."""
    b = basis.vectors.T
    proj = b @ b.conj().T
    eye = np.eye(rep.dim)
    return max(
        float(np.abs((eye - proj) @ m @ b).max())
        for m in rep.matrices
    )


def sector_decomposition(rep: Representation, seed: int = 0,
                         tol: float = CLUSTER_TOL) -> list[SubspaceBasis]:
    """Irreducible invariant subspaces read as superselection sectors."""
    return decompose_irreducible(rep, seed=seed, tol=tol)


def sector_report(sectors: Sequence[SubspaceBasis]) -> dict:
    return {"sectors": [{"dim": s.size, "label": i} for i, s in enumerate(sectors)]}


def classify_sector(sectors: Sequence[SubspaceBasis], vector: np.ndarray,
                    tol: float = HOMOMORPHISM_TOL) -> Optional[int]:
    """Sector index of a vector, or None for cross-sector combinations.

    Cross-sector superpositions are not physical states, so they get no
    label.
    """
    v = np.asarray(vector, dtype=complex)
    norm = np.linalg.norm(v)
    if norm == 0:
        raise ValueError("zero vector has no sector")
    hits = [i for i, s in enumerate(sectors)
            if np.linalg.norm(s.vectors.conj() @ v) > tol * norm]
    return hits[0] if len(hits) == 1 else None


# ---------------------------------------------------------------------------
# intertwiners


def schur_check(rep1: Representation, rep2: Representation, matrix: np.ndarray,
                pairing: Optional[Sequence[int]] = None,
                tol: float = HOMOMORPHISM_TOL) -> str:
    """Classify a candidate intertwiner between irreducible representations.

    Returns "zero", "isomorphism", or "violation" ("violation" meaning the
    intertwining identity ``U1(g) A = A U2(pairing(g))`` does not hold, or
    the matrix is neither zero nor invertible).
    """
    a = np.asarray(matrix, dtype=complex)
    n = rep1.group.order
    if rep2.group.order != n:
        raise ValueError("representations index different group orders")
    pair = list(range(n)) if pairing is None else [int(p) for p in pairing]
    scale = max(1.0, float(np.abs(a).max()))
    for g in range(n):
        if np.abs(rep1.matrices[g] @ a - a @ rep2.matrices[pair[g]]).max() > tol * scale:
            return "violation"
    if np.abs(a).max() < tol:
        return "zero"
    if a.shape[0] == a.shape[1]:
        smin = np.linalg.svd(a, compute_uv=False)[-1]
        if smin > tol:
            return "isomorphism"
    return "violation"


def averaged_intertwiner(rep1: Representation, rep2: Representation,
                         seed: int = 0) -> np.ndarray:
    """Group-average a random matrix into an intertwiner.

    Nonzero exactly when the two irreducible representations are
    equivalent (then it is an isomorphism).
    """
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((rep1.dim, rep2.dim)) \
        + 1j * rng.standard_normal((rep1.dim, rep2.dim))
    out = sum(m1 @ x @ m2.conj().T
              for m1, m2 in zip(rep1.matrices, rep2.matrices))
    return out / rep1.group.order


def word_operator(rep: Representation,
                  word: Sequence[tuple[int, Optional[np.ndarray]]]) -> np.ndarray:
    """Compose conjugated blocks along a factorization word.

    Each letter is ``(element, change_of_basis)``; the letter contributes
    ``C^H U(element) C`` (plain ``U(element)`` when the conjugator is
    None).  Whether two words for the same product give the same operator
    is checked empirically by callers, not assumed.
    """
    out = np.eye(rep.dim, dtype=complex)
    for element, conj in word:
        block = rep.matrices[element]
        if conj is not None:
            c = np.asarray(conj, dtype=complex)
            if np.abs(c.conj().T @ c - np.eye(rep.dim)).max() > HOMOMORPHISM_TOL:
                raise ValueError("conjugator is not unitary")
            block = c.conj().T @ block @ c
        out = out @ block
    return out
