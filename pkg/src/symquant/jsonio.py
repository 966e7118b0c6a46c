"""JSON wire formats for groups, models, effects, measures, and matrices.

Complex matrices serialize as nested ``[re, im]`` pairs.  These formats are
what the ``scenario`` subcommand consumes.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .groups import FiniteGroup, GroupAction, ParameterFunction, parameter_function
from .hilbert import Representation, SubspaceBasis
from .measurement import DensityMatrix, OperatorValuedMeasure
from .qubit import Effect, TestSpec, effect_from_test
from .statmodel import StatisticalModel


def complex_to_pairs(array: np.ndarray) -> list:
    a = np.asarray(array, dtype=complex)
    return np.stack([a.real, a.imag], axis=-1).tolist()


def pairs_to_complex(data) -> np.ndarray:
    a = np.asarray(data, dtype=float)
    if a.shape[-1] != 2:
        raise ValueError("expected [re, im] pairs")
    return a[..., 0] + 1j * a[..., 1]


# ---------------------------------------------------------------------------
# groups


def group_to_dict(group: FiniteGroup, action: Optional[GroupAction] = None,
                  labels: Optional[ParameterFunction] = None) -> dict:
    out = {"order": group.order, "cayley": group.cayley.tolist()}
    if action is not None:
        out["action"] = action.table.tolist()
    if labels is not None:
        out["labels"] = list(labels.labels)
    return out


def group_from_dict(data: dict) -> tuple[FiniteGroup, Optional[GroupAction],
                                         Optional[ParameterFunction]]:
    order = int(data["order"])
    cayley = np.asarray(data["cayley"], dtype=np.int64)
    identity = _find_identity(cayley, order)
    inverse = np.array([int(np.flatnonzero(cayley[i] == identity)[0])
                        for i in range(order)])
    group = FiniteGroup(order, cayley, identity, inverse)
    action = None
    if "action" in data:
        table = np.asarray(data["action"], dtype=np.int64)
        action = GroupAction(group, table.shape[1], table)
    labels = None
    if "labels" in data:
        labels = parameter_function(tuple(data["labels"]))
    return group, action, labels


def _find_identity(cayley: np.ndarray, order: int) -> int:
    for e in range(order):
        if np.array_equal(cayley[e], np.arange(order)):
            return e
    raise ValueError("no identity element in cayley table")


# ---------------------------------------------------------------------------
# statistical models


def model_to_dict(model: StatisticalModel) -> dict:
    return {"params": list(model.params), "outcomes": list(model.outcomes),
            "probs": model.probs.tolist()}


def model_from_dict(data: dict) -> StatisticalModel:
    return StatisticalModel(tuple(data["params"]), tuple(data["outcomes"]),
                            np.asarray(data["probs"], dtype=float))


# ---------------------------------------------------------------------------
# effects


def effect_to_dict(effect: Effect) -> dict:
    u = [0.0, 0.0, 0.0] if effect.u is None else [float(x) for x in effect.u]
    return {"r": effect.r, "c": effect.c, "u": u}


def effect_from_dict(data: dict) -> Effect:
    if "alpha" in data:
        spec = TestSpec(np.asarray(data["b"], dtype=float),
                        float(data["alpha"]), float(data["beta"]),
                        int(data.get("outcome", 1)))
        return effect_from_test(spec)
    c = float(data["c"])
    u = None if c < 1e-15 else np.asarray(data["u"], dtype=float)
    return Effect(float(data["r"]), c, u)


# ---------------------------------------------------------------------------
# measurement objects


def density_to_dict(rho: DensityMatrix) -> dict:
    return {"dim": rho.dim, "matrix": complex_to_pairs(rho.matrix)}


def density_from_dict(data: dict) -> DensityMatrix:
    m = pairs_to_complex(data["matrix"])
    return DensityMatrix(int(data.get("dim", m.shape[0])), m)


def povm_to_dict(povm: OperatorValuedMeasure) -> dict:
    return {"dim": povm.dim, "outcomes": list(povm.outcomes),
            "operators": complex_to_pairs(povm.operators)}


def povm_from_dict(data: dict) -> OperatorValuedMeasure:
    ops = pairs_to_complex(data["operators"])
    return OperatorValuedMeasure(int(data.get("dim", ops.shape[-1])),
                                 tuple(data["outcomes"]), ops)


# ---------------------------------------------------------------------------
# bases and representations


def basis_to_dict(basis: SubspaceBasis) -> dict:
    return {"dim": basis.dim, "vectors": complex_to_pairs(basis.vectors),
            "weights": basis.weights.tolist()}


def representation_to_dict(rep: Representation) -> dict:
    return {"order": rep.group.order, "dim": rep.dim,
            "matrices": complex_to_pairs(rep.matrices)}
