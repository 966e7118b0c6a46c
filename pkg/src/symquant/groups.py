"""Finite groups, right actions on finite parameter spaces, and permissibility.

All groups use 0-based element indices.  A group is a Cayley table
``cayley[i][j] = index of g_i g_j``; an action is a table
``table[g][x] = x . g`` (actions are written on the right throughout).
A parameter function is a labelling of the acted-on space; it is
*permissible* under a set of group elements when equal labels stay equal
after acting, so that the group descends to a well-defined action on the
label values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

GROUP_SIZE_CAP = 10_080
# Exhaustive table checks are cubic/quadratic; above this order they are sampled.
EXHAUSTIVE_ORDER_LIMIT = 64
_SAMPLED_CHECKS = 4096


def _as_index_table(values, shape) -> np.ndarray:
    table = np.asarray(values, dtype=np.int64)
    if table.shape != shape:
        raise ValueError(f"expected table of shape {shape}, got {table.shape}")
    table = table.copy()
    table.setflags(write=False)
    return table


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its Cayley table.

    ``cayley[i][j]`` is the element index of the product ``g_i g_j``.
    Group axioms are verified on construction: exhaustively for order
    <= 64, on a fixed random sample of triples above that.
    """

    order: int
    cayley: np.ndarray
    identity: int
    inverse: np.ndarray

    def __post_init__(self):
        n = self.order
        if n <= 0:
            raise ValueError("group order must be positive")
        object.__setattr__(self, "cayley", _as_index_table(self.cayley, (n, n)))
        object.__setattr__(self, "inverse", _as_index_table(self.inverse, (n,)))
        A = self.cayley
        if A.min() < 0 or A.max() >= n:
            raise ValueError("cayley table entries out of range")
        e = self.identity
        if not (0 <= e < n):
            raise ValueError("identity index out of range")
        if not (np.array_equal(A[e], np.arange(n)) and np.array_equal(A[:, e], np.arange(n))):
            raise ValueError("identity row/column violated")
        if not np.array_equal(A[np.arange(n), self.inverse], np.full(n, e)):
            raise ValueError("inverse table violated")
        if n <= EXHAUSTIVE_ORDER_LIMIT:
            # left[i,j,k] = (g_i g_j) g_k, right[i,j,k] = g_i (g_j g_k)
            left = A[A, :]
            right = A[:, A]
            ok = np.array_equal(left, right)
        else:
            rng = np.random.default_rng(0)
            i, j, k = rng.integers(0, n, size=(3, _SAMPLED_CHECKS))
            ok = np.array_equal(A[A[i, j], k], A[i, A[j, k]])
        if not ok:
            raise ValueError("associativity violated")

    def elements(self) -> range:
        return range(self.order)

    def multiply(self, i: int, j: int) -> int:
        return int(self.cayley[i, j])

    def invert(self, i: int) -> int:
        return int(self.inverse[i])


@dataclass(frozen=True)
class GroupAction:
    """A right action of a finite group on ``{0, ..., space_size-1}``.

    ``table[g][x] = x . g``; compatibility ``(x.g1).g2 = x.(g1 g2)`` is
    verified on construction (sampled above order 64).
    """

    group: FiniteGroup
    space_size: int
    table: np.ndarray

    def __post_init__(self):
        n_g, n_x = self.group.order, self.space_size
        if n_x <= 0:
            raise ValueError("space size must be positive")
        object.__setattr__(self, "table", _as_index_table(self.table, (n_g, n_x)))
        T = self.table
        if not np.array_equal(np.sort(T, axis=1), np.tile(np.arange(n_x), (n_g, 1))):
            raise ValueError("each element must act as a permutation of the space")
        if not np.array_equal(T[self.group.identity], np.arange(n_x)):
            raise ValueError("identity must act trivially")
        A = self.group.cayley
        if n_g <= EXHAUSTIVE_ORDER_LIMIT:
            pairs = ((g1, g2) for g1 in range(n_g) for g2 in range(n_g))
        else:
            rng = np.random.default_rng(0)
            pairs = zip(*rng.integers(0, n_g, size=(2, _SAMPLED_CHECKS)))
        for g1, g2 in pairs:
            if not np.array_equal(T[g2][T[g1]], T[A[g1, g2]]):
                raise ValueError("action incompatible with group multiplication")

    def apply(self, g: int, x: int) -> int:
        """Return ``x . g``."""
        return int(self.table[g, x])


@dataclass(frozen=True)
class ParameterFunction:
    """A labelling of the acted-on space by values from ``value_set``."""

    space_size: int
    labels: tuple
    value_set: tuple
    indices: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        values = tuple(self.value_set)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "value_set", values)
        if len(labels) != self.space_size:
            raise ValueError("labels must cover the whole space")
        if len(set(values)) != len(values):
            raise ValueError("value_set has duplicates")
        lookup = {v: i for i, v in enumerate(values)}
        if not set(labels) <= set(values):
            raise ValueError("labels outside value_set")
        idx = np.array([lookup[l] for l in labels], dtype=np.int64)
        idx.setflags(write=False)
        object.__setattr__(self, "indices", idx)

    def level_set(self, value) -> np.ndarray:
        """Indices of the points carrying ``value``."""
        v = self.value_set.index(value)
        return np.flatnonzero(self.indices == v)


def parameter_function(labels: Sequence, value_set: Optional[Sequence] = None) -> ParameterFunction:
    """Build a ParameterFunction; value order defaults to first appearance."""
    labels = tuple(labels)
    if value_set is None:
        value_set = tuple(dict.fromkeys(labels))
    return ParameterFunction(len(labels), labels, tuple(value_set))


@dataclass(frozen=True)
class InvariantMeasure:
    """Nonnegative point weights summing to one."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float).copy()
        if w.ndim != 1 or w.size == 0:
            raise ValueError("weights must be a nonempty vector")
        if w.min() < 0:
            raise ValueError("weights must be nonnegative")
        if abs(w.sum() - 1.0) > 1e-12:
            raise ValueError("weights must sum to one")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)


# ---------------------------------------------------------------------------
# construction


def _compose(p: Sequence[int], q: Sequence[int]) -> tuple:
    """Permutation of "apply p, then q"."""
    return tuple(q[p[x]] for x in range(len(p)))


def generate_group(generators: Iterable[Sequence[int]],
                   max_order: int = GROUP_SIZE_CAP) -> tuple[FiniteGroup, GroupAction]:
    """Close a set of permutations under composition.

    Returns the generated group (element 0 is the identity) together with
    its faithful permutation action on the underlying index set.  Raises
    if the closure grows past ``max_order``.
    """
    gens = [tuple(int(i) for i in g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    m = len(gens[0])
    for g in gens:
        if len(g) != m or sorted(g) != list(range(m)):
            raise ValueError("generators must be permutations of a common index set")

    ident = tuple(range(m))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        fresh = []
        for p in frontier:
            for q in gens:
                r = _compose(p, q)
                if r not in index:
                    if len(elems) >= max_order:
                        raise ValueError("group too large")
                    index[r] = len(elems)
                    elems.append(r)
                    fresh.append(r)
        frontier = fresh

    n = len(elems)
    cayley = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            cayley[i, j] = index[_compose(p, q)]
    inverse = np.empty(n, dtype=np.int64)
    for i, p in enumerate(elems):
        inv = tuple(np.argsort(np.asarray(p)))
        inverse[i] = index[inv]
    group = FiniteGroup(n, cayley, 0, inverse)
    action = GroupAction(group, m, np.array(elems, dtype=np.int64))
    return group, action


class TriangleModel(NamedTuple):
    group: FiniteGroup
    action: GroupAction
    colour: ParameterFunction
    windows: tuple[ParameterFunction, ParameterFunction, ParameterFunction]


# Corner sequences seen at the three equatorial windows after each of the
# six moves of an equilateral triangle (corners 0,1,2 = A,B,C): identity,
# the two cyclic rotations, then the three flips.
_TRIANGLE_MOVES = (
    (0, 1, 2),
    (2, 0, 1),
    (1, 2, 0),
    (0, 2, 1),
    (2, 1, 0),
    (1, 0, 2),
)
_CORNER_NAMES = ("A", "B", "C")


def s3_triangle() -> TriangleModel:
    """The two-sided triangle free to rotate inside an opaque sphere.

    Orientations are identified with the six moves themselves; the right
    action is right multiplication.  ``colour`` is the side facing the
    polar window (same colour on the three cyclic orientations);
    ``windows[w]`` is the corner seen at equatorial window ``w``.
    """
    moves = _TRIANGLE_MOVES
    index = {m: i for i, m in enumerate(moves)}
    n = len(moves)
    cayley = np.empty((n, n), dtype=np.int64)
    for i, p in enumerate(moves):
        for j, q in enumerate(moves):
            # the move "p then q" shows corner p[q[w]] at window w
            cayley[i, j] = index[tuple(p[q[w]] for w in range(3))]
    inverse = np.array([index[tuple(np.argsort(np.asarray(p)))] for p in moves])
    group = FiniteGroup(n, cayley, 0, inverse)
    action = GroupAction(group, n, cayley.T.copy())
    colour = parameter_function(
        tuple("Bl" if i < 3 else "Wh" for i in range(n)), ("Bl", "Wh"))
    windows = tuple(
        parameter_function(tuple(_CORNER_NAMES[moves[i][w]] for i in range(n)),
                           _CORNER_NAMES)
        for w in range(3)
    )
    return TriangleModel(group, action, colour, windows)


# ---------------------------------------------------------------------------
# orbits and measures


def orbits(action: GroupAction) -> list[list[int]]:
    """Partition of the space into reachability classes ``{x.g}``."""
    n_x = action.space_size
    seen = np.zeros(n_x, dtype=bool)
    blocks = []
    for start in range(n_x):
        if seen[start]:
            continue
        block = np.unique(action.table[:, start])
        seen[block] = True
        blocks.append([int(x) for x in block])
    return blocks


def is_transitive(action: GroupAction) -> bool:
    return len(orbits(action)) == 1


def invariant_measure(action: GroupAction) -> InvariantMeasure:
    """The uniform measure; it is invariant under any action, and for a
    transitive action it is the only invariant probability measure."""
    n = action.space_size
    return InvariantMeasure(np.full(n, 1.0 / n))


# ---------------------------------------------------------------------------
# subgroups and permissibility


def _require_subgroup(group: FiniteGroup, elements: Iterable[int]) -> tuple[int, ...]:
    elems = tuple(sorted({int(g) for g in elements}))
    if not elems:
        raise ValueError("not a subgroup")
    members = set(elems)
    if group.identity not in members:
        raise ValueError("not a subgroup")
    for g in elems:
        if group.invert(g) not in members:
            raise ValueError("not a subgroup")
        for h in elems:
            if group.multiply(g, h) not in members:
                raise ValueError("not a subgroup")
    return elems


def subgroup_group(group: FiniteGroup, elements: Iterable[int]) -> FiniteGroup:
    """Reindex a subgroup as a standalone FiniteGroup.

    Element ``i`` of the result is ``sorted(elements)[i]``.
    """
    elems = _require_subgroup(group, elements)
    pos = {g: i for i, g in enumerate(elems)}
    k = len(elems)
    cayley = np.array([[pos[group.multiply(g, h)] for h in elems] for g in elems])
    inverse = np.array([pos[group.invert(g)] for g in elems])
    return FiniteGroup(k, cayley, pos[group.identity], inverse)


def _permissible_under_element(pf: ParameterFunction, action: GroupAction, g: int) -> bool:
    # g preserves the label partition iff the moved labels are constant on
    # every level set.
    moved = pf.indices[action.table[g]]
    for v in range(len(pf.value_set)):
        level = moved[pf.indices == v]
        if level.size and not np.all(level == level[0]):
            return False
    return True


def is_permissible(pf: ParameterFunction, action: GroupAction,
                   subgroup: Iterable[int]) -> bool:
    """Equal labels stay equal under every element of ``subgroup``."""
    if pf.space_size != action.space_size:
        raise ValueError("parameter function does not match the action space")
    elems = _require_subgroup(action.group, subgroup)
    return all(_permissible_under_element(pf, action, g) for g in elems)


def maximal_permissible_subgroup(pf: ParameterFunction, action: GroupAction) -> tuple[int, ...]:
    """All elements preserving the label partition; always a subgroup."""
    if pf.space_size != action.space_size:
        raise ValueError("parameter function does not match the action space")
    members = tuple(g for g in action.group.elements()
                    if _permissible_under_element(pf, action, g))
    return _require_subgroup(action.group, members)


def induced_parameter_action(pf: ParameterFunction, action: GroupAction,
                             subgroup: Iterable[int]) -> GroupAction:
    """The action a permissible parameter inherits on its value set.

    Value ``v = labels(x)`` moves to ``labels(x.g)``; permissibility makes
    this independent of the representative ``x``.  The returned action's
    group is the reindexed subgroup (element ``i`` = ``sorted(subgroup)[i]``).
    """
    elems = _require_subgroup(action.group, subgroup)
    if not is_permissible(pf, action, elems):
        raise ValueError("parameter not permissible under subgroup")
    reps = [int(np.flatnonzero(pf.indices == v)[0]) for v in range(len(pf.value_set))]
    table = np.array([[pf.indices[action.apply(g, x)] for x in reps] for g in elems])
    return GroupAction(subgroup_group(action.group, elems), len(pf.value_set), table)


def find_intertwiner(pf_a: ParameterFunction, pf_b: ParameterFunction,
                     action: GroupAction) -> Optional[int]:
    """Search for ``k`` with ``pf_b(x) = pf_a(x.k)`` for every ``x``."""
    if set(pf_a.value_set) != set(pf_b.value_set):
        return None
    remap = np.array([pf_a.value_set.index(v) for v in pf_b.value_set])
    target = remap[pf_b.indices]
    for k in action.group.elements():
        if np.array_equal(pf_a.indices[action.table[k]], target):
            return k
    return None
