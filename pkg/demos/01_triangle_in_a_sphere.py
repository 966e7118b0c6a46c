"""A solid triangle hidden in a sphere: which questions transform well?

A two-sided triangle (black/white faces) floats inside an opaque sphere.
Four windows exist: one at the pole shows the facing colour, three at the
equator each show the nearest corner (A, B, or C).  The orientation of the
triangle is the hidden "total" description; each window reading is a
function of it.  The six symmetry moves of the triangle act on
orientations by right multiplication.

A reading is *permissible* under a set of moves when orientations that
agree on the reading still agree after any of those moves - exactly the
condition for the moves to act on the reading's values themselves.
"""

import numpy as np

from symquant import (find_intertwiner, induced_parameter_action,
                      invariant_measure, is_permissible, is_transitive,
                      maximal_permissible_subgroup, orbits, run_triangle,
                      s3_triangle)

tri = s3_triangle()
group, action = tri.group, tri.action

print("orientations:", action.space_size, "| moves:", group.order)
print("transitive:", is_transitive(action))
print("orbit structure:", orbits(action))
print()

print("readings per orientation (colour, window a, window b, window c):")
for x in range(6):
    print(f"  orientation {x}: "
          f"{tri.colour.labels[x]:>2} "
          f"{tri.windows[0].labels[x]} {tri.windows[1].labels[x]} "
          f"{tri.windows[2].labels[x]}")
print()

full = range(6)
print("colour permissible under all six moves:",
      is_permissible(tri.colour, action, full))
print("window a permissible under all six moves:",
      is_permissible(tri.windows[0], action, full))
print()

# The colour inherits an action on {Bl, Wh}: rotations keep the side up,
# flips turn the triangle over.
induced = induced_parameter_action(tri.colour, action, full)
print("induced colour action (rows = moves, columns = colour values):")
print(induced.table)
print()

# The windows are more subtle.  A 120-degree turn moves ANOTHER window's
# corner into view, and that corner is not determined by the current
# reading - so the cyclic moves break permissibility, and the maximal
# permissible subgroup is just {identity, the flip that keeps the reading}.
for name, pf in zip("abc", tri.windows):
    sub = maximal_permissible_subgroup(pf, action)
    print(f"window {name}: maximal permissible subgroup = {sub}")
print("cyclic moves preserve window a's partition:",
      is_permissible(tri.windows[0], action, (0, 1, 2)))
print()

# Between two windows there is still an exact symmetry: some move carries
# one window's reading onto the other's, so predictions between windows
# reduce to counting orientations under the uniform invariant measure.
k = find_intertwiner(tri.windows[0], tri.windows[1], action)
print(f"move {k} carries window a's reading onto window b's")
measure = invariant_measure(action)
joint = np.zeros((3, 3))
for x in range(6):
    joint[tri.windows[0].indices[x], tri.windows[1].indices[x]] += \
        measure.weights[x]
print("P(window b | window a), rows A,B,C:")
print(joint / joint.sum(axis=1, keepdims=True))
print()

# The full report also carries three "claim:" rows recording the cyclic
# maximal-subgroup description; the brute-force audit above refutes them,
# so those rows show FAIL next to the passing audit rows.
print("full scenario report:")
print(run_triangle().to_table())
