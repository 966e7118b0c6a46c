"""Function spaces over the hidden orientations, and their building blocks.

Square-integrable functions on the orientation space carry a unitary
action of the symmetry group (point masses are pushed along the motion).
Functions depending only on a reading form an invariant subspace with the
scaled level-set indicators as an orthonormal basis; multiplying by a
real coding of the reading gives a Hermitian operator whose eigenvectors
those indicators are.  Averaging over the group splits the whole space
into irreducible blocks - the superselection sectors.
"""

import numpy as np

from symquant import (classify_sector, decompose_irreducible,
                      eigen_transport_check, indicator_basis,
                      induced_parameter_action, invariance_residual,
                      invariant_measure, invariant_subspace,
                      maximal_permissible_subgroup, multiplication_operator,
                      regular_representation, restrict_representation,
                      restrict_to_basis, s3_triangle, schur_check,
                      sector_report, averaged_intertwiner)

tri = s3_triangle()
measure = invariant_measure(tri.action)
rep = regular_representation(tri.action, measure)

print("representation: six 6x6 permutation matrices")
print("character (trace) per element:",
      [int(np.trace(m).real) for m in rep.matrices])
print()

# colour functions: a 2-dim invariant subspace spanned by indicators
colour_basis = indicator_basis(tri.colour, measure)
print("colour indicator basis (rows, weighted-orthonormal):")
print(colour_basis.vectors.real)

coding = [-1.0, 1.0]
op = multiplication_operator(tri.colour, coding)
print("colour operator spectrum:",
      [float(x) for x in np.linalg.eigvalsh(op.matrix)])

# moving an eigenvector with a flip lands on the eigenvector of the
# swapped colour - eigenvalues travel with the values
value_action = induced_parameter_action(tri.colour, tri.action, range(6))
print("eigenvalue transport holds:",
      eigen_transport_check(rep, op, value_action, colour_basis, coding))
print()

# windows: 3-dim invariant subspaces for their own permissible subgroup
window = tri.windows[0]
sub = maximal_permissible_subgroup(window, tri.action)
print(f"window a invariant subspace dim: "
      f"{invariant_subspace(window, measure).size} "
      f"(permissible subgroup {sub})")
print("window transport on that subgroup:",
      eigen_transport_check(
          restrict_representation(rep, sub),
          multiplication_operator(window),
          induced_parameter_action(window, tri.action, sub),
          indicator_basis(window, measure)))
print()

# irreducible blocks: the regular representation splits as 1 + 1 + 2 + 2
blocks = decompose_irreducible(rep, seed=0)
print("irreducible block dims:", sorted(b.size for b in blocks))
print("worst invariance residual:",
      max(invariance_residual(rep, b) for b in blocks))
print("sector report:", sector_report(blocks))

one_sector = blocks[0].vectors[0]
cross = (blocks[0].vectors[0] + blocks[-1].vectors[0]) / np.sqrt(2)
print("pure-sector vector classified as:", classify_sector(blocks, one_sector))
print("cross-sector combination classified as:", classify_sector(blocks, cross),
      "(not a state)")
print()

# the two 2-dim blocks are equivalent: group-averaging a random matrix
# between them yields an isomorphism, never something in between
two_dim = [restrict_to_basis(rep, b) for b in blocks if b.size == 2]
bridge = averaged_intertwiner(two_dim[0], two_dim[1], seed=1)
print("averaged map between the 2-dim blocks:",
      schur_check(two_dim[0], two_dim[1], bridge))
one_dim = [restrict_to_basis(rep, b) for b in blocks if b.size == 1]
flat = averaged_intertwiner(one_dim[0], one_dim[1], seed=2)
print("averaged map between the two 1-dim blocks:",
      schur_check(one_dim[0], one_dim[1], flat))
