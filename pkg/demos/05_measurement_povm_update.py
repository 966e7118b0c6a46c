"""Noisy instruments, mixed states, and the projection update.

A Hermitian operator encodes a question; its expectation in a state is
v^H T v.  A noisy instrument is a statistical model glued onto the
question's eigenbasis: an operator-valued measure with tr(rho M(y)) as
outcome law.  Measuring ideally without reading the value pinches the
state onto the measurement basis.
"""

import numpy as np

from symquant import (HermitianOperator, StatisticalModel, SubspaceBasis,
                      born_pure, density_from_mixture, dot_sigma, expectation,
                      function_of_operator, mixed_from_posterior,
                      outcome_distribution, povm_from_model, pure_density,
                      spin_state_vector, von_neumann_update)

a = np.array([0.6, 0.0, 0.8])
b = np.array([0.0, 0.0, 1.0])

spin_b = HermitianOperator(2, dot_sigma(b))
v_a = spin_state_vector(a)
print("E[spin along b | state a] =", expectation(v_a, spin_b))
print("   equals 2 P(b|a) - 1    =", 2 * born_pure(a, b) - 1)
print("spin component squared is certain:",
      np.allclose(function_of_operator(spin_b, lambda x: x * x).matrix,
                  np.eye(2)))
print()

# an instrument that reports the sign but errs: 5% on +1, 20% on -1
model = StatisticalModel(params=(1, -1), outcomes=(1, -1),
                         probs=np.array([[0.95, 0.05], [0.20, 0.80]]))
basis = SubspaceBasis(2, np.array([spin_state_vector(b, 1),
                                   spin_state_vector(b, -1)]))
povm = povm_from_model(model, basis)
print("instrument operators sum to identity:",
      np.abs(povm.operators.sum(axis=0) - np.eye(2)).max())

rho_a = pure_density(v_a)
dist = outcome_distribution(rho_a, povm)
print("outcome law from state a:", dict(zip(povm.outcomes, np.round(dist, 6))))

p = born_pure(a, b)
print("by hand: P(+1) = 0.95 p + 0.20 (1-p) =", 0.95 * p + 0.20 * (1 - p))
print()

# a mixed state as a weighted question: posterior error 0.1 on a +1 report
rho_mixed = density_from_mixture([0.9, 0.1],
                                 [spin_state_vector(b, 1),
                                  spin_state_vector(b, -1)])
print("mixture matches the posterior-weighted effect:",
      np.abs(rho_mixed.matrix - mixed_from_posterior(b, 0.1).matrix).max())
print("maximally mixed outcome law:",
      outcome_distribution(density_from_mixture([0.5, 0.5],
                                                list(np.eye(2, dtype=complex))),
                           povm))
print()

# ideal measurement without reading the value: the state decoheres onto
# the question basis, with the transition probabilities on the diagonal
updated = von_neumann_update(rho_a, basis)
in_basis = basis.vectors.conj() @ updated.matrix @ basis.vectors.T
print("updated state in the question basis:")
print(np.round(in_basis.real, 6))
print("diagonal equals (P, 1-P):", np.round([p, 1 - p], 6))
again = von_neumann_update(updated, basis)
print("updating twice changes nothing:",
      np.abs(again.matrix - updated.matrix).max())
