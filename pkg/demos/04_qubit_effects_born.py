"""The spin-1/2 effect calculus: questions, answers, and probabilities.

A pure state is a question ("spin along b?") plus the answer (+1 or -1),
encoded as the unit vector u = answer * b.  Allowing predeclared error
probabilities (level alpha, power beta) widens the family of states to
effects (r*I + c*u.sigma)/2 with r = 2-alpha-beta, c = beta-alpha.  The
probability a pure state a assigns to an effect is (r + c*a.u)/2 - the
transition probability formula, recovered three independent ways.
"""

import numpy as np

from symquant import (TestSpec, born_pure, coin_mixture, complement_effect,
                      effect_from_test, effect_sum, generalized_probability,
                      mixed_from_posterior, pauli_matrices, pure_state,
                      spin_state_vector, test_from_effect, test_probability)

sx, sy, sz = pauli_matrices()
print("pauli matrices anticommute:",
      np.abs(sx @ sy + sy @ sx).max() == 0.0)

a = np.array([0.0, 0.0, 1.0])
b = np.array([1.0, 1.0, 1.0]) / np.sqrt(3)

closed = born_pure(a, b)
trace = np.trace(pure_state(a).matrix @ pure_state(b).matrix).real
overlap = abs(np.vdot(spin_state_vector(a), spin_state_vector(b))) ** 2
print(f"P(b|a) three ways: closed {closed:.15f}, trace {trace:.15f}, "
      f"overlap {overlap:.15f}")
print()

# a noisy test of "spin along b = +1?" with level 0.05 and power 0.8
spec = TestSpec(b, alpha=0.05, beta=0.8)
effect = effect_from_test(spec)
print(f"effect coordinates: r = {effect.r}, c = {effect.c}")
print("effect eigenvalues:", effect.eigenvalues)
print("parameters recovered:", test_from_effect(effect))
print(f"probability from state a: {generalized_probability(a, effect):.6f} "
      f"(= {test_probability(a, spec):.6f} in test coordinates)")
print("opposite report fills the gap:",
      generalized_probability(a, effect)
      + generalized_probability(a, complement_effect(effect)))
print()

# posterior weighting after an error-prone +1 report
mixed = mixed_from_posterior(b, p1=0.25)
print("posterior error 1/4 gives contrast c =", mixed.c)

# a fair coin between two experiments averages the coordinates
e1 = effect_from_test(TestSpec(b, 0.6, 0.9))
e2 = effect_from_test(TestSpec(a, 0.7, 0.95))
mix = coin_mixture(e1, e2)
print("coin mixture halves probabilities:",
      abs(generalized_probability(a, mix)
          - 0.5 * (generalized_probability(a, e1)
                   + generalized_probability(a, e2))))
total = effect_sum(e1, e2)
print("probability adds on summable effects:",
      abs(generalized_probability(a, total)
          - generalized_probability(a, e1)
          - generalized_probability(a, e2)))
print()

# four symmetric binary comparisons sit at tetrahedron angles; knowing the
# first answer, an error-free test of the second succeeds 1/3 of the time
v = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]]) / np.sqrt(3)
print("tetrahedron cosine:", np.dot(v[0], v[1]))
print("ideal follow-up probability:",
      test_probability(v[0], TestSpec(v[1], 0.0, 1.0)))
print("with alpha=0.05, beta=0.8:",
      test_probability(v[0], TestSpec(v[1], 0.05, 0.8)),
      "= 1 - 0.05/3 - 2*0.8/3 =", 1 - 0.05 / 3 - 2 * 0.8 / 3)
