"""From noisy observations to a unitary map.

A statistical model assigns each parameter value a distribution over
outcomes.  A statistic compresses outcomes; when it is sufficient nothing
about the parameter is lost, and when it is complete no nonzero function
of it averages to zero everywhere.  For a complete statistic, the
expectation operator (functions of the statistic -> functions of the
parameter) is injective, and its polar factor is the unitary bridge
between the two function spaces.
"""

import numpy as np

from symquant import (StatisticalModel, Statistic, expectation_operator,
                      identity_statistic, is_complete, is_sufficient,
                      perfect_model, statistic_values, unitarize)

# A detector reads the true binary value, but errs 10% of the time.
coin = StatisticalModel(params=("+1", "-1"), outcomes=("+1", "-1"),
                        probs=np.array([[0.9, 0.1], [0.1, 0.9]]))
stat = identity_statistic(coin)

print("model rows (params x outcomes):")
print(coin.probs)
print("identity statistic sufficient:", is_sufficient(coin, stat))
print("identity statistic complete:  ", is_complete(coin, stat))

a = expectation_operator(coin, stat)
print("expectation operator:")
print(a)
u = unitarize(a)
print("unitary polar factor (symmetric positive input -> identity):")
print(np.round(u, 12))
print()

# Throwing the outcome away is not sufficient: the conditional given the
# collapsed statistic still depends on the parameter.
collapsed = Statistic({"+1": "*", "-1": "*"})
print("constant statistic sufficient:", is_sufficient(coin, collapsed))
print()

# A model whose rows coincide is useless: completeness fails and there is
# no unitary connection to build.
flat = StatisticalModel(("+1", "-1"), ("+1", "-1"),
                        np.array([[0.5, 0.5], [0.5, 0.5]]))
print("flat model complete:", is_complete(flat, identity_statistic(flat)))
try:
    unitarize(expectation_operator(flat, identity_statistic(flat)))
except ValueError as err:
    print("unitarize says:", err)
print()

# The noise-free limit: outcomes ARE parameter values, the operator is the
# identity, and scaled indicators map to scaled indicators.
model, perfect_stat = perfect_model(("A", "B", "C"))
ap = expectation_operator(model, perfect_stat)
print("perfect experiment operator is the identity:",
      bool(np.array_equal(ap, np.eye(3))))
n = len(statistic_values(model, perfect_stat))
h = np.sqrt(n) * np.eye(n)[0]
print("sqrt(n) * indicator of the first value maps to", ap @ h)
