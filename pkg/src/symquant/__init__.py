"""Finite symmetry, statistical models, and the qubit effect calculus."""

from .groups import (FiniteGroup, GroupAction, InvariantMeasure,
                     ParameterFunction, TriangleModel, find_intertwiner,
                     generate_group, induced_parameter_action,
                     invariant_measure, is_permissible, is_transitive,
                     maximal_permissible_subgroup, orbits, parameter_function,
                     s3_triangle, subgroup_group)
from .hilbert import (HermitianOperator, Representation, SubspaceBasis,
                      averaged_intertwiner, classify_sector,
                      conjugated_operator, decompose_irreducible,
                      eigen_transport_check, indicator_basis,
                      invariant_subspace, invariance_residual,
                      multiplication_operator, projection_residual,
                      regular_representation, restrict_representation,
                      restrict_to_basis, schur_check, sector_decomposition,
                      sector_report, word_operator)
from .measurement import (DensityMatrix, OperatorValuedMeasure,
                          density_from_mixture, expectation,
                          function_of_operator, outcome_distribution,
                          povm_from_model, pure_density, von_neumann_update)
from .qubit import (Effect, TestSpec, born_pure, coin_mixture,
                    complement_effect, dot_sigma, effect_from_test,
                    effect_sum, expected_component, generalized_probability,
                    mixed_from_posterior, pauli_matrices, pure_state,
                    rotate_effect, spin_state_vector, test_from_effect,
                    test_probability, unit_vector)
from .reports import Check, ScenarioReport
from .scenarios import (SpinConfig, run_check, run_scenario, run_spin,
                        run_tetrahedron, run_triangle)
from .statmodel import (StatisticalModel, Statistic, expectation_operator,
                        identity_statistic, is_complete, is_sufficient,
                        perfect_model, statistic_values, unitarize)

__version__ = "0.1.0"
