"""Effect calculus tests: Pauli algebra, Born values, tests, and mixtures."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symquant.qubit import (Effect, TestSpec, born_pure, coin_mixture,
                            complement_effect, dot_sigma, effect_from_test,
                            effect_sum, expected_component,
                            generalized_probability, mixed_from_posterior,
                            pauli_matrices, pure_state, rotate_effect,
                            spin_state_vector, unit_vector)
from symquant.qubit import test_from_effect as spec_from_effect
from symquant.qubit import test_probability as spec_probability
from symquant.sampling import (random_effect, random_rotation,
                               random_summable_pair, random_test_spec,
                               random_unit)

EX = np.array([1.0, 0.0, 0.0])
EY = np.array([0.0, 1.0, 0.0])
EZ = np.array([0.0, 0.0, 1.0])


def units(seed=0, count=50):
    rng = np.random.default_rng(seed)
    return [random_unit(rng) for _ in range(count)]


class TestPauli:
    def test_printed_matrices(self):
        sx, sy, sz = pauli_matrices()
        assert np.array_equal(sx, [[0, 1], [1, 0]])
        assert np.array_equal(sy, [[0, -1j], [1j, 0]])
        assert np.array_equal(sz, [[1, 0], [0, -1]])

    def test_squares_are_identity(self):
        for s in pauli_matrices():
            assert np.array_equal(s @ s, np.eye(2))

    def test_pairwise_anticommute(self):
        sx, sy, sz = pauli_matrices()
        for a, b in [(sx, sy), (sy, sz), (sx, sz)]:
            assert np.abs(a @ b + b @ a).max() < 1e-15

    def test_trace_orthogonality(self):
        paulis = pauli_matrices()
        for i, a in enumerate(paulis):
            for j, b in enumerate(paulis):
                assert abs(np.trace(a @ b) - (2.0 if i == j else 0.0)) < 1e-15


class TestPureState:
    def test_projector_properties(self):
        for b in units(1, 20):
            e = pure_state(b, 1)
            m = e.matrix
            assert abs(np.trace(m).real - 1) < 1e-12
            assert np.abs(m @ m - m).max() < 1e-12
            assert np.allclose(sorted(np.linalg.eigvalsh(m)), [0, 1], atol=1e-12)

    def test_minus_outcome_is_opposite_direction(self):
        for b in units(2, 10):
            assert np.abs(pure_state(b, -1).matrix
                          - pure_state(-b, 1).matrix).max() < 1e-15

    def test_two_outcomes_sum_to_identity(self):
        for b in units(3, 10):
            total = pure_state(b, 1).matrix + pure_state(b, -1).matrix
            assert np.abs(total - np.eye(2)).max() < 1e-15


class TestEffectValidation:
    def test_rejects_outside_triangle(self):
        with pytest.raises(ValueError):
            Effect(0.1, 0.5, EZ)  # r < c
        with pytest.raises(ValueError):
            Effect(1.9, 0.5, EZ)  # r > 2 - c
        with pytest.raises(ValueError):
            Effect(1.0, 1.5, EZ)  # c > 1

    def test_direction_required_when_informative(self):
        with pytest.raises(ValueError):
            Effect(1.0, 0.5, None)

    def test_degenerate_direction_normalized_to_none(self):
        e = Effect(1.0, 0.0, None)
        assert e.u is None
        assert np.array_equal(e.scaled_axis, np.zeros(3))
        assert np.allclose(e.matrix, 0.5 * np.eye(2))

    def test_eigenvalues_formula(self):
        rng = np.random.default_rng(4)
        for _ in range(200):
            e = random_effect(rng)
            numeric = np.linalg.eigvalsh(e.matrix)
            assert np.abs(numeric - np.array(e.eigenvalues)).max() < 1e-10


class TestEffectFromTest:
    def test_coordinates(self):
        spec = TestSpec(EZ, 0.1, 0.7)
        e = effect_from_test(spec)
        assert abs(e.r - 1.2) < 1e-15
        assert abs(e.c - 0.6) < 1e-15
        assert np.array_equal(e.u, EZ)

    def test_error_free_boundary_is_pure(self):
        for b in units(5, 10):
            e = effect_from_test(TestSpec(b, 0.0, 1.0))
            assert np.abs(e.matrix - pure_state(b).matrix).max() < 1e-15

    def test_equal_errors_lose_the_direction(self):
        e = effect_from_test(TestSpec(EX, 0.3, 0.3))
        assert e.c == 0 and e.u is None
        assert np.allclose(e.matrix, 0.7 * np.eye(2))

    def test_matched_errors_give_density_matrix(self):
        e = effect_from_test(TestSpec(EY, 0.2, 0.8))
        assert abs(e.r - 1.0) < 1e-15
        assert abs(np.trace(e.matrix).real - 1.0) < 1e-15

    def test_minus_outcome_is_complement(self):
        spec = TestSpec(EZ, 0.1, 0.7, outcome=-1)
        e = effect_from_test(spec)
        plus = effect_from_test(TestSpec(EZ, 0.1, 0.7, outcome=1))
        assert np.abs(e.matrix + plus.matrix - np.eye(2)).max() < 1e-15

    def test_powerless_test_rejected(self):
        with pytest.raises(ValueError, match="powerless test"):
            TestSpec(EZ, 0.8, 0.2)


class TestRoundTrip:
    def test_pure_state_boundary(self):
        spec = spec_from_effect(pure_state(EX))
        assert spec.alpha == 0.0 and spec.beta == 1.0
        assert np.array_equal(spec.b, EX)

    def test_uninformative_effect_rejected(self):
        with pytest.raises(ValueError, match="direction unrecoverable"):
            spec_from_effect(Effect(1.0, 0.0, None))

    @given(st.floats(0, 0.999), st.data())
    @settings(max_examples=100, deadline=None)
    def test_spec_to_effect_to_spec(self, alpha, data):
        beta = data.draw(st.floats(alpha + 1e-6, 1.0))
        rng = np.random.default_rng(data.draw(st.integers(0, 2 ** 31)))
        b = random_unit(rng)
        spec = TestSpec(b, alpha, beta)
        back = spec_from_effect(effect_from_test(spec))
        assert abs(back.alpha - alpha) < 1e-12
        assert abs(back.beta - beta) < 1e-12
        assert np.abs(back.b - b).max() < 1e-12
        assert back.outcome == 1

    def test_effect_to_spec_to_effect_for_minus_outcome(self):
        # the recovered spec describes the same operator with the errors
        # exchanged and the direction reversed
        spec = TestSpec(EZ, 0.1, 0.7, outcome=-1)
        e = effect_from_test(spec)
        back = effect_from_test(spec_from_effect(e))
        assert np.abs(back.matrix - e.matrix).max() < 1e-15
        recovered = spec_from_effect(e)
        assert abs(recovered.alpha - (1 - spec.beta)) < 1e-15
        assert abs(recovered.beta - (1 - spec.alpha)) < 1e-15


class TestMixedFromPosterior:
    def test_no_error_gives_pure_state(self):
        for b in units(6, 5):
            m = mixed_from_posterior(b, 0.0)
            assert np.abs(m.matrix - pure_state(b).matrix).max() < 1e-15

    def test_half_gives_uninformative(self):
        m = mixed_from_posterior(EX, 0.5)
        assert m.u is None
        assert np.allclose(m.matrix, 0.5 * np.eye(2))

    def test_quarter_gives_half_contrast(self):
        assert abs(mixed_from_posterior(EZ, 0.25).c - 0.5) < 1e-15

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            mixed_from_posterior(EZ, 0.6)


class TestBorn:
    def test_same_direction_certain(self):
        assert born_pure(EZ, EZ) == 1.0
        for a in units(7, 20):
            assert abs(born_pure(a, a) - 1.0) < 1e-15

    def test_opposite_direction_impossible(self):
        assert born_pure(EZ, -EZ) == 0.0

    def test_orthogonal_directions_even(self):
        assert abs(born_pure(EZ, EX) - 0.5) < 1e-15

    def test_tetrahedron_angle_gives_one_third(self):
        a = np.array([1.0, 1.0, 1.0]) / np.sqrt(3)
        b = np.array([1.0, -1.0, -1.0]) / np.sqrt(3)
        assert abs(np.dot(a, b) + 1 / 3) < 1e-15
        assert abs(born_pure(a, b) - 1 / 3) < 1e-12

    def test_three_computations_agree(self):
        rng = np.random.default_rng(8)
        for _ in range(300):
            a, b = random_unit(rng), random_unit(rng)
            closed = born_pure(a, b)
            trace = np.trace(pure_state(a).matrix @ pure_state(b).matrix).real
            overlap = abs(np.vdot(spin_state_vector(a), spin_state_vector(b))) ** 2
            assert abs(closed - trace) < 1e-12
            assert abs(closed - overlap) < 1e-12

    def test_state_vectors_are_eigenvectors(self):
        for b in units(9, 20):
            for outcome in (1, -1):
                v = spin_state_vector(b, outcome)
                assert np.abs(dot_sigma(b) @ v - outcome * v).max() < 1e-12
                assert abs(np.linalg.norm(v) - 1) < 1e-12


class TestGeneralizedProbability:
    def test_identity_effect_is_certain(self):
        e = Effect(2.0, 0.0, None)
        for a in units(10, 10):
            assert generalized_probability(a, e) == 1.0

    def test_own_pure_state_is_certain(self):
        for a in units(11, 10):
            assert abs(generalized_probability(a, pure_state(a)) - 1.0) < 1e-15

    def test_uninformative_is_half(self):
        e = Effect(1.0, 0.0, None)
        assert generalized_probability(EY, e) == 0.5

    def test_zero_effect_is_impossible(self):
        e = Effect(0.0, 0.0, None)
        assert generalized_probability(EX, e) == 0.0

    def test_matches_trace_formula(self):
        rng = np.random.default_rng(12)
        for _ in range(200):
            a = random_unit(rng)
            e = random_effect(rng)
            trace = np.trace(pure_state(a).matrix @ e.matrix).real
            assert abs(generalized_probability(a, e) - trace) < 1e-12

    def test_matches_test_coordinates(self):
        rng = np.random.default_rng(13)
        for _ in range(200):
            a = random_unit(rng)
            spec = random_test_spec(rng, outcome=1 if rng.uniform() < 0.5 else -1)
            assert abs(spec_probability(a, spec)
                       - generalized_probability(a, effect_from_test(spec))) < 1e-12

    def test_complement_sums_to_one(self):
        rng = np.random.default_rng(14)
        for _ in range(100):
            a, e = random_unit(rng), random_effect(rng)
            total = generalized_probability(a, e) \
                + generalized_probability(a, complement_effect(e))
            assert abs(total - 1.0) < 1e-12


class TestComplement:
    def test_identity_to_zero(self):
        e = complement_effect(Effect(2.0, 0.0, None))
        assert e.r == 0.0 and e.c == 0.0

    def test_pure_state_flips_outcome(self):
        for b in units(15, 10):
            assert np.abs(complement_effect(pure_state(b, 1)).matrix
                          - pure_state(b, -1).matrix).max() < 1e-15

    def test_involution(self):
        rng = np.random.default_rng(16)
        for _ in range(50):
            e = random_effect(rng)
            back = complement_effect(complement_effect(e))
            assert abs(back.r - e.r) < 1e-15
            assert np.abs(back.scaled_axis - e.scaled_axis).max() < 1e-15


class TestCoinMixture:
    def test_mixing_with_itself(self):
        rng = np.random.default_rng(17)
        for _ in range(20):
            e = random_effect(rng)
            m = coin_mixture(e, e)
            assert abs(m.r - e.r) < 1e-15
            assert np.abs(m.scaled_axis - e.scaled_axis).max() < 1e-15

    def test_opposite_pure_states_cancel(self):
        for b in units(18, 10):
            m = coin_mixture(pure_state(b, 1), pure_state(b, -1))
            assert m.u is None
            assert np.allclose(m.matrix, 0.5 * np.eye(2))

    def test_probability_halves(self):
        rng = np.random.default_rng(19)
        for _ in range(200):
            a = random_unit(rng)
            e1, e2 = random_effect(rng), random_effect(rng)
            lhs = generalized_probability(a, coin_mixture(e1, e2))
            rhs = 0.5 * (generalized_probability(a, e1)
                         + generalized_probability(a, e2))
            assert abs(lhs - rhs) < 1e-12


class TestAdditivity:
    def test_summable_pairs(self):
        rng = np.random.default_rng(20)
        for _ in range(300):
            a = random_unit(rng)
            e1, e2 = random_summable_pair(rng)
            total = effect_sum(e1, e2)
            # matrix sum sanity: largest eigenvalue at most 1
            assert np.linalg.eigvalsh(e1.matrix + e2.matrix).max() < 1 + 1e-12
            assert np.abs(total.matrix - e1.matrix - e2.matrix).max() < 1e-12
            assert abs(generalized_probability(a, total)
                       - generalized_probability(a, e1)
                       - generalized_probability(a, e2)) < 1e-12

    def test_sum_above_identity_rejected(self):
        with pytest.raises(ValueError, match="exceeds the identity"):
            effect_sum(pure_state(EZ), pure_state(EZ))

    def test_complementary_pair_sums_to_identity(self):
        e = random_effect(np.random.default_rng(21))
        total = effect_sum(e, complement_effect(e))
        assert np.abs(total.matrix - np.eye(2)).max() < 1e-12


class TestExpectedComponent:
    def test_error_free_reading_is_exact(self):
        spec = TestSpec(EZ, 0.0, 1.0)
        assert np.array_equal(expected_component(spec, 1), EZ)

    def test_sum_is_twice_the_effect_vector(self):
        rng = np.random.default_rng(22)
        for _ in range(50):
            spec = random_test_spec(rng)
            total = expected_component(spec, 1) + expected_component(spec, -1)
            e = effect_from_test(spec)
            assert np.abs(total - 2 * e.scaled_axis).max() < 1e-12

    def test_equal_errors_cancel(self):
        spec = TestSpec(EX, 0.4, 0.4)
        total = expected_component(spec, 1) + expected_component(spec, -1)
        assert np.abs(total).max() < 1e-15

    def test_bad_value_rejected(self):
        with pytest.raises(ValueError):
            expected_component(TestSpec(EZ, 0.0, 1.0), 0)


class TestRotationInvariance:
    def test_born_under_rotations(self):
        rng = np.random.default_rng(23)
        for _ in range(100):
            a, b = random_unit(rng), random_unit(rng)
            rot = random_rotation(rng)
            assert abs(born_pure(rot @ a, rot @ b) - born_pure(a, b)) < 1e-12

    def test_effects_under_rotations(self):
        rng = np.random.default_rng(24)
        for _ in range(100):
            a, e = random_unit(rng), random_effect(rng)
            rot = random_rotation(rng)
            assert abs(generalized_probability(rot @ a, rotate_effect(e, rot))
                       - generalized_probability(a, e)) < 1e-12

    def test_non_rotation_rejected(self):
        with pytest.raises(ValueError):
            rotate_effect(pure_state(EZ), 2 * np.eye(3))


@given(st.floats(-1, 1), st.floats(0, 2 * np.pi))
@settings(max_examples=50, deadline=None)
def test_born_range_property(z, phi):
    s = np.sqrt(1 - z * z)
    b = np.array([s * np.cos(phi), s * np.sin(phi), z])
    b = b / np.linalg.norm(b)
    p = born_pure(EZ, b)
    assert -1e-12 <= p <= 1 + 1e-12
    assert abs(p - (1 + z / np.linalg.norm([s * np.cos(phi), s * np.sin(phi), z])) / 2) < 1e-9


def test_unit_vector_validation():
    with pytest.raises(ValueError):
        unit_vector([1.0, 1.0, 1.0])
    with pytest.raises(ValueError):
        unit_vector([1.0, 0.0])
