"""Acceptance gate: one test per criterion, printing a pass/fail line.

Criteria 1 and 7 contain a clause asserting that each triangle window
reading has the cyclic rotation subgroup as its maximal permissible
subgroup.  Exhaustive enumeration over the 6-point orientation space
contradicts that clause (the true maximal subgroup is the order-2 reading
stabilizer; no function on this space has a cyclic order-3 maximal
subgroup under right multiplication).  Those clauses are kept as stated
and marked strict-xfail; the remaining clauses and the audited structure
are asserted in companion tests.  See README "Known discrepancies".
"""

import time

import numpy as np
import pytest

from symquant.groups import (induced_parameter_action, invariant_measure,
                             is_permissible, maximal_permissible_subgroup,
                             s3_triangle)
from symquant.hilbert import (decompose_irreducible, eigen_transport_check,
                              indicator_basis, invariance_residual,
                              invariant_subspace, multiplication_operator,
                              projection_residual, regular_representation,
                              restrict_representation, SubspaceBasis)
from symquant.measurement import (outcome_distribution, povm_from_model,
                                  von_neumann_update)
from symquant.qubit import (TestSpec, born_pure, coin_mixture, effect_from_test,
                            effect_sum, generalized_probability, pure_state,
                            spin_state_vector, test_from_effect,
                            test_probability)
from symquant.sampling import (random_stochastic_model, random_complete_model,
                               random_summable_pair, random_unit,
                               random_unitary)
from symquant.scenarios import TETRAHEDRON_VERTICES, run_triangle
from symquant.statmodel import (StatisticalModel, expectation_operator,
                                identity_statistic, unitarize)


def _passline(n: int, text: str) -> None:
    print(f"criterion {n}: PASS - {text}")


EXACT_UNIT_AXES = [sign * np.eye(3)[i] for i in range(3) for sign in (1.0, -1.0)]


@pytest.mark.xfail(strict=True,
                   reason="cyclic maximal subgroup clause contradicted by "
                          "exhaustive enumeration; see README")
def test_criterion_1_lemma_reproduction_as_stated():
    start = time.perf_counter()
    tri = s3_triangle()
    full = range(6)
    assert is_permissible(tri.colour, tri.action, full)
    for w in tri.windows:
        assert not is_permissible(w, tri.action, full)
    for w in tri.windows:
        assert maximal_permissible_subgroup(w, tri.action) == (0, 1, 2)
    assert time.perf_counter() - start < 1.0


def test_criterion_1_satisfiable_clauses_and_audit():
    start = time.perf_counter()
    tri = s3_triangle()
    full = range(6)
    assert is_permissible(tri.colour, tri.action, full)
    assert maximal_permissible_subgroup(tri.colour, tri.action) == tuple(range(6))
    for i, w in enumerate(tri.windows):
        assert not is_permissible(w, tri.action, full)
        assert maximal_permissible_subgroup(w, tri.action) == (0, 3 + i)
        assert not is_permissible(w, tri.action, (0, 1, 2))
    report = run_triangle()
    failed = [c.description for c in report.checks if not c.passed]
    assert all(d.startswith("claim:") for d in failed)
    assert len(failed) == 3
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _passline(1, f"colour/window permissibility verdicts and audited maximal "
                 f"subgroups in {elapsed:.2f}s (cyclic clause xfailed)")


def test_criterion_2_born_closed_form():
    start = time.perf_counter()
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(1000):
        a, b = random_unit(rng), random_unit(rng)
        closed = born_pure(a, b)
        trace = float(np.real(np.trace(pure_state(a).matrix
                                       @ pure_state(b).matrix)))
        overlap = float(abs(np.vdot(spin_state_vector(a),
                                    spin_state_vector(b))) ** 2)
        worst = max(worst, abs(closed - trace), abs(closed - overlap))
    assert worst < 1e-12
    for a in EXACT_UNIT_AXES:
        assert born_pure(a, a) == 1.0
        assert born_pure(a, -a) == 0.0
    for _ in range(100):
        a = random_unit(rng)
        assert abs(born_pure(a, a) - 1.0) <= 1e-15
        assert abs(born_pure(a, -a)) <= 1e-15
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _passline(2, f"three-way agreement {worst:.1e} over 1000 pairs; "
                 f"certain/impossible exact on representable units; {elapsed:.2f}s")


def test_criterion_3_tetrahedron_decision():
    v = TETRAHEDRON_VERTICES
    a, b = v[0], v[1]
    ideal = test_probability(a, TestSpec(b, 0.0, 1.0))
    assert abs(ideal - 1 / 3) < 1e-12
    general = test_probability(a, TestSpec(b, 0.05, 0.8))
    assert abs(general - (1 - 0.05 / 3 - 2 * 0.8 / 3)) < 1e-12
    _passline(3, f"ideal 1/3 and general {general:.12f}")


def test_criterion_4_effect_round_trip():
    rng = np.random.default_rng(4)
    worst_spec = worst_matrix = worst_eig = 0.0
    for _ in range(1000):
        alpha = rng.uniform(0, 0.99)
        beta = alpha + (1 - alpha) * rng.uniform(0.01, 1)
        spec = TestSpec(random_unit(rng), alpha, beta)
        effect = effect_from_test(spec)
        back = test_from_effect(effect)
        worst_spec = max(worst_spec, abs(back.alpha - spec.alpha),
                         abs(back.beta - spec.beta),
                         float(np.abs(back.b - spec.b).max()))
        again = effect_from_test(back)
        worst_matrix = max(worst_matrix,
                           float(np.abs(again.matrix - effect.matrix).max()))
        numeric = np.linalg.eigvalsh(effect.matrix)
        worst_eig = max(worst_eig,
                        float(np.abs(numeric - np.array(effect.eigenvalues)).max()))
    assert worst_spec < 1e-12
    assert worst_matrix < 1e-12
    assert worst_eig < 1e-10
    _passline(4, f"round-trip {worst_spec:.1e}, eigenvalues {worst_eig:.1e} "
                 f"over 1000 specs")


def test_criterion_5_additivity():
    rng = np.random.default_rng(5)
    a = random_unit(rng)
    worst_add = worst_mix = 0.0
    for _ in range(1000):
        e1, e2 = random_summable_pair(rng)
        total = effect_sum(e1, e2)
        worst_add = max(worst_add,
                        abs(generalized_probability(a, total)
                            - generalized_probability(a, e1)
                            - generalized_probability(a, e2)))
        mix = coin_mixture(e1, e2)
        worst_mix = max(worst_mix,
                        abs(generalized_probability(a, mix)
                            - 0.5 * (generalized_probability(a, e1)
                                     + generalized_probability(a, e2))))
    assert worst_add < 1e-12
    assert worst_mix < 1e-12
    _passline(5, f"additivity {worst_add:.1e}, coin mixture {worst_mix:.1e} "
                 f"over 1000 pairs")


def test_criterion_6_representation_decomposition():
    start = time.perf_counter()
    tri = s3_triangle()
    rep = regular_representation(tri.action, invariant_measure(tri.action))
    worst_residual = 0.0
    for seed in range(5):
        blocks = decompose_irreducible(rep, seed=seed)
        assert sorted(b.size for b in blocks) == [1, 1, 2, 2]
        worst_residual = max(worst_residual,
                             max(invariance_residual(rep, b) for b in blocks))
    assert worst_residual < 1e-8
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    _passline(6, f"blocks {{1,1,2,2}} over 5 seeds, residual "
                 f"{worst_residual:.1e}, {elapsed:.2f}s")


@pytest.mark.xfail(strict=True,
                   reason="window readings are not permissible under the "
                          "cyclic subgroup, so the transport premise cannot "
                          "be built; see README")
def test_criterion_7_transport_under_cyclic_subgroup_as_stated():
    tri = s3_triangle()
    measure = invariant_measure(tri.action)
    rep = regular_representation(tri.action, measure)
    window = tri.windows[0]
    value_action = induced_parameter_action(window, tri.action, (0, 1, 2))
    assert eigen_transport_check(
        restrict_representation(rep, (0, 1, 2)),
        multiplication_operator(window),
        value_action,
        indicator_basis(window, measure))


def test_criterion_7_indicator_span_and_transport():
    tri = s3_triangle()
    measure = invariant_measure(tri.action)
    rep = regular_representation(tri.action, measure)
    worst = 0.0
    for pf in (tri.colour,) + tri.windows:
        va = invariant_subspace(pf, measure)
        ind = indicator_basis(pf, measure)
        worst = max(worst, max(projection_residual(va, v) for v in ind.vectors))
        worst = max(worst, max(projection_residual(ind, v) for v in va.vectors))
    assert worst < 1e-10

    coding = [-1.0, 1.0]
    assert eigen_transport_check(
        rep, multiplication_operator(tri.colour, coding),
        induced_parameter_action(tri.colour, tri.action, range(6)),
        indicator_basis(tri.colour, measure), coding)
    for w in tri.windows:
        sub = maximal_permissible_subgroup(w, tri.action)
        assert eigen_transport_check(
            restrict_representation(rep, sub),
            multiplication_operator(w),
            induced_parameter_action(w, tri.action, sub),
            indicator_basis(w, measure))
    _passline(7, f"indicator span residual {worst:.1e}; transport exhaustive "
                 f"on colour (full group) and windows (their maximal "
                 f"subgroups); cyclic clause xfailed")


def test_criterion_8_measurement_suite():
    rng = np.random.default_rng(8)
    worst_complete = worst_sum = worst_trace = worst_idem = 0.0
    for _ in range(100):
        dim = int(rng.integers(2, 6))
        model = random_stochastic_model(rng, dim, int(rng.integers(2, 6)))
        basis = SubspaceBasis(dim, random_unitary(rng, dim).T)
        povm = povm_from_model(model, basis)
        worst_complete = max(worst_complete,
                             float(np.abs(povm.operators.sum(axis=0)
                                          - np.eye(dim)).max()))
        z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        state = z / np.linalg.norm(z)
        worst_sum = max(worst_sum,
                        abs(float(outcome_distribution(state, povm).sum()) - 1))
        rho = von_neumann_update(state, basis)
        worst_trace = max(worst_trace,
                          abs(float(np.real(np.trace(rho.matrix))) - 1))
        again = von_neumann_update(rho, basis)
        worst_idem = max(worst_idem,
                         float(np.abs(again.matrix - rho.matrix).max()))
    assert worst_complete < 1e-10
    assert worst_sum < 1e-10
    assert worst_trace < 1e-12
    assert worst_idem < 1e-12
    _passline(8, f"completeness {worst_complete:.1e}, sums {worst_sum:.1e}, "
                 f"trace {worst_trace:.1e}, idempotence {worst_idem:.1e} "
                 f"over 100 models")


def test_criterion_9_unitary_connection():
    rng = np.random.default_rng(9)
    worst = 0.0
    for _ in range(100):
        n = int(rng.integers(2, 7))
        model = random_complete_model(rng, n)
        u = unitarize(expectation_operator(model, identity_statistic(model)))
        worst = max(worst, float(np.abs(u.conj().T @ u - np.eye(n)).max()))
    assert worst < 1e-10
    flat = StatisticalModel((0, 1), (0, 1), np.array([[0.5, 0.5], [0.5, 0.5]]))
    with pytest.raises(ValueError, match="incomplete statistic"):
        unitarize(expectation_operator(flat, identity_statistic(flat)))
    _passline(9, f"unitarity residual {worst:.1e} over 100 complete models; "
                 f"incomplete models raise")
