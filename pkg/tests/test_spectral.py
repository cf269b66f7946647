import math

import numpy as np
import pytest

from muntzlab import (EmbeddingProblem, IllConditionedBasisError,
                      InvalidParameterError, PowerTailMeasure, ScaledMeasure,
                      SumMeasure, analyze, atomic, compact_support_certificate,
                      essential_norm_trend, hilbert_schmidt_certificate,
                      lebesgue, lebesgue_gram, make_explicit, make_geometric,
                      make_power, measure_gram, modulus_report, point_mass,
                      power_rho, psi_certificate, restrict_tail,
                      rho_certificate, riesz_sequence_check, singular_values,
                      sublinear_embedding_bound)
from muntzlab.highprec import generalized_singular_values


class TestMeasureGram:
    def test_rank_one_atom(self):
        g = measure_gram(make_explicit([1.0]), point_mass(0.5), 1)
        np.testing.assert_allclose(g.entries, [[0.25]])

    def test_lebesgue_matches_closed_form(self):
        seq = make_explicit([1.0, 2.0])
        a = measure_gram(seq, lebesgue(), 2)
        b = lebesgue_gram(seq)
        np.testing.assert_allclose(a.entries, b.entries, rtol=1e-14)

    def test_cross_entry(self):
        a = measure_gram(make_explicit([1.0, 2.0]), point_mass(0.5), 2)
        assert a.entries[0, 1] == pytest.approx(math.sqrt(2.0) / 8.0, rel=1e-14)


class TestSingularValues:
    def test_hand_computed_rank_one(self):
        s = singular_values(np.array([[0.25]]), np.array([[1 / 3]]))
        assert s[0] == pytest.approx(math.sqrt(3.0) / 2.0, rel=1e-14)

    def test_identity_when_equal(self):
        b = lebesgue_gram(make_geometric(2.0, 2.0, 8)).entries
        s = singular_values(b, b)
        np.testing.assert_allclose(s, 1.0, atol=1e-12)

    def test_scaled_measure(self):
        b = lebesgue_gram(make_geometric(2.0, 2.0, 6)).entries
        s = singular_values(2.25 * b, b)
        np.testing.assert_allclose(s, 1.5, atol=1e-12)

    def test_ill_conditioned_raises(self):
        seq = make_power(2.0, 32)
        b = lebesgue_gram(seq).entries
        with pytest.raises(IllConditionedBasisError):
            singular_values(b, b)

    def test_extended_precision_path(self):
        seq = make_power(2.0, 12)
        a = measure_gram(seq, point_mass(0.5), 12).entries
        b = lebesgue_gram(seq).entries
        fast = singular_values(a, b)
        slow = generalized_singular_values(a, b)
        assert slow[0] == pytest.approx(fast[0], rel=1e-6)

    def test_factored_route_matches_pencil(self):
        # analyze() takes the factored SVD route for atomic measures; the
        # leading values must agree with the generic pencil solve
        seq = make_geometric(2.0, 2.0, 10)
        mu = atomic([(0.3, 1.0), (0.55, 0.5), (0.8, 0.25), (0.95, 0.1)])
        via_analyze = analyze(EmbeddingProblem(seq, mu, 10)).singular_values
        a = measure_gram(seq, mu, 10)
        b = lebesgue_gram(seq)
        via_pencil = singular_values(a, b)
        np.testing.assert_allclose(via_analyze[:4], via_pencil[:4], rtol=1e-7)
        assert np.all(via_analyze[4:] == 0.0)


class TestAnalyze:
    def test_rank_one_report(self):
        rep = analyze(EmbeddingProblem(make_explicit([1.0]), point_mass(0.5), 1))
        assert rep.op_norm == pytest.approx(math.sqrt(3.0) / 2.0, rel=1e-12)
        for value in rep.schatten.values():
            assert value == pytest.approx(math.sqrt(3.0) / 2.0, rel=1e-12)

    def test_lebesgue_identity(self):
        seq = make_geometric(2.0, 2.0, 16)
        rep = analyze(EmbeddingProblem(seq, lebesgue(), 16), q_set=(1.0, 2.0))
        np.testing.assert_allclose(rep.singular_values, 1.0, atol=1e-10)
        assert rep.schatten[1.0] == pytest.approx(16.0, rel=1e-9)
        assert rep.schatten[2.0] == pytest.approx(4.0, rel=1e-9)

    def test_powertail_decay(self):
        seq = make_geometric(2.0, 2.0, 16)
        rep = analyze(EmbeddingProblem(seq, PowerTailMeasure(1.0, 2.0), 16))
        assert rep.decay_rate < 1.0
        assert np.all(np.diff(rep.singular_values) <= 1e-15)

    def test_truncation_monotonicity(self):
        seq = make_geometric(2.0, 2.0, 16)
        mu = SumMeasure((PowerTailMeasure(1.0, 2.0), point_mass(0.5, 0.5)))
        rep = analyze(EmbeddingProblem(seq, mu, 16), q_set=(0.5, 2.0))
        ops = [t.op_norm for t in rep.trend]
        assert all(b >= a - 1e-12 for a, b in zip(ops, ops[1:]))
        for q in (0.5, 2.0):
            sums = [t.schatten[q] for t in rep.trend]
            assert all(b >= a - 1e-12 for a, b in zip(sums, sums[1:]))

    def test_measure_additivity(self):
        seq = make_geometric(2.0, 2.0, 10)
        mu1 = PowerTailMeasure(1.0, 2.0)
        mu2 = atomic([(0.5, 0.7)])
        op1 = analyze(EmbeddingProblem(seq, mu1, 10)).op_norm
        op2 = analyze(EmbeddingProblem(seq, mu2, 10)).op_norm
        both = analyze(EmbeddingProblem(seq, SumMeasure((mu1, mu2)), 10)).op_norm
        assert both ** 2 <= op1 ** 2 + op2 ** 2 + 1e-10
        assert both ** 2 >= max(op1, op2) ** 2 - 1e-10

    def test_scaling_exact(self):
        seq = make_geometric(2.0, 2.0, 12)
        mu = PowerTailMeasure(1.0, 2.0)
        base = analyze(EmbeddingProblem(seq, mu, 12)).singular_values
        scaled = analyze(EmbeddingProblem(seq, ScaledMeasure(4.0, mu), 12))
        np.testing.assert_allclose(scaled.singular_values, 2.0 * base,
                                   rtol=1e-13)

    def test_rank_bound_atoms(self):
        seq = make_geometric(2.0, 2.0, 12)
        mu = atomic([(0.3, 1.0), (0.6, 0.5), (0.85, 0.25)])
        rep = analyze(EmbeddingProblem(seq, mu, 12))
        assert np.all(rep.singular_values[3:] <= 1e-10)

    def test_nonsublinear_divergence_trend(self):
        # bounded-ratio lacunary Lambda with a NON-sublinear measure: the
        # operator norm keeps growing with N instead of stabilizing
        seq = make_geometric(2.0, 2.0, 24)
        mu = PowerTailMeasure(1.0, 0.5)
        ops = [analyze(EmbeddingProblem(seq, mu, n)).op_norm
               for n in (6, 12, 18, 24)]
        assert all(b > a * 1.05 for a, b in zip(ops, ops[1:]))


class TestEssentialNorm:
    def test_compact_support_hits_zero(self):
        seq = make_geometric(2.0, 2.0, 8)
        mu = atomic([(0.4, 1.0), (0.7, 1.0)])
        trend = essential_norm_trend(seq, mu, 8, [2, 4, 8])
        assert trend[0][1] > 0.0          # m=2 keeps the atom at 0.7
        assert trend[2][1] == 0.0         # 1/m < 0.3: nothing left

    def test_lebesgue_trend_toward_one(self):
        seq = make_geometric(2.0, 2.0, 32)
        trend = essential_norm_trend(seq, lebesgue(), 32, [2, 4, 16, 64])
        values = [v for _, v in trend]
        assert all(0.0 < v <= 1.0 + 1e-9 for v in values)
        assert abs(values[-1] - 1.0) < 0.1

    def test_monotone_nonincreasing(self):
        seq = make_geometric(2.0, 2.0, 16)
        mu = PowerTailMeasure(1.0, 2.0)
        trend = essential_norm_trend(seq, mu, 16, [2, 4, 8, 16, 32])
        values = [v for _, v in trend]
        assert all(b <= a + 1e-12 for a, b in zip(values, values[1:]))

    def test_m_list_validation(self):
        seq = make_explicit([1.0])
        with pytest.raises(InvalidParameterError):
            essential_norm_trend(seq, lebesgue(), 1, [4, 2])


class TestCertificates:
    def test_psi_rank_one_equality(self):
        seq = make_explicit([1.0])
        cert = psi_certificate(seq, point_mass(0.5))
        op = analyze(EmbeddingProblem(seq, point_mass(0.5), 1)).op_norm
        assert cert.value == pytest.approx(op, abs=1e-12)
        assert cert.comparable

    def test_psi_lebesgue_rank_one(self):
        cert = psi_certificate(make_explicit([1.0]), lebesgue())
        assert cert.value == pytest.approx(1.0, rel=1e-10)

    def test_rho_lebesgue(self):
        cert = rho_certificate(make_explicit([1.0]), lebesgue(),
                               power_rho(1.0, 1.0))
        assert cert.value == pytest.approx(1.0, rel=1e-9)

    def test_rho_powertail_exact(self):
        cert = rho_certificate(make_explicit([1.0]), PowerTailMeasure(1.0, 2.0),
                               power_rho(1.0, 2.0))
        assert cert.value == pytest.approx(math.sqrt(0.5), rel=1e-9)

    def test_rho_hypothesis_failure_recorded(self):
        cert = rho_certificate(make_explicit([1.0]),
                               ScaledMeasure(5.0, lebesgue()),
                               power_rho(1.0, 1.0))
        assert not cert.comparable
        assert math.isinf(cert.value)

    def test_both_dominate_op_norm(self):
        seq = make_geometric(2.0, 2.0, 16)
        mu = PowerTailMeasure(1.0, 2.0)
        op = analyze(EmbeddingProblem(seq, mu, 16)).op_norm
        c_psi = psi_certificate(seq, mu)
        c_rho = rho_certificate(seq, mu, power_rho(1.0, 2.0))
        assert c_psi.value >= op - 1e-9
        assert c_rho.value >= op - 1e-9

    def test_compact_support_hand_value(self):
        seq = make_explicit([1.0])
        cert = compact_support_certificate(seq, point_mass(0.5), 0.5, 0.75, 1)
        assert cert.value == pytest.approx(4.0 / math.sqrt(6.0), rel=1e-12)
        s2 = analyze(EmbeddingProblem(seq, point_mass(0.5), 1)).schatten[2.0]
        assert s2 <= cert.value

    def test_compact_support_degenerate_k2(self):
        # single exponent: psi'' vanishes identically; flagged, not asserted
        cert = compact_support_certificate(make_explicit([1.0]),
                                           point_mass(0.5), 0.5, 0.75, 2)
        assert cert.value == 0.0
        assert "derivative-order-exceeds-truncation" in cert.flags

    def test_compact_support_violation(self):
        cert = compact_support_certificate(make_explicit([1.0]), lebesgue(),
                                           0.5, 0.75, 1)
        assert not cert.comparable

    def test_compact_support_dominates_schatten(self):
        seq = make_geometric(2.0, 2.0, 20)
        mu = ScaledMeasure(1.0, atomic([(0.2, 0.5), (0.35, 0.3), (0.5, 0.2)]))
        rep = analyze(EmbeddingProblem(seq, mu, 20), q_set=(2.0, 1.0))
        for k in (1, 2):
            cert = compact_support_certificate(seq, mu, 0.5, 0.75, k)
            assert cert.comparable
            assert cert.value >= rep.schatten[2.0 / k] - 1e-9

    def test_hilbert_schmidt_hand_value(self):
        cert = hilbert_schmidt_certificate(make_explicit([1.0]), point_mass(0.5))
        assert cert.value == pytest.approx(9.0 * math.sqrt(0.5), rel=1e-12)

    def test_hilbert_schmidt_partition_masses(self):
        cert = hilbert_schmidt_certificate(make_explicit([1.0]), lebesgue())
        masses = cert.params["partition_masses"]
        assert masses[0][2] == pytest.approx(0.5)
        assert masses[1][2] == pytest.approx(math.sqrt(0.5) - 0.5, rel=1e-12)
        assert sum(m for _, _, m in masses) == pytest.approx(1.0, rel=1e-9)

    def test_hilbert_schmidt_powertail_finite_and_s2_converges(self):
        seq = make_geometric(2.0, 2.0, 24)
        mu = PowerTailMeasure(1.0, 3.0)
        cert = hilbert_schmidt_certificate(seq, mu)
        assert math.isfinite(cert.value)
        s2 = [analyze(EmbeddingProblem(seq, mu, n), q_set=(2.0,)).schatten[2.0]
              for n in (12, 18, 24)]
        assert (s2[2] - s2[1]) < (s2[1] - s2[0])
        assert (s2[2] - s2[1]) / s2[2] < 1e-3


class TestSublinearBound:
    def test_lebesgue_equality_case(self):
        seq = make_geometric(2.0, 2.0, 16)
        cert = sublinear_embedding_bound(seq, lebesgue(), 16)
        assert cert.comparable
        b = lebesgue_gram(seq).entries
        eigs = np.linalg.eigvalsh(b)
        assert cert.value == pytest.approx(math.sqrt(eigs[-1] / eigs[0]),
                                           rel=1e-10)

    def test_scaling(self):
        seq = make_geometric(2.0, 2.0, 12)
        mu = PowerTailMeasure(1.0, 2.0)
        c1 = sublinear_embedding_bound(seq, mu, 12)
        c2 = sublinear_embedding_bound(seq, ScaledMeasure(4.0, mu), 12)
        assert c2.value == pytest.approx(2.0 * c1.value, rel=1e-12)

    def test_dominates_op_norm(self):
        seq = make_geometric(2.0, 2.0, 16)
        for mu in (PowerTailMeasure(1.0, 2.0),
                   atomic([(0.5, 0.5), (0.75, 0.25), (0.9, 0.1)])):
            cert = sublinear_embedding_bound(seq, mu, 16)
            op = analyze(EmbeddingProblem(seq, mu, 16)).op_norm
            assert cert.comparable and cert.value >= op - 1e-10

    def test_power_sequence_still_lacunary_at_truncation(self):
        # every finite truncation has min ratio > 1, so the assumption is
        # recorded as holding (truncation honesty: no infinite-sequence claim)
        cert = sublinear_embedding_bound(make_power(2.0, 10), lebesgue(), 10)
        assert cert.comparable

    def test_non_sublinear_not_comparable(self):
        cert = sublinear_embedding_bound(make_geometric(2.0, 2.0, 8),
                                         PowerTailMeasure(1.0, 0.5), 8)
        assert not cert.comparable
        assert math.isinf(cert.value)


class TestRieszCheck:
    def test_identity(self):
        res = riesz_sequence_check(np.eye(5))
        assert res.offdiag_hs == 0.0 and res.invertible

    def test_rank_one_fails(self):
        res = riesz_sequence_check(np.ones((4, 4)))
        assert not res.invertible
        assert res.min_eigenvalue == pytest.approx(0.0, abs=1e-12)

    def test_requires_unit_diagonal(self):
        with pytest.raises(InvalidParameterError):
            riesz_sequence_check(2.0 * np.eye(3))


class TestRestrictionInteraction:
    def test_zero_restriction_gives_zero_operator(self):
        seq = make_geometric(2.0, 2.0, 6)
        tail = restrict_tail(atomic([(0.2, 1.0)]), 4)
        rep = analyze(EmbeddingProblem(seq, tail, 6))
        assert rep.op_norm == 0.0

    def test_sublinear_norm_of_tail_shrinks(self):
        mu = PowerTailMeasure(1.0, 2.0)
        norms = [modulus_report(restrict_tail(mu, m)).sublinear_norm
                 for m in (2, 8, 32)]
        assert norms[0] > norms[1] > norms[2]
