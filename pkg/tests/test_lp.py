import math

import numpy as np
import pytest

from muntzlab import (EmbeddingProblem, InvalidParameterError, MuntzPolynomial,
                      PiecewiseDensityMeasure, PowerTailMeasure, ScaledMeasure,
                      analyze, atomic, certified_embedding_constant,
                      empirical_embedding_constant, interpolation_check,
                      l1_unboundedness_witness, lebesgue, lebesgue_lp_norm,
                      lp_norm, make_explicit, make_geometric, point_mass,
                      random_unit)


class TestLpNorm:
    def test_identity_l1(self):
        f = MuntzPolynomial(make_explicit([1.0]), np.array([1.0]))
        assert lp_norm(f, 1.0, lebesgue()).value == pytest.approx(0.5, rel=1e-10)

    def test_atom_l2(self):
        f = MuntzPolynomial(make_explicit([1.0]), np.array([1.0]))
        assert lp_norm(f, 2.0, point_mass(0.5)).value == pytest.approx(0.5)

    def test_quadrature_vs_gram(self):
        seq = make_geometric(2.0, 2.0, 6)
        rng = np.random.default_rng(3)
        for _ in range(10):
            f = random_unit(seq, rng)
            quad = lp_norm(f, 2.0, lebesgue()).value
            gram = lebesgue_lp_norm(f, 2.0).value
            assert quad == pytest.approx(gram, rel=1e-9)

    def test_sign_changes_handled(self):
        # f = x - x^2 changes nothing; f = x - 3 x^2 has a root at 1/3:
        # integral |x - 3x^2| dx = 2*(1/3)^2/6 ... computed directly
        seq = make_explicit([1.0, 2.0])
        f = MuntzPolynomial(seq, np.array([1.0, -3.0]))
        xs = np.linspace(0.0, 1.0, 2000001)
        direct = np.trapezoid(np.abs(xs - 3.0 * xs ** 2), xs)
        assert lp_norm(f, 1.0, lebesgue()).value == pytest.approx(direct, rel=1e-9)

    def test_odd_p_against_reference(self):
        seq = make_explicit([1.0, 3.0])
        f = MuntzPolynomial(seq, np.array([0.5, -1.0]))
        xs = np.linspace(0.0, 1.0, 2000001)
        direct = np.trapezoid(np.abs(0.5 * xs - xs ** 3) ** 1.5, xs) ** (1 / 1.5)
        assert lp_norm(f, 1.5, lebesgue()).value == pytest.approx(direct, rel=1e-7)

    def test_holder_monotone_in_p(self):
        # for probability measures ||f||_p is nondecreasing in p
        seq = make_geometric(2.0, 2.0, 4)
        rng = np.random.default_rng(9)
        for mu in (lebesgue(), point_mass(0.7),
                   ScaledMeasure(2.0, PowerTailMeasure(0.5, 1.0))):
            assert mu.total_mass == pytest.approx(1.0)
            f = random_unit(seq, rng)
            values = [lp_norm(f, p, mu).value for p in (1.0, 1.5, 2.0, 3.0)]
            assert all(b >= a - 1e-9 for a, b in zip(values, values[1:]))

    def test_p_validation(self):
        f = MuntzPolynomial(make_explicit([1.0]), np.array([1.0]))
        with pytest.raises(InvalidParameterError):
            lp_norm(f, 0.5, lebesgue())


class TestEmpiricalConstant:
    def test_lebesgue_is_one(self):
        seq = make_geometric(2.0, 2.0, 6)
        for p in (1.0, 2.0, 3.0):
            val = empirical_embedding_constant(seq, lebesgue(), p, 4, 4,
                                               refine=False)
            assert val == pytest.approx(1.0, rel=1e-12)

    def test_rank_one_converges_to_spectral(self):
        seq = make_explicit([1.0])
        val = empirical_embedding_constant(seq, point_mass(0.5), 2.0, 1, 3)
        assert val == pytest.approx(math.sqrt(3.0) / 2.0, rel=1e-10)

    def test_scaled_lebesgue(self):
        seq = make_geometric(2.0, 2.0, 5)
        for p in (1.0, 2.0):
            val = empirical_embedding_constant(
                seq, ScaledMeasure(4.0, lebesgue()), p, 3, 3, refine=False)
            assert val == pytest.approx(4.0 ** (1.0 / p), rel=1e-12)

    def test_never_exceeds_spectral_norm(self):
        seq = make_geometric(2.0, 2.0, 8)
        for mu in (PowerTailMeasure(1.0, 2.0),
                   atomic([(0.4, 1.0), (0.8, 0.5)])):
            op = analyze(EmbeddingProblem(seq, mu, 8)).op_norm
            est = empirical_embedding_constant(seq, mu, 2.0, 8, 12, seed=5)
            assert est <= op + 1e-8

    def test_deterministic_given_seed(self):
        seq = make_geometric(2.0, 2.0, 6)
        mu = PowerTailMeasure(1.0, 2.0)
        a = empirical_embedding_constant(seq, mu, 2.0, 6, 6, seed=11)
        b = empirical_embedding_constant(seq, mu, 2.0, 6, 6, seed=11)
        assert a == b


class TestCertifiedConstants:
    def test_lebesgue(self):
        assert certified_embedding_constant(lebesgue(), 2.0) == 1.0

    def test_scaled(self):
        assert certified_embedding_constant(
            ScaledMeasure(4.0, lebesgue()), 2.0) == pytest.approx(2.0)

    def test_piecewise(self):
        mu = PiecewiseDensityMeasure(np.array([0.0, 0.5, 1.0]),
                                     np.array([0.5, 2.0]))
        assert certified_embedding_constant(mu, 1.0) == pytest.approx(2.0)

    def test_atomic_has_none(self):
        assert certified_embedding_constant(point_mass(0.5), 2.0) is None

    def test_certified_dominates_empirical(self):
        seq = make_geometric(2.0, 2.0, 6)
        for mu in (lebesgue(), ScaledMeasure(3.0, lebesgue()),
                   PiecewiseDensityMeasure(np.array([0.0, 0.5, 1.0]),
                                           np.array([0.5, 2.0]))):
            for p in (1.0, 2.0):
                cert = certified_embedding_constant(mu, p)
                emp = empirical_embedding_constant(seq, mu, p, 5, 8, seed=2)
                assert emp <= cert + 1e-8


class TestInterpolation:
    def test_lebesgue_equality(self):
        seq = make_geometric(2.0, 2.0, 6)
        rep = interpolation_check(seq, lebesgue(), 1.0, 2.0, 0.5, n=4,
                                  samples=20)
        assert not rep.inconclusive
        assert len(rep.violations) == 0
        assert rep.max_slack == pytest.approx(0.0, abs=1e-12)

    def test_scaled_exponent_arithmetic(self):
        seq = make_geometric(2.0, 2.0, 6)
        rep = interpolation_check(seq, ScaledMeasure(5.0, lebesgue()),
                                  1.0, 2.0, 0.25, n=4, samples=20)
        assert len(rep.violations) == 0
        # equality up to quadrature: c^(1/p_t) = (c^(1/p0))^(1-t) (c^(1/p1))^t
        assert abs(rep.max_slack) < 1e-9

    def test_pt_formula(self):
        seq = make_explicit([1.0, 2.0])
        rep = interpolation_check(seq, lebesgue(), 1.0, 2.0, 0.5, samples=1)
        assert rep.p_t == pytest.approx(4.0 / 3.0)

    def test_atomic_inconclusive(self):
        seq = make_explicit([1.0, 2.0])
        rep = interpolation_check(seq, point_mass(0.5), 1.0, 2.0, 0.5,
                                  samples=2)
        assert rep.inconclusive

    def test_parameter_validation(self):
        seq = make_explicit([1.0])
        with pytest.raises(InvalidParameterError):
            interpolation_check(seq, lebesgue(), 2.0, 1.0, 0.5)
        with pytest.raises(InvalidParameterError):
            interpolation_check(seq, lebesgue(), 1.0, 2.0, 1.5)


class TestL1Witness:
    def test_single(self):
        w = l1_unboundedness_witness(make_explicit([1.0]), point_mass(0.5))
        assert w == [(1, pytest.approx(0.5))]

    def test_lebesgue_bounded_below_one(self):
        seq = make_geometric(2.0, 2.0, 10)
        values = [v for _, v in l1_unboundedness_witness(seq, lebesgue())]
        lam = seq.values
        for v, l in zip(values, lam):
            assert v == pytest.approx(l / (l + 1.0), rel=1e-12)
            assert v < 1.0
