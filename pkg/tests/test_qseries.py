import math
from fractions import Fraction

import pytest

from ellsurf.constants import ATKIN_LEHNER_SAMPLES
from ellsurf.exceptions import DivergentTail, ExcludedParameter, NonIntegral
from ellsurf.kodaira import surface_invariants
from ellsurf.nslattice import shioda_tate_rho
from ellsurf import qseries
from ellsurf.qseries import LEVEL_11_FORM, BinaryQF, FixedPoint, IntSeries


class TestBinaryQF(object):
    def test_discriminant(self):
        assert LEVEL_11_FORM.discriminant == -11

    @pytest.mark.parametrize('n, expected', (
        (0, 1),
        (1, 2),
        (2, 0),
        (3, 4),
    ))
    def test_representations(self, n, expected):
        assert LEVEL_11_FORM.representations(n) == expected

    @pytest.mark.parametrize('coefficients', (
        (1, 1, -3),
        (0, 1, 1),
    ))
    def test_not_positive_definite(self, coefficients):
        with pytest.raises(ExcludedParameter):
            BinaryQF(*coefficients)

    def test_parse(self):
        assert BinaryQF.parse('1,1,3') == LEVEL_11_FORM


def test_theta_qf():
    target = qseries.theta_qf(terms=30)

    assert target.order == 31
    assert [target[n] for n in range(31)] == [LEVEL_11_FORM.representations(n) for n in range(31)]


class TestIntSeries(object):
    def test_leading_zeros(self):
        target = IntSeries([0, 0, 3])

        assert target.valuation == 2
        assert target.leading_coefficient == 3
        assert target.order == 3

    def test_inverse(self):
        target = IntSeries([1, -1], 0, 5).inverse()

        assert [target[n] for n in range(5)] == [1] * 5

    def test_inverse_of_zero(self):
        with pytest.raises(ExcludedParameter):
            IntSeries([], 0, 4).inverse()

    def test_getitem_beyond_order(self):
        with pytest.raises(IndexError):
            IntSeries([1, 2], 0, 2)[2]

    def test_getitem_past_stored_coefficients(self):
        target = IntSeries([1, -1], 0, 6)

        assert [target[n] for n in range(6)] == [1, -1, 0, 0, 0, 0]
        assert [(target + 1)[n] for n in range(6)] == [2, -1, 0, 0, 0, 0]
        assert [(1 - target)[n] for n in range(6)] == [0, 1, 0, 0, 0, 0]

    def test_arithmetic(self):
        one_minus_q = IntSeries([1, -1], 0, 6)

        assert [(one_minus_q * one_minus_q.inverse())[n] for n in range(6)] == [1, 0, 0, 0, 0, 0]
        assert (one_minus_q ** 2)[1] == -2
        assert (one_minus_q - 1).valuation == 1
        assert (one_minus_q / 2)[1] == Fraction(-1, 2)

    def test_to_text(self):
        assert IntSeries([1, -2, 0, 3]).to_text() == '1 - 2*q + 3*q^3'
        assert IntSeries([], 0, 3).to_text() == '0'


def test_cusp_form():
    target = qseries.cusp_form(10)

    assert [target[n] for n in range(1, 11)] == [1, -2, -1, 2, 1, 2, -2, 0, -2, -2]


def test_eta_product__fractional_exponent():
    with pytest.raises(NonIntegral):
        qseries.eta_product({1: 1})


def test_level_11_quotient():
    target = qseries.level_11_quotient()

    assert target.valuation == -1
    assert target.leading_coefficient == 1


class TestEvaluation(object):
    def test_lower_half_plane(self):
        with pytest.raises(DivergentTail):
            qseries.eval_upper_half(qseries.theta_qf(), -1j)

    def test_constant_term(self):
        target = qseries.eval_upper_half(qseries.theta_qf(), 5j)

        assert abs(target.value - 1) < 1e-6
        assert target.tail < 1e-6

    @pytest.mark.parametrize('s', ATKIN_LEHNER_SAMPLES)
    def test_weight_one_relation(self, s):
        theta = qseries.theta_qf()

        image = qseries.eval_upper_half(theta, 1j / (11 * s)).value
        scaled = math.sqrt(11) * s * qseries.eval_upper_half(theta, 1j * s).value

        assert abs(image - scaled) < 1e-6


class TestAtkinLehnerCheck(object):
    def test_quotient_is_invariant(self):
        assert qseries.atkin_lehner_check(qseries.level_11_quotient()) < 1e-6

    def test_theta_is_not(self):
        assert qseries.atkin_lehner_check(qseries.theta_qf()) > 1e-2


class TestFixedPoints(object):
    def test_centre(self):
        points = qseries.al_fixed_points()

        assert FixedPoint(0, 1) in points
        assert FixedPoint(0, 1).form == (11, 0, 1)
        assert str(FixedPoint(0, 1)) == 'i/sqrt(11)'

    def test_theta_zero(self):
        zeros = qseries.locate_theta_zero()
        points = [point for point, _ in zeros]

        assert {(p.alpha, p.gamma) for p in points} == {(1, 2), (1, 6), (-1, 6)}
        assert len(qseries.fixed_point_classes(points)) == 1


def test_shioda_modular_config():
    config = qseries.shioda_modular_config()
    invariants = surface_invariants(config)

    assert config.summary() == 'I1 + I11'
    assert config.genus == 1
    assert invariants.classification == 'elliptic-elliptic'
    assert invariants.j_degree == 12
    assert shioda_tate_rho(config, 0) == 12
