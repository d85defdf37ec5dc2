import pytest
from sympy import Symbol

from ellsurf.exactalg import RationalFunction
from ellsurf.exceptions import DegenerateModel, DegreeViolation
from ellsurf import weierstrass

t = Symbol('t')


class TestStdInvariants(object):
    def test_hesse(self, hesse):
        target = weierstrass.std_invariants(hesse)

        assert target.discriminant == RationalFunction.parse('27*(t^3 - 1)^3')
        assert target.c4 == RationalFunction.parse('9*t*(t^3 + 8)')
        assert target.j == RationalFunction.parse('27*t^3*(t^3 + 8)^3/(t^3 - 1)^3')
        assert weierstrass.j_degree(hesse) == 12

    def test_xprime(self, xprime):
        target = weierstrass.std_invariants(xprime)

        assert target.discriminant == RationalFunction.parse('27*v^8*(v - 1)^3', 'v')
        assert weierstrass.j_degree(xprime) == 4

    def test_degenerate(self):
        with pytest.raises(DegenerateModel):
            weierstrass.std_invariants(weierstrass.WeierstrassModel())


class TestChartAtInfinity(object):
    def test_involution(self, hesse):
        chart = weierstrass.chart_at_infinity(hesse)

        assert chart.variable == 's'
        assert chart.a1 == RationalFunction.parse('3', 's')
        assert chart.a3 == RationalFunction.parse('1 - s^3', 's')
        assert weierstrass.chart_at_infinity(chart) == hesse

    def test_degree_violation(self):
        model = weierstrass.WeierstrassModel(a1=t ** 2, a6=1)

        with pytest.raises(DegreeViolation):
            weierstrass.chart_at_infinity(model)


class TestTransform(object):
    def test_j_invariant(self, hesse):
        target = weierstrass.transform(hesse, 2, t, 1, 0)

        assert target != hesse
        assert weierstrass.std_invariants(target).j == weierstrass.std_invariants(hesse).j

    def test_j_invariant__randomized(self, hesse, unit_transform):
        target = weierstrass.transform(hesse, *unit_transform)

        assert weierstrass.std_invariants(target).j == weierstrass.std_invariants(hesse).j
        assert weierstrass.std_invariants(target).discriminant == \
            weierstrass.std_invariants(hesse).discriminant / unit_transform[0] ** 12

    def test_identity(self, hesse):
        assert weierstrass.transform(hesse, 1, 0, 0, 0) == hesse

    def test_zero_scale(self, hesse):
        with pytest.raises(ValueError):
            weierstrass.transform(hesse, 0, 0, 0, 0)


def test_text_format(hesse):
    text = hesse.to_text()

    assert text.splitlines()[0] == 'a1: 3*t'
    assert weierstrass.WeierstrassModel.parse(text) == hesse


@pytest.mark.parametrize('certify', (
    weierstrass.certify_xprime,
    weierstrass.certify_ea,
    weierstrass.quotient_identity_check,
))
def test_certificates(certify):
    assert certify().holds


def test_quotient_identity_check__wrong_coefficient():
    target = weierstrass.quotient_identity_check(w_coefficient=2)

    assert not target.holds
    assert not target.detail['symbolic']


class TestEaModel(object):
    def test_formal(self):
        target = weierstrass.ea_model()

        assert target.parameter == 'a'
        assert target.transform == weierstrass.EA_TRANSFORM

    def test_j_at_four(self):
        target = weierstrass.ea_model(4)

        assert target.parameter is None
        assert weierstrass.std_invariants(target).j.constant_value() == 4 * 1728

    @pytest.mark.parametrize('a', (0, 1))
    def test_degenerate(self, a):
        with pytest.raises(DegenerateModel):
            weierstrass.ea_model(a)

    def test_limit_curve(self):
        target = weierstrass.std_invariants(weierstrass.ea_limit_curve())

        assert target.c4.is_zero
        assert target.discriminant == RationalFunction.parse('-27')


def test_describe(hesse):
    target = weierstrass.describe(hesse)

    assert target['j_degree'] == 12
    assert target['discriminant'] == '27*t^9 - 81*t^6 + 81*t^3 - 27'
    assert target['coefficients']['a3'] == 't^3 - 1'
