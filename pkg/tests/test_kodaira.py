from fractions import Fraction

import pytest
from sympy import Symbol

from ellsurf.constants import INFINITE
from ellsurf.exactalg import INFINITY, Place
from ellsurf.exceptions import BadComponent, NotRelativelyMinimal
from ellsurf.kodaira import (
    I0, FiberConfig, KodairaType, base_curve_degenerations, classify_surface, full_config, surface_invariants,
    tate_local
)
from ellsurf.weierstrass import WeierstrassModel, transform

t = Symbol('t')


@pytest.mark.parametrize('text, euler, components, order', (
    ('I0', 0, 1, 1),
    ('I1', 1, 1, INFINITE),
    ('I3', 3, 3, INFINITE),
    ('II', 2, 1, 6),
    ('III', 3, 2, 4),
    ('IV', 4, 3, 3),
    ('I0*', 6, 5, 2),
    ('I2*', 8, 7, INFINITE),
    ('IV*', 8, 7, 3),
    ('III*', 9, 8, 4),
    ('II*', 10, 9, 6),
))
def test_kodaira_type(text, euler, components, order):
    target = KodairaType.parse(text)

    assert str(target) == text
    assert target.euler == euler
    assert target.components == components
    assert target.monodromy_order == order


@pytest.mark.parametrize('text', ('V', 'I-1', 'IV**', ''))
def test_kodaira_type__invalid(text):
    with pytest.raises(ValueError):
        KodairaType.parse(text)


@pytest.mark.parametrize('text, discriminant', (
    ('I1', 1),
    ('I3', 3),
    ('I6', 6),
    ('III', 2),
    ('I0*', 4),
    ('IV*', 3),
    ('III*', 2),
    ('II*', 1),
))
def test_discriminant(text, discriminant):
    assert KodairaType.parse(text).discriminant == discriminant


def test_ordering():
    types = [KodairaType.parse(s) for s in ('IV*', 'I3', 'II', 'I1*', 'I1')]

    assert [str(k) for k in sorted(types)] == ['I1', 'I3', 'II', 'I1*', 'IV*']


class TestHeightContribution(object):
    @pytest.mark.parametrize('text, i, j, expected', (
        ('I6', 2, None, Fraction(4, 3)),
        ('I3', 1, None, Fraction(2, 3)),
        ('I3', 1, 2, Fraction(1, 3)),
        ('I0*', 1, None, Fraction(1)),
        ('I2*', 2, None, Fraction(3, 2)),
        ('I2*', 2, 3, Fraction(1)),
        ('IV*', 1, None, Fraction(4, 3)),
        ('IV*', 1, 2, Fraction(2, 3)),
        ('III', 1, None, Fraction(1, 2)),
        ('IV', 0, 2, Fraction(0)),
    ))
    def test_contribution(self, text, i, j, expected):
        assert KodairaType.parse(text).height_contribution(i, j) == expected

    @pytest.mark.parametrize('text, i', (
        ('I3', 3),
        ('II', 1),
        ('IV*', 3),
    ))
    def test_bad_component(self, text, i):
        with pytest.raises(BadComponent):
            KodairaType.parse(text).height_contribution(i)


class TestTateLocal(object):
    @pytest.mark.parametrize('place, expected', (
        (Place.linear(1), 'I3'),
        (Place.parse('t^2 + t + 1'), 'I3'),
        (Place.linear(0), 'I0'),
        (INFINITY, 'I3'),
    ))
    def test_hesse(self, hesse, place, expected):
        assert str(tate_local(hesse, place).type) == expected

    @pytest.mark.parametrize('place, expected, discriminant_valuation', (
        (Place.linear(0, 'v'), 'IV*', 8),
        (Place.linear(1, 'v'), 'I3', 3),
        (INFINITY, 'I1', 1),
    ))
    def test_xprime(self, xprime, place, expected, discriminant_valuation):
        target = tate_local(xprime, place)

        assert str(target.type) == expected
        assert target.discriminant_valuation == discriminant_valuation
        assert target.shifts == 0

    def test_minimalisation(self):
        model = WeierstrassModel(a1=3 * t ** 2, a3=t ** 3 * (t ** 3 - 1))

        target = tate_local(model, Place.linear(0))

        assert target.shifts == 1
        assert target.type == I0
        assert target.discriminant_valuation == 0

    def test_j_residue(self, xprime):
        assert tate_local(xprime, Place.linear(0, 'v')).j_residue == '0'


class TestCoordinateChange(object):
    @pytest.mark.parametrize('place', (
        Place.linear(1),
        Place.parse('t^2 + t + 1'),
        Place.linear(0),
        INFINITY,
    ))
    def test_tate_local(self, hesse, unit_transform, place):
        reference = tate_local(hesse, place)

        target = tate_local(transform(hesse, *unit_transform), place)

        assert target.type == reference.type
        assert target.discriminant_valuation == reference.discriminant_valuation

    def test_full_config(self, hesse, hesse_config, unit_transform):
        target = full_config(transform(hesse, *unit_transform))

        assert target == hesse_config
        assert target.summary() == '4I3'


class TestFiberConfig(object):
    def test_hesse(self, hesse_config):
        assert hesse_config.summary() == '4I3'
        assert hesse_config.euler_total == 12
        assert hesse_config.entry_for(Place.parse('t^2 + t + 1')).multiplicity == 2
        assert hesse_config.entry_for(Place.linear(7)) is None

    def test_xprime(self, xprime_config):
        assert xprime_config.summary() == 'I1 + I3 + IV*'
        assert [str(k) for k in xprime_config.types()] == ['I1', 'I3', 'IV*']
        target = {(r.place, r.type) for r in xprime_config.to_resources()}

        assert target == {('v', 'IV*'), ('v - 1', 'I3'), ('inf', 'I1')}

    def test_equality_ignores_places(self):
        i3 = KodairaType('I', 3)
        left = FiberConfig([(Place.named('p'), i3, 2)])
        right = FiberConfig([(Place.named('q'), i3, 1), (Place.named('r'), i3, 1)])

        assert left == right
        assert left != FiberConfig([(Place.named('p'), i3, 2)], genus=1)

    def test_empty(self):
        assert FiberConfig().summary() == 'none'


class TestSurfaceInvariants(object):
    def test_rational(self, hesse_config):
        target = surface_invariants(hesse_config)

        assert (target.chi, target.deg_l, target.p_g, target.q, target.h11) == (12, 1, 0, 0, 10)
        assert target.classification == 'rational'
        assert target.moduli_dimension == 8
        assert target.j_degree == 12
        assert target.to_resource().classification == 'rational'

    def test_not_relatively_minimal(self):
        config = FiberConfig([(Place.named('p'), KodairaType('I', 5), 1)])

        with pytest.raises(NotRelativelyMinimal):
            surface_invariants(config)


@pytest.mark.parametrize('genus, deg_l, expected', (
    (0, 1, 'rational'),
    (0, 2, 'K3'),
    (1, 1, 'elliptic-elliptic'),
    (2, 3, '(2,3)'),
))
def test_classify_surface(genus, deg_l, expected):
    assert classify_surface(genus, deg_l) == expected


def test_base_curve_degenerations():
    target = {str(kodaira_type): order for _, kodaira_type, order in base_curve_degenerations()}

    assert target == {'IV*': 3, 'I3': INFINITE, 'I1': INFINITE}
