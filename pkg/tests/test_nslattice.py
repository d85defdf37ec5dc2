from fractions import Fraction

import numpy as np
import pytest

from ellsurf.basechange import ya_config
from ellsurf.exceptions import ExceedsH11, NonIntegral
from ellsurf.kodaira import KodairaType
from ellsurf.nslattice import (
    U, FiniteQuadForm, RootBlock, discriminant_form, format_structure, group_structure, height_pairing,
    isotropic_quotients, mw_height, ns_discriminant, primitivity_search, shioda_tate_rho, trivial_lattice
)


class TestRootBlock(object):
    @pytest.mark.parametrize('text, expected', (
        ('I3', RootBlock('A', 2)),
        ('I1', None),
        ('IV*', RootBlock('E', 6)),
    ))
    def test_from_type(self, text, expected):
        assert RootBlock.from_type(KodairaType.parse(text)) == expected

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            RootBlock('X', 1)

    @pytest.mark.parametrize('block, expected', (
        (RootBlock('A', 2), 3),
        (RootBlock('D', 4), 4),
        (RootBlock('E', 6), 3),
        (RootBlock('E', 7), 2),
        (RootBlock('E', 8), 1),
        (U, 1),
    ))
    def test_discriminant(self, block, expected):
        assert block.discriminant == expected

    def test_gram(self):
        assert RootBlock('A', 2).gram().tolist() == [[-2, 1], [1, -2]]
        with pytest.raises(ValueError):
            RootBlock('D', 4).gram()


class TestDiscriminantForm(object):
    def test_a2(self):
        assert RootBlock('A', 2).discriminant_form().q((1,)) == Fraction(4, 3)

    def test_a1(self):
        assert RootBlock('A', 1).discriminant_form().q((1,)) == Fraction(3, 2)

    def test_d4(self):
        target = RootBlock('D', 4).discriminant_form()

        assert target.orders == (2, 2)
        assert target.q((1, 0)) == 1
        assert target.b((1, 0), (0, 1)) == Fraction(1, 2)

    def test_e6(self):
        assert RootBlock('E', 6).discriminant_form().q((1,)) == Fraction(2, 3)

    def test_unimodular(self):
        assert discriminant_form([U, RootBlock('E', 8)]).order == 1


@pytest.mark.parametrize('orders, expected', (
    ([3, 6], (3, 6)),
    ([2, 2, 4], (2, 2, 4)),
    ([6], (6,)),
))
def test_group_structure__form(orders, expected):
    size = len(orders)
    form = FiniteQuadForm(orders, np.zeros((size, size), dtype=np.int64).tolist())

    assert form.group_structure() == expected


def test_group_structure__trivial():
    assert group_structure([1]) == ()


@pytest.mark.parametrize('structure, expected', (
    ((3, 3), 'Z3 + Z3'),
    ((), '0'),
))
def test_format_structure(structure, expected):
    assert format_structure(structure) == expected


class TestIsotropicQuotients(object):
    @pytest.fixture
    def form(self):
        return discriminant_form([U] + [RootBlock('A', 2)] * 4)

    def test_order_three(self, form):
        target = isotropic_quotients(form, 3)

        assert len(target) == 16
        assert all(q.order == 9 for q in target)
        assert {q.structure for q in target} == {(3, 3)}
        assert target[0].to_resource().perp_order == 27

    def test_prime_must_divide(self, form):
        with pytest.raises(ValueError):
            isotropic_quotients(form, 2)


def test_trivial_lattice():
    target = trivial_lattice(ya_config(4))

    assert target[0] == U
    assert sorted(str(b) for b in target[1:]) == ['A2', 'A2', 'A5']


class TestShiodaTate(object):
    @pytest.mark.parametrize('a, rank, expected', (
        (4, 1, 12),
        (7, 1, 11),
    ))
    def test_rho(self, a, rank, expected):
        assert shioda_tate_rho(ya_config(a), rank) == expected

    def test_exceeds_h11(self):
        with pytest.raises(ExceedsH11):
            shioda_tate_rho(ya_config(4), 2)

    def test_negative_rank(self):
        with pytest.raises(ValueError):
            shioda_tate_rho(ya_config(4), -1)


@pytest.mark.parametrize('a, torsion, det, expected', (
    (4, 3, 2, 12),
    (0, 3, 1, 3),
))
def test_ns_discriminant(a, torsion, det, expected):
    assert ns_discriminant(ya_config(a), torsion, det) == expected


def test_ns_discriminant__non_integral():
    with pytest.raises(NonIntegral):
        ns_discriminant(ya_config(7), 2)


class TestHeights(object):
    def test_zero_section_meeting(self):
        assert mw_height(1, 0) == 2

    def test_contribution(self):
        assert mw_height(1, 0, [(KodairaType('I', 6), 2)]) == Fraction(2, 3)

    def test_pairing(self):
        target = height_pairing(1, 0, 0, 1, [(KodairaType('I', 3), 1, 2)])

        assert target == Fraction(-1, 3)


class TestPrimitivitySearch(object):
    def test_no_solutions(self):
        target = primitivity_search()

        assert target.solutions == []
        assert target.patterns == 162
        assert target.vectors_examined > 0

    def test_n_max(self):
        with pytest.raises(ValueError):
            primitivity_search(n_max=1)
