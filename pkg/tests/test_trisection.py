import pytest
import sympy
from sympy import Symbol

from ellsurf.basechange import rh_genus
from ellsurf.exceptions import DegenerateModel, ParityError
from ellsurf import trisection

t = Symbol('t')


class TestExtractTrisection(object):
    def test_specialised(self):
        target = trisection.extract_trisection(4)

        assert target.A == -12 * t
        assert target.B == -4 * t ** 3 - 12
        assert not target.degenerate
        assert target.certificate.holds

    def test_degenerate_is_flagged(self):
        assert trisection.extract_trisection(0).degenerate

    def test_formal(self):
        target = trisection.extract_trisection()

        assert target.is_formal
        assert not target.degenerate
        assert target.to_dict()['A'] == '-3*a*t'


class TestDiscFactorization(object):
    @pytest.mark.parametrize('a, expected', (
        (4, [1, 9]),
        (1, [0, 4]),
    ))
    def test_roots(self, a, expected):
        target = trisection.disc_factorization(a)

        assert target.roots() == expected
        assert target.certificate.holds

    def test_vanishing(self):
        with pytest.raises(DegenerateModel):
            trisection.disc_factorization(0)

    def test_formal(self):
        target = trisection.disc_factorization()

        assert sympy.expand(target.root_sum - 2 * Symbol('a') - 2) == 0
        with pytest.raises(ValueError):
            target.roots()


def test_tangency_parameters():
    assert trisection.tangency_parameters() == frozenset({4})


@pytest.mark.parametrize('milnor, branches, expected', (
    (4, 3, 3),
    (10, 3, 6),
    (1, 2, 1),
))
def test_delta_invariant(milnor, branches, expected):
    assert trisection.delta_invariant(milnor, branches) == expected


def test_delta_invariant__parity():
    with pytest.raises(ParityError):
        trisection.delta_invariant(4, 2)


def test_class_and_genus():
    target = trisection.class_and_genus()

    assert str(target.curve_class) == '3C0 + 3F'
    assert target.self_intersection == 9
    assert target.k_dot_d == -3
    assert target.arithmetic_genus == 4
    assert target.genus == 1
    assert target.torsion_dot == 3


class TestIncidenceDot(object):
    @pytest.mark.parametrize('incidences, expected', (
        (trisection.TORSION_SECTION_INCIDENCE, 3),
        ({'C0': 1, 'F': 1}, 6),
        ({'C0': 0, 'F': 2}, 6),
    ))
    def test_trisection_class(self, incidences, expected):
        target = trisection.CurveClass.from_pair(3, 3)

        assert trisection.incidence_dot(target, incidences) == expected

    def test_matches_dot_within_basis(self):
        target = trisection.CurveClass.from_pair(3, 3)

        assert trisection.incidence_dot(target, {'C0': -1, 'F': 1}) == target.dot(trisection.C0)

    def test_missing_incidence(self):
        target = trisection.CurveClass([1, 1, 1] + [0] * 7)

        with pytest.raises(ValueError):
            trisection.incidence_dot(target, trisection.TORSION_SECTION_INCIDENCE)


def test_intersection_matrix():
    assert trisection.intersection_matrix().det() == -81


def test_plane_image():
    target = trisection.plane_image()

    assert (target.degree, target.arithmetic_genus, target.genus) == (9, 28, 1)
    assert target.printed_formula_genus == 13


class TestInducedProfile(object):
    def test_profile(self):
        target = trisection.induced_profile(4)

        assert len(target.entries) == 3
        assert rh_genus(target) == 1
        assert str(target) == 'd=3; 1:2+1; t^2 + t + 1:2+1; t^3 - 9:2+1'

    @pytest.mark.parametrize('a', (1, None))
    def test_degenerate(self, a):
        with pytest.raises(DegenerateModel):
            trisection.induced_profile(a)
