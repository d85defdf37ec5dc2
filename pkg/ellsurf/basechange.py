# -*- coding: utf-8 -*-
"""
Base Change
~~~~~~~~~~~

Base change of elliptic fibrations, done two ways:

* symbolically, by substituting ``t = phi(u)`` into a model and classifying
  the result with Tate's algorithm;
* combinatorially, by pushing a fibre configuration through a branch profile
  with the local transition table.

The symbolic route only reaches rational covers; it is used to check the
combinatorial route, which also handles covers by curves of genus one.

"""
import logging

import sympy
from sympy import Poly, QQ, Rational, Symbol

from .exactalg import (
    INFINITY, Place, RationalFunction, ResidueField, coefficient_field, factor_disc, format_polynomial, homogenize
)
from .exceptions import (
    DegenerateModel, DegreeViolation, InvalidProfile, Mismatch, NonIntegral, UnsupportedCover, UnsupportedTransition
)
from .kodaira import I0, FiberConfig, KodairaType, full_config
from .utils import parse_rational
from .weierstrass import INDICES, WeierstrassModel, xprime_model

# Imports for typing support
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union  # noqa

logger = logging.getLogger(__name__)


class BranchProfile(object):
    """
    A branched cover of the projective line of degree *degree*, given by the
    ramification partition over each branch place.

    Places of degree k carry the same partition at each of their k
    geometric points.
    """
    __slots__ = ('degree', 'entries')

    def __init__(self, degree, entries=None):
        # type: (int, Iterable[Tuple[Place, Sequence[int]]]) -> None
        if degree < 1:
            raise InvalidProfile("Cover degree must be positive", meta={'degree': degree})
        self.degree = degree
        self.entries = []  # type: List[Tuple[Place, Tuple[int, ...]]]

        seen = set()
        for place, partition in (entries or []):
            partition = tuple(sorted((int(e) for e in partition), reverse=True))
            if sum(partition) != degree or any(e < 1 for e in partition):
                raise InvalidProfile(
                    "Partition {} at {} does not sum to {}".format(partition, place, degree),
                    meta={'place': str(place), 'partition': list(partition)}
                )
            if place in seen:
                raise InvalidProfile("Place {} listed twice".format(place), meta={'place': str(place)})
            seen.add(place)
            self.entries.append((place, partition))

    @classmethod
    def parse(cls, text, variable='v'):
        # type: (str, str) -> BranchProfile
        """
        Parse ``"d=3; 0:3; inf:3; 9:2+1; 1:2+1"``.
        """
        parts = [p.strip() for p in str(text).split(';') if p.strip()]
        if not parts or not parts[0].replace(' ', '').startswith('d='):
            raise InvalidProfile("Profile must start with 'd=<degree>'", meta={'profile': text})

        try:
            degree = int(parts[0].split('=', 1)[1])
            entries = []
            for part in parts[1:]:
                place, partition = part.rsplit(':', 1)
                entries.append((
                    Place.parse(place.strip(), variable),
                    [int(e) for e in partition.split('+')]
                ))
        except ValueError as ex:
            raise InvalidProfile("Malformed profile: {}".format(ex), meta={'profile': text})
        return cls(degree, entries)

    def __str__(self):
        return '; '.join(["d={}".format(self.degree)] + [
            "{}:{}".format(place.short(), '+'.join(str(e) for e in partition))
            for place, partition in self.entries
        ])

    def __repr__(self):
        return "BranchProfile({!r})".format(str(self))

    def __eq__(self, other):
        if isinstance(other, BranchProfile):
            return self.degree == other.degree and dict(self.entries) == dict(other.entries)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.degree, frozenset(self.entries)))

    @property
    def places(self):
        return [place for place, _ in self.entries]

    def partition_at(self, place):
        # type: (Place) -> Tuple[int, ...]
        """
        Ramification indices over *place*; unbranched places give all ones.
        """
        for other, partition in self.entries:
            if other == place:
                return partition
        return (1,) * self.degree

    @property
    def ramification_total(self):
        return sum((e - 1) * place.degree for place, partition in self.entries for e in partition)

    @property
    def is_galois(self):
        """
        Every fibre is totally ramified or unbranched (sufficient for cyclic covers).
        """
        return all(len(set(partition)) == 1 for _, partition in self.entries)


def rh_genus(profile, base_genus=0):
    # type: (BranchProfile, int) -> int
    """
    Genus of the cover from ``2g - 2 = d(2g_base - 2) + sum(e - 1)``.
    """
    total = profile.degree * (2 * base_genus - 2) + profile.ramification_total
    if total % 2 or total < -2:
        raise NonIntegral(
            "Riemann-Hurwitz gives 2g - 2 = {}".format(total),
            meta={'profile': str(profile), 'base_genus': base_genus}
        )
    return total // 2 + 1


class TransitionRule(object):
    """
    Fibre type above a point with ramification index *index*.
    """
    __slots__ = ('source', 'index', 'target')

    def __init__(self, source, index, target):
        self.source = source
        self.index = index
        self.target = target

    def __repr__(self):
        return "TransitionRule({} -{}-> {})".format(self.source, self.index, self.target)


# Additive entries implemented; the multiplicative ones follow I_n -> I_en.
ADDITIVE_TRANSITIONS = {
    ('IV*', 2): KodairaType('IV'),
    ('IV*', 3): I0,
}


def transition(kodaira_type, index):
    # type: (KodairaType, int) -> TransitionRule
    if index < 1:
        raise ValueError("Ramification index must be positive")
    if index == 1:
        target = kodaira_type
    elif kodaira_type.family == 'I':
        target = KodairaType('I', kodaira_type.n * index)
    else:
        try:
            target = ADDITIVE_TRANSITIONS[(kodaira_type.family, index)]
        except KeyError:
            raise UnsupportedTransition(
                "No transition for {} under ramification {}".format(kodaira_type, index),
                meta={'type': str(kodaira_type), 'index': index}
            )
    return TransitionRule(kodaira_type, index, target)


def transported_config(config, profile):
    # type: (FiberConfig, BranchProfile) -> FiberConfig
    """
    The configuration of the pulled back fibration.

    Points above a base place are named ``<place>|<k>``; their multiplicity
    is the degree of the base place.
    """
    genus = rh_genus(profile, config.genus)
    entries = []
    for entry in config:
        for k, index in enumerate(profile.partition_at(entry.place)):
            target = transition(entry.type, index).target
            if not target.is_smooth:
                label = "{}|{}".format(entry.place.short(), k + 1)
                entries.append((Place.named(label), target, entry.multiplicity))

    result = FiberConfig(entries, genus=genus)
    logger.debug("Transported %s along %s: %s", config.summary(), profile, result.summary())
    return result


def pullback_model(model, phi, variable=None):
    # type: (WeierstrassModel, RationalFunction, Optional[str]) -> WeierstrassModel
    """
    Substitute ``t = phi(u)`` and clear denominators with the weights of
    the coefficients, ``a_i -> D^(i d) a_i(N/D)``.
    """
    if not isinstance(phi, RationalFunction):
        phi = RationalFunction.coerce(phi, variable or 'u')
    if phi.degree < 1:
        raise DegenerateModel("Cannot pull back along a constant map", meta={'phi': phi.to_text()})

    bound = model.degree_bound
    coefficients = []
    for index, coeff in zip(INDICES, model.coefficients):
        if not coeff.is_polynomial:
            raise DegreeViolation("Coefficient is not a polynomial", meta={'coefficient': coeff.to_text()})
        poly = coeff.numerator.mul_ground(1 / coeff.denominator.LC())
        coefficients.append(RationalFunction(homogenize(poly, phi, index * bound)))

    chart_variable = 's' if phi.variable != 's' else 'r'
    return model.replace(
        coefficients,
        variable=phi.variable, chart_variable=chart_variable, degree_bound=bound * phi.degree,
        transform="{} = {}".format(model.variable, phi.to_text())
    )


def _fibre_partition(poly, degree):
    # type: (Poly, int) -> Tuple[int, ...]
    """
    Ramification indices of a fibre ``poly = 0``; missing degree sits at u = oo.
    """
    parts = []
    if not poly.is_zero and poly.degree() > 0:
        _, square_free = poly.sqf_list()
        for factor, multiplicity in square_free:
            parts.extend([multiplicity] * factor.degree())
    deficit = degree - (poly.degree() if not poly.is_zero else 0)
    if deficit:
        parts.append(deficit)
    return tuple(sorted(parts, reverse=True))


def _critical_value(phi, factor):
    # type: (RationalFunction, Poly) -> Optional[Any]
    """
    Value of phi at the roots of an irreducible *factor*; None for a pole.
    """
    field = ResidueField(factor)
    if field.is_zero(phi.denominator):
        return None
    image = field.evaluate(phi)
    if image.degree() > 0:
        raise UnsupportedCover(
            "Critical value at the roots of {} is not rational".format(format_polynomial(factor)),
            meta={'phi': phi.to_text(), 'factor': format_polynomial(factor)}
        )
    return Rational(image.LC())


def ramification_profile(phi, variable='t'):
    # type: (RationalFunction, str) -> BranchProfile
    """
    Branch profile of ``phi: P^1 -> P^1`` with rational critical values.

    Critical points are the roots of the Wronskian ``N'D - ND'`` together with
    ``u = oo``; each critical value's fibre is read from ``N - cD``.
    """
    degree = phi.degree
    if degree < 1:
        raise UnsupportedCover("Constant map", meta={'phi': phi.to_text()})
    numerator, denominator = phi.numerator, phi.denominator

    values = set()  # type: set
    wronskian = numerator.diff() * denominator - numerator * denominator.diff()
    if not wronskian.is_zero and wronskian.degree() > 0:
        for factor, _ in factor_disc(wronskian).require_complete():
            values.add(_critical_value(phi, factor))

    # value at u = oo
    num_deg, den_deg = numerator.degree(), denominator.degree()
    if num_deg > den_deg:
        values.add(None)
    elif num_deg < den_deg:
        values.add(Rational(0))
    else:
        values.add(Rational(numerator.LC()) / denominator.LC())

    entries = []
    for value in sorted(values, key=lambda v: (v is None, v if v is not None else 0)):
        if value is None:
            partition = _fibre_partition(denominator, degree)
            place = INFINITY
        else:
            partition = _fibre_partition(numerator - denominator.mul_ground(value), degree)
            place = Place.linear(value, variable)
        if any(e > 1 for e in partition):
            entries.append((place, partition))

    profile = BranchProfile(degree, entries)
    logger.debug("Ramification profile of %s: %s", phi, profile)
    return profile


class CrossValidation(object):
    """
    Agreement of the symbolic and combinatorial base change.
    """
    __slots__ = ('profile', 'symbolic', 'combinatorial')

    def __init__(self, profile, symbolic, combinatorial):
        self.profile = profile
        self.symbolic = symbolic
        self.combinatorial = combinatorial

    def to_dict(self):
        return {
            'profile': str(self.profile),
            'symbolic': self.symbolic.summary(),
            'combinatorial': self.combinatorial.summary(),
        }


def cross_validate(model, phi, profile=None):
    # type: (WeierstrassModel, RationalFunction, Optional[BranchProfile]) -> CrossValidation
    if not isinstance(phi, RationalFunction):
        phi = RationalFunction.coerce(phi, 'u')
    if profile is None:
        profile = ramification_profile(phi, model.variable)

    symbolic = full_config(pullback_model(model, phi))
    combinatorial = transported_config(full_config(model), profile)
    if symbolic.types() != combinatorial.types():
        raise Mismatch(
            "Symbolic and combinatorial base change disagree",
            meta={
                'profile': str(profile),
                'symbolic': symbolic.summary(),
                'combinatorial': combinatorial.summary(),
            }
        )
    return CrossValidation(profile, symbolic, combinatorial)


class BranchQuadratic(object):
    """
    ``r^2 - (2a + 2) r + (a - 1)^2``, whose roots are ``(1 +/- sqrt a)^2``.

    Only symmetric functions of the roots are used, so no square root of
    the parameter is ever taken.
    """
    __slots__ = ('parameter', 'polynomial')

    def __init__(self, a=None):
        if a is None:
            symbol = Symbol('a')
            self.parameter = symbol
            domain = coefficient_field('a')
        else:
            self.parameter = parse_rational(a)
            symbol = self.parameter
            domain = QQ
        r = Symbol('r')
        self.polynomial = Poly(r ** 2 - (2 * symbol + 2) * r + (symbol - 1) ** 2, r, domain=domain)

    def __repr__(self):
        return "BranchQuadratic({!r})".format(format_polynomial(self.polynomial))

    @property
    def is_formal(self):
        return isinstance(self.parameter, Symbol)

    @property
    def root_sum(self):
        return sympy.expand(2 * self.parameter + 2)

    @property
    def root_product(self):
        return sympy.expand((self.parameter - 1) ** 2)

    @property
    def discriminant(self):
        return sympy.expand(self.root_sum ** 2 - 4 * self.root_product)

    def evaluate(self, r):
        return sympy.expand(self.polynomial.as_expr().subs(Symbol('r'), r))

    def collides_with(self, r):
        """
        True when *r* is a branch point (for a specialised parameter).
        """
        return self.evaluate(r) == 0

    @property
    def is_double_root(self):
        return self.discriminant == 0

    def places(self, variable='v'):
        # type: (str) -> List[Place]
        """
        Branch places on the v-line for a specialised parameter.
        """
        if self.is_formal:
            raise ValueError("Branch places need a rational parameter")
        factorization = factor_disc(self.polynomial).require_complete()
        return [Place.from_polynomial(Poly.from_list(p.all_coeffs(), Symbol(variable), domain=QQ))
                for p, _ in factorization]


def branch_points_of_Ea(a=None):  # noqa: N802
    # type: (Any) -> BranchQuadratic
    return BranchQuadratic(a)


def _linear(value):
    return Place.linear(Rational(value), 'v')


def hesse_cover():
    # type: () -> BranchProfile
    """
    The cube map ``v = u^3`` returning the Hesse pencil from its quotient.
    """
    return BranchProfile(3, [(_linear(0), (3,)), (INFINITY, (3,))])


def y0_profile():
    # type: () -> BranchProfile
    """
    The Galois triple cover branched over 0, 1 and oo.
    """
    return BranchProfile(3, [(_linear(0), (3,)), (_linear(1), (3,)), (INFINITY, (3,))])


def zprime_profile():
    # type: () -> BranchProfile
    """
    The rational normalisation of E_1 over the v-line.
    """
    return BranchProfile(3, [(_linear(0), (2, 1)), (_linear(4), (2, 1)), (INFINITY, (3,))])


def ya_profile(a):
    # type: (Any) -> BranchProfile
    """
    Branch profile of ``E_a -> P^1_v`` for a rational parameter.
    """
    a = parse_rational(a)
    if a == 0:
        return y0_profile()
    if a == 1:
        return zprime_profile()

    quadratic = BranchQuadratic(a)
    entries = [(_linear(0), (3,)), (INFINITY, (3,))]
    entries.extend((place, (2, 1)) for place in quadratic.places('v'))
    return BranchProfile(3, entries)


def yp_profile():
    # type: () -> BranchProfile
    return ya_profile(4)


def branch_collisions(a):
    # type: (Any) -> List[Place]
    """
    Singular-fibre places of X' that carry a simple branch point of E_a.
    """
    quadratic = BranchQuadratic(a)
    if quadratic.is_double_root:
        return [_linear(1)]
    return [place for place in (_linear(0), _linear(1)) if quadratic.collides_with(place.root)]


def ya_config(a):
    # type: (Any) -> FiberConfig
    """
    Fibre configuration of the surface Y_a built over E_a.
    """
    return transported_config(full_config(xprime_model()), ya_profile(a))
