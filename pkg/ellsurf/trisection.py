# -*- coding: utf-8 -*-
"""
Trisections
~~~~~~~~~~~

The trisections D_a cut out of the Hesse pencil by ``y = a``: extraction of
the cubic ``x^3 + A x + B``, its discriminant, tangency to the I3 fibres,
singularity and genus invariants, curve class arithmetic and the plane
image of the trisection.

"""
import logging
import random

import sympy
from sympy import Matrix, Poly, QQ, Rational, Symbol, symbols

from .basechange import BranchProfile, branch_points_of_Ea
from .constants import SPOT_CHECK_SAMPLES, SPOT_CHECK_SEED
from .exactalg import Place, coefficient_field, factor_disc, format_expr, format_polynomial
from .exceptions import DegenerateModel, IdentityFailure, ParityError
from .resources import Certificate
from .utils import parse_rational

# Imports for typing support
from typing import Any, Dict, FrozenSet, List, Optional  # noqa

logger = logging.getLogger(__name__)

DEGENERATE_PARAMETERS = (0, 1)


def _parameter(a):
    return Symbol('a') if a is None else parse_rational(a)


class TrisectionCurve(object):
    """
    The trisection ``x^3 + A x + B = 0`` over the t-line.
    """
    __slots__ = ('parameter', 'A', 'B', 'certificate')

    def __init__(self, parameter, A, B, certificate=None):  # noqa: N803
        self.parameter = parameter
        self.A = A
        self.B = B
        self.certificate = certificate

    def __repr__(self):
        return "TrisectionCurve(a={}, A={}, B={})".format(self.parameter, format_expr(self.A), format_expr(self.B))

    @property
    def is_formal(self):
        return isinstance(self.parameter, Symbol)

    @property
    def degenerate(self):
        return not self.is_formal and self.parameter in DEGENERATE_PARAMETERS

    def equation(self):
        x = Symbol('x')
        return sympy.expand(x ** 3 + self.A * x + self.B)

    def to_dict(self):
        return {
            'a': str(self.parameter),
            'A': format_expr(self.A),
            'B': format_expr(self.B),
            'degenerate': self.degenerate,
        }


def _substitution_certificate(samples=SPOT_CHECK_SAMPLES, seed=SPOT_CHECK_SEED):
    # type: (int, int) -> Certificate
    """
    ``y = a`` in the Hesse equation equals ``-(x^3 + A x + B)``.
    """
    a, t, x = symbols('a t x')
    hesse = a ** 2 + (3 * t * x + t ** 3 - 1) * a - x ** 3
    cubic = x ** 3 - 3 * a * t * x + (-a * t ** 3 + a - a ** 2)
    difference = hesse + cubic
    symbolic = sympy.expand(difference) == 0

    rng = random.Random(seed)
    failures = 0
    for _ in range(samples):
        point = {s: Rational(rng.randint(-30, 30), rng.randint(1, 9)) for s in (a, t)}
        if sympy.expand(difference.subs(point)) != 0:
            failures += 1

    return Certificate(
        name='trisection-substitution',
        holds=symbolic and failures == 0,
        detail={'symbolic': symbolic, 'samples': samples, 'spot_failures': failures}
    )


def extract_trisection(a=None):
    # type: (Any) -> TrisectionCurve
    """
    Plug ``y = a`` into the Hesse pencil.

    At ``a`` in {0, 1} the curve is degenerate; it is flagged, not refused.
    """
    certificate = _substitution_certificate()
    if not certificate.holds:
        raise IdentityFailure("Trisection substitution does not hold", meta=certificate.detail)

    a = _parameter(a)
    t = Symbol('t')
    curve = TrisectionCurve(a, sympy.expand(-3 * a * t), sympy.expand(-a * t ** 3 + a - a ** 2), certificate)
    if curve.degenerate:
        logger.warning("Trisection at a = %s is degenerate", a)
    return curve


class DiscFactorization(object):
    """
    ``4A^3 + 27B^2 = 27 a^2 (u^2 - 2(a + 1) u + (a - 1)^2)`` with ``u = t^3``.
    """
    __slots__ = ('parameter', 'quadratic', 'certificate')

    def __init__(self, parameter, quadratic, certificate):
        self.parameter = parameter
        self.quadratic = quadratic
        self.certificate = certificate

    @property
    def root_sum(self):
        return sympy.factor(-self.quadratic.as_expr().coeff(Symbol('u'), 1))

    @property
    def root_product(self):
        return sympy.factor(self.quadratic.as_expr().coeff(Symbol('u'), 0))

    def roots(self):
        # type: () -> List[Rational]
        """
        Rational roots of a specialised quadratic.
        """
        if isinstance(self.parameter, Symbol):
            raise ValueError("Roots need a rational parameter")
        return sorted(Rational(r) for r in sympy.roots(self.quadratic.as_expr(), Symbol('u'), filter='Q'))

    def to_dict(self):
        result = {
            'quadratic': format_polynomial(self.quadratic),
            'root_sum': format_expr(self.root_sum),
            'root_product': format_expr(self.root_product),
            'certificate': self.certificate.holds,
        }
        if not isinstance(self.parameter, Symbol):
            result['roots'] = [str(r) for r in self.roots()]
        return result


def disc_factorization(a=None):
    # type: (Any) -> DiscFactorization
    curve = extract_trisection(a)
    parameter = curve.parameter
    if parameter == 0:
        raise DegenerateModel("Trisection discriminant vanishes at a = 0")

    a_, t, u = Symbol('a'), Symbol('t'), Symbol('u')
    formal_A, formal_B = -3 * a_ * t, -a_ * t ** 3 + a_ - a_ ** 2
    quadratic = u ** 2 - 2 * (a_ + 1) * u + (a_ - 1) ** 2
    difference = 4 * formal_A ** 3 + 27 * formal_B ** 2 - 27 * a_ ** 2 * quadratic.subs(u, t ** 3)
    holds = sympy.expand(difference) == 0
    certificate = Certificate(
        name='trisection-discriminant',
        holds=holds,
        detail={'identity': '4A^3 + 27B^2 = 27a^2(u^2 - 2(a+1)u + (a-1)^2)', 'u': 't^3'}
    )
    if not holds:
        raise IdentityFailure("Trisection discriminant identity fails", meta=certificate.detail)

    if isinstance(parameter, Symbol):
        poly = Poly(quadratic, u, domain=coefficient_field('a'))
    else:
        poly = Poly(quadratic.subs(a_, parameter), u, domain=QQ)
    return DiscFactorization(parameter, poly, certificate)


def tangency_condition():
    # type: () -> Poly
    """
    The quadratic at ``u = 1`` as a polynomial in a.
    """
    a, u = Symbol('a'), Symbol('u')
    quadratic = u ** 2 - 2 * (a + 1) * u + (a - 1) ** 2
    return Poly(quadratic.subs(u, 1), a, domain=QQ)


def tangency_parameters():
    # type: () -> FrozenSet[Rational]
    """
    Parameters for which the trisection is tangent to the fibres over ``t^3 = 1``.
    """
    condition = tangency_condition()
    branch = branch_points_of_Ea()
    if sympy.expand(branch.evaluate(1) - condition.as_expr()) != 0:
        raise IdentityFailure(
            "Tangency condition disagrees with the branch quadratic",
            meta={'condition': format_polynomial(condition), 'branch': format_expr(branch.evaluate(1))}
        )
    roots = sympy.roots(condition.as_expr(), Symbol('a'), filter='Q')
    return frozenset(Rational(r) for r in roots if r not in DEGENERATE_PARAMETERS)


class PlaneSingularity(object):
    """
    A plane curve singularity with Milnor number *milnor* and *branches* branches.
    """
    __slots__ = ('milnor', 'branches')

    def __init__(self, milnor, branches):
        self.milnor = milnor
        self.branches = branches

    def __repr__(self):
        return "PlaneSingularity(mu={}, r={})".format(self.milnor, self.branches)

    @property
    def delta(self):
        return delta_invariant(self.milnor, self.branches)


ORDINARY_TRIPLE_POINT = PlaneSingularity(4, 3)
TRIPLE_TACNODE = PlaneSingularity(10, 3)  # x^3 + y^6


def delta_invariant(milnor, branches):
    # type: (int, int) -> int
    """
    Milnor-Jung: ``delta = (mu + r - 1) / 2``.
    """
    if (milnor + branches) % 2 == 0:
        raise ParityError(
            "mu + r = {} must be odd".format(milnor + branches),
            meta={'mu': milnor, 'r': branches}
        )
    return (milnor + branches - 1) // 2


# Basis (C0, F, E1 .. E8): exceptional classes form four A2 blocks orthogonal to C0, F.
BASIS = ('C0', 'F') + tuple("E{}".format(i) for i in range(1, 9))


def intersection_matrix():
    # type: () -> Matrix
    matrix = sympy.zeros(len(BASIS))
    matrix[0, 0] = -1
    matrix[0, 1] = matrix[1, 0] = 1
    for block in range(4):
        i = 2 + 2 * block
        matrix[i, i] = matrix[i + 1, i + 1] = -2
        matrix[i, i + 1] = matrix[i + 1, i] = 1
    return matrix


class CurveClass(object):
    """
    A divisor class in the basis ``(C0, F, E1 .. E8)``.
    """
    __slots__ = ('coefficients',)

    def __init__(self, coefficients):
        self.coefficients = Matrix(coefficients)

    @classmethod
    def from_pair(cls, alpha, beta):
        return cls([alpha, beta] + [0] * 8)

    def __repr__(self):
        return "CurveClass({})".format(self)

    def __str__(self):
        terms = ["{}{}".format(c, name) for c, name in zip(self.coefficients, BASIS) if c]
        return ' + '.join(terms) or '0'

    def dot(self, other):
        return (self.coefficients.T * intersection_matrix() * other.coefficients)[0, 0]

    @property
    def alpha(self):
        return self.coefficients[0]

    @property
    def beta(self):
        return self.coefficients[1]


C0 = CurveClass.from_pair(1, 0)
FIBRE = CurveClass.from_pair(0, 1)
CANONICAL = CurveClass.from_pair(0, -1)

# a nonzero torsion section misses C0 and meets each fibre once
TORSION_SECTION_INCIDENCE = {'C0': 0, 'F': 1}


def incidence_dot(curve_class, incidences):
    # type: (CurveClass, Dict[str, Any]) -> Any
    """
    Intersection of a class with a curve known only through its intersection
    numbers against some basis classes.
    """
    total = 0
    for coefficient, name in zip(curve_class.coefficients, BASIS):
        if not coefficient:
            continue
        if name not in incidences:
            raise ValueError("No intersection number against {} for {}".format(name, curve_class))
        total += coefficient * incidences[name]
    return total


class ClassAndGenus(object):
    __slots__ = ('curve_class', 'self_intersection', 'k_dot_d', 'arithmetic_genus', 'delta', 'genus',
                 'torsion_dot')

    def __init__(self, curve_class, self_intersection, k_dot_d, arithmetic_genus, delta, genus, torsion_dot):
        self.curve_class = curve_class
        self.self_intersection = self_intersection
        self.k_dot_d = k_dot_d
        self.arithmetic_genus = arithmetic_genus
        self.delta = delta
        self.genus = genus
        self.torsion_dot = torsion_dot

    def to_dict(self):
        return {
            'class': str(self.curve_class),
            'self_intersection': int(self.self_intersection),
            'k_dot_d': int(self.k_dot_d),
            'p_a': int(self.arithmetic_genus),
            'delta': self.delta,
            'genus': int(self.genus),
            'torsion_dot': int(self.torsion_dot),
            'intersection_matrix': [[int(v) for v in intersection_matrix().row(i)] for i in range(len(BASIS))],
        }


def class_and_genus(fibre_degree=3, zero_section_dot=0):
    # type: (int, int) -> ClassAndGenus
    """
    Class of the trisection from ``D.F = 3`` and ``D.C0 = 0``, then its genus.
    """
    alpha, beta = symbols('alpha beta')
    candidate = CurveClass.from_pair(alpha, beta)
    solution = sympy.solve(
        [candidate.dot(FIBRE) - fibre_degree, candidate.dot(C0) - zero_section_dot], [alpha, beta], dict=True
    )[0]
    curve_class = CurveClass.from_pair(solution[alpha], solution[beta])

    self_intersection = curve_class.dot(curve_class)
    k_dot_d = CANONICAL.dot(curve_class)
    arithmetic_genus = (self_intersection + k_dot_d) / 2 + 1
    delta = ORDINARY_TRIPLE_POINT.delta
    torsion_dot = incidence_dot(curve_class, TORSION_SECTION_INCIDENCE)

    logger.debug("Trisection class %s: D^2=%s, p_a=%s", curve_class, self_intersection, arithmetic_genus)
    return ClassAndGenus(
        curve_class, self_intersection, k_dot_d, arithmetic_genus, delta, arithmetic_genus - delta, torsion_dot
    )


class PlaneImage(object):
    __slots__ = ('degree', 'arithmetic_genus', 'genus', 'printed_formula_genus')

    def __init__(self, degree, arithmetic_genus, genus, printed_formula_genus):
        self.degree = degree
        self.arithmetic_genus = arithmetic_genus
        self.genus = genus
        self.printed_formula_genus = printed_formula_genus

    def to_dict(self):
        return {
            'degree': self.degree,
            'p_a': self.arithmetic_genus,
            'genus': self.genus,
            'printed_formula_genus': self.printed_formula_genus,
        }


def plane_image(k_dot_d=-3, blown_up_points=8, multiplicity=3, triple_points=7):
    # type: (int, int, int, int) -> PlaneImage
    """
    The image of the trisection in the plane after contracting the eight
    exceptional curves, each of which it meets three times.
    """
    d = Symbol('d')
    degree = int(sympy.solve(sympy.Eq(k_dot_d, -3 * d + multiplicity * blown_up_points), d)[0])
    arithmetic_genus = (degree - 1) * (degree - 2) // 2

    delta, delta_prime = ORDINARY_TRIPLE_POINT.delta, TRIPLE_TACNODE.delta
    genus = arithmetic_genus - (triple_points * delta + delta_prime)
    printed = arithmetic_genus - triple_points * delta + delta_prime
    return PlaneImage(degree, arithmetic_genus, genus, printed)


def induced_profile(a):
    # type: (Any) -> BranchProfile
    """
    Branch profile of ``D_a -> P^1_t``: simple branching over the zeros of
    ``4A^3 + 27B^2``.
    """
    curve = extract_trisection(a)
    if curve.is_formal or curve.degenerate:
        raise DegenerateModel("Induced profile needs a rational a outside {0, 1}", meta={'a': str(a)})

    t = Symbol('t')
    discriminant = Poly(4 * curve.A ** 3 + 27 * curve.B ** 2, t, domain=QQ)
    entries = []
    for factor, multiplicity in factor_disc(discriminant).require_complete():
        if multiplicity > 1:
            raise DegenerateModel(
                "Repeated branch point {}".format(format_polynomial(factor)), meta={'a': str(curve.parameter)}
            )
        entries.append((Place.from_polynomial(factor), (2, 1)))
    return BranchProfile(3, entries)
