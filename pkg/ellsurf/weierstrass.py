# -*- coding: utf-8 -*-
"""
Weierstrass Models
~~~~~~~~~~~~~~~~~~

Long Weierstrass models ``y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`` of
elliptic fibrations over the projective line, their standard invariants,
coordinate changes, the chart at infinity and the named models of the
construction (the Hesse pencil, its cyclic quotient and the family E_a).

"""
import logging
import random

import sympy
from sympy import Rational, Symbol, symbols

from .constants import SPOT_CHECK_SAMPLES, SPOT_CHECK_SEED
from .exactalg import RationalFunction, coefficient_field, field_parameter
from .exceptions import DegenerateModel, DegreeViolation, IdentityFailure
from .resources import Certificate

# Imports for typing support
from typing import Any, Dict, Optional, Sequence, Tuple  # noqa

logger = logging.getLogger(__name__)

INDICES = (1, 2, 3, 4, 6)
NAMES = ('a1', 'a2', 'a3', 'a4', 'a6')


class WeierstrassModel(object):
    """
    A Weierstrass model over the field of rational functions in *variable*.

    The degree bound ``d`` is the degree of the fundamental line bundle used
    for the chart at infinity: ``a_i`` has degree at most ``i * d``.

    """
    __slots__ = ('a1', 'a2', 'a3', 'a4', 'a6', 'variable', 'chart_variable', 'degree_bound', 'transform')

    def __init__(self, a1=0, a2=0, a3=0, a4=0, a6=0, variable='t', chart_variable='s', degree_bound=1,
                 parameter=None, transform=None):
        domain = coefficient_field(parameter)
        for name, value in zip(NAMES, (a1, a2, a3, a4, a6)):
            coeff = RationalFunction.coerce(value, variable, domain)
            if coeff.variable != variable:
                coeff = coeff.rename(variable)
            setattr(self, name, coeff)
        self.variable = variable
        self.chart_variable = chart_variable
        self.degree_bound = degree_bound
        self.transform = transform

    def __repr__(self):
        return "WeierstrassModel({})".format(', '.join(
            "{}={}".format(name, coeff) for name, coeff in zip(NAMES, self.coefficients)
        ))

    def __eq__(self, other):
        if isinstance(other, WeierstrassModel):
            return self.coefficients == other.coefficients and self.variable == other.variable
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.coefficients, self.variable))

    @property
    def coefficients(self):
        # type: () -> Tuple[RationalFunction, ...]
        return self.a1, self.a2, self.a3, self.a4, self.a6

    @property
    def parameter(self):
        parameter = field_parameter(self.a1.domain)
        return str(parameter) if parameter is not None else None

    def replace(self, coefficients, **options):
        """
        A copy with new coefficients; other settings default to this model's.
        """
        kwargs = dict(
            variable=self.variable, chart_variable=self.chart_variable,
            degree_bound=self.degree_bound, parameter=self.parameter, transform=self.transform
        )
        kwargs.update(options)
        return WeierstrassModel(*coefficients, **kwargs)

    def to_text(self):
        lines = ["{}: {}".format(name, coeff.to_text()) for name, coeff in zip(NAMES, self.coefficients)]
        lines.append("d={}".format(self.degree_bound))
        lines.append("var={}".format(self.variable))
        return '\n'.join(lines)

    @classmethod
    def parse(cls, text, parameter=None):
        """
        Read the format written by :meth:`to_text`.
        """
        values = {}  # type: Dict[str, str]
        for line in text.strip().splitlines():
            if '=' in line and ':' not in line:
                key, value = line.split('=', 1)
            else:
                key, value = line.split(':', 1)
            values[key.strip()] = value.strip()

        variable = values.get('var', 't')
        coefficients = [RationalFunction.parse(values.get(name, '0'), variable, parameter) for name in NAMES]
        return cls(*coefficients, variable=variable, degree_bound=int(values.get('d', 1)), parameter=parameter)


class StdInvariants(object):
    """
    The b-, c-invariants, discriminant and j-invariant of a model.
    """
    __slots__ = ('b2', 'b4', 'b6', 'b8', 'c4', 'c6', 'discriminant', 'j')

    def __init__(self, b2, b4, b6, b8, c4, c6, discriminant, j):
        self.b2 = b2
        self.b4 = b4
        self.b6 = b6
        self.b8 = b8
        self.c4 = c4
        self.c6 = c6
        self.discriminant = discriminant
        self.j = j

    def __repr__(self):
        return "StdInvariants(discriminant={}, j={})".format(self.discriminant, self.j)


def std_invariants(model):
    # type: (WeierstrassModel) -> StdInvariants
    a1, a2, a3, a4, a6 = model.coefficients
    b2 = a1 ** 2 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 ** 2 + 4 * a6
    b8 = a1 ** 2 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 ** 2 - a4 ** 2
    c4 = b2 ** 2 - 24 * b4
    c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
    discriminant = -b2 ** 2 * b8 - 8 * b4 ** 3 - 27 * b6 ** 2 + 9 * b2 * b4 * b6
    if discriminant.is_zero:
        raise DegenerateModel("Discriminant vanishes identically", meta={'model': model.to_text()})
    return StdInvariants(b2, b4, b6, b8, c4, c6, discriminant, c4 ** 3 / discriminant)


def j_degree(model):
    # type: (WeierstrassModel) -> int
    """
    Degree of the J-map as a map of projective lines.
    """
    return std_invariants(model).j.degree


def transform(model, u, r, s, w):
    # type: (WeierstrassModel, Any, Any, Any, Any) -> WeierstrassModel
    """
    Apply ``x = u^2 x' + r``, ``y = u^3 y' + u^2 s x' + w``.
    """
    a1, a2, a3, a4, a6 = model.coefficients
    coerce = a1._coerce
    u, r, s, w = (coerce(v) for v in (u, r, s, w))
    if u.is_zero:
        raise ValueError("u must be non-zero")

    new = (
        (a1 + 2 * s) / u,
        (a2 - s * a1 + 3 * r - s ** 2) / u ** 2,
        (a3 + r * a1 + 2 * w) / u ** 3,
        (a4 - s * a3 + 2 * r * a2 - (w + r * s) * a1 + 3 * r ** 2 - 2 * s * w) / u ** 4,
        (a6 + r * a4 + r ** 2 * a2 + r ** 3 - w * a3 - w ** 2 - r * w * a1) / u ** 6,
    )
    return model.replace(new)


def chart_at_infinity(model):
    # type: (WeierstrassModel) -> WeierstrassModel
    """
    The model on the other chart: ``a_i'(s) = s^(i d) a_i(1/s)``.

    The variable and chart variable are swapped, so applying this twice
    returns the original model.
    """
    bound = model.degree_bound
    coefficients = []
    for index, name, coeff in zip(INDICES, NAMES, model.coefficients):
        limit = index * bound
        if not coeff.is_polynomial:
            raise DegreeViolation("{} is not a polynomial".format(name), meta={name: coeff.to_text()})
        poly = coeff.numerator.mul_ground(1 / coeff.denominator.LC())
        if not poly.is_zero and poly.degree() > limit:
            raise DegreeViolation(
                "deg {} = {} exceeds {}".format(name, poly.degree(), limit),
                meta={name: coeff.to_text(), 'bound': limit}
            )
        values = poly.all_coeffs()
        values = [0] * (limit + 1 - len(values)) + values
        gen = Symbol(model.chart_variable)
        coefficients.append(RationalFunction(sympy.Poly.from_list(values[::-1], gen, domain=poly.domain)))

    return model.replace(coefficients, variable=model.chart_variable, chart_variable=model.variable)


def specialize(model, value):
    # type: (WeierstrassModel, Any) -> WeierstrassModel
    """
    Substitute a rational value for the parameter of the coefficient field.
    """
    try:
        coefficients = [c.specialize(value) for c in model.coefficients]
    except ZeroDivisionError as ex:
        raise DegenerateModel(str(ex))
    result = model.replace(coefficients, parameter=None)
    try:
        std_invariants(result)
    except DegenerateModel:
        raise DegenerateModel("Model degenerates at {} = {}".format(model.parameter, value))
    return result


def _check_identity(name, difference, detail):
    holds = sympy.expand(difference) == 0
    return Certificate(name=name, holds=holds, detail=detail)


def hesse_model():
    # type: () -> WeierstrassModel
    """
    The Hesse pencil ``y^2 + (3tx + t^3 - 1) y = x^3``.
    """
    t = Symbol('t')
    return WeierstrassModel(a1=3 * t, a3=t ** 3 - 1, variable='t', chart_variable='s', degree_bound=1)


def certify_xprime():
    # type: () -> Certificate
    """
    Check that ``X = v w``, ``Y = v^2 y`` carries the quotient equation
    ``(y + v + 3w - 1) y v = w^3`` to the Weierstrass form of the quotient.
    """
    y, v, w = symbols('y v w')
    weierstrass = lambda X, Y: Y ** 2 + (3 * v * X + v ** 3 - v ** 2) * Y - X ** 3  # noqa
    quotient = (y + v + 3 * w - 1) * y * v - w ** 3
    return _check_identity(
        'xprime-substitution',
        weierstrass(v * w, v ** 2 * y) - v ** 3 * quotient,
        {'substitution': 'X=v*w, Y=v^2*y', 'factor': 'v^3'}
    )


def xprime_model():
    # type: () -> WeierstrassModel
    """
    Weierstrass model of the cyclic quotient of the Hesse pencil,
    ``Y^2 + (3vX + v^3 - v^2) Y = X^3``.
    """
    certificate = certify_xprime()
    if not certificate.holds:
        raise IdentityFailure("Quotient substitution does not hold", meta=certificate.detail)

    v = Symbol('v')
    return WeierstrassModel(
        a1=3 * v, a3=v ** 3 - v ** 2, variable='v', chart_variable='s', degree_bound=1,
        transform='X=v*w, Y=v^2*y'
    )


EA_TRANSFORM = "X=(a^2-a)*x', Y=(a^2-a)^2*z"


def certify_ea():
    # type: () -> Certificate
    """
    Check that the scaling in ``EA_TRANSFORM`` carries the plane cubic
    ``(a^2 - a) z^2 + 3a x' z + a z = x'^3`` to ``Y^2 + (3aX + a^3 - a^2) Y = X^3``.
    """
    a, x, z = symbols("a x z")
    scale = a ** 2 - a
    X, Y = scale * x, scale ** 2 * z
    cubic = scale * z ** 2 + 3 * a * x * z + a * z - x ** 3
    return _check_identity(
        'ea-transform',
        Y ** 2 + (3 * a * X + a ** 3 - a ** 2) * Y - X ** 3 - scale ** 3 * cubic,
        {'substitution': EA_TRANSFORM, 'factor': '(a^2-a)^3'}
    )


def ea_model(a=None):
    # type: (Optional[Any]) -> WeierstrassModel
    """
    The curve E_a as a Weierstrass model with constant coefficients.

    With no value the coefficients lie in QQ(a); otherwise the model is
    specialised, raising :class:`DegenerateModel` at ``a`` in {0, 1}.
    """
    certificate = certify_ea()
    if not certificate.holds:
        raise IdentityFailure("E_a transform does not hold", meta=certificate.detail)

    symbol = Symbol('a')
    model = WeierstrassModel(
        a1=3 * symbol, a3=symbol ** 3 - symbol ** 2, variable='t', parameter='a', transform=EA_TRANSFORM
    )
    if a is None:
        return model
    return specialize(model, Rational(a))


def ea_family():
    # type: () -> WeierstrassModel
    """
    The family {E_a} as a fibration over the a-line.
    """
    a = Symbol('a')
    return WeierstrassModel(
        a1=3 * a, a3=a ** 3 - a ** 2, variable='a', chart_variable='b', degree_bound=1, transform=EA_TRANSFORM
    )


def ea_limit_curve():
    # type: () -> WeierstrassModel
    """
    Semistable limit of E_a at a = 0: ``y^2 - y = x^3`` (j = 0).
    """
    return WeierstrassModel(a3=-1, variable='t', degree_bound=0, transform="v^2 - v = w^3")


def quotient_identity_check(w_coefficient=3, samples=SPOT_CHECK_SAMPLES, seed=SPOT_CHECK_SEED):
    # type: (int, int, int) -> Certificate
    """
    Verify ``(y + t^3 + k xt - 1) y t^3 - (xt)^3 = t^3 (y^2 + (3tx + t^3 - 1) y - x^3)``
    for ``k = w_coefficient``, symbolically and at random rational points.
    """
    x, y, t = symbols('x y t')
    lhs = (y + t ** 3 + w_coefficient * x * t - 1) * y * t ** 3 - (x * t) ** 3
    rhs = t ** 3 * (y ** 2 + (3 * t * x + t ** 3 - 1) * y - x ** 3)
    symbolic = sympy.expand(lhs - rhs) == 0

    rng = random.Random(seed)
    failures = 0
    for _ in range(samples):
        point = {s: Rational(rng.randint(-50, 50), rng.randint(1, 12)) for s in (x, y, t)}
        if lhs.subs(point) != rhs.subs(point):
            failures += 1

    logger.debug("Quotient identity with w coefficient %s: symbolic=%s, failures=%d",
                 w_coefficient, symbolic, failures)
    return Certificate(
        name='quotient-identity',
        holds=symbolic and failures == 0,
        detail={
            'w_coefficient': w_coefficient,
            'symbolic': symbolic,
            'samples': samples,
            'spot_failures': failures,
        }
    )


def describe(model):
    # type: (WeierstrassModel) -> Dict[str, Any]
    """
    Summary of a model for reports.
    """
    invariants = std_invariants(model)
    return {
        'coefficients': {name: coeff.to_text() for name, coeff in zip(NAMES, model.coefficients)},
        'discriminant': invariants.discriminant.to_text(),
        'j': invariants.j.to_text(),
        'j_degree': invariants.j.degree,
        'degree_bound': model.degree_bound,
        'variable': model.variable,
        'transform': model.transform,
    }
