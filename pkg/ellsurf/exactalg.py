# -*- coding: utf-8 -*-
"""
Exact Algebra
~~~~~~~~~~~~~

Polynomials, rational functions, places and residue fields over the
coefficient fields used throughout the package: the rationals, the rational
function field in one parameter and finite extensions ``Q[t]/(p)``.

Polynomials are :class:`sympy.Poly` instances; this module adds the pieces
sympy does not model directly (places, valuations, normalised rational
functions and certified factorisations).

"""
import logging
import math

import sympy
from sympy import Poly, QQ, Rational, Symbol
from sympy.parsing.sympy_parser import parse_expr, standard_transformations, convert_xor

from .exceptions import UnfactoredPolynomial

# Imports for typing support
from typing import Any, List, Optional, Tuple, Union  # noqa

logger = logging.getLogger(__name__)

TRANSFORMATIONS = standard_transformations + (convert_xor,)

INFINITY_TOKENS = ('inf', 'oo', '∞', 'infinity')


def coefficient_field(parameter=None):
    """
    The coefficient field, either QQ or QQ(parameter).
    """
    if parameter is None:
        return QQ
    return QQ.frac_field(Symbol(str(parameter)))


def field_parameter(domain):
    # type: (Any) -> Optional[Symbol]
    """
    The transcendental parameter of a coefficient field (or None for QQ).
    """
    if getattr(domain, 'is_FractionField', False):
        return domain.symbols[0]


def constant(value, variable, domain=QQ):
    # type: (Any, Union[str, Symbol], Any) -> Poly
    return Poly(value, Symbol(str(variable)), domain=domain)


def rename(poly, variable):
    # type: (Poly, Union[str, Symbol]) -> Poly
    """
    The same polynomial in another variable.
    """
    return Poly.from_list(poly.all_coeffs(), Symbol(str(variable)), domain=poly.domain)


def parse_polynomial(text, variable='t', parameter=None):
    # type: (str, str, Optional[str]) -> Poly
    """
    Parse the canonical ASCII form, eg ``"t^3 - 1"``.
    """
    names = {variable: Symbol(variable)}
    if parameter:
        names[parameter] = Symbol(parameter)
    expr = parse_expr(str(text), local_dict=names, transformations=TRANSFORMATIONS)
    return Poly(expr, names[variable], domain=coefficient_field(parameter))


def format_expr(expr):
    # type: (Any) -> str
    """
    Print a sympy expression in the canonical ASCII form.
    """
    return sympy.sstr(expr).replace('**', '^')


def _format_term(coeff, monomial, first):
    if coeff.is_Number:
        negative = coeff < 0
        magnitude = abs(coeff)
        text = '' if (magnitude == 1 and monomial) else str(magnitude)
    else:
        negative = coeff.could_extract_minus_sign()
        magnitude = -coeff if negative else coeff
        text = format_expr(magnitude)
        if isinstance(magnitude, sympy.Add):
            text = '(' + text + ')'

    if text and monomial:
        text += '*' + monomial
    else:
        text = text or monomial

    if first:
        return ('-' if negative else '') + text
    return (' - ' if negative else ' + ') + text


def format_polynomial(poly):
    # type: (Poly) -> str
    """
    Print a polynomial in the canonical ASCII form, highest degree first.

    >>> format_polynomial(Poly(t**3 - 1, t))
    't^3 - 1'

    """
    if poly.is_zero:
        return '0'

    gen = str(poly.gen)
    parts = []
    for (k,), coeff in poly.terms():
        monomial = '' if k == 0 else (gen if k == 1 else '{}^{}'.format(gen, k))
        parts.append(_format_term(coeff, monomial, not parts))
    return ''.join(parts)


def poly_gcd(f, g):
    # type: (Poly, Poly) -> Poly
    """
    Monic greatest common divisor; ``gcd(0, 0) = 0``.
    """
    if f.is_zero and g.is_zero:
        return f
    return f.gcd(g).monic()


class RationalFunction(object):
    """
    Quotient of two polynomials in one variable, kept in lowest terms with a
    monic denominator.
    """
    __slots__ = ('numerator', 'denominator')

    @classmethod
    def coerce(cls, value, variable='t', domain=QQ):
        # type: (Any, str, Any) -> RationalFunction
        """
        Build from a rational function, polynomial, sympy expression or number.
        """
        if isinstance(value, cls):
            return value
        if isinstance(value, Poly):
            return cls(value)
        return cls.from_expr(value, variable, domain)

    @classmethod
    def from_expr(cls, expr, variable='t', domain=QQ):
        gen = Symbol(str(variable))
        numerator, denominator = sympy.fraction(sympy.cancel(sympy.sympify(expr)))
        return cls(Poly(numerator, gen, domain=domain), Poly(denominator, gen, domain=domain))

    @classmethod
    def parse(cls, text, variable='t', parameter=None):
        names = {variable: Symbol(variable)}
        if parameter:
            names[parameter] = Symbol(parameter)
        expr = parse_expr(str(text), local_dict=names, transformations=TRANSFORMATIONS)
        return cls.from_expr(expr, variable, coefficient_field(parameter))

    def __init__(self, numerator, denominator=None):
        # type: (Poly, Optional[Poly]) -> None
        if denominator is None:
            denominator = Poly(1, numerator.gen, domain=numerator.domain)
        if denominator.is_zero:
            raise ZeroDivisionError("Zero denominator")

        common = numerator.gcd(denominator)
        numerator = numerator.exquo(common)
        denominator = denominator.exquo(common)
        lead = denominator.LC()
        if lead != 1:
            numerator = numerator.mul_ground(1 / lead)
            denominator = denominator.monic()

        self.numerator = numerator
        self.denominator = denominator

    def __repr__(self):
        return "RationalFunction({!r})".format(self.to_text())

    def __str__(self):
        return self.to_text()

    @property
    def gen(self):
        return self.numerator.gen

    @property
    def variable(self):
        return str(self.numerator.gen)

    @property
    def domain(self):
        return self.numerator.domain

    @property
    def is_zero(self):
        return self.numerator.is_zero

    @property
    def is_polynomial(self):
        return self.denominator.degree() == 0

    @property
    def degree(self):
        """
        Degree as a map of the projective line (zero for constants).
        """
        if self.is_zero:
            return 0
        return max(self.numerator.degree(), self.denominator.degree())

    def _coerce(self, other):
        return RationalFunction.coerce(other, self.variable, self.domain)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError, sympy.PolynomialError):
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((tuple(self.numerator.all_coeffs()), tuple(self.denominator.all_coeffs())))

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator)

    def __add__(self, other):
        other = self._coerce(other)
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator
        )
    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.numerator * other.numerator, self.denominator * other.denominator)
    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, power):
        if power < 0:
            return self.inverse() ** -power
        return RationalFunction(self.numerator ** power, self.denominator ** power)

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("Zero has no inverse")
        return RationalFunction(self.denominator, self.numerator)

    def as_expr(self):
        return self.numerator.as_expr() / self.denominator.as_expr()

    def to_text(self):
        if self.is_polynomial:
            return format_polynomial(self.numerator.mul_ground(1 / self.denominator.LC()))
        return "({})/({})".format(format_polynomial(self.numerator), format_polynomial(self.denominator))

    def constant_value(self):
        """
        Value of a constant function.
        """
        if self.degree != 0:
            raise ValueError("Not a constant: {}".format(self))
        return sympy.cancel(self.numerator.LC() / self.denominator.LC())

    def evaluate(self, value):
        """
        Value at a point of the affine line.
        """
        denominator = self.denominator.eval(value)
        if denominator == 0:
            raise ZeroDivisionError("Pole at {}".format(value))
        return sympy.cancel(self.numerator.eval(value) / denominator)

    def rename(self, variable):
        return RationalFunction(rename(self.numerator, variable), rename(self.denominator, variable))

    def substitute(self, other):
        # type: (RationalFunction) -> RationalFunction
        """
        Composition ``self(other)``; the result is in the variable of *other*.
        """
        num_deg = self.numerator.degree() if not self.is_zero else 0
        den_deg = self.denominator.degree()
        numerator = homogenize(self.numerator, other, num_deg)
        denominator = homogenize(self.denominator, other, den_deg)
        if num_deg < den_deg:
            numerator *= other.denominator ** (den_deg - num_deg)
        elif den_deg < num_deg:
            denominator *= other.denominator ** (num_deg - den_deg)
        return RationalFunction(numerator, denominator)

    def specialize(self, value):
        """
        Substitute a value for the parameter of the coefficient field.
        """
        parameter = field_parameter(self.domain)
        if parameter is None:
            return self
        numerator = self.numerator.as_expr().subs(parameter, value)
        denominator = self.denominator.as_expr().subs(parameter, value)
        if sympy.expand(denominator) == 0:
            raise ZeroDivisionError("Denominator vanishes at {} = {}".format(parameter, value))
        return RationalFunction.from_expr(numerator / denominator, self.variable, QQ)


def homogenize(poly, phi, degree):
    # type: (Poly, RationalFunction, int) -> Poly
    """
    ``D^degree * poly(N/D)`` for ``phi = N/D``.
    """
    numerator, denominator = phi.numerator, phi.denominator
    if poly.domain != numerator.domain:
        numerator = numerator.set_domain(poly.domain)
        denominator = denominator.set_domain(poly.domain)

    result = Poly(0, numerator.gen, domain=numerator.domain)
    for (k,), coeff in poly.terms():
        result += ((numerator ** k) * (denominator ** (degree - k))).mul_ground(coeff)
    return result


class Place(object):
    """
    A closed point of the projective line over the base field: a monic
    irreducible polynomial or the point at infinity.

    Points of covers that carry no coordinates are represented by *named*
    places. Equality ignores the name of the variable.

    """
    __slots__ = ('polynomial', 'label')

    @classmethod
    def from_polynomial(cls, polynomial):
        # type: (Poly) -> Place
        if polynomial.degree() < 1:
            raise ValueError("A place needs a non-constant polynomial")
        return cls(polynomial.monic())

    @classmethod
    def linear(cls, value, variable='t'):
        gen = Symbol(str(variable))
        return cls(Poly(gen - value, gen, domain=QQ))

    @classmethod
    def named(cls, label):
        return cls(label=label)

    @classmethod
    def parse(cls, text, variable='t'):
        # type: (str, str) -> Place
        """
        Parse ``inf``, a rational point such as ``9`` or ``1/2``, or an
        irreducible polynomial such as ``t^2 + t + 1``.
        """
        from .utils import parse_rational
        text = str(text).strip()
        if text.lower() in INFINITY_TOKENS:
            return INFINITY
        try:
            return cls.linear(parse_rational(text), variable)
        except ValueError:
            pass

        polynomial = parse_polynomial(text, variable)
        if polynomial.degree() < 1 or not polynomial.is_irreducible:
            raise ValueError("Not an irreducible polynomial: {!r}".format(text))
        return cls.from_polynomial(polynomial)

    def __init__(self, polynomial=None, label=None):
        # type: (Optional[Poly], Optional[str]) -> None
        self.polynomial = polynomial
        self.label = label

    @property
    def key(self):
        if self.polynomial is not None:
            return 'poly', tuple(self.polynomial.all_coeffs())
        return 'label', self.label

    def __eq__(self, other):
        if isinstance(other, Place):
            return self.key == other.key
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "Place({!r})".format(str(self))

    def __str__(self):
        if self.polynomial is not None:
            return format_polynomial(self.polynomial)
        return self.label

    @property
    def is_infinity(self):
        return self is INFINITY or (self.polynomial is None and self.label == 'inf')

    @property
    def is_named(self):
        return self.polynomial is None and not self.is_infinity

    @property
    def degree(self):
        """
        Number of geometric points housed by the place.
        """
        if self.polynomial is not None:
            return self.polynomial.degree()
        return 1

    @property
    def root(self):
        """
        Coordinate of a rational place.
        """
        if self.polynomial is None or self.polynomial.degree() != 1:
            raise ValueError("Not a rational place: {}".format(self))
        return -self.polynomial.TC()

    def short(self):
        """
        Compact form used in profile strings.
        """
        if self.polynomial is not None and self.polynomial.degree() == 1:
            return str(self.root)
        return str(self)

    def as_poly(self, gen, domain=QQ):
        # type: (Symbol, Any) -> Poly
        if self.polynomial is None:
            raise ValueError("Place {} has no polynomial".format(self))
        return Poly.from_list(self.polynomial.all_coeffs(), gen, domain=domain)


INFINITY = Place(label='inf')


def _order(poly, divisor):
    count = 0
    while True:
        quotient, remainder = poly.div(divisor)
        if not remainder.is_zero:
            return count
        poly = quotient
        count += 1


def valuation(f, place):
    # type: (Union[RationalFunction, Poly], Place) -> Union[int, float]
    """
    Order of vanishing of *f* at *place*; ``math.inf`` for the zero function.
    """
    if isinstance(f, Poly):
        f = RationalFunction(f)
    if f.is_zero:
        return math.inf
    if place.is_infinity:
        return f.denominator.degree() - f.numerator.degree()
    divisor = place.as_poly(f.gen, f.domain)
    return _order(f.numerator, divisor) - _order(f.denominator, divisor)


class ResidueField(object):
    """
    The field ``K[t]/(p)`` for a monic irreducible ``p``.
    """
    __slots__ = ('modulus',)

    def __init__(self, modulus):
        # type: (Union[Place, Poly]) -> None
        if isinstance(modulus, Place):
            modulus = modulus.polynomial
        self.modulus = modulus.monic()

    def __repr__(self):
        return "ResidueField({!r})".format(format_polynomial(self.modulus))

    @property
    def degree(self):
        return self.modulus.degree()

    def _lift(self, poly):
        if poly.gen != self.modulus.gen or poly.domain != self.modulus.domain:
            poly = Poly.from_list(poly.all_coeffs(), self.modulus.gen, domain=self.modulus.domain)
        return poly

    def reduce(self, poly):
        # type: (Poly) -> Poly
        return self._lift(poly).rem(self.modulus)

    def is_zero(self, element):
        return self.reduce(element).is_zero

    def inverse(self, element):
        # type: (Poly) -> Poly
        element = self.reduce(element)
        if element.is_zero:
            raise ZeroDivisionError("Zero has no inverse")
        return element.invert(self.modulus)

    def evaluate(self, f):
        # type: (RationalFunction) -> Poly
        """
        Image of a rational function without a pole at the place.
        """
        return self.reduce(self.reduce(f.numerator) * self.inverse(f.denominator))


class Factorization(object):
    """
    ``constant * prod(factor ** multiplicity)``.

    Factors whose irreducibility could not be certified are kept apart in
    *unfactored* and never treated as irreducible.

    """
    __slots__ = ('constant', 'factors', 'unfactored')

    def __init__(self, constant, factors, unfactored=None):
        # type: (Any, List[Tuple[Poly, int]], List[Tuple[Poly, int]]) -> None
        self.constant = constant
        self.factors = factors
        self.unfactored = unfactored or []

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __repr__(self):
        return "Factorization({})".format(self.to_text())

    def to_text(self):
        parts = [str(self.constant)]
        for factor, multiplicity in self.factors + self.unfactored:
            text = "({})".format(format_polynomial(factor))
            parts.append(text if multiplicity == 1 else "{}^{}".format(text, multiplicity))
        return '*'.join(parts)

    @property
    def is_complete(self):
        return not self.unfactored

    def require_complete(self):
        if self.unfactored:
            raise UnfactoredPolynomial(
                "Could not certify {} factor(s)".format(len(self.unfactored)),
                meta={'unfactored': [format_polynomial(p) for p, _ in self.unfactored]}
            )
        return self

    def expand(self):
        # type: () -> Poly
        pairs = self.factors + self.unfactored
        gen = pairs[0][0].gen if pairs else Symbol('t')
        domain = pairs[0][0].domain if pairs else QQ
        result = Poly(self.constant, gen, domain=domain)
        for factor, multiplicity in pairs:
            result *= factor ** multiplicity
        return result

    def places(self):
        # type: () -> List[Tuple[Place, int]]
        return [(Place.from_polynomial(p), m) for p, m in self.factors]


def _sort_key(pair):
    factor, multiplicity = pair
    return factor.degree(), [str(c) for c in factor.all_coeffs()], multiplicity


def factor_disc(f):
    # type: (Poly) -> Factorization
    """
    Factor a polynomial over QQ or QQ(a) into monic irreducibles.

    Over QQ(a) the numerator is factored as a polynomial in both variables;
    by Gauss's lemma its factors involving the main variable are the
    irreducible factors over QQ(a). Each factor is then certified
    irreducible; a factor that fails is reported as unfactored.

    """
    if f.is_zero:
        raise ValueError("Cannot factor the zero polynomial")

    gen = f.gen
    parameter = field_parameter(f.domain)
    if parameter is None:
        _, raw = f.factor_list()
        candidates = [(p, p, m) for p, m in raw if p.degree() > 0]
    else:
        numerator, _ = sympy.fraction(sympy.together(f.as_expr()))
        _, raw = sympy.factor_list(numerator, gen, parameter)
        candidates = [
            (Poly(p, gen, domain=f.domain), Poly(p, gen, parameter), m)
            for p, m in raw if p.has(gen)
        ]

    factors = []
    unfactored = []
    for factor, certificate, multiplicity in candidates:
        target = factors if certificate.is_irreducible else unfactored
        target.append((factor.monic(), multiplicity))

    if unfactored:
        logger.warning("Uncertified factors of %s: %s", format_polynomial(f), unfactored)

    return Factorization(f.LC(), sorted(factors, key=_sort_key), sorted(unfactored, key=_sort_key))
