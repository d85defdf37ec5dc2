# -*- coding: utf-8 -*-
"""
q-Series
~~~~~~~~

Truncated Laurent series with exact coefficients, theta series of binary
quadratic forms, eta products and their numerical evaluation on the upper
half plane.

The level 11 objects are the theta series of ``x^2 + xy + 3y^2``, the cusp
form ``h = q prod (1 - q^n)^2 (1 - q^11n)^2`` and the quotient
``F = theta^2 / h``, which is invariant under ``tau -> -1/(11 tau)``.

"""
import cmath
import collections
import logging
import math
from fractions import Fraction

import numpy as np

from .constants import (
    ATKIN_LEHNER_SAMPLES, ATKIN_LEHNER_TOLERANCE, DEFAULT_TERMS, DEFAULT_TOLERANCE, MODULAR_LEVEL
)
from .exactalg import Place
from .exceptions import DivergentTail, ExcludedParameter, NonIntegral
from .kodaira import FiberConfig, KodairaType
from .resources import SeriesEvaluation
from .utils import format_complex, parse_int_tuple

# Imports for typing support
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union  # noqa

logger = logging.getLogger(__name__)

MAX_FIXED_POINT_Q = 0.75
"""
Fixed points whose q has larger modulus are not evaluated.
"""


class BinaryQF(object):
    """
    Positive definite binary quadratic form ``ax^2 + bxy + cy^2``.
    """
    __slots__ = ('a', 'b', 'c')

    @classmethod
    def parse(cls, text):
        # type: (str) -> BinaryQF
        return cls(*parse_int_tuple(text, 3))

    def __init__(self, a, b, c):
        if a <= 0 or 4 * a * c - b * b <= 0:
            raise ExcludedParameter(
                "Form is not positive definite", meta={'form': [a, b, c]}
            )
        self.a, self.b, self.c = a, b, c

    def __repr__(self):
        return "BinaryQF({}, {}, {})".format(self.a, self.b, self.c)

    def __str__(self):
        return "{}x^2 + {}xy + {}y^2".format(self.a, self.b, self.c)

    def __eq__(self, other):
        if isinstance(other, BinaryQF):
            return (self.a, self.b, self.c) == (other.a, other.b, other.c)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.a, self.b, self.c))

    def __call__(self, x, y):
        return self.a * x * x + self.b * x * y + self.c * y * y

    @property
    def discriminant(self):
        return self.b * self.b - 4 * self.a * self.c

    def representations(self, n):
        # type: (int) -> int
        """
        Count lattice points with ``Q(x, y) = n`` by direct search.
        """
        bound = self._bounds(n)
        return sum(
            1 for x in range(-bound[0], bound[0] + 1) for y in range(-bound[1], bound[1] + 1) if self(x, y) == n
        )

    def _bounds(self, n):
        # Q >= (|D| / 4a) y^2 and Q >= (|D| / 4c) x^2
        d = -self.discriminant
        return (
            math.isqrt(4 * self.c * n // d) + 1,
            math.isqrt(4 * self.a * n // d) + 1,
        )


LEVEL_11_FORM = BinaryQF(1, 1, 3)


class IntSeries(object):
    """
    Laurent series ``sum c_n q^n`` known modulo ``q^order``.

    Coefficients are exact rationals starting at the valuation; the zero
    series has ``valuation == order``.

    """
    __slots__ = ('valuation', 'coefficients', 'order')

    def __init__(self, coefficients, valuation=0, order=None):
        # type: (Iterable[Union[int, Fraction]], int, Optional[int]) -> None
        coefficients = [Fraction(c) for c in coefficients]
        if order is None:
            order = valuation + len(coefficients)
        coefficients = coefficients[:max(order - valuation, 0)]
        while coefficients and coefficients[0] == 0:
            coefficients.pop(0)
            valuation += 1
        if not coefficients:
            valuation = order
        self.valuation = valuation
        self.coefficients = np.array(coefficients, dtype=object)
        self.order = order

    @classmethod
    def one(cls, order):
        return cls([1], 0, order)

    @classmethod
    def monomial(cls, exponent, order, coefficient=1):
        return cls([coefficient], exponent, order)

    def __repr__(self):
        return "IntSeries({} + O(q^{}))".format(self.to_text(6), self.order)

    def __len__(self):
        return len(self.coefficients)

    def __getitem__(self, n):
        # type: (int) -> Fraction
        if n >= self.order:
            raise IndexError("Coefficient of q^{} is beyond the truncation order {}".format(n, self.order))
        index = n - self.valuation
        if index < 0 or index >= len(self.coefficients):
            return Fraction(0)
        return self.coefficients[index]

    def __iter__(self):
        # type: () -> Iterator[Tuple[int, Fraction]]
        return ((self.valuation + i, c) for i, c in enumerate(self.coefficients))

    def __eq__(self, other):
        if isinstance(other, IntSeries):
            return (
                self.valuation == other.valuation and self.order == other.order and
                list(self.coefficients) == list(other.coefficients)
            )
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    @property
    def is_zero(self):
        return len(self.coefficients) == 0

    @property
    def leading_coefficient(self):
        return self.coefficients[0] if len(self.coefficients) else Fraction(0)

    def truncate(self, order):
        # type: (int) -> IntSeries
        return IntSeries(self.coefficients, self.valuation, min(order, self.order))

    def _dense(self, start, order):
        return [self[n] if n >= self.valuation else Fraction(0) for n in range(start, order)]

    def __neg__(self):
        return IntSeries(-self.coefficients, self.valuation, self.order)

    def __add__(self, other):
        if not isinstance(other, IntSeries):
            other = IntSeries([other], 0, self.order)
        order = min(self.order, other.order)
        start = min(self.valuation, other.valuation, order)
        return IntSeries(
            [a + b for a, b in zip(self._dense(start, order), other._dense(start, order))], start, order
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, IntSeries):
            return IntSeries(self.coefficients * Fraction(other), self.valuation, self.order)
        order = min(self.order + other.valuation, other.order + self.valuation)
        valuation = self.valuation + other.valuation
        if self.is_zero or other.is_zero:
            return IntSeries([], order, order)
        product = np.convolve(self.coefficients, other.coefficients)
        return IntSeries(product, valuation, order)

    __rmul__ = __mul__

    def inverse(self):
        # type: () -> IntSeries
        if self.is_zero:
            raise ExcludedParameter("Series is zero to its truncation order", meta={'order': self.order})
        unit = self.coefficients
        length = self.order - self.valuation
        lead = Fraction(1) / unit[0]
        result = [lead]
        for n in range(1, length):
            total = sum((unit[k] * result[n - k] for k in range(1, min(n, len(unit) - 1) + 1)), Fraction(0))
            result.append(-lead * total)
        return IntSeries(result, -self.valuation, length - self.valuation)

    def __truediv__(self, other):
        if isinstance(other, IntSeries):
            return self * other.inverse()
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, power):
        # type: (int) -> IntSeries
        if power < 0:
            return self.inverse() ** -power
        result = IntSeries.one(self.order - self.valuation)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def evaluate(self, q):
        # type: (complex) -> complex
        if self.is_zero:
            return 0j
        exponents = np.arange(self.valuation, self.valuation + len(self.coefficients))
        values = np.array([float(c) for c in self.coefficients])
        return complex(np.sum(values * np.power(complex(q), exponents)))

    def growth_rate(self):
        # type: () -> Tuple[float, float]
        """
        Geometric majorant of the known coefficients: the largest magnitude in
        the final quarter and its growth ratio per term against the quarter
        before it.
        """
        magnitudes = np.abs(np.array([float(c) for c in self.coefficients]))
        window = max(len(magnitudes) // 4, 1)
        last = float(magnitudes[-window:].max()) if len(magnitudes) else 0.0
        previous = float(magnitudes[-2 * window:-window].max()) if len(magnitudes) > window else 0.0
        if last == 0 or previous == 0:
            return last, 1.0
        return last, max((last / previous) ** (1.0 / window), 1.0)

    def to_text(self, terms=None):
        items = list(self)[:terms] if terms else list(self)
        if not items:
            return '0'
        parts = []
        for n, c in items:
            if c == 0:
                continue
            monomial = '' if n == 0 else ('q' if n == 1 else "q^{}".format(n))
            if monomial and abs(c) == 1:
                text = monomial
            else:
                text = str(abs(c)) + ('*' + monomial if monomial else '')
            parts.append(('- ' if c < 0 else '+ ') + text)
        result = ' '.join(parts)
        return result[2:] if result.startswith('+ ') else '-' + result[2:]

    def to_dict(self, terms=None):
        return {
            'valuation': self.valuation,
            'order': self.order,
            'coefficients': [str(c) for c in self.coefficients[:terms]],
        }


def theta_qf(form=LEVEL_11_FORM, terms=DEFAULT_TERMS):
    # type: (BinaryQF, int) -> IntSeries
    """
    Theta series ``sum r_Q(n) q^n`` known through ``q^terms``.
    """
    x_bound, y_bound = form._bounds(terms)
    x, y = np.meshgrid(np.arange(-x_bound, x_bound + 1), np.arange(-y_bound, y_bound + 1))
    values = form(x, y)
    counts = np.bincount(values[values <= terms].ravel(), minlength=terms + 1)
    logger.debug("theta of %s: %d lattice points examined", form, values.size)
    return IntSeries([int(c) for c in counts[:terms + 1]], 0, terms + 1)


def eta_product(exponents, terms=DEFAULT_TERMS):
    # type: (Dict[int, int], int) -> IntSeries
    """
    ``q^s prod_m prod_n (1 - q^(mn))^e_m`` with ``s = sum m e_m / 24``.

    The product is expanded through ``q^terms`` before the shift.
    """
    weight = sum(m * e for m, e in exponents.items())
    if weight % 24:
        raise NonIntegral(
            "Eta product has fractional leading exponent {}/24".format(weight), meta={'exponents': exponents}
        )
    coefficients = [1] + [0] * terms
    for m, e in sorted(exponents.items()):
        for k in range(m, terms + 1, m):
            for _ in range(abs(e)):
                if e > 0:
                    # multiply by (1 - q^k)
                    for i in range(terms, k - 1, -1):
                        coefficients[i] -= coefficients[i - k]
                else:
                    # divide by (1 - q^k)
                    for i in range(k, terms + 1):
                        coefficients[i] += coefficients[i - k]
    shift = weight // 24
    return IntSeries(coefficients, shift, terms + 1 + shift)


def cusp_form(terms=DEFAULT_TERMS):
    # type: (int) -> IntSeries
    """
    The weight 2 cusp form ``q prod (1 - q^n)^2 (1 - q^11n)^2``.
    """
    return eta_product({1: 2, MODULAR_LEVEL: 2}, terms)


def laurent_quotient(numerator, denominator):
    # type: (IntSeries, IntSeries) -> IntSeries
    return numerator / denominator


def level_11_quotient(form=LEVEL_11_FORM, terms=DEFAULT_TERMS):
    # type: (BinaryQF, int) -> IntSeries
    """
    ``theta^2 / h`` with a simple pole at the cusp.
    """
    return laurent_quotient(theta_qf(form, terms) ** 2, cusp_form(terms))


class Evaluation(collections.namedtuple('Evaluation', 'tau q value tail')):
    __slots__ = ()

    @property
    def modulus(self):
        return abs(self.value)

    def to_resource(self):
        return SeriesEvaluation(
            tau=format_complex(self.tau), value=format_complex(self.value), modulus=self.modulus, tail=self.tail
        )


def q_parameter(tau):
    # type: (complex) -> complex
    return cmath.exp(2j * math.pi * complex(tau))


def eval_upper_half(series, tau, terms=None):
    # type: (IntSeries, complex, Optional[int]) -> Evaluation
    """
    Sum the series at ``q = exp(2 pi i tau)`` with an estimate of the
    truncation error.

    :raises DivergentTail: when ``Im tau <= 0`` or the geometric majorant of
        the coefficients does not converge at ``|q|``.

    """
    tau = complex(tau)
    if tau.imag <= 0:
        raise DivergentTail("tau must lie in the upper half plane", meta={'tau': format_complex(tau)})
    if terms is not None:
        series = series.truncate(series.valuation + terms)
    q = q_parameter(tau)
    radius = abs(q)

    last, ratio = series.growth_rate()
    if last and ratio * radius >= 1:
        raise DivergentTail(
            "Coefficient growth {:.4g} exceeds 1/|q| = {:.4g}".format(ratio, 1 / radius),
            meta={'tau': format_complex(tau), 'order': series.order}
        )
    window = max(len(series) // 4, 1)
    tail = last * ratio ** window * radius ** series.order / (1 - ratio * radius) if last else 0.0

    value = series.evaluate(q)
    logger.debug("eval at tau=%s: |q|=%.4g value=%s tail=%.3g", tau, radius, value, tail)
    return Evaluation(tau, q, value, tail)


def atkin_lehner(tau, level=MODULAR_LEVEL):
    # type: (complex, int) -> complex
    return -1 / (level * complex(tau))


def atkin_lehner_check(series, samples=None, terms=None, tolerance=ATKIN_LEHNER_TOLERANCE):
    # type: (IntSeries, Optional[Iterable[complex]], Optional[int], float) -> float
    """
    Largest ``|F(-1/(11 tau)) - F(tau)|`` over the sample points.

    :raises DivergentTail: if either evaluation's estimated tail exceeds
        *tolerance*.

    """
    samples = [complex(s) for s in (samples if samples is not None else [1j * s for s in ATKIN_LEHNER_SAMPLES])]
    deviation = 0.0
    for tau in samples:
        left = eval_upper_half(series, tau, terms)
        right = eval_upper_half(series, atkin_lehner(tau), terms)
        tail = max(left.tail, right.tail)
        if tail > tolerance:
            raise DivergentTail(
                "Truncation error {:.3g} exceeds tolerance {:.3g}".format(tail, tolerance),
                meta={'tau': format_complex(tau), 'tail': tail}
            )
        deviation = max(deviation, abs(left.value - right.value))
    logger.debug("Atkin-Lehner deviation over %d samples: %.3g", len(samples), deviation)
    return deviation


def _reduce_form(a, b, c):
    # type: (int, int, int) -> Tuple[int, int, int]
    discriminant = b * b - 4 * a * c
    while True:
        r = b % (2 * a)
        if r > a:
            r -= 2 * a
        a, b, c = a, r, (r * r - discriminant) // (4 * a)
        if a > c:
            a, b, c = c, -b, a
            continue
        break
    if b < 0 and (a == c or -b == a):
        b = -b
    return a, b, c


class FixedPoint(collections.namedtuple('FixedPoint', 'alpha gamma')):
    """
    Fixed point ``(alpha + i/sqrt(11)) / gamma`` of the Atkin-Lehner element
    ``[[11 alpha, beta], [11 gamma, -11 alpha]]``.
    """
    __slots__ = ()

    @property
    def beta(self):
        return -(1 + MODULAR_LEVEL * self.alpha ** 2) // self.gamma

    @property
    def tau(self):
        return complex(self.alpha, 1 / math.sqrt(MODULAR_LEVEL)) / self.gamma

    @property
    def form(self):
        # type: () -> Tuple[int, int, int]
        """
        Primitive form whose root in the upper half plane is the point.
        """
        a, b, c = MODULAR_LEVEL * self.gamma, -2 * MODULAR_LEVEL * self.alpha, -self.beta
        divisor = math.gcd(math.gcd(a, b), c)
        return a // divisor, b // divisor, c // divisor

    @property
    def class_key(self):
        """
        Gamma_0(11) invariant: discriminant, middle coefficient modulo 22 and
        the reduced SL_2(Z) form.
        """
        a, b, c = self.form
        return b * b - 4 * a * c, b % (2 * MODULAR_LEVEL), _reduce_form(a, b, c)

    def __str__(self):
        if self.gamma == 1:
            return "i/sqrt(11)"
        return "({} + i/sqrt(11))/{}".format(self.alpha, self.gamma)


def al_fixed_points(bound=6, max_q=MAX_FIXED_POINT_Q):
    # type: (int, float) -> List[FixedPoint]
    """
    Fixed points of the Atkin-Lehner involutions of level 11 with
    ``-1/2 < Re tau <= 1/2``, ``gamma <= bound`` and ``|q| <= max_q``.
    """
    points = []
    for gamma in range(1, bound + 1):
        for alpha in range(-((gamma - 1) // 2), gamma // 2 + 1):
            if (1 + MODULAR_LEVEL * alpha ** 2) % gamma:
                continue
            point = FixedPoint(alpha, gamma)
            if abs(q_parameter(point.tau)) <= max_q:
                points.append(point)
    logger.debug("%d Atkin-Lehner fixed points with gamma <= %d", len(points), bound)
    return points


def fixed_point_classes(points):
    # type: (Iterable[FixedPoint]) -> Dict[tuple, List[FixedPoint]]
    classes = collections.OrderedDict()
    for point in points:
        classes.setdefault(point.class_key, []).append(point)
    return classes


def locate_theta_zero(form=LEVEL_11_FORM, terms=DEFAULT_TERMS, tolerance=DEFAULT_TOLERANCE, bound=6):
    # type: (BinaryQF, int, float, int) -> List[Tuple[FixedPoint, Evaluation]]
    """
    Atkin-Lehner fixed points at which the theta series vanishes.
    """
    theta = theta_qf(form, terms)
    zeros = []
    for point in al_fixed_points(bound):
        evaluation = eval_upper_half(theta, point.tau)
        if evaluation.modulus < tolerance:
            zeros.append((point, evaluation))
    return zeros


def shioda_modular_config():
    # type: () -> FiberConfig
    """
    Elliptic modular surface of level 11: I1 and I11 over the two cusps of
    the genus one curve X_0(11).
    """
    return FiberConfig(
        [
            (Place.named('cusp-inf'), KodairaType('I', 1), 1),
            (Place.named('cusp-0'), KodairaType('I', MODULAR_LEVEL), 1),
        ],
        genus=1,
    )
