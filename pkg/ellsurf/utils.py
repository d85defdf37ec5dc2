"""
Utils
~~~~~

Utility functions used to perform common operations.

"""
import itertools
import re

from sympy import Rational

# Typing imports
from typing import Any, Tuple  # noqa

RATIONAL_RE = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')


def parse_rational(value):
    # type: (Any) -> Rational
    """
    Parse a rational number written as ``p`` or ``p/q``.

    >>> parse_rational('-3/4')
    -3/4

    """
    if isinstance(value, Rational):
        return value
    if isinstance(value, int):
        return Rational(value)

    match = RATIONAL_RE.match(str(value))
    if not match:
        raise ValueError("Not a rational number: {!r}".format(value))
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ValueError("Zero denominator: {!r}".format(value))
    return Rational(int(numerator), int(denominator or 1))


def parse_complex(value):
    # type: (str) -> complex
    """
    Parse a point written as ``"re,im"``.
    """
    parts = [p.strip() for p in str(value).split(',')]
    if len(parts) != 2:
        raise ValueError("Expected 're,im': {!r}".format(value))
    return complex(float(parts[0]), float(parts[1]))


def parse_int_tuple(value, size):
    # type: (str, int) -> Tuple[int, ...]
    """
    Parse a comma separated tuple of integers of a fixed size.
    """
    parts = [p.strip() for p in str(value).split(',')]
    if len(parts) != size:
        raise ValueError("Expected {} comma separated integers: {!r}".format(size, value))
    return tuple(int(p) for p in parts)


def format_complex(value, digits=12):
    # type: (complex, int) -> str
    return "{:.{d}g}{:+.{d}g}i".format(value.real, value.imag, d=digits)


def dict_filter_update(base, updates):
    # type: (dict, dict) -> None
    """
    Update dict with None values filtered out.
    """
    base.update((k, v) for k, v in updates.items() if v is not None)


def dict_filter(*args, **kwargs):
    """
    Merge all values into a single dict with all None values removed.
    """
    result = {}
    for arg in itertools.chain(args, (kwargs,)):
        dict_filter_update(result, arg)
    return result
