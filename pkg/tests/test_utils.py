import pytest
from sympy import Rational

from ellsurf import utils


@pytest.mark.parametrize('value, expected', (
    ('3', Rational(3)),
    ('-3/4', Rational(-3, 4)),
    (' 6 / 8 ', Rational(3, 4)),
    (5, Rational(5)),
    (Rational(1, 2), Rational(1, 2)),
))
def test_parse_rational(value, expected):
    assert utils.parse_rational(value) == expected


@pytest.mark.parametrize('value', ('abc', '1/0', '1.5', ''))
def test_parse_rational__invalid(value):
    with pytest.raises(ValueError):
        utils.parse_rational(value)


class TestParseComplex(object):
    def test_valid(self):
        assert utils.parse_complex('0.5,0.25') == complex(0.5, 0.25)

    def test_single_value(self):
        with pytest.raises(ValueError):
            utils.parse_complex('1')


class TestParseIntTuple(object):
    def test_valid(self):
        assert utils.parse_int_tuple('1, 1, 3', 3) == (1, 1, 3)

    def test_wrong_size(self):
        with pytest.raises(ValueError):
            utils.parse_int_tuple('1,1', 3)


@pytest.mark.parametrize('value, digits, expected', (
    (1 + 2j, 3, '1+2i'),
    (0.5 - 0.25j, 12, '0.5-0.25i'),
))
def test_format_complex(value, digits, expected):
    assert utils.format_complex(value, digits) == expected


@pytest.mark.parametrize('args, kwargs, expected', (
    (({'a': 1, 'b': None},), {}, {'a': 1}),
    (({'a': 1},), {'a': None, 'c': 3}, {'a': 1, 'c': 3}),
    ((), {}, {}),
))
def test_dict_filter(args, kwargs, expected):
    assert utils.dict_filter(*args, **kwargs) == expected
