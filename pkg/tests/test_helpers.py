import datetime
import json
from fractions import Fraction

import numpy as np
import pytest
import sympy

from ellsurf import helpers
from ellsurf.constants import ErrorCode, Verdict
from ellsurf.resources import Claim, Error, Report


@pytest.mark.parametrize('value, expected', (
    (None, None),
    (True, True),
    ('I3', 'I3'),
    (Fraction(3), 3),
    (Fraction(1, 2), '1/2'),
    (sympy.Rational(1, 2), '1/2'),
    (sympy.Integer(7), 7),
    (np.int64(4), 4),
    (np.float64(0.5), 0.5),
    (np.array([[1, 2], [3, 4]]), [[1, 2], [3, 4]]),
    ({'b', 'a'}, ['a', 'b']),
    ((1, Fraction(2, 3)), [1, '2/3']),
    ({1: Fraction(1, 3)}, {'1': '1/3'}),
    (Verdict.Pass, 'PASS'),
    (sympy.Symbol('a') + 1, 'a + 1'),
))
def test_to_jsonable(value, expected):
    assert helpers.to_jsonable(value) == expected


def test_to_jsonable__resource():
    claim = Claim(label='l', anchor='a', computed=1, expected=None, verdict='PASS')

    target = helpers.to_jsonable(claim)

    assert target['label'] == 'l'
    assert target['verdict'] == 'PASS'


@pytest.fixture
def envelope():
    reports = [
        Report(title='Passing', command='ok', claims=[
            Claim(label='one', anchor='x', computed=1, expected=1, verdict='PASS'),
        ]),
        Report(title='Failing', command='bad', claims=[
            Claim(label='two', anchor='y', computed=1, expected=2, verdict='FAIL'),
        ]),
    ]
    return helpers.create_envelope(reports, datetime.datetime(2020, 1, 1, tzinfo=datetime.timezone.utc))


class TestRender(object):
    def test_envelope(self, envelope):
        target = helpers.render_text(envelope)

        assert target.splitlines()[0] == '== Passing (ok)'
        assert 'FAIL' in target
        assert target.endswith('1/2 reports passed')

    def test_error(self):
        error = Error.from_code(ErrorCode.USAGE, 'msg', meta={'terms': 5})

        target = helpers.render_text(error)

        assert target.splitlines() == ['error USAGE: msg', '  {"terms": 5}']

    def test_long_cell_truncated(self):
        report = Report(title='t', command='c', claims=[
            Claim(label='l', anchor='a', computed='x' * 100, expected=None, verdict='INFO'),
        ])

        target = helpers.render_report(report)

        assert 'x' * 45 + '...' in target[-1]
        assert 'x' * 46 not in target[-1]


class TestDumps(object):
    def test_error(self):
        target = json.loads(helpers.dumps(Error.from_code(ErrorCode.USAGE)))

        assert target['code'] == 'USAGE'
        assert target['exit_code'] == 2

    def test_payload_is_deterministic(self, envelope):
        later = helpers.create_envelope(envelope.reports)

        assert helpers.payload_dumps(envelope) == helpers.payload_dumps(later)
        assert helpers.dumps(envelope) != helpers.dumps(later)
