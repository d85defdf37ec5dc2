import datetime

import pytest

from ellsurf import exceptions
from ellsurf.constants import ErrorCode, Verdict
from ellsurf.resources import Claim, Envelope, Error, Report


class TestError(object):
    def test_from_code(self):
        target = Error.from_code(ErrorCode.USAGE)

        assert target.code == 'USAGE'
        assert target.exit_code == 2
        assert target.message == ErrorCode.USAGE.description
        assert target.developer_message == ErrorCode.USAGE.description
        assert target.meta is None

    def test_from_code__message(self):
        target = Error.from_code(ErrorCode.MISMATCH, "Disagree", meta={'a': 1})

        assert target.message == 'Disagree'
        assert target.meta == {'a': 1}


@pytest.mark.parametrize('exception, code, exit_code', (
    (exceptions.UsageError, 'USAGE', 2),
    (exceptions.InvalidProfile, 'INVALID_PROFILE', 2),
    (exceptions.DegenerateModel, 'DEGENERATE', 1),
    (exceptions.Mismatch, 'MISMATCH', 1),
    (exceptions.EllSurfError, 'INTERNAL', 1),
))
def test_exception_resource(exception, code, exit_code):
    target = exception('x', meta={'k': 'v'})

    assert target.exit_code == exit_code
    assert target.resource.code == code
    assert target.resource.message == 'x'
    assert target.resource.meta == {'k': 'v'}


def test_exception_default_message():
    assert str(exceptions.EllSurfError()) == ErrorCode.INTERNAL.description


def _claim(verdict):
    return Claim(label='l', anchor='a', computed=1, expected=1, verdict=verdict.value)


class TestReport(object):
    @pytest.mark.parametrize('verdicts, expected', (
        ((Verdict.Pass, Verdict.Info), True),
        ((Verdict.Pass, Verdict.Fail), False),
        ((), True),
    ))
    def test_passed(self, verdicts, expected):
        target = Report(title='t', command='c', claims=[_claim(v) for v in verdicts])

        assert target.passed is expected

    def test_envelope_payload(self):
        report = Report(title='t', command='c', claims=[_claim(Verdict.Pass)])
        target = Envelope(generated_at=datetime.datetime(2020, 1, 1), reports=[report])

        assert target.payload == [report]
