import pytest

from ellsurf.commands import commands
from ellsurf.exceptions import ExceedsH11, UsageError
from ellsurf.qseries import BinaryQF


def _suites():
    for cmd in commands.commands():
        for arguments in cmd.suite:
            yield pytest.param(cmd.name, arguments, id="{}-{}".format(cmd.name, arguments or 'defaults'))


def test_command_names():
    assert [c.name for c in commands.commands()] == [
        'hesse', 'quotient', 'trisection', 'surface', 'basechange', 'lattice', 'reduction', 'qseries', 'hurwitz'
    ]


@pytest.mark.parametrize('name, arguments', list(_suites()))
def test_suite_passes(name, arguments):
    reports = commands.get(name)(**arguments)

    assert reports
    for report in reports:
        failed = [claim.label for claim in report.claims if claim.failed]
        assert not failed, "{} failed: {}".format(report.title, failed)


def test_basechange__profile():
    report, = commands.get('basechange')(profile='d=3; 0:3; inf:3; 9:2+1; 1:2+1')

    values = {claim.label: claim.computed for claim in report.claims}

    assert values['configuration'] == '2I3 + I6'
    assert values['base-genus'] == 1
    assert report.passed


class TestQseriesUsage(object):
    def test_too_few_terms(self):
        with pytest.raises(UsageError):
            commands.get('qseries')(terms=5)

    def test_wrong_discriminant(self):
        with pytest.raises(UsageError):
            commands.get('qseries')(form=BinaryQF(1, 0, 1))


class TestSurfaceRank(object):
    def test_assumed_rank(self):
        report, = commands.get('surface')(a=7, rank=2)

        values = {claim.label: claim.computed for claim in report.claims}

        assert values['mordell-weil-rank-assumed'] == 2
        assert values['picard-number'] == 12
        assert 'ns-discriminant' not in values
        assert report.passed

    def test_rank_beyond_h11(self):
        with pytest.raises(ExceedsH11):
            commands.get('surface')(a=7, rank=3)

    def test_negative_rank(self):
        with pytest.raises(UsageError):
            commands.get('surface')(a=7, rank=-1)


def test_qseries__check_zero_is_optional():
    report, = commands.get('qseries')()

    labels = {claim.label for claim in report.claims}

    assert 'theta-zero-modulus' not in labels
    assert 'theta-weight-one' in labels
    assert report.data['zeros'] == []
