import argparse
from fractions import Fraction

import pytest

from ellsurf.data_structures import Param, ReportBuilder


class TestParam(object):
    def test_option(self):
        target = Param.option('max-terms', int, "Terms.", default=80, metavar='N')

        assert str(target) == '--max-terms'
        assert target.dest == 'max_terms'
        assert target.default == 80
        assert target.options == {'default': 80, 'metavar': 'N'}

    def test_flag(self):
        target = Param.flag('dry-run', "No output.")

        assert target.type is None
        assert target.default is None
        assert target.options == {'action': 'store_true'}

    def test_equality_by_name(self):
        assert Param.option('a', int) == Param.option('a', str)
        assert Param.option('a') != Param.option('b')
        assert len({Param.option('a', int), Param.option('a', str)}) == 1

    @pytest.mark.parametrize('argv, expected', (
        ([], 80),
        (['--max-terms', '20'], 20),
    ))
    def test_add_to(self, argv, expected):
        parser = argparse.ArgumentParser()
        Param.option('max-terms', int, "Terms.", default=80).add_to(parser)

        assert parser.parse_args(argv).max_terms == expected

    def test_add_to__flag(self):
        parser = argparse.ArgumentParser()
        Param.flag('dry-run').add_to(parser)

        assert parser.parse_args(['--dry-run']).dry_run is True


class TestReportBuilder(object):
    def test_check(self):
        target = ReportBuilder('Title', 'cmd')

        claim = target.check('equal', 'anchor', Fraction(1, 2), '1/2')

        assert claim.verdict == 'FAIL'
        assert target.check('same', 'anchor', 3, 3).verdict == 'PASS'
        assert claim.computed == '1/2'
        assert len(target) == 2
        assert not target.passed

    def test_predicate(self):
        target = ReportBuilder('Title', 'cmd')

        claim = target.check('small', 'anchor', 1e-9, 1e-6, predicate=lambda c, e: c < e)

        assert claim.verdict == 'PASS'
        assert target.passed

    def test_info_never_fails(self):
        target = ReportBuilder('Title', 'cmd')
        target.info('value', 'anchor', 2.5, '> 1')

        assert target.passed
        assert target.claims[0].verdict == 'INFO'

    def test_build(self):
        target = ReportBuilder('Title', 'cmd')
        target.check('one', 'a', 1, 1)
        target.add_data(roots=[Fraction(1, 3)])

        report = target.build()

        assert (report.title, report.command) == ('Title', 'cmd')
        assert [c.label for c in report.claims] == ['one']
        assert report.data == {'roots': ['1/3']}
        assert report.passed

    def test_build__no_data(self):
        target = ReportBuilder('Title', 'cmd')

        assert target.build().data is None
