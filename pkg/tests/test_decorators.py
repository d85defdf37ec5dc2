import argparse

import pytest

from ellsurf import decorators
from ellsurf.data_structures import Param, ReportBuilder


def _report(name, **data):
    builder = ReportBuilder(name, name)
    builder.add_data(**data)
    return builder.build()


class TestCommand(object):
    def test_init(self):
        @decorators.Command
        def target_command():
            """
            Summary line

            More detail.
            """

        assert isinstance(target_command, decorators.Command)
        assert target_command.name == 'target-command'
        assert target_command.summary == 'Summary line'
        assert target_command.suite == [{}]
        assert target_command.parameters == set()

    def test_options(self):
        @decorators.Command(name='other', summary="Other", suite=[{'value': 2}])
        def target():
            pass

        assert str(target) == 'other'
        assert repr(target) == "Command('other')"
        assert target.summary == 'Other'
        assert target.suite == [{'value': 2}]

    def test_sort_key(self, mocker):
        mocker.patch('ellsurf.decorators.Command._command_count', 0)

        @decorators.Command
        def first():
            pass

        @decorators.Command
        def second():
            pass

        assert first.sort_key < second.sort_key
        assert first != second
        assert len({first, second}) == 2

    def test_call(self):
        @decorators.Command
        @decorators.option('value', int, default=1)
        def target(value):
            return _report('target', value=value)

        assert target()[0].data == {'value': 1}
        assert target(value=5)[0].data == {'value': 5}

    def test_call__list_result(self):
        @decorators.Command
        def target():
            return [_report('a'), _report('b')]

        assert [r.command for r in target()] == ['a', 'b']

    def test_call__unknown_argument(self):
        @decorators.Command
        def target():
            return _report('target')

        with pytest.raises(TypeError):
            target(value=1)

    def test_add_parser(self):
        @decorators.Command(name='run')
        @decorators.option('value', int, "A value.", default=1)
        @decorators.flag('quiet')
        def target(value, quiet):
            pass

        parser = argparse.ArgumentParser()
        target.add_parser(parser.add_subparsers(dest='command'))

        options = parser.parse_args(['run', '--value', '3', '--quiet'])

        assert (options.command, options.value, options.quiet) == ('run', 3, True)


class TestAddParam(object):
    def test_function(self):
        @decorators.add_param(Param.option('a'), Param.option('b'))
        def target():
            pass

        assert target.parameters == {Param.option('a'), Param.option('b')}

    def test_command(self):
        @decorators.add_param(Param.option('b'))
        @decorators.Command
        @decorators.add_param(Param.option('a'))
        def target(a, b):
            pass

        assert {p.name for p in target.parameters} == {'a', 'b'}
