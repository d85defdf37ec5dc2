import pytest

from ellsurf import containers
from ellsurf.data_structures import ReportBuilder
from ellsurf.decorators import option
from ellsurf.exceptions import UsageError
from ellsurf.resources import Envelope, Error


def _group():
    group = containers.CommandGroup(name='test')

    @group.command(name='ok', suite=[{'value': 1}, {'value': 2}])
    @option('value', int, default=1)
    def ok(value):
        builder = ReportBuilder('Ok', 'ok')
        builder.check('value', 'test', value, value)
        return builder.build()

    @group.command(name='failing')
    def failing():
        builder = ReportBuilder('Failing', 'failing')
        builder.check('value', 'test', 1, 2)
        return builder.build()

    @group.command(name='usage')
    def usage():
        raise UsageError("Bad usage", meta={'terms': 5})

    @group.command(name='broken')
    def broken():
        raise RuntimeError("Boom")

    return group


class TestCommandGroup(object):
    def test_commands_in_order(self):
        target = containers.CommandGroup(_group(), name='outer')

        assert [c.name for c in target.commands()] == ['ok', 'failing', 'usage', 'broken']

    def test_get(self):
        assert _group().get('ok').name == 'ok'
        with pytest.raises(KeyError):
            _group().get('missing')

    def test_unknown_option(self):
        with pytest.raises(TypeError):
            containers.CommandGroup(title='x')


class TestCommandInterface(object):
    @pytest.fixture
    def target(self):
        return containers.CommandInterface(_group())

    def test_dispatch(self, target):
        reports, exit_code = target.dispatch_command(target.get('ok'), {'value': 3})

        assert exit_code == 0
        assert reports[0].claims[0].computed == 3

    def test_dispatch__failed_claim(self, target):
        reports, exit_code = target.dispatch_command(target.get('failing'))

        assert exit_code == 1
        assert not reports[0].passed

    def test_dispatch__usage_error(self, target):
        resource, exit_code = target.dispatch_command(target.get('usage'))

        assert isinstance(resource, Error)
        assert (resource.code, exit_code) == ('USAGE', 2)
        assert resource.meta == {'terms': 5}

    def test_dispatch__internal_error(self, target, mocker):
        mock_logger = mocker.patch('ellsurf.containers.logger')

        resource, exit_code = target.dispatch_command(target.get('broken'))

        assert (resource.code, exit_code) == ('INTERNAL', 1)
        assert resource.developer_message == "RuntimeError('Boom')"
        mock_logger.exception.assert_called_once()

    def test_dispatch__debug(self):
        target = containers.CommandInterface(_group(), debug_enabled=True)

        with pytest.raises(RuntimeError):
            target.dispatch_command(target.get('broken'))

    def test_dispatch__unknown_argument(self, target):
        resource, exit_code = target.dispatch_command(target.get('ok'), {'other': 1})

        assert (resource.code, exit_code) == ('INTERNAL', 1)

    def test_run(self, target):
        resource, exit_code, options = target.run(['ok', '--value', '4'])

        assert isinstance(resource, Envelope)
        assert exit_code == 0
        assert options.value == 4
        assert not options.json

    def test_run__global_flags(self, target):
        _, _, options = target.run(['ok', '--json'])

        assert options.json

    def test_run_all(self):
        group = containers.CommandGroup(name='test')
        group.containers = [_group().get('ok')]
        target = containers.CommandInterface(group)

        resource, exit_code, _ = target.run(['all'])

        assert exit_code == 0
        assert [r.claims[0].computed for r in resource.reports] == [1, 2]

    def test_run_all__stops_at_error(self, target):
        resource, exit_code, _ = target.run(['all'])

        assert isinstance(resource, Error)
        assert (resource.code, exit_code) == ('USAGE', 2)
