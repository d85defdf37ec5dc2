"""
Containers
~~~~~~~~~~

Containers that group commands, and the interface that parses a command
line and dispatches to them.

"""
import argparse
import logging

from .constants import ErrorCode
from .decorators import Command
from .exceptions import EllSurfError
from .helpers import create_envelope
from .resources import Error

# Imports for typing support
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union  # noqa
from .resources import Envelope, Report  # noqa

logger = logging.getLogger(__name__)

ALL_COMMAND = 'all'


class CommandGroup(object):
    """
    Container of commands.

    Groups can be nested; commands are listed in the order they were added.

    """
    def __init__(self, *containers, **options):
        # type: (*Union[Command, CommandGroup], **Any) -> None
        self.containers = list(containers)
        self.name = options.pop('name', None)

        if options:
            raise TypeError("Got an unexpected keyword argument(s) {}".format(list(options.keys())))

    def command(self, name=None, summary=None, suite=None):
        """
        Decorator that defines a command and adds it to this group.

        :param name: Name on the command line.
        :param summary: One line help.
        :param suite: Argument sets used when running every command.

        """
        def inner(callback):
            cmd = Command(callback, name, summary, suite)
            self.containers.append(cmd)
            return cmd
        return inner

    def commands(self):
        # type: () -> Iterator[Command]
        for container in self.containers:
            if isinstance(container, CommandGroup):
                for cmd in container.commands():
                    yield cmd
            else:
                yield container

    def get(self, name):
        # type: (str) -> Command
        for cmd in self.commands():
            if cmd.name == name:
                return cmd
        raise KeyError(name)


class CommandInterface(CommandGroup):
    """
    Parses arguments, runs commands and converts errors into :class:`Error`
    resources.

    With ``debug_enabled`` exceptions are re-raised so a traceback is shown.

    """
    def __init__(self, *containers, **options):
        options.setdefault('name', 'ellsurf')
        self.debug_enabled = options.pop('debug_enabled', False)
        super(CommandInterface, self).__init__(*containers, **options)

    def handle_internal(self, cmd, exception):
        # type: (Command, BaseException) -> Error
        """
        Handle an *un-handled* exception.
        """
        logger.exception('Internal error in %s: %s', cmd, exception)
        return Error.from_code(ErrorCode.INTERNAL, developer_message=repr(exception))

    def dispatch_command(self, cmd, arguments=None):
        # type: (Command, Dict[str, Any]) -> Tuple[Union[List[Report], Error], int]
        """
        Run a command and handle exceptions from it.
        """
        try:
            reports = cmd(**(arguments or {}))

        except EllSurfError as e:
            if self.debug_enabled:
                raise
            logger.debug("%s raised %s: %s", cmd, e.code, e)
            return e.resource, e.exit_code

        except Exception as e:
            if self.debug_enabled:
                raise
            resource = self.handle_internal(cmd, e)
            return resource, resource.exit_code

        else:
            return reports, 0 if all(r.passed for r in reports) else 1

    def dispatch_all(self):
        # type: () -> Tuple[Union[List[Report], Error], int]
        """
        Run every command over its suite; the first error stops the run.
        """
        reports = []
        for cmd in self.commands():
            for arguments in cmd.suite:
                result, _ = self.dispatch_command(cmd, arguments)
                if isinstance(result, Error):
                    return result, result.exit_code
                reports.extend(result)
        return reports, 0 if all(r.passed for r in reports) else 1

    def build_parser(self, prog=None):
        # type: (str) -> argparse.ArgumentParser
        common = argparse.ArgumentParser(add_help=False)
        self._add_global_flags(common, argparse.SUPPRESS)

        parser = argparse.ArgumentParser(
            prog=prog or self.name,
            description="Exact computations for elliptic surfaces with p_g = q = 1.",
        )
        self._add_global_flags(parser, False)

        subparsers = parser.add_subparsers(dest='command', metavar='command')
        subparsers.required = True
        for cmd in self.commands():
            cmd.add_parser(subparsers, parents=[common])
        subparsers.add_parser(ALL_COMMAND, help="Run every command", parents=[common])
        return parser

    @staticmethod
    def _add_global_flags(parser, default):
        parser.add_argument('--json', action='store_true', default=default, help="Print the JSON envelope.")
        parser.add_argument('--verbose', action='store_true', default=default, help="Log at debug level.")
        parser.add_argument('--debug', action='store_true', default=default, help="Re-raise errors.")

    def dispatch(self, options):
        # type: (argparse.Namespace) -> Tuple[Union[Envelope, Error], int]
        """
        Dispatch parsed options to the selected command.
        """
        arguments = vars(options).copy()
        name = arguments.pop('command')
        for key in ('json', 'verbose', 'debug'):
            arguments.pop(key, None)

        if name == ALL_COMMAND:
            result, exit_code = self.dispatch_all()
        else:
            result, exit_code = self.dispatch_command(self.get(name), arguments)

        if isinstance(result, Error):
            return result, exit_code
        return create_envelope(result), exit_code

    def configure(self, options):
        # type: (argparse.Namespace) -> None
        """
        Apply the global flags: logging level and debug mode.
        """
        logging.basicConfig(
            level=logging.DEBUG if options.verbose else logging.WARNING,
            format="%(levelname)s %(name)s: %(message)s",
        )
        self.debug_enabled = self.debug_enabled or options.debug

    def run(self, argv=None):
        # type: (Optional[Sequence[str]]) -> Tuple[Union[Envelope, Error], int, argparse.Namespace]
        options = self.build_parser().parse_args(argv)
        self.configure(options)
        resource, exit_code = self.dispatch(options)
        return resource, exit_code, options
