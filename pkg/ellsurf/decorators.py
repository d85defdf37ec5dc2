"""
Decorators
~~~~~~~~~~

Decorators for defining commands and their options.

"""
from .data_structures import Param

# Imports for typing support
from typing import Any, Callable, Dict, Iterable, List, Optional, Set  # noqa
from .resources import Report  # noqa


class Command(object):
    """
    Decorator for defining a command.

    Usage::

        @Command(name='hesse', summary="Configuration of the Hesse pencil")
        def hesse():
            ...
            return report

    The callback receives one keyword argument per parameter and returns a
    :class:`Report` or a list of them.

    """
    _command_count = 0

    def __new__(cls, func=None, *args, **kwargs):
        def inner(callback):
            instance = super(Command, cls).__new__(cls)
            instance.__init__(callback, *args, **kwargs)
            return instance
        return inner(func) if func else inner

    def __init__(self, callback, name=None, summary=None, suite=None):
        # type: (Callable, str, str, Iterable[Dict[str, Any]]) -> None
        """
        :param callback: Function implementing the command.
        :param name: Name on the command line; defaults to the function name.
        :param summary: One line help; defaults to the first docstring line.
        :param suite: Argument sets the command is run with by ``all``;
            defaults to a single run with every default.

        """
        self.callback = callback
        self.name = name or callback.__name__.replace('_', '-')
        if summary is None and callback.__doc__:
            summary = callback.__doc__.strip().splitlines()[0]
        self.summary = summary
        self.suite = list(suite) if suite else [{}]

        # Sorting/hashing
        self.sort_key = Command._command_count
        Command._command_count += 1

        self.parameters = set()  # type: Set[Param]
        value = getattr(callback, 'parameters', None)
        if value is not None:
            self.parameters = value

    def __call__(self, **arguments):
        # type: (**Any) -> List[Report]
        unknown = set(arguments) - {p.dest for p in self.parameters}
        if unknown:
            raise TypeError("Unexpected argument(s) {} for {}".format(sorted(unknown), self.name))

        kwargs = {p.dest: p.default for p in self.parameters}
        kwargs.update(arguments)
        result = self.callback(**kwargs)
        return list(result) if isinstance(result, (list, tuple)) else [result]

    def __eq__(self, other):
        if isinstance(other, Command):
            return self.sort_key == other.sort_key
        return NotImplemented

    def __hash__(self):
        return hash(self.sort_key)

    def __str__(self):
        return self.name

    def __repr__(self):
        return "Command({!r})".format(self.name)

    def add_parser(self, subparsers, parents=()):
        """
        Register the command and its options on an argparse subparsers object.
        """
        parser = subparsers.add_parser(self.name, help=self.summary, description=self.summary, parents=list(parents))
        for param in sorted(self.parameters, key=lambda p: p.name):
            param.add_to(parser)
        return parser


command = Command


def add_param(param, *params):
    # type: (Param, *Param) -> Callable
    """
    Attach parameters to a command or to a function that will become one.
    """
    def inner(func):
        if isinstance(func, Command):
            func.parameters.update((param,) + params)
        else:
            func.parameters = getattr(func, 'parameters', set()) | set((param,) + params)
        return func
    return inner


def option(name, type_=str, description=None, **options):
    """
    Shortcut for :meth:`Param.option`.
    """
    return add_param(Param.option(name, type_, description, **options))


def flag(name, description=None, **options):
    return add_param(Param.flag(name, description, **options))
