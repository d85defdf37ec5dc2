"""
Data Structures
~~~~~~~~~~~~~~~

Command parameters and the builder used to assemble reports.

"""
import argparse

from .constants import Verdict
from .helpers import to_jsonable
from .resources import Claim, Report
from .utils import dict_filter

# Imports for typing support
from typing import Any, Callable, Dict, List, Optional  # noqa


class Param(object):
    """
    A command line option of a command.
    """
    __slots__ = ('name', 'type', 'description', 'options')

    @classmethod
    def option(cls, name, type_=str, description=None, default=None, choices=None, metavar=None, **options):
        """
        Define an option taking a value.
        """
        return cls(name, type_, description, default=default, choices=choices, metavar=metavar, **options)

    @classmethod
    def flag(cls, name, description=None, **options):
        """
        Define a boolean switch.
        """
        return cls(name, None, description, action='store_true', **options)

    def __init__(self, name, type_=None, description=None, **options):
        # type: (str, Optional[Callable], Optional[str], **Any) -> None
        self.name = name
        self.type = type_
        self.description = description
        self.options = dict_filter(**options)

    def __hash__(self):
        return hash(self.name)

    def __str__(self):
        return "--{}".format(self.name)

    def __repr__(self):
        return "Param({!r}, {!r}, {!r})".format(self.name, self.type, self.options)

    def __eq__(self, other):
        if isinstance(other, Param):
            return hash(self) == hash(other)
        return NotImplemented

    @property
    def dest(self):
        return self.name.replace('-', '_')

    @property
    def default(self):
        return self.options.get('default')

    def add_to(self, parser):
        # type: (argparse.ArgumentParser) -> None
        kwargs = dict(self.options, dest=self.dest, help=self.description)
        if self.type is not None:
            kwargs['type'] = self.type
        parser.add_argument(str(self), **kwargs)


class ReportBuilder(object):
    """
    Collects claims in evaluation order and produces a :class:`Report`.
    """
    __slots__ = ('title', 'command', 'claims', 'data')

    def __init__(self, title, command):
        self.title = title
        self.command = command
        self.claims = []  # type: List[Claim]
        self.data = {}  # type: Dict[str, Any]

    def __len__(self):
        return len(self.claims)

    def _add(self, label, anchor, computed, expected, verdict):
        claim = Claim(
            label=label, anchor=anchor, computed=to_jsonable(computed), expected=to_jsonable(expected),
            verdict=verdict.value,
        )
        self.claims.append(claim)
        return claim

    def check(self, label, anchor, computed, expected, predicate=None):
        # type: (str, str, Any, Any, Optional[Callable[[Any, Any], bool]]) -> Claim
        """
        Add a claim that passes when *computed* equals *expected*, or when
        *predicate* holds for the pair.
        """
        holds = predicate(computed, expected) if predicate else computed == expected
        return self._add(label, anchor, computed, expected, Verdict.Pass if holds else Verdict.Fail)

    def info(self, label, anchor, computed, expected=None):
        # type: (str, str, Any, Any) -> Claim
        return self._add(label, anchor, computed, expected, Verdict.Info)

    def add_data(self, **data):
        self.data.update(data)

    @property
    def passed(self):
        return not any(claim.failed for claim in self.claims)

    def build(self):
        # type: () -> Report
        return Report(
            title=self.title, command=self.command, claims=list(self.claims), data=to_jsonable(self.data) or None
        )
