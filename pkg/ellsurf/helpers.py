"""
Helpers
~~~~~~~

Conversion of computed values to JSON compatible data and rendering of
reports.

"""
import datetime
import enum
import json
import numbers
from fractions import Fraction

import numpy as np
import odin
import sympy
from odin.codecs import json_codec

from .resources import Envelope, Error, Report  # noqa

# Type imports
from typing import Any, Iterable, List, Union  # noqa

VERDICT_WIDTH = 4


def to_jsonable(value):
    # type: (Any) -> Any
    """
    Convert exact and numpy values to JSON compatible data.

    Integers stay integers, exact rationals and symbolic values become their
    string form and resources become dicts.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, odin.Resource):
        return to_jsonable(value.to_dict())
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [to_jsonable(v) for v in value]
        return sorted(items, key=str) if isinstance(value, (set, frozenset)) else items
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, (np.floating, float)):
        return float(value)
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    if isinstance(value, sympy.Integer):
        return int(value)
    if isinstance(value, numbers.Integral):
        return int(value)
    return str(value)


def create_envelope(reports, generated_at=None):
    # type: (Iterable[Report], datetime.datetime) -> Envelope
    """
    Wrap reports with the time they were produced.
    """
    return Envelope(
        generated_at=generated_at or datetime.datetime.now(datetime.timezone.utc),
        reports=list(reports),
    )


def dumps(resource):
    # type: (Union[Envelope, Error]) -> str
    return json_codec.dumps(resource, indent=2, sort_keys=True)


def payload_dumps(envelope):
    # type: (Envelope) -> str
    """
    JSON of the deterministic part of an envelope.
    """
    return json_codec.dumps(envelope.payload, indent=2, sort_keys=True)


def _cell(value):
    if isinstance(value, (dict, list)):
        text = json.dumps(value, sort_keys=True)
    else:
        text = '' if value is None else str(value)
    return text if len(text) <= 48 else text[:45] + '...'


def render_report(report):
    # type: (Report) -> List[str]
    rows = [(c.verdict, c.label, _cell(c.computed), _cell(c.expected), c.anchor) for c in report.claims]
    headers = ('', 'claim', 'computed', 'expected', 'anchor')
    widths = [max(len(str(r[i])) for r in rows + [headers]) for i in range(len(headers))]
    widths[0] = VERDICT_WIDTH

    lines = ["== {} ({})".format(report.title, report.command)]
    for row in [headers] + rows:
        lines.append('  '.join(str(cell).ljust(width) for cell, width in zip(row, widths)).rstrip())
    return lines


def render_text(resource):
    # type: (Union[Envelope, Error]) -> str
    """
    Human readable table of every claim.
    """
    if isinstance(resource, Error):
        text = "error {}: {}".format(resource.code, resource.message)
        if resource.meta:
            text += "\n  " + json.dumps(resource.meta, sort_keys=True)
        return text

    lines = []
    for report in resource.reports:
        lines.extend(render_report(report))
        lines.append('')
    passed = sum(1 for r in resource.reports if r.passed)
    lines.append("{}/{} reports passed".format(passed, len(resource.reports)))
    return '\n'.join(lines)
