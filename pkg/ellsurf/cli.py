"""
Command Line
~~~~~~~~~~~~

Entry point of the ``ellsurf`` console script.

"""
import sys

from .commands import commands
from .containers import CommandInterface
from .helpers import dumps, render_text
from .resources import Error

# Imports for typing support
from typing import Optional, Sequence  # noqa


def main(argv=None):
    # type: (Optional[Sequence[str]]) -> int
    """
    Run a command and print its reports.

    Returns 0 when every claim passes, 1 on a failed claim or computation
    error and 2 on a usage error. Argument errors exit through argparse.
    """
    interface = CommandInterface(commands)
    resource, exit_code, options = interface.run(argv)

    if options.json:
        print(dumps(resource))
    elif isinstance(resource, Error):
        print(render_text(resource), file=sys.stderr)
    else:
        print(render_text(resource))
    return exit_code


if __name__ == '__main__':
    sys.exit(main())
