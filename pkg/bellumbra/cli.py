"""
Programmatic entry to the ``umbral`` command: ``run(argv)`` returns the exit
status instead of exiting, which is what ``python -m bellumbra`` and the tests
use. Usage errors come back as status 1 here.
"""

import sys

from django.core.management import call_command
from django.core.management.base import CommandError

from . import suites


def list_suites() -> list[dict]:
    return suites.list_suites()


def run(argv=None, stdout=None, stderr=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        call_command('umbral', *argv, stdout=stdout, stderr=stderr)
    except CommandError as exc:
        message = str(exc)
        if not message.startswith('Error'):
            message = f"Error: {message}"
        stderr.write(message + '\n')
        return exc.returncode
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else 1
    return 0
