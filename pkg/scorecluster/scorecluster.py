import sys
import typing

import sentry_sdk

from scorecluster.cli import Context, parser, subparsers
from scorecluster.commands.analysis import Analysis
from scorecluster.commands.misc import Misc
from scorecluster.exceptions import ScoreClusterException, UsageException
from scorecluster.lang import lang
from scorecluster.log import log, sentry_enabled

EXIT_SUCCESS = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2

Analysis().register(subparsers)
Misc().register(subparsers)


def main(argv: typing.Optional[typing.Sequence[str]] = None, stdout: typing.Optional[typing.BinaryIO] = None,
         stderr: typing.Optional[typing.TextIO] = None) -> int:
    """
    Command line entry point. Returns the process exit code: 0 on success, 1 on validation errors and
    2 on usage errors. Reports go to stdout, diagnostics to stderr.
    """
    stdout = stdout or sys.stdout.buffer
    stderr = stderr or sys.stderr

    try:
        args = parser.parse_args(argv)
        return args.handler(Context(args=args, stdout=stdout, stderr=stderr)) or EXIT_SUCCESS
    except UsageException as error:
        stderr.write(parser.format_usage())
        stderr.write(lang('Global', 'generic_error', {'message': error}) + '\n')
        return EXIT_USAGE
    except ScoreClusterException as error:
        log.debug(f"{type(error).__name__}: {error}", exc_info=error)
        stderr.write(lang('Global', 'generic_error', {'message': error}) + '\n')
        return EXIT_VALIDATION
    except OSError as error:
        log.debug("I/O failure", exc_info=error)
        stderr.write(lang('Global', 'generic_error', {'message': error}) + '\n')
        return EXIT_VALIDATION
    except Exception as error:
        # Apparently nothing else catches these, so report them here
        if sentry_enabled:
            sentry_sdk.capture_exception(error)
        log.exception("Unhandled error")
        stderr.write(lang('Global', 'unexpected_error') + '\n')
        return EXIT_VALIDATION
