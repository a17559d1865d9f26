import argparse
import sys
import typing

import attrs

from scorecluster.config import default_format, default_init, default_k_list, default_max_iterations, default_mode, \
    default_seed, parse_k_list
from scorecluster.exceptions import InvalidConfigurationException, UsageException
from scorecluster.lang import lang
from scorecluster.models.clustering import MAX_SEED
from scorecluster.report import FORMATS


class ArgumentParser(argparse.ArgumentParser):
    """
    Raises UsageException instead of exiting, so every usage error flows through the central handler
    """
    def error(self, message):
        raise UsageException(message)


@attrs.define
class Context:
    """
    Everything a command needs besides its arguments: where the report goes and where diagnostics go
    """
    args: argparse.Namespace
    stdout: typing.BinaryIO
    stderr: typing.TextIO

    def send(self, data: bytes) -> None:
        """
        Writes command output to --out when given, otherwise to the output stream
        """
        out = getattr(self.args, 'out', None)
        if out:
            with open(out, 'wb') as fh:
                fh.write(data)
            self.notify(lang('Cli', 'written', {'path': out}))
        else:
            self.stdout.write(data)
            self.stdout.flush()

    def notify(self, message: str) -> None:
        self.stderr.write(message + '\n')

    def open_input(self) -> typing.BinaryIO:
        if self.args.input == '-':
            return sys.stdin.buffer

        return open(self.args.input, 'rb')


def k_list(value: str) -> typing.List[int]:
    try:
        return parse_k_list(value)
    except InvalidConfigurationException:
        raise argparse.ArgumentTypeError(lang('Cli', 'bad_k_list', {'value': value})) from None


def positive_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got '{value}'") from None

    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got '{value}'")

    return number


def seed(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        number = -1

    if not 0 <= number < MAX_SEED:
        raise argparse.ArgumentTypeError(lang('KMeans', 'bad_seed', {'seed': value}))

    return number


def add_input_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('input', help="Score matrix CSV file, or - for stdin")
    parser.add_argument('--no-header', dest='has_header', action='store_false',
                        help="The first row holds scores, not course names")
    parser.add_argument('--no-id', dest='id_column', action='store_false',
                        help="There is no leading student id column; ids are generated")


def add_clustering_arguments(parser: argparse.ArgumentParser, single_k: bool = False) -> None:
    if single_k:
        parser.add_argument('--k', type=positive_int, default=default_k_list[0],
                            help=f"Number of clusters (default: {default_k_list[0]})")
    else:
        parser.add_argument('--k', dest='k_list', type=k_list, default=list(default_k_list),
                            help=f"Comma separated cluster counts (default: {','.join(map(str, default_k_list))})")
    parser.add_argument('--init', choices=['first', 'random'], default=default_init,
                        help=f"Initial centroids: first k rows or a seeded random sample (default: {default_init})")
    parser.add_argument('--seed', type=seed, default=default_seed,
                        help=f"Seed for random initialisation (default: {default_seed})")
    parser.add_argument('--max-iter', dest='max_iterations', type=positive_int, default=default_max_iterations,
                        help=f"Iteration cap (default: {default_max_iterations})")
    parser.add_argument('--mode', choices=['faithful', 'robust'], default=default_mode,
                        help=f"Empty cluster policy (default: {default_mode})")


def add_output_arguments(parser: argparse.ArgumentParser, formats: bool = True) -> None:
    if formats:
        parser.add_argument('--format', choices=FORMATS, default=default_format,
                            help=f"Output format (default: {default_format})")
    parser.add_argument('--out', default=None, help="Write output to this file instead of stdout")


parser = ArgumentParser(
    prog='scorecluster',
    description="Groups students into performance clusters with k-means and reports each cluster's overall "
                "performance and band",
)
subparsers = parser.add_subparsers(dest='command', metavar='command')
subparsers.required = True

