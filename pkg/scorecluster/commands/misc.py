import logging
import math

from scorecluster.cli import Context, add_output_arguments, positive_int, seed
from scorecluster.config import synthetic_centers, synthetic_k_true, synthetic_m, synthetic_n, synthetic_seed, \
    synthetic_spread
from scorecluster.exceptions import UsageException
from scorecluster.helpers import parse_float_list
from scorecluster.ingest import generate_synthetic
from scorecluster.lang import lang
from scorecluster.performance import band_of
from scorecluster.report import write_csv


class Misc:
    """
    Utility commands
    """
    def __init__(self):
        self._log = logging.getLogger(__name__)

    def register(self, subparsers) -> None:
        band = subparsers.add_parser('band', help="Print the performance band of an overall score")
        band.add_argument('score', help="Overall performance percentage")
        band.set_defaults(handler=self.band)

        gen = subparsers.add_parser('gen', help="Generate a reproducible synthetic score matrix as CSV")
        gen.add_argument('--n', type=positive_int, default=synthetic_n,
                         help=f"Number of students (default: {synthetic_n})")
        gen.add_argument('--m', type=positive_int, default=synthetic_m,
                         help=f"Number of courses (default: {synthetic_m})")
        gen.add_argument('--k-true', dest='k_true', type=positive_int, default=synthetic_k_true,
                         help=f"Number of generated groups (default: {synthetic_k_true})")
        gen.add_argument('--centers', default=','.join(f"{c:g}" for c in synthetic_centers),
                         help="Comma separated group centres, one per group")
        gen.add_argument('--spread', type=float, default=synthetic_spread,
                         help=f"Standard deviation of every score around its centre (default: {synthetic_spread:g})")
        gen.add_argument('--seed', type=seed, default=synthetic_seed,
                         help=f"Generator seed (default: {synthetic_seed})")
        add_output_arguments(gen, formats=False)
        gen.set_defaults(handler=self.gen)

    def band(self, ctx: Context) -> int:
        """
        Looks up the performance index band of a score
        """
        raw = ctx.args.score
        try:
            score = float(raw)
        except ValueError:
            score = math.nan

        if not math.isfinite(score) or score < 0:
            raise UsageException(lang('Cli', 'bad_score', {'value': raw}))

        ctx.send((band_of(score).label + '\n').encode('utf-8'))
        return 0

    def gen(self, ctx: Context) -> int:
        """
        Writes a synthetic score matrix in the ingest CSV dialect
        """
        args = ctx.args
        try:
            centers = parse_float_list(args.centers)
        except ValueError:
            raise UsageException(lang('Cli', 'bad_list', {'value': args.centers})) from None

        matrix = generate_synthetic(args.n, args.m, args.k_true, centers, args.spread, args.seed)
        self._log.info(f"Generated {args.n} students with {args.m} courses in {args.k_true} group(s)")
        ctx.send(write_csv(matrix))
        return 0
