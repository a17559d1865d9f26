import argparse
import logging

from scorecluster.cli import Context, add_clustering_arguments, add_input_arguments, add_output_arguments, \
    positive_int
from scorecluster.config import default_silhouette, sweep_workers
from scorecluster.exceptions import InvalidConfigurationException
from scorecluster.ingest import load_csv
from scorecluster.kmeans import run_kmeans
from scorecluster.lang import lang
from scorecluster.models import KMeansConfig, ScoreMatrix
from scorecluster.report import build_report, parse_report, render_chart, render_model, render_table


class Analysis:
    """
    Clustering, evaluation and charting commands
    """
    def __init__(self):
        self._log = logging.getLogger(__name__)

    def register(self, subparsers) -> None:
        analyze = subparsers.add_parser(
            'analyze', help="Cluster students for every k and report each cluster's overall performance"
        )
        add_input_arguments(analyze)
        add_clustering_arguments(analyze)
        analyze.add_argument('--silhouette', action='store_true', default=default_silhouette,
                             help="Also report the mean silhouette width per k")
        analyze.add_argument('--workers', type=positive_int, default=sweep_workers,
                             help=f"Threads used for the k sweep (default: {sweep_workers})")
        add_output_arguments(analyze)
        analyze.set_defaults(handler=self.analyze)

        cluster = subparsers.add_parser('cluster', help="Run k-means once and print centroids and assignments")
        add_input_arguments(cluster)
        add_clustering_arguments(cluster, single_k=True)
        add_output_arguments(cluster)
        cluster.set_defaults(handler=self.cluster)

        plot = subparsers.add_parser('plot', help="Draw an SVG bar chart from an analyze export (csv or json)")
        plot.add_argument('input', help="Report exported by analyze --format json or csv, or - for stdin")
        plot.add_argument('--k', type=positive_int, required=True, help="Which k to chart")
        add_output_arguments(plot, formats=False)
        plot.set_defaults(handler=self.plot)

    def analyze(self, ctx: Context) -> int:
        """
        Clusters the input once per k, evaluates each cluster and renders the report
        """
        args = ctx.args
        matrix = self._load(ctx)
        configs = [self._config(args, k, matrix) for k in args.k_list]

        self._log.info(f"Analysing {matrix.n_students}x{matrix.n_courses} scores for k in {args.k_list}")
        report = build_report(matrix, configs, silhouette=args.silhouette, workers=args.workers)
        ctx.send(render_table(report, args.format))
        return 0

    def cluster(self, ctx: Context) -> int:
        """
        Runs a single clustering and prints the resulting model
        """
        args = ctx.args
        matrix = self._load(ctx)
        model = run_kmeans(matrix, self._config(args, args.k, matrix))
        ctx.send(render_model(matrix, model, args.format))
        return 0

    def plot(self, ctx: Context) -> int:
        """
        Charts overall performance against cluster size for one k of an exported report
        """
        with ctx.open_input() as fh:
            report = parse_report(fh.read())

        ctx.send(render_chart(report, ctx.args.k))
        return 0

    def _load(self, ctx: Context) -> ScoreMatrix:
        with ctx.open_input() as fh:
            return load_csv(fh, has_header=ctx.args.has_header, id_column=ctx.args.id_column)

    def _config(self, args: argparse.Namespace, k: int, matrix: ScoreMatrix) -> KMeansConfig:
        if k > matrix.n_students:
            raise InvalidConfigurationException(lang('KMeans', 'k_exceeds_n', {'k': k, 'n': matrix.n_students}))

        return KMeansConfig(k=k, init=args.init, seed=args.seed, max_iterations=args.max_iterations,
                            empty_cluster_policy=args.mode)
