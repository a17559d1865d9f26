import concurrent.futures
import csv
import io
import json
import logging
import typing
from xml.sax.saxutils import escape

import numpy as np

import scorecluster.assets
from scorecluster import __version__
from scorecluster.config import chart_height, chart_width
from scorecluster.exceptions import ReportException
from scorecluster.helpers import full_precision, parse_optional_float, round_half_up
from scorecluster.kmeans import run_kmeans, silhouette_width
from scorecluster.lang import lang
from scorecluster.models import AnalysisReport, ClusterPerformance, DatasetStats, KMeansConfig, KResult, \
    PerformanceBand, ScoreMatrix
from scorecluster.performance import evaluate_clusters, overall_performance

_log = logging.getLogger(__name__)

FORMATS = ('text', 'csv', 'json')

CSV_COLUMNS = [
    'n_students', 'n_courses', 'dataset_overall', 'k', 'converged', 'iterations', 'mse', 'mean_silhouette',
    'cluster', 'size', 'overall', 'overall_display', 'band',
]


def build_report(matrix: ScoreMatrix, configs: typing.Sequence[KMeansConfig], silhouette: bool = False,
                 workers: int = 1) -> AnalysisReport:
    """
    Clusters the matrix once per configuration and evaluates every cluster.

    Runs may execute on a thread pool; results are always merged in k order.
    Args:
        matrix (ScoreMatrix):
        configs (typing.Sequence[KMeansConfig]): One configuration per k
        silhouette (bool): Also compute the mean silhouette width (k >= 2 only)
        workers (int): Threads used for the sweep

    Returns:
        AnalysisReport
    """
    def _analyse(config: KMeansConfig) -> KResult:
        model = run_kmeans(matrix, config)
        clusters = evaluate_clusters(matrix, model)
        mean_silhouette = None
        if silhouette and config.k >= 2 and np.count_nonzero(model.sizes()) >= 2:
            _, mean_silhouette = silhouette_width(matrix, model.assignments, config.k)

        return KResult(k=config.k, converged=model.converged, iterations=model.iterations, mse=model.mse,
                       clusters=clusters, mean_silhouette=mean_silhouette)

    configs = sorted(configs, key=lambda c: c.k)
    if workers > 1 and len(configs) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_analyse, configs))
    else:
        results = [_analyse(config) for config in configs]

    stats = DatasetStats(n_students=matrix.n_students, n_courses=matrix.n_courses,
                         overall=overall_performance(matrix))
    return AnalysisReport(dataset_stats=stats, per_k=results)


def render_table(report: AnalysisReport, fmt: str = 'text') -> bytes:
    """
    Renders a report as a text table per k, a flat CSV export, or a JSON document
    Returns:
        bytes: UTF-8 encoded output
    """
    if fmt == 'text':
        return _render_text(report).encode('utf-8')
    if fmt == 'csv':
        return _render_csv(report).encode('utf-8')
    if fmt == 'json':
        return (json.dumps(_report_to_dict(report), indent=2) + '\n').encode('utf-8')

    raise ReportException(f"Unknown report format: {fmt!r}")


def _display_overall(cluster: ClusterPerformance) -> str:
    if cluster.overall is None:
        return lang('Report', 'absent', default='-')

    return round_half_up(cluster.overall, 2)


def _display_band(cluster: ClusterPerformance) -> str:
    if cluster.band is None:
        return lang('Report', 'absent', default='-')

    return cluster.band.label


def _render_text(report: AnalysisReport) -> str:
    stats = report.dataset_stats
    lines = [
        lang('Report', 'dataset', {
            'n_students': stats.n_students,
            'n_courses': stats.n_courses,
            'overall': round_half_up(stats.overall, 2) if stats.overall is not None else '-',
        }),
    ]

    header = [
        lang('Report', 'col_cluster', default='Cluster #'),
        lang('Report', 'col_size', default='Cluster size'),
        lang('Report', 'col_overall', default='Overall Performance'),
        lang('Report', 'col_band', default='Band'),
    ]
    for entry in report.per_k:
        lines.append('')
        lines.append(lang('Report', 'table_title', {'k': entry.k}, default='K = {k}'))
        lines.append('  '.join(header))
        lines.append('  '.join('-' * len(h) for h in header))
        for cluster in entry.clusters:
            lines.append('  '.join([
                str(cluster.cluster_index + 1),
                str(cluster.size),
                _display_overall(cluster),
                _display_band(cluster),
            ]))

        lines.append(lang('Report', 'summary', {
            'iterations': entry.iterations,
            'converged': 'true' if entry.converged else 'false',
            'mse': round_half_up(entry.mse, 4),
        }))
        if entry.mean_silhouette is not None:
            lines.append(lang('Report', 'silhouette', {'silhouette': round_half_up(entry.mean_silhouette, 4)}))

    return '\n'.join(lines) + '\n'


def _render_csv(report: AnalysisReport) -> str:
    stats = report.dataset_stats
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for entry in report.per_k:
        for cluster in entry.clusters:
            writer.writerow([
                stats.n_students,
                stats.n_courses,
                full_precision(stats.overall),
                entry.k,
                'true' if entry.converged else 'false',
                entry.iterations,
                full_precision(entry.mse),
                full_precision(entry.mean_silhouette),
                cluster.cluster_index + 1,
                cluster.size,
                full_precision(cluster.overall),
                '' if cluster.overall is None else round_half_up(cluster.overall, 2),
                '' if cluster.band is None else cluster.band.label,
            ])

    return buffer.getvalue()


def _report_to_dict(report: AnalysisReport) -> dict:
    stats = report.dataset_stats
    return {
        'version': __version__,
        'dataset': {
            'n_students': stats.n_students,
            'n_courses': stats.n_courses,
            'overall': stats.overall,
        },
        'results': [
            {
                'k': entry.k,
                'converged': entry.converged,
                'iterations': entry.iterations,
                'mse': entry.mse,
                'mean_silhouette': entry.mean_silhouette,
                'clusters': [
                    {
                        'cluster': cluster.cluster_index + 1,
                        'size': cluster.size,
                        'overall': cluster.overall,
                        'overall_display': None if cluster.overall is None else round_half_up(cluster.overall, 2),
                        'band': None if cluster.band is None else cluster.band.label,
                    }
                    for cluster in entry.clusters
                ],
            }
            for entry in report.per_k
        ],
    }


def _band(label: typing.Optional[str]) -> typing.Optional[PerformanceBand]:
    if not label:
        return None

    return PerformanceBand.from_label(label)


def parse_json(data: bytes) -> AnalysisReport:
    """
    Reads a JSON export back into an AnalysisReport.

    The export schema follows the package version; documents from another major version are refused.
    """
    try:
        document = json.loads(data.decode('utf-8'))
        version = document.get('version')
        if version is not None and str(version).split('.')[0] != __version__.split('.')[0]:
            raise ReportException(lang('Report', 'bad_version', {'version': version, 'expected': __version__}))
        stats = document['dataset']
        per_k = []
        for entry in document['results']:
            clusters = [
                ClusterPerformance(
                    cluster_index=int(cluster['cluster']) - 1,
                    size=int(cluster['size']),
                    overall=cluster['overall'],
                    band=_band(cluster['band']),
                )
                for cluster in entry['clusters']
            ]
            per_k.append(KResult(
                k=int(entry['k']),
                converged=bool(entry['converged']),
                iterations=int(entry['iterations']),
                mse=float(entry['mse']),
                clusters=clusters,
                mean_silhouette=entry.get('mean_silhouette'),
            ))

        return AnalysisReport(
            dataset_stats=DatasetStats(n_students=int(stats['n_students']), n_courses=int(stats['n_courses']),
                                       overall=stats.get('overall')),
            per_k=per_k,
        )
    except (UnicodeDecodeError, ValueError, KeyError, TypeError, AttributeError) as e:
        raise ReportException(lang('Report', 'bad_export', {'reason': e})) from e


def parse_csv(data: bytes) -> AnalysisReport:
    """
    Reads a CSV export back into an AnalysisReport
    """
    try:
        reader = csv.DictReader(io.StringIO(data.decode('utf-8'), newline=''))
        stats = None
        grouped = {}  # type: typing.Dict[int, dict]
        for row in reader:
            if stats is None:
                stats = DatasetStats(n_students=int(row['n_students']), n_courses=int(row['n_courses']),
                                     overall=parse_optional_float(row['dataset_overall']))

            k = int(row['k'])
            entry = grouped.setdefault(k, {
                'k': k,
                'converged': row['converged'] == 'true',
                'iterations': int(row['iterations']),
                'mse': float(row['mse']),
                'mean_silhouette': parse_optional_float(row['mean_silhouette']),
                'clusters': [],
            })
            entry['clusters'].append(ClusterPerformance(
                cluster_index=int(row['cluster']) - 1,
                size=int(row['size']),
                overall=parse_optional_float(row['overall']),
                band=_band(row['band']),
            ))

        if stats is None:
            raise ValueError("no rows")

        return AnalysisReport(dataset_stats=stats, per_k=[KResult(**entry) for entry in grouped.values()])
    except (UnicodeDecodeError, ValueError, KeyError, TypeError, AttributeError) as e:
        raise ReportException(lang('Report', 'bad_export', {'reason': e})) from e


def parse_report(data: bytes) -> AnalysisReport:
    """
    Reads either export format, telling them apart by the first non-blank character
    """
    if data.lstrip().startswith(b'{'):
        return parse_json(data)

    return parse_csv(data)


def render_chart(report: AnalysisReport, k: int, width: int = chart_width, height: int = chart_height) -> bytes:
    """
    Bar chart of overall performance (0-100 axis) per cluster, labelled with the cluster sizes.

    One bar per non-empty cluster in cluster index order. Output contains no timestamps, so identical
    reports always produce identical bytes.
    Returns:
        bytes: A standalone SVG 1.1 document
    """
    entry = report.for_k(k)
    if entry is None:
        raise ReportException(lang('Report', 'k_missing', {'k': k}))

    left, right, top, bottom = scorecluster.assets.CHART_MARGINS
    plot_width = width - left - right
    plot_height = height - top - bottom
    baseline = top + plot_height
    font = escape(scorecluster.assets.FONT_FAMILY, {'"': '&quot;'})

    clusters = [c for c in entry.clusters if not c.empty]
    slot = plot_width / max(len(clusters), 1)
    bar_width = slot * (1 - scorecluster.assets.BAR_GAP_RATIO)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="{font}">',
        f'<title>{escape(lang("Report", "chart_title", {"k": k}))}</title>',
        f'<rect class="background" x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        f'<text x="{width / 2:.2f}" y="{top / 2:.2f}" text-anchor="middle" font-size="16">'
        f'{escape(lang("Report", "chart_title", {"k": k}))}</text>',
    ]

    # Horizontal grid and y tick labels every 20 points
    for tick in range(0, 101, 20):
        y = baseline - plot_height * tick / 100
        parts.append(f'<line x1="{left}" y1="{y:.2f}" x2="{left + plot_width}" y2="{y:.2f}" '
                     f'stroke="{scorecluster.assets.GRID_COLOUR}" stroke-width="1"/>')
        parts.append(f'<text x="{left - 8}" y="{y + 4:.2f}" text-anchor="end" font-size="12">{tick}</text>')

    for position, cluster in enumerate(clusters):
        bar_height = plot_height * cluster.overall / 100
        x = left + slot * position + (slot - bar_width) / 2
        y = baseline - bar_height
        colour = scorecluster.assets.BAND_COLOURS[cluster.band.name]
        display = round_half_up(cluster.overall, 2)
        parts.append(
            f'<rect class="bar" data-cluster="{cluster.cluster_index + 1}" x="{x:.2f}" y="{y:.2f}" '
            f'width="{bar_width:.2f}" height="{bar_height:.2f}" fill="{colour}">'
            f'<title>{escape(cluster.band.label)}: {display}%</title></rect>'
        )
        parts.append(f'<text x="{x + bar_width / 2:.2f}" y="{y - 6:.2f}" text-anchor="middle" '
                     f'font-size="12">{display}</text>')
        parts.append(f'<text x="{x + bar_width / 2:.2f}" y="{baseline + 18:.2f}" text-anchor="middle" '
                     f'font-size="12">{cluster.size}</text>')

    parts.extend([
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{baseline}" '
        f'stroke="{scorecluster.assets.AXIS_COLOUR}" stroke-width="1"/>',
        f'<line x1="{left}" y1="{baseline}" x2="{left + plot_width}" y2="{baseline}" '
        f'stroke="{scorecluster.assets.AXIS_COLOUR}" stroke-width="1"/>',
        f'<text x="{left + plot_width / 2:.2f}" y="{height - 16}" text-anchor="middle" font-size="13">'
        f'{escape(lang("Report", "chart_x_label"))}</text>',
        f'<text x="16" y="{top + plot_height / 2:.2f}" text-anchor="middle" font-size="13" '
        f'transform="rotate(-90 16 {top + plot_height / 2:.2f})">{escape(lang("Report", "chart_y_label"))}</text>',
        '</svg>',
    ])

    _log.debug(f"Rendered chart for k={k} with {len(clusters)} bar(s)")
    return ('\n'.join(parts) + '\n').encode('utf-8')


def write_csv(matrix: ScoreMatrix) -> bytes:
    """
    Writes a score matrix in the ingest dialect: a header row of course names and a leading id column.
    Scores are written at full precision, so load_csv with its default options reads back the same matrix.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['id', *matrix.course_names])

    for student_id, row in zip(matrix.student_ids, matrix.rows):
        writer.writerow([student_id, *(repr(float(score)) for score in row)])

    return buffer.getvalue().encode('utf-8')


def render_model(matrix: ScoreMatrix, model, fmt: str = 'text') -> bytes:
    """
    Renders a single clustering: centroids, per-student assignments (1-based cluster numbers) and the
    SSE trace
    Args:
        matrix (ScoreMatrix): The clustered data, supplying student ids
        model (ClusterModel):
        fmt (str): text, csv or json

    Returns:
        bytes
    """
    if fmt == 'json':
        document = {
            'version': __version__,
            'k': model.k,
            'iterations': model.iterations,
            'converged': model.converged,
            'sse': model.sse,
            'mse': model.mse,
            'trace': list(model.trace),
            'centroids': model.centroids.tolist(),
            'assignments': {sid: int(a) + 1 for sid, a in zip(matrix.student_ids, model.assignments)},
        }
        return (json.dumps(document, indent=2) + '\n').encode('utf-8')

    if fmt == 'csv':
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(['id', 'cluster'])
        for student_id, assignment in zip(matrix.student_ids, model.assignments):
            writer.writerow([student_id, int(assignment) + 1])
        return buffer.getvalue().encode('utf-8')

    if fmt != 'text':
        raise ReportException(f"Unknown report format: {fmt!r}")

    lines = [
        f"k={model.k}  iterations={model.iterations}  converged={'true' if model.converged else 'false'}  "
        f"sse={round_half_up(model.sse, 4)}  mse={round_half_up(model.mse, 4)}",
        '',
    ]
    for index, centroid in enumerate(model.centroids, start=1):
        lines.append(f"{index}  " + '  '.join(round_half_up(value, 2) for value in centroid))
    lines.append('')
    for student_id, assignment in zip(matrix.student_ids, model.assignments):
        lines.append(f"{student_id}  {int(assignment) + 1}")

    return ('\n'.join(lines) + '\n').encode('utf-8')
