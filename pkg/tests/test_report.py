import json
import xml.etree.ElementTree as ElementTree

import pytest

import scorecluster.assets
from scorecluster import __version__
from scorecluster.exceptions import InvalidInputException, ReportException
from scorecluster.helpers import round_half_up
from scorecluster.models import AnalysisReport, ClusterPerformance, DatasetStats, KMeansConfig, KResult, \
    PerformanceBand
from scorecluster.performance import band_of
from scorecluster.report import build_report, parse_csv, parse_json, parse_report, render_chart, render_table

SVG = '{http://www.w3.org/2000/svg}'


def cluster(index: int, size: int, overall=None) -> ClusterPerformance:
    return ClusterPerformance(cluster_index=index, size=size, overall=overall,
                              band=None if overall is None else band_of(overall))


@pytest.fixture
def three_cluster_report() -> AnalysisReport:
    return AnalysisReport(
        dataset_stats=DatasetStats(n_students=69, n_courses=9, overall=55.95),
        per_k=[KResult(k=3, converged=True, iterations=6, mse=120.5, clusters=[
            cluster(0, 25, 62.22), cluster(1, 15, 45.73), cluster(2, 29, 53.03),
        ])],
    )


@pytest.fixture(scope='module')
def sweep_report(three_band_matrix) -> AnalysisReport:
    configs = [KMeansConfig(k=k, seed=7) for k in (3, 4, 5)]
    return build_report(three_band_matrix, configs, silhouette=True)


@pytest.mark.parametrize('value, expected', [
    (50.0, '50.00'),
    (62.225, '62.23'),
    (62.224999, '62.22'),
    (0.005, '0.01'),
    (45.735, '45.74'),
    (100.0, '100.00'),
    (1.0 / 3.0, '0.33'),
])
def test_round_half_up(value, expected):
    assert round_half_up(value, 2) == expected


def test_text_row_format():
    report = AnalysisReport(
        dataset_stats=DatasetStats(n_students=4, n_courses=2, overall=50.0),
        per_k=[KResult(k=1, converged=True, iterations=1, mse=0.0, clusters=[cluster(0, 4, 50.0)])],
    )
    text = render_table(report, 'text').decode('utf-8')

    assert 'K = 1' in text
    assert 'Cluster #  Cluster size  Overall Performance  Band' in text
    assert '1  4  50.00  Good' in text.splitlines()


def test_text_table_labels_every_band(three_cluster_report):
    lines = render_table(three_cluster_report, 'text').decode('utf-8').splitlines()

    assert '1  25  62.22  Very Good' in lines
    assert '2  15  45.73  Very Fair' in lines
    assert '3  29  53.03  Good' in lines


def test_empty_clusters_render_as_dashes():
    report = AnalysisReport(
        dataset_stats=DatasetStats(n_students=3, n_courses=1, overall=50.0),
        per_k=[KResult(k=2, converged=True, iterations=2, mse=0.0, clusters=[cluster(0, 3, 50.0), cluster(1, 0)])],
    )

    assert '2  0  -  -' in render_table(report, 'text').decode('utf-8').splitlines()


def test_sweep_has_one_table_per_k(sweep_report):
    text = render_table(sweep_report, 'text').decode('utf-8')

    assert [entry.k for entry in sweep_report.per_k] == [3, 4, 5]
    assert text.index('K = 3') < text.index('K = 4') < text.index('K = 5')
    assert all(entry.mean_silhouette is not None for entry in sweep_report.per_k)


def test_rendered_band_matches_band_of(sweep_report):
    for entry in sweep_report.per_k:
        assert sum(c.size for c in entry.clusters) == 79
        for c in entry.clusters:
            if not c.empty:
                assert c.band is band_of(c.overall)

    for line in render_table(sweep_report, 'text').decode('utf-8').splitlines():
        fields = line.split('  ')
        if len(fields) == 4 and fields[0].isdigit() and fields[2] != '-':
            assert band_of(float(fields[2])).label == fields[3]


def test_json_round_trip_is_byte_identical(sweep_report):
    rendered = render_table(sweep_report, 'json')

    assert parse_json(rendered) == sweep_report
    assert render_table(parse_json(rendered), 'json') == rendered
    assert rendered.endswith(b'\n')


def test_csv_export_parses_back_to_an_equal_report(sweep_report):
    exported = render_table(sweep_report, 'csv')

    assert parse_csv(exported) == sweep_report
    assert exported.decode('utf-8').splitlines()[0].startswith('n_students,n_courses,dataset_overall,k')


def test_parse_report_detects_the_format(three_cluster_report):
    assert parse_report(render_table(three_cluster_report, 'json')) == three_cluster_report
    assert parse_report(render_table(three_cluster_report, 'csv')) == three_cluster_report


@pytest.mark.parametrize('data', [b'', b'{"dataset": {}}', b'not,a,report\n1,2,3\n', b'\xff'])
def test_unreadable_exports(data):
    with pytest.raises(ReportException):
        parse_report(data)


def test_unknown_format(three_cluster_report):
    with pytest.raises(ReportException):
        render_table(three_cluster_report, 'xml')


def test_workers_do_not_change_the_report(three_band_matrix):
    configs = [KMeansConfig(k=k, seed=3) for k in (5, 2, 3, 4)]

    sequential = build_report(three_band_matrix, configs, workers=1)
    threaded = build_report(three_band_matrix, configs, workers=3)

    assert sequential == threaded
    assert [entry.k for entry in threaded.per_k] == [2, 3, 4, 5]


def test_dataset_overall_is_the_weighted_cluster_mean(sweep_report):
    for entry in sweep_report.per_k:
        weighted = sum(c.overall * c.size for c in entry.clusters if not c.empty) / 79
        assert weighted == pytest.approx(sweep_report.dataset_stats.overall, abs=1e-9)


def test_chart_has_one_bar_per_cluster(three_cluster_report):
    svg = render_chart(three_cluster_report, 3)
    root = ElementTree.fromstring(svg)
    bars = [rect for rect in root.iter(f'{SVG}rect') if rect.get('class') == 'bar']

    assert root.tag == f'{SVG}svg'
    assert len(bars) == 3
    assert [bar.get('data-cluster') for bar in bars] == ['1', '2', '3']


def test_chart_is_deterministic(three_cluster_report):
    assert render_chart(three_cluster_report, 3) == render_chart(three_cluster_report, 3)


def test_chart_bar_height_is_proportional(three_cluster_report):
    root = ElementTree.fromstring(render_chart(three_cluster_report, 3, width=640, height=400))
    bars = [rect for rect in root.iter(f'{SVG}rect') if rect.get('class') == 'bar']
    left, right, top, bottom = scorecluster.assets.CHART_MARGINS
    plot_height = 400 - top - bottom

    expected = plot_height * 62.22 / 100
    assert float(bars[0].get('height')) == pytest.approx(expected, rel=0.005)
    heights = [float(bar.get('height')) for bar in bars]
    assert heights[0] > heights[2] > heights[1]


def test_chart_skips_empty_clusters():
    report = AnalysisReport(
        dataset_stats=DatasetStats(n_students=3, n_courses=1, overall=50.0),
        per_k=[KResult(k=2, converged=True, iterations=2, mse=0.0, clusters=[cluster(0, 0), cluster(1, 3, 50.0)])],
    )
    root = ElementTree.fromstring(render_chart(report, 2))
    bars = [rect for rect in root.iter(f'{SVG}rect') if rect.get('class') == 'bar']

    assert [bar.get('data-cluster') for bar in bars] == ['2']


def test_chart_uses_band_colours(three_cluster_report):
    root = ElementTree.fromstring(render_chart(three_cluster_report, 3))
    bars = [rect for rect in root.iter(f'{SVG}rect') if rect.get('class') == 'bar']

    assert [bar.get('fill') for bar in bars] == [
        scorecluster.assets.BAND_COLOURS[name] for name in ('VERY_GOOD', 'VERY_FAIR', 'GOOD')
    ]
    assert bars[0].find(f'{SVG}title').text == 'Very Good: 62.22%'


def test_chart_for_missing_k(three_cluster_report):
    with pytest.raises(ReportException):
        render_chart(three_cluster_report, 4)


def test_report_rejects_unsorted_k():
    stats = DatasetStats(n_students=1, n_courses=1, overall=50.0)
    entries = [KResult(k=k, converged=True, iterations=1, mse=0.0, clusters=[cluster(0, 1, 50.0)]) for k in (2, 1)]

    with pytest.raises(InvalidInputException):
        AnalysisReport(dataset_stats=stats, per_k=entries)


def test_cluster_band_must_match_overall():
    with pytest.raises(InvalidInputException):
        ClusterPerformance(cluster_index=0, size=3, overall=62.22, band=PerformanceBand.GOOD)


def test_json_export_carries_the_package_version(three_cluster_report):
    document = json.loads(render_table(three_cluster_report, 'json'))
    assert document['version'] == __version__


@pytest.mark.parametrize('version', ['99.0.0', 2])
def test_json_export_from_another_major_version_is_refused(three_cluster_report, version):
    document = json.loads(render_table(three_cluster_report, 'json'))
    document['version'] = version

    with pytest.raises(ReportException):
        parse_json(json.dumps(document).encode('utf-8'))


def test_json_export_without_version_is_accepted(three_cluster_report):
    document = json.loads(render_table(three_cluster_report, 'json'))
    del document['version']

    assert parse_json(json.dumps(document).encode('utf-8')) == three_cluster_report


@pytest.mark.parametrize('data', [b'[1, 2]', b'n_students,n_courses,dataset_overall,k\n79,9\n'])
def test_malformed_exports_are_report_errors(data):
    with pytest.raises(ReportException):
        parse_report(data)
