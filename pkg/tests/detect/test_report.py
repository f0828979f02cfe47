from __future__ import annotations

import json

import pytest

from conftest import make_graph
from plaggraph.detect import (DetectionConfig, Verdict, bench_corpora, compare_corpora, has_overlap, match_documents,
                              render_bench, render_reports, render_text)
from plaggraph.detect.report import PairReport

SIZES = {'sources': 2, 'suspects': 1, 'skipped': 0}


@pytest.fixture
def corpora():
    source_a = make_graph("a.txt", [{"graph", "node", "edg"}, {"topic", "signatur", "concept"}, {"stem", "word"}])
    source_b = make_graph("b.txt", [{"cook", "pasta"}, {"boil", "water", "salt"}])
    suspect = make_graph("sus.txt", [{"graph", "node", "edg"}, {"topic", "signatur", "concept"}, {"rain"}])
    return [source_a, source_b], [suspect]


def test_compare_corpora_graph(corpora):
    sources, suspects = corpora
    reports = compare_corpora(sources, suspects, DetectionConfig())
    assert [(r.source_id, r.suspect_id) for r in reports] == [("a.txt", "sus.txt")]
    assert reports[0].trigram is None
    assert reports[0].graph.suspect_coverage == pytest.approx(2 / 3)
    assert reports[0].verdict is Verdict.PLAGIARIZED


def test_compare_corpora_both(corpora):
    sources, suspects = corpora
    reports = compare_corpora(sources, suspects, DetectionConfig(method='both', report_all=True))
    assert [r.source_id for r in reports] == ["a.txt", "b.txt"]
    assert all(r.graph is not None and r.trigram is not None for r in reports)
    assert reports[0].trigram.score > 0
    assert reports[1].trigram.score == 0.0
    assert reports[1].verdict is Verdict.CLEAN


def test_compare_corpora_trigram_only(corpora):
    sources, suspects = corpora
    reports = compare_corpora(sources, suspects, DetectionConfig(method='trigram'))
    assert [r.source_id for r in reports] == ["a.txt"]
    assert reports[0].graph is None
    assert reports[0].score == reports[0].trigram.score


def test_render_text():
    src = make_graph("src.txt", [{"a", "b"}, {"c", "d"}, {"e"}])
    sus = make_graph("sus.txt", [{"a", "b"}, {"x"}])
    report = PairReport("src.txt", "sus.txt", graph=match_documents(src, sus))
    assert render_text(report) == "src.txt → sus.txt coverage=0.50 matches=1 comparisons=1/6 verdict=PLAGIARIZED"


def test_render_reports_json(corpora):
    sources, suspects = corpora
    config = DetectionConfig(method='both', output='json')
    reports = compare_corpora(sources, suspects, config)
    document = json.loads(render_reports(reports, config, SIZES, deterministic=True))
    assert 'timestamp' not in document['header']
    assert document['header']['config']['theta'] == 0.65
    assert document['header']['corpus_sizes'] == SIZES
    report = document['reports'][0]
    assert report['verdict'] == 'plagiarized'
    assert set(report['graph']) == {'suspect_coverage', 'comparisons_made', 'comparisons_exhaustive', 'verdict',
                                    'pruned_by_importance', 'matches'}
    assert set(report['trigram']) == {'score', 'comparisons', 'degraded'}


def test_render_reports_json_has_timestamp(corpora):
    sources, suspects = corpora
    config = DetectionConfig(output='json')
    document = json.loads(render_reports(compare_corpora(sources, suspects, config), config, SIZES))
    assert 'timestamp' in document['header']


def test_render_reports_is_deterministic(corpora):
    sources, suspects = corpora
    config = DetectionConfig(method='both', output='json', report_all=True)
    first = render_reports(compare_corpora(sources, suspects, config), config, SIZES, deterministic=True)
    second = render_reports(compare_corpora(sources, suspects, config), config, SIZES, deterministic=True)
    assert first == second


def test_bench_disjoint_corpus():
    sources = [make_graph("a", [{"a1"}, {"a2"}])]
    suspects = [make_graph("b", [{"b1"}, {"b2"}, {"b3"}])]
    frame = bench_corpora(sources, suspects, DetectionConfig(), deterministic=True)
    assert list(frame['method']) == ['graph', 'graph']
    assert frame.iloc[-1]['source_id'] == '*'
    assert frame.iloc[0]['comparisons_made'] == 0
    assert frame.iloc[0]['comparisons_exhaustive'] == 6
    assert frame.iloc[0]['reduction'] == 1.0
    assert (frame['seconds'] == 0.0).all()


def test_bench_self_comparison_counts_important_pairs():
    sets = [{f"w{i}a", f"w{i}b"} for i in range(5)]
    graph = make_graph("doc", sets, ratio=0.5)
    frame = bench_corpora([graph], [graph], DetectionConfig(), deterministic=True)
    assert frame.iloc[0]['comparisons_made'] == 3 ** 2


def test_bench_both_methods(corpora):
    sources, suspects = corpora
    frame = bench_corpora(sources, suspects, DetectionConfig(method='both'), include_exhaustive=True)
    pair_rows = frame[frame['source_id'] != '*']
    assert len(pair_rows) == 3 * len(sources) * len(suspects)
    assert set(frame['method']) == {'graph', 'exhaustive', 'trigram'}
    exhaustive = frame[(frame['method'] == 'exhaustive') & (frame['source_id'] == '*')].iloc[0]
    assert exhaustive['comparisons_made'] == exhaustive['comparisons_exhaustive']
    assert exhaustive['reduction'] == 0.0


def test_render_bench(corpora):
    sources, suspects = corpora
    config = DetectionConfig(method='both', output='json')
    frame = bench_corpora(sources, suspects, config, deterministic=True)
    document = json.loads(render_bench(frame, config, SIZES, deterministic=True))
    assert len(document['rows']) == 2 * 2 + 2
    assert set(document['rows'][0]) == {'method', 'source_id', 'suspect_id', 'comparisons_made',
                                        'comparisons_exhaustive', 'reduction', 'seconds'}
    text = render_bench(frame, DetectionConfig(method='both'), SIZES)
    assert 'comparisons_made' in text.splitlines()[0]


def test_has_overlap(corpora):
    sources, suspects = corpora
    reports = compare_corpora(sources, suspects, DetectionConfig(method='both', report_all=True, doc_threshold=0.0))
    assert [has_overlap(r) for r in reports] == [True, False]
    assert all(r.verdict is Verdict.PLAGIARIZED for r in reports)
