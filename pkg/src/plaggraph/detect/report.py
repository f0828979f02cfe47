"""
Corpus comparison with one or both methods, and rendering of the reports.
"""
from __future__ import annotations

import json
import logging
import time
from collections.abc import Sequence
from dataclasses import dataclass
from datetime import datetime, timezone

import pandas as pd

from .. import __version__
from ..baseline.trigram import TrigramFingerprint, TrigramResult, compare_trigrams
from ..graph.document_graph import DocumentGraph
from .config import DetectionConfig
from .matcher import MatchReport, Verdict, exhaustive_match, match_corpus, match_documents

logger = logging.getLogger('plaggraph')

BENCH_COLUMNS = ['method', 'source_id', 'suspect_id', 'comparisons_made', 'comparisons_exhaustive', 'reduction',
                 'seconds']
AGGREGATE_ID = '*'


@dataclass(frozen=True)
class PairReport:
    """Everything known about one (source, suspect) pair.

    Attributes:
        source_id (str): Source document id.
        suspect_id (str): Suspect document id.
        graph (MatchReport | None): Graph method result.
        trigram (TrigramResult | None): Trigram baseline result.
        doc_threshold (float): Threshold applied to the trigram score.
    """
    source_id: str
    suspect_id: str
    graph: MatchReport | None = None
    trigram: TrigramResult | None = None
    doc_threshold: float = 0.25

    @property
    def verdict(self) -> Verdict:
        """Plagiarized when any method that ran says so.

        Returns:
            Verdict: Verdict.
        """
        if self.graph is not None and self.graph.plagiarized:
            return Verdict.PLAGIARIZED
        if self.trigram is not None and self.trigram.score >= self.doc_threshold:
            return Verdict.PLAGIARIZED
        return Verdict.CLEAN

    @property
    def score(self) -> float:
        """Headline score: suspect coverage, or the trigram score without the graph method.

        Returns:
            float: Score.
        """
        if self.graph is not None:
            return self.graph.suspect_coverage
        return self.trigram.score if self.trigram is not None else 0.0

    def to_dict(self, with_concepts: bool = False) -> dict:
        """JSON-ready representation.

        Args:
            with_concepts (bool, optional): Include the shared concepts of every match. Defaults to False.

        Returns:
            dict: The report.
        """
        result = {'source_id': self.source_id,
                  'suspect_id': self.suspect_id,
                  'verdict': self.verdict.value}
        if self.graph is not None:
            graph = self.graph.to_dict(with_concepts=with_concepts)
            del graph['source_id'], graph['suspect_id']
            result['graph'] = graph
        if self.trigram is not None:
            result['trigram'] = self.trigram.to_dict()
        return result


def has_overlap(report: PairReport) -> bool:
    """Whether any method found something shared between the pair.

    Args:
        report (PairReport): Report.

    Returns:
        bool: True when the headline or trigram score is positive.
    """
    return report.score > 0 or (report.trigram is not None and report.trigram.score > 0)


def compare_corpora(sources: Sequence[DocumentGraph],
                    suspects: Sequence[DocumentGraph],
                    config: DetectionConfig) -> list[PairReport]:
    """Compare every suspect with every source using the configured method.

    Args:
        sources (Sequence[DocumentGraph]): Source graphs.
        suspects (Sequence[DocumentGraph]): Suspect graphs.
        config (DetectionConfig): Settings.

    Returns:
        list[PairReport]: Reports sorted by descending score, then source and suspect id.
            Pairs scoring 0 are dropped unless ``config.report_all``.
    """
    graph_reports: dict[tuple[str, str], MatchReport] = {}
    if config.uses_graph:
        for report in match_corpus(sources, suspects, theta=config.theta, doc_threshold=config.doc_threshold,
                                   report_all=True, jobs=config.jobs):
            graph_reports[(report.source_id, report.suspect_id)] = report
    cache: dict[object, TrigramFingerprint | None] = {}
    reports = []
    for src in sources:
        for sus in suspects:
            trigram = compare_trigrams(src, sus, cache) if config.uses_trigram else None
            report = PairReport(source_id=src.doc_id,
                                suspect_id=sus.doc_id,
                                graph=graph_reports.get((src.doc_id, sus.doc_id)),
                                trigram=trigram,
                                doc_threshold=config.doc_threshold)
            if config.report_all or has_overlap(report):
                reports.append(report)
    reports.sort(key=lambda r: (-r.score, r.source_id, r.suspect_id))
    return reports


def render_text(report: PairReport) -> str:
    """One summary line per report.

    Args:
        report (PairReport): Report.

    Returns:
        str: ``SRC → SUS coverage=0.83 matches=12 comparisons=45/210 verdict=PLAGIARIZED``
    """
    parts = [f'{report.source_id} → {report.suspect_id}']
    if report.graph is not None:
        graph = report.graph
        parts += [f'coverage={graph.suspect_coverage:.2f}',
                  f'matches={len(graph.matches)}',
                  f'comparisons={graph.comparisons_made}/{graph.comparisons_exhaustive}']
        if graph.pruned_by_importance:
            parts.append('pruned_by_importance')
    if report.trigram is not None:
        parts.append(f'trigram={report.trigram.score:.2f}')
        if report.graph is None:
            parts.append(f'comparisons={report.trigram.comparisons}')
        if report.trigram.degraded:
            parts.append('degraded')
    parts.append(f'verdict={report.verdict.value.upper()}')
    return ' '.join(parts)


def report_header(config: DetectionConfig, corpus_sizes: dict, deterministic: bool = False) -> dict:
    """Header of a JSON report.

    Args:
        config (DetectionConfig): Settings.
        corpus_sizes (dict): Number of sources, suspects and skipped files.
        deterministic (bool, optional): Omit the timestamp. Defaults to False.

    Returns:
        dict: tool_version, config, corpus_sizes and timestamp.
    """
    header = {'tool_version': __version__,
              'config': config.as_dict(),
              'corpus_sizes': corpus_sizes}
    if not deterministic:
        header['timestamp'] = datetime.now(timezone.utc).isoformat(timespec='seconds')
    return header


def render_reports(reports: Sequence[PairReport],
                   config: DetectionConfig,
                   corpus_sizes: dict,
                   deterministic: bool = False,
                   with_concepts: bool = False) -> str:
    """Render the reports in the configured output format.

    Args:
        reports (Sequence[PairReport]): Reports.
        config (DetectionConfig): Settings.
        corpus_sizes (dict): Number of sources, suspects and skipped files.
        deterministic (bool, optional): Omit the timestamp. Defaults to False.
        with_concepts (bool, optional): Include the shared concepts of every match. Defaults to False.

    Returns:
        str: Rendered reports ending with a newline.
    """
    if config.output == 'json':
        document = {'header': report_header(config, corpus_sizes, deterministic),
                    'reports': [report.to_dict(with_concepts=with_concepts) for report in reports]}
        return json.dumps(document, indent=2) + '\n'
    return ''.join(render_text(report) + '\n' for report in reports)


def _reduction(made: int, exhaustive: int) -> float:
    if exhaustive == 0:
        return 1.0
    return 1.0 - made / exhaustive


def bench_corpora(sources: Sequence[DocumentGraph],
                  suspects: Sequence[DocumentGraph],
                  config: DetectionConfig,
                  deterministic: bool = False,
                  include_exhaustive: bool = False) -> pd.DataFrame:
    """Count the comparisons each method performs.

    Every method that runs gives one row per pair. An exhaustive sentence comparison can be timed alongside the
    graph method as rows of its own.

    Args:
        sources (Sequence[DocumentGraph]): Source graphs.
        suspects (Sequence[DocumentGraph]): Suspect graphs.
        config (DetectionConfig): Settings.
        deterministic (bool, optional): Report 0 seconds so that the output is reproducible. Defaults to False.
        include_exhaustive (bool, optional): Add rows for the exhaustive sentence comparison. Defaults to False.

    Returns:
        pd.DataFrame: One row per pair and method, then one aggregate row per method with ids ``*``.
    """
    graph_methods = [('graph', match_documents)]
    if include_exhaustive:
        graph_methods.append(('exhaustive', exhaustive_match))
    rows = []
    cache: dict[object, TrigramFingerprint | None] = {}
    for src in sources:
        for sus in suspects:
            if config.uses_graph:
                for method, matcher in graph_methods:
                    start = time.perf_counter()
                    report = matcher(src, sus, theta=config.theta, doc_threshold=config.doc_threshold)
                    rows.append({'method': method,
                                 'source_id': src.doc_id,
                                 'suspect_id': sus.doc_id,
                                 'comparisons_made': report.comparisons_made,
                                 'comparisons_exhaustive': report.comparisons_exhaustive,
                                 'seconds': time.perf_counter() - start})
            if config.uses_trigram:
                start = time.perf_counter()
                trigram = compare_trigrams(src, sus, cache)
                rows.append({'method': 'trigram',
                             'source_id': src.doc_id,
                             'suspect_id': sus.doc_id,
                             'comparisons_made': trigram.comparisons,
                             'comparisons_exhaustive': trigram.comparisons,
                             'seconds': time.perf_counter() - start})
    frame = pd.DataFrame(rows, columns=[c for c in BENCH_COLUMNS if c != 'reduction'])
    if frame.empty:
        return pd.DataFrame(columns=BENCH_COLUMNS)
    aggregate = (frame.groupby('method', sort=False)[['comparisons_made', 'comparisons_exhaustive', 'seconds']]
                 .sum().reset_index())
    aggregate['source_id'] = AGGREGATE_ID
    aggregate['suspect_id'] = AGGREGATE_ID
    frame = pd.concat([frame, aggregate], ignore_index=True)
    frame['reduction'] = [_reduction(made, exhaustive)
                          for made, exhaustive in zip(frame['comparisons_made'], frame['comparisons_exhaustive'])]
    if deterministic:
        frame['seconds'] = 0.0
    return frame[BENCH_COLUMNS]


def render_bench(frame: pd.DataFrame,
                 config: DetectionConfig,
                 corpus_sizes: dict,
                 deterministic: bool = False) -> str:
    """Render a benchmark table.

    Args:
        frame (pd.DataFrame): Output of ``bench_corpora``.
        config (DetectionConfig): Settings.
        corpus_sizes (dict): Number of sources, suspects and skipped files.
        deterministic (bool, optional): Omit the timestamp. Defaults to False.

    Returns:
        str: JSON document or a plain-text table, ending with a newline.
    """
    if config.output == 'json':
        rows = json.loads(frame.to_json(orient='records'))
        document = {'header': report_header(config, corpus_sizes, deterministic), 'rows': rows}
        return json.dumps(document, indent=2) + '\n'
    return frame.to_string(index=False) + '\n'
