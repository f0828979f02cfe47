"""
Signature-guided comparison of a source document graph with a suspect document graph.
"""
from __future__ import annotations

import enum
import logging
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product

from ..concept.lexicon import ConceptSet
from ..graph.document_graph import DocumentGraph
from ..graph.similarity import jaccard

logger = logging.getLogger('plaggraph')

DEFAULT_THETA = 0.65
DEFAULT_DOC_THRESHOLD = 0.25


class Verdict(str, enum.Enum):
    """Document-level decision."""
    PLAGIARIZED = 'plagiarized'
    CLEAN = 'clean'


@dataclass(frozen=True)
class CandidatePair:
    """A sentence pair worth scoring.

    Attributes:
        src_index (int): Sentence index in the source.
        sus_index (int): Sentence index in the suspect.
        via_concepts (ConceptSet): Shared concepts that led to the pair.
    """
    src_index: int
    sus_index: int
    via_concepts: ConceptSet


@dataclass(frozen=True)
class SentenceMatch:
    """A sentence pair whose similarity reached the threshold.

    Attributes:
        src_index (int): Sentence index in the source.
        sus_index (int): Sentence index in the suspect.
        score (float): Jaccard similarity of the concept sets.
        src_text (str): Source sentence.
        sus_text (str): Suspect sentence.
        via_concepts (ConceptSet): Shared concepts.
    """
    src_index: int
    sus_index: int
    score: float
    src_text: str
    sus_text: str
    via_concepts: ConceptSet = ConceptSet()

    def to_dict(self, with_concepts: bool = False) -> dict:
        """JSON-ready representation.

        Args:
            with_concepts (bool, optional): Include the shared concepts. Defaults to False.

        Returns:
            dict: The match.
        """
        result = {'src_index': self.src_index,
                  'sus_index': self.sus_index,
                  'score': self.score,
                  'src_text': self.src_text,
                  'sus_text': self.sus_text}
        if with_concepts:
            result['via_concepts'] = list(self.via_concepts)
        return result


@dataclass(frozen=True)
class MatchReport:  # pylint: disable=too-many-instance-attributes
    """Outcome of comparing a source with a suspect.

    Attributes:
        source_id (str): Source document id.
        suspect_id (str): Suspect document id.
        matches (tuple[SentenceMatch, ...]): Matches sorted by (sus_index, src_index).
        suspect_coverage (float): Fraction of suspect sentences with at least one match.
        comparisons_made (int): Sentence pairs scored.
        comparisons_exhaustive (int): Sentence pairs an exhaustive comparison scores.
        verdict (Verdict): Document-level decision.
        pruned_by_importance (bool): True when the signatures matched fully and only important sentences
            were compared.
    """
    source_id: str
    suspect_id: str
    matches: tuple[SentenceMatch, ...]
    suspect_coverage: float
    comparisons_made: int
    comparisons_exhaustive: int
    verdict: Verdict
    pruned_by_importance: bool = False

    @property
    def plagiarized(self) -> bool:
        """Whether the suspect is judged plagiarized.

        Returns:
            bool: True if plagiarized.
        """
        return self.verdict is Verdict.PLAGIARIZED

    def to_dict(self, with_concepts: bool = False) -> dict:
        """JSON-ready representation.

        Args:
            with_concepts (bool, optional): Include the shared concepts of every match. Defaults to False.

        Returns:
            dict: The report.
        """
        return {'source_id': self.source_id,
                'suspect_id': self.suspect_id,
                'suspect_coverage': self.suspect_coverage,
                'comparisons_made': self.comparisons_made,
                'comparisons_exhaustive': self.comparisons_exhaustive,
                'verdict': self.verdict.value,
                'pruned_by_importance': self.pruned_by_importance,
                'matches': [match.to_dict(with_concepts=with_concepts) for match in self.matches]}


def generate_candidates(src: DocumentGraph, sus: DocumentGraph) -> list[CandidatePair]:
    """Pair the sentences that share at least one signature concept.

    Sentences without a shared concept are never paired.

    Args:
        src (DocumentGraph): Source graph.
        sus (DocumentGraph): Suspect graph.

    Returns:
        list[CandidatePair]: Distinct pairs sorted by (sus_index, src_index).
    """
    shared = src.signature.concepts & sus.signature.concepts
    via: dict[tuple[int, int], set[str]] = {}
    for concept in shared:
        for pair in product(src.signature.sentences_with(concept), sus.signature.sentences_with(concept)):
            via.setdefault(pair, set()).add(concept)
    return [CandidatePair(src_index=i, sus_index=k, via_concepts=ConceptSet(via[(i, k)]))
            for i, k in sorted(via, key=lambda pair: (pair[1], pair[0]))]


def full_signature_match(src: DocumentGraph, sus: DocumentGraph) -> bool:
    """Whether both topic signatures hold exactly the same concepts.

    Args:
        src (DocumentGraph): Source graph.
        sus (DocumentGraph): Suspect graph.

    Returns:
        bool: True on a full match.
    """
    return frozenset(src.signature.concepts) == frozenset(sus.signature.concepts)


def important_candidates(src: DocumentGraph, sus: DocumentGraph) -> list[CandidatePair]:
    """Pair every important source sentence with every important suspect sentence.

    Args:
        src (DocumentGraph): Source graph.
        sus (DocumentGraph): Suspect graph.

    Returns:
        list[CandidatePair]: Pairs sorted by (sus_index, src_index). ``via_concepts`` may be empty.
    """
    return [CandidatePair(src_index=i,
                          sus_index=k,
                          via_concepts=ConceptSet(src.concept_set(i) & sus.concept_set(k)))
            for k in sorted(sus.important) for i in sorted(src.important)]


def _score(src: DocumentGraph,
           sus: DocumentGraph,
           pairs: Iterable[tuple[int, int, ConceptSet]],
           theta: float) -> tuple[list[SentenceMatch], int]:
    matches = []
    scored = 0
    for i, k, via_concepts in pairs:
        scored += 1
        score = jaccard(src.concept_set(i), sus.concept_set(k))
        if score >= theta:
            matches.append(SentenceMatch(src_index=i,
                                         sus_index=k,
                                         score=score,
                                         src_text=src.nodes[i].sentence.raw_text,
                                         sus_text=sus.nodes[k].sentence.raw_text,
                                         via_concepts=via_concepts))
    matches.sort(key=lambda m: (m.sus_index, m.src_index))
    return matches, scored


def _report(src: DocumentGraph,
            sus: DocumentGraph,
            matches: list[SentenceMatch],
            scored: int,
            doc_threshold: float,
            pruned_by_importance: bool) -> MatchReport:
    coverage = len({m.sus_index for m in matches}) / len(sus)
    verdict = Verdict.PLAGIARIZED if coverage >= doc_threshold else Verdict.CLEAN
    return MatchReport(source_id=src.doc_id,
                       suspect_id=sus.doc_id,
                       matches=tuple(matches),
                       suspect_coverage=coverage,
                       comparisons_made=scored,
                       comparisons_exhaustive=len(src) * len(sus),
                       verdict=verdict,
                       pruned_by_importance=pruned_by_importance)


def _validate_thresholds(theta: float, doc_threshold: float):
    if not 0 < theta <= 1:
        raise ValueError(f'theta = {theta} must be in (0, 1]')
    if not 0 <= doc_threshold <= 1:
        raise ValueError(f'doc_threshold = {doc_threshold} must be in [0, 1]')


def match_documents(src: DocumentGraph,
                    sus: DocumentGraph,
                    theta: float = DEFAULT_THETA,
                    doc_threshold: float = DEFAULT_DOC_THRESHOLD) -> MatchReport:
    """Compare a suspect with a source, guided by the topic signatures.

    When the signatures match fully, only important sentences are compared.
    Otherwise every pair of sentences sharing a signature concept is compared.

    Args:
        src (DocumentGraph): Source graph.
        sus (DocumentGraph): Suspect graph.
        theta (float, optional): Sentence match threshold in (0, 1]. Defaults to 0.65.
        doc_threshold (float, optional): Coverage from which the suspect is plagiarized. Defaults to 0.25.

    Raises:
        ValueError: A threshold is out of range.

    Returns:
        MatchReport: Report.
    """
    _validate_thresholds(theta, doc_threshold)
    pruned_by_importance = full_signature_match(src, sus)
    if pruned_by_importance:
        candidates = important_candidates(src, sus)
    else:
        candidates = generate_candidates(src, sus)
    matches, scored = _score(src, sus, ((c.src_index, c.sus_index, c.via_concepts) for c in candidates), theta)
    logger.debug('%s -> %s: %s candidate(s), %s match(es)%s', src.doc_id, sus.doc_id, scored, len(matches),
                 ' (important sentences only)' if pruned_by_importance else '')
    return _report(src, sus, matches, scored, doc_threshold, pruned_by_importance)


def exhaustive_match(src: DocumentGraph,
                     sus: DocumentGraph,
                     theta: float = DEFAULT_THETA,
                     doc_threshold: float = DEFAULT_DOC_THRESHOLD) -> MatchReport:
    """Compare every sentence of the suspect with every sentence of the source.

    Args:
        src (DocumentGraph): Source graph.
        sus (DocumentGraph): Suspect graph.
        theta (float, optional): Sentence match threshold in (0, 1]. Defaults to 0.65.
        doc_threshold (float, optional): Coverage from which the suspect is plagiarized. Defaults to 0.25.

    Raises:
        ValueError: A threshold is out of range.

    Returns:
        MatchReport: Report with ``comparisons_made == comparisons_exhaustive``.
    """
    _validate_thresholds(theta, doc_threshold)
    pairs = ((i, k, ConceptSet(src.concept_set(i) & sus.concept_set(k)))
             for k in range(len(sus)) for i in range(len(src)))
    matches, scored = _score(src, sus, pairs, theta)
    return _report(src, sus, matches, scored, doc_threshold, pruned_by_importance=False)


def report_sort_key(report: MatchReport) -> tuple:
    """Descending coverage, then source and suspect id.

    Args:
        report (MatchReport): Report.

    Returns:
        tuple: Sort key.
    """
    return (-report.suspect_coverage, report.source_id, report.suspect_id)


def match_corpus(sources: Sequence[DocumentGraph],
                 suspects: Sequence[DocumentGraph],
                 theta: float = DEFAULT_THETA,
                 doc_threshold: float = DEFAULT_DOC_THRESHOLD,
                 report_all: bool = False,
                 jobs: int = 1) -> list[MatchReport]:
    """Compare every suspect with every source.

    Args:
        sources (Sequence[DocumentGraph]): Source graphs.
        suspects (Sequence[DocumentGraph]): Suspect graphs.
        theta (float, optional): Sentence match threshold. Defaults to 0.65.
        doc_threshold (float, optional): Coverage from which a suspect is plagiarized. Defaults to 0.25.
        report_all (bool, optional): Keep reports without any match. Defaults to False.
        jobs (int, optional): Worker threads. Defaults to 1.

    Returns:
        list[MatchReport]: Reports sorted by descending suspect coverage.
    """
    pairs = [(src, sus) for src in sources for sus in suspects]

    def _match(pair: tuple[DocumentGraph, DocumentGraph]) -> MatchReport:
        return match_documents(pair[0], pair[1], theta=theta, doc_threshold=doc_threshold)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            reports = list(executor.map(_match, pairs))
    else:
        reports = [_match(pair) for pair in pairs]
    if not report_all:
        reports = [report for report in reports if report.suspect_coverage > 0]
    reports.sort(key=report_sort_key)
    logger.info('Compared %s source(s) with %s suspect(s): %s report(s).', len(sources), len(suspects), len(reports))
    return reports
