"""
Word-trigram fingerprints, the reference approach the graph method is measured against.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Protocol

from nltk.util import ngrams

from ..exceptions import FingerprintTooShortError

logger = logging.getLogger('plaggraph')

TRIGRAM = 3


class StemStream(Protocol):
    """Anything with a document id and the stems of the whole document."""
    doc_id: str
    stems: list[str]


@dataclass(frozen=True)
class TrigramFingerprint:
    """The set of word trigrams of a document.

    Attributes:
        doc_id (str): Document id.
        trigrams (frozenset[tuple[str, str, str]]): Trigrams over the stems, ignoring sentence boundaries.
    """
    doc_id: str
    trigrams: frozenset[tuple[str, str, str]]

    def __len__(self) -> int:
        return len(self.trigrams)


@dataclass(frozen=True)
class TrigramResult:
    """Result of comparing two documents with the trigram baseline.

    Attributes:
        source_id (str): Source document id.
        suspect_id (str): Suspect document id.
        score (float): Containment of the suspect in the source.
        comparisons (int): Trigram comparisons a naive pairwise scan performs.
        degraded (bool): True when a document was too short and distinct stems were compared instead.
    """
    source_id: str
    suspect_id: str
    score: float
    comparisons: int
    degraded: bool = False

    def to_dict(self) -> dict:
        """JSON-ready representation.

        Returns:
            dict: score, comparisons, degraded
        """
        return {'score': self.score,
                'comparisons': self.comparisons,
                'degraded': self.degraded}


def fingerprint(doc: StemStream) -> TrigramFingerprint:
    """Fingerprint a preprocessed document.

    Args:
        doc (StemStream): Document, or anything exposing ``doc_id`` and ``stems``.

    Raises:
        FingerprintTooShortError: The document has fewer than three stems.

    Returns:
        TrigramFingerprint: Fingerprint.
    """
    stems = doc.stems
    if len(stems) < TRIGRAM:
        raise FingerprintTooShortError(doc.doc_id, len(stems))
    return TrigramFingerprint(doc_id=doc.doc_id, trigrams=frozenset(ngrams(stems, TRIGRAM)))


def containment(source: frozenset, suspect: frozenset) -> float:
    """Fraction of the suspect set found in the source set.

    Args:
        source (frozenset): Source set.
        suspect (frozenset): Suspect set.

    Returns:
        float: ``|source & suspect| / |suspect|``, or 0 when the suspect set is empty.
    """
    if not suspect:
        return 0.0
    return len(source & suspect) / len(suspect)


def baseline_similarity(src: TrigramFingerprint, sus: TrigramFingerprint) -> float:
    """Containment of the suspect trigrams in the source trigrams.

    Args:
        src (TrigramFingerprint): Source fingerprint.
        sus (TrigramFingerprint): Suspect fingerprint.

    Returns:
        float: Score in [0, 1].
    """
    return containment(src.trigrams, sus.trigrams)


def token_set_similarity(src: StemStream, sus: StemStream) -> float:
    """Containment of the distinct suspect stems in the distinct source stems.

    Args:
        src (StemStream): Source document.
        sus (StemStream): Suspect document.

    Returns:
        float: Score in [0, 1].
    """
    return containment(frozenset(src.stems), frozenset(sus.stems))


def compare_trigrams(src: StemStream,
                     sus: StemStream,
                     cache: dict[object, TrigramFingerprint | None] | None = None) -> TrigramResult:
    """Compare two documents with the trigram baseline.

    When either document is too short for a trigram the comparison falls back to distinct stems
    and the result is flagged as degraded.

    Args:
        src (StemStream): Source document.
        sus (StemStream): Suspect document.
        cache (dict[object, TrigramFingerprint | None] | None, optional): Fingerprints keyed by document,
            None marking a document that is too short. Filled as a side effect. Defaults to None.

    Returns:
        TrigramResult: Result.
    """
    cache = {} if cache is None else cache
    prints = []
    for doc in (src, sus):
        if doc not in cache:
            try:
                cache[doc] = fingerprint(doc)
            except FingerprintTooShortError as e:
                logger.warning('%s. Falling back to stem overlap.', e)
                cache[doc] = None
        prints.append(cache[doc])
    src_print, sus_print = prints
    if src_print is None or sus_print is None:
        src_stems, sus_stems = frozenset(src.stems), frozenset(sus.stems)
        return TrigramResult(source_id=src.doc_id,
                             suspect_id=sus.doc_id,
                             score=token_set_similarity(src, sus),
                             comparisons=len(src_stems) * len(sus_stems),
                             degraded=True)
    return TrigramResult(source_id=src.doc_id,
                         suspect_id=sus.doc_id,
                         score=baseline_similarity(src_print, sus_print),
                         comparisons=len(src_print) * len(sus_print))
