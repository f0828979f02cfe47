"""
Compares suspect documents with source documents, using the topic signature as a guide to the relevant sentences,
and reports sentence matches, suspect coverage and the number of comparisons made.
"""
from __future__ import annotations

from .config import DetectionConfig, validate_detection_arguments
from .matcher import (CandidatePair, MatchReport, SentenceMatch, Verdict, exhaustive_match, full_signature_match,
                      generate_candidates, important_candidates, match_corpus, match_documents)
from .report import PairReport, bench_corpora, compare_corpora, has_overlap, render_bench, render_reports, render_text

__all__ = [
    'CandidatePair',
    'DetectionConfig',
    'MatchReport',
    'PairReport',
    'SentenceMatch',
    'Verdict',
    'bench_corpora',
    'compare_corpora',
    'exhaustive_match',
    'full_signature_match',
    'generate_candidates',
    'has_overlap',
    'important_candidates',
    'match_corpus',
    'match_documents',
    'render_bench',
    'render_reports',
    'render_text',
    'validate_detection_arguments',
]
