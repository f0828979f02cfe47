"""
Compares documents by their sets of word trigrams.
"""
from __future__ import annotations

from .trigram import (TrigramFingerprint, TrigramResult, baseline_similarity, compare_trigrams, containment,
                      fingerprint, token_set_similarity)

__all__ = [
    'TrigramFingerprint',
    'TrigramResult',
    'baseline_similarity',
    'compare_trigrams',
    'containment',
    'fingerprint',
    'token_set_similarity',
]
