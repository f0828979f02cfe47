"""
Breaks documents into sentences, splits sentences into terms,
removes stop words and stems the remaining terms.
"""
from __future__ import annotations

from .document import Document, RawDocument, Sentence, preprocess_document
from .text import remove_stopwords, segment_sentences, stem, tokenize

__all__ = [
    'Document',
    'RawDocument',
    'Sentence',
    'preprocess_document',
    'remove_stopwords',
    'segment_sentences',
    'stem',
    'tokenize',
]
