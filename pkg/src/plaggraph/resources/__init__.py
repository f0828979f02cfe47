"""
Reads corpora of plain-text documents and provides the bundled stop word list.
"""
from __future__ import annotations

from .corpus import list_corpus, read_corpus, read_document
from .stoplist import load_stoplist

__all__ = [
    'list_corpus',
    'load_stoplist',
    'read_corpus',
    'read_document',
]
