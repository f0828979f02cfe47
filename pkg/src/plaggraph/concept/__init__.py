"""
Maps the stems of every sentence to a set of concepts.
"""
from __future__ import annotations

from .lexicon import ConceptLexicon, ConceptSet, extract_concepts, load_lexicon, parse_lexicon

__all__ = [
    'ConceptLexicon',
    'ConceptSet',
    'extract_concepts',
    'load_lexicon',
    'parse_lexicon',
]
