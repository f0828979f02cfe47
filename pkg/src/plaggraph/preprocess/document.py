"""
Documents and their preprocessed sentences.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from ..exceptions import DocumentEmptyError
from .text import remove_stopwords, segment_sentences, stem, tokenize

logger = logging.getLogger('plaggraph')


@dataclass(frozen=True)
class RawDocument:
    """A document as read from disk.

    Attributes:
        doc_id (str): Identifier, unique within a corpus.
        text (str): Full text.
        source_path (str | None): Where the text came from.
    """
    doc_id: str
    text: str
    source_path: str | None = None

    def __post_init__(self):
        if not self.doc_id:
            raise ValueError('doc_id must be non-empty')
        if not self.text.strip():
            raise DocumentEmptyError(self.doc_id, 'text is empty')


@dataclass(frozen=True)
class Sentence:
    """A preprocessed sentence.

    Attributes:
        index (int): Position within the document, starting at 0.
        raw_text (str): The sentence as it appears in the text.
        terms (tuple[str, ...]): Lowercase tokens without stop words.
        stems (tuple[str, ...]): Stems parallel to ``terms``.
    """
    index: int
    raw_text: str
    terms: tuple[str, ...]
    stems: tuple[str, ...]

    def __post_init__(self):
        if len(self.terms) != len(self.stems):
            raise ValueError(f'sentence {self.index}: {len(self.terms)} terms but {len(self.stems)} stems')


@dataclass(frozen=True)
class Document:
    """A preprocessed document.

    Attributes:
        doc_id (str): Identifier.
        text (str): Full text.
        sentences (tuple[Sentence, ...]): Sentences indexed consecutively from 0.
    """
    doc_id: str
    text: str
    sentences: tuple[Sentence, ...]

    @property
    def stems(self) -> list[str]:
        """All stems of the document in reading order, ignoring sentence boundaries.

        Returns:
            list[str]: Stems.
        """
        return [s for sentence in self.sentences for s in sentence.stems]

    def __len__(self) -> int:
        return len(self.sentences)


def preprocess_document(raw: RawDocument, stoplist: frozenset[str] | set[str]) -> Document:
    """Break the document into sentences of stemmed, stop-word free terms.

    Sentences left without terms are dropped and the rest re-indexed.

    Args:
        raw (RawDocument): Document.
        stoplist (frozenset[str] | set[str]): Stop words.

    Raises:
        DocumentEmptyError: No sentence survives.

    Returns:
        Document: The preprocessed document.
    """
    sentences = []
    for raw_sentence in segment_sentences(raw.text):
        terms = remove_stopwords(tokenize(raw_sentence), stoplist)
        if not terms:
            logger.debug('%s: dropping sentence without terms: %r', raw.doc_id, raw_sentence)
            continue
        sentences.append(Sentence(index=len(sentences),
                                  raw_text=raw_sentence,
                                  terms=tuple(terms),
                                  stems=tuple(stem(term) for term in terms)))
    if not sentences:
        raise DocumentEmptyError(raw.doc_id)
    return Document(doc_id=raw.doc_id, text=raw.text, sentences=tuple(sentences))
