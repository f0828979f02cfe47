"""
Functions to split text into sentences and sentences into stemmed terms.
"""
from __future__ import annotations

from collections.abc import Iterable

from nltk.stem import PorterStemmer
from nltk.tokenize import RegexpTokenizer

MIN_TOKEN_LENGTH = 2

# A sentence is a maximal run without a terminator.
_sentence_tokenizer = RegexpTokenizer(r'[^.?!]+')
# A token is a maximal run of letters and digits. Underscore counts as a separator.
_word_tokenizer = RegexpTokenizer(r'[^\W_]+')
_stemmer = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)


def segment_sentences(text: str) -> list[str]:
    """Split the text into sentences.

    The characters ``.``, ``?`` and ``!`` end a sentence.
    Abbreviations are not recognised, so ``"Dr. Smith"`` yields two sentences.

    Args:
        text (str): Text.

    Returns:
        list[str]: The trimmed sentences in their original order.
            Pieces without any letter or digit are dropped.
    """
    sentences = []
    for piece in _sentence_tokenizer.tokenize(text):
        piece = piece.strip()
        if any(ch.isalnum() for ch in piece):
            sentences.append(piece)
    return sentences


def tokenize(raw_sentence: str) -> list[str]:
    """Split a sentence into lowercase tokens.

    Args:
        raw_sentence (str): Sentence.

    Returns:
        list[str]: Tokens with at least two characters, duplicates kept.
    """
    return [token for token in _word_tokenizer.tokenize(raw_sentence.lower()) if len(token) >= MIN_TOKEN_LENGTH]


def remove_stopwords(tokens: Iterable[str], stoplist: frozenset[str] | set[str]) -> list[str]:
    """Remove the stop words.

    Matching happens on the surface form, before stemming.

    Args:
        tokens (Iterable[str]): Tokens.
        stoplist (frozenset[str] | set[str]): Stop words.

    Returns:
        list[str]: The remaining tokens in order.
    """
    return [token for token in tokens if token not in stoplist]


def stem(token: str) -> str:
    """Stem a token with the Porter algorithm.

    Args:
        token (str): Lowercase token.

    Returns:
        str: Stem.
    """
    return _stemmer.stem(token, to_lowercase=False)
