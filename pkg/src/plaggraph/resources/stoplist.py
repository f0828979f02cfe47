"""
Stop word lists.
"""
from __future__ import annotations

import logging
from importlib import resources

logger = logging.getLogger('plaggraph')

DEFAULT_STOPLIST = 'stopwords.txt'


def parse_stoplist(lines) -> frozenset[str]:
    """Parse the lines of a stop word file.

    Blank lines and lines starting with ``#`` are ignored.

    Args:
        lines (Iterable[str]): Lines.

    Returns:
        frozenset[str]: Lowercase stop words.
    """
    words = set()
    for line in lines:
        word = line.strip()
        if word and not word.startswith('#'):
            words.add(word.lower())
    return frozenset(words)


def load_stoplist(path: str | None = None) -> frozenset[str]:
    """Load a stop word list.

    Args:
        path (str | None, optional): UTF-8 file with one word per line.
            Defaults to None, which loads the bundled English list.

    Returns:
        frozenset[str]: Stop words.
    """
    if path is None:
        text = resources.files('plaggraph.resources').joinpath(DEFAULT_STOPLIST).read_text(encoding='utf-8')
        stoplist = parse_stoplist(text.splitlines())
        logger.debug('Loaded %s bundled stop words.', len(stoplist))
        return stoplist
    with open(path, encoding='utf-8') as f:
        stoplist = parse_stoplist(f)
    logger.debug('Loaded %s stop words from %s.', len(stoplist), path)
    return stoplist
