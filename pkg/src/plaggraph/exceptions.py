"""
Exceptions raised by plaggraph.
"""
from __future__ import annotations


class PlagGraphError(Exception):
    """Base class of all plaggraph errors."""


class DocumentEmptyError(PlagGraphError, ValueError):
    """A document has no sentence left after preprocessing."""

    def __init__(self, doc_id: str, reason: str = 'no sentence survives preprocessing'):
        self.doc_id = doc_id
        self.reason = reason
        super().__init__(f'{doc_id}: {reason}')


class LexiconParseError(PlagGraphError, ValueError):
    """A line of a lexicon file is malformed."""

    def __init__(self, path: str, line_number: int, line: str):
        self.path = path
        self.line_number = line_number
        self.line = line
        super().__init__(f'{path}:{line_number}: expected "variant<TAB>canonical", got {line!r}')


class LexiconCycleError(PlagGraphError, ValueError):
    """A canonical label of a lexicon is itself mapped to a different label."""

    def __init__(self, label: str, target: str):
        self.label = label
        self.target = target
        super().__init__(f'canonical label {label!r} is mapped to {target!r}; canonical labels must map to themselves')


class FingerprintTooShortError(PlagGraphError, ValueError):
    """A document has fewer than three stems, so no trigram can be formed."""

    def __init__(self, doc_id: str, num_stems: int):
        self.doc_id = doc_id
        self.num_stems = num_stems
        super().__init__(f'{doc_id}: {num_stems} stem(s) is too short for a trigram fingerprint')


class InvalidConfigError(PlagGraphError, ValueError):
    """A configuration value is outside its allowed range."""
