"""
Concept extraction through a synonym lexicon.

A concept is the canonical label of a stem.
Stems without an entry in the lexicon are their own concept.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from ..exceptions import LexiconCycleError, LexiconParseError
from ..preprocess.document import Sentence
from ..preprocess.text import stem

logger = logging.getLogger('plaggraph')


class ConceptSet(frozenset):
    """An immutable set of concept labels that iterates in sorted order."""

    def __iter__(self):
        return iter(sorted(frozenset.__iter__(self)))

    def __repr__(self) -> str:
        return f'ConceptSet({sorted(self)!r})'


@dataclass(frozen=True)
class ConceptLexicon:
    """Maps stems to canonical concept labels.

    Attributes:
        synonym_map (Mapping[str, str]): Variant to canonical label.
            Canonical labels map to themselves.
    """
    synonym_map: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        closed = dict(self.synonym_map)
        for variant, canonical in self.synonym_map.items():
            target = self.synonym_map.get(canonical, canonical)
            if target != canonical:
                raise LexiconCycleError(canonical, target)
            closed.setdefault(canonical, canonical)
            logger.debug('Lexicon entry %s -> %s', variant, canonical)
        object.__setattr__(self, 'synonym_map', MappingProxyType(closed))

    def concept(self, stem_: str) -> str:
        """The concept of a stem.

        Args:
            stem_ (str): Stem.

        Returns:
            str: Canonical label, or the stem itself when unmapped.
        """
        return self.synonym_map.get(stem_, stem_)

    def __len__(self) -> int:
        return len(self.synonym_map)


def parse_lexicon(lines: Iterable[str], path: str = '<lexicon>', stem_entries: bool = False) -> ConceptLexicon:
    """Parse the lines of a lexicon file.

    Every line holds ``variant<TAB>canonical``.
    Blank lines and lines starting with ``#`` are ignored.

    Args:
        lines (Iterable[str]): Lines.
        path (str, optional): Name used in error messages. Defaults to '<lexicon>'.
        stem_entries (bool, optional): If True, lowercase and stem both columns so that the file can be
            written with plain words. Defaults to False.

    Raises:
        LexiconParseError: A line is malformed, or a variant is given two different labels.
        LexiconCycleError: A canonical label maps to a different label.

    Returns:
        ConceptLexicon: Lexicon.
    """
    synonym_map: dict[str, str] = {}
    for line_number, line in enumerate(lines, start=1):
        stripped = line.rstrip('\r\n')
        if not stripped.strip() or stripped.lstrip().startswith('#'):
            continue
        fields = stripped.split('\t')
        if len(fields) != 2 or not fields[0].strip() or not fields[1].strip():
            raise LexiconParseError(path, line_number, stripped)
        variant, canonical = fields[0].strip(), fields[1].strip()
        if stem_entries:
            variant, canonical = stem(variant.lower()), stem(canonical.lower())
        if synonym_map.get(variant, canonical) != canonical:
            raise LexiconParseError(path, line_number, stripped)
        synonym_map[variant] = canonical
    return ConceptLexicon(synonym_map)


def load_lexicon(path: str | None = None, stem_entries: bool = False) -> ConceptLexicon:
    """Load a concept lexicon.

    Args:
        path (str | None, optional): UTF-8 TSV file. Defaults to None, which gives the pass-through lexicon.
        stem_entries (bool, optional): Stem both columns of the file. Defaults to False.

    Raises:
        LexiconParseError: A line is malformed.
        LexiconCycleError: A canonical label maps to a different label.

    Returns:
        ConceptLexicon: Lexicon.
    """
    if path is None:
        return ConceptLexicon()
    with open(path, encoding='utf-8') as f:
        lexicon = parse_lexicon(f, path=str(path), stem_entries=stem_entries)
    logger.info('Loaded %s lexicon entries from %s.', len(lexicon), path)
    return lexicon


def extract_concepts(sentence: Sentence, lexicon: ConceptLexicon) -> ConceptSet:
    """Extract the concept set of a sentence.

    Args:
        sentence (Sentence): Preprocessed sentence.
        lexicon (ConceptLexicon): Lexicon.

    Returns:
        ConceptSet: Distinct concepts of the stems.
    """
    return ConceptSet(lexicon.concept(s) for s in sentence.stems)
