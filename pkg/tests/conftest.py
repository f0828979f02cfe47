from __future__ import annotations

import random

import pytest

from plaggraph.concept import ConceptLexicon
from plaggraph.graph import build_document_graph
from plaggraph.preprocess import Document, Sentence


def make_document(doc_id, concept_sets):
    """A document whose stems are exactly the given concepts, one sentence per set."""
    sentences = []
    for i, concepts in enumerate(concept_sets):
        stems = tuple(sorted(concepts))
        sentences.append(Sentence(index=i, raw_text=' '.join(stems), terms=stems, stems=stems))
    return Document(doc_id=doc_id, text='. '.join(s.raw_text for s in sentences), sentences=tuple(sentences))


def make_graph(doc_id, concept_sets, ratio=0.5):
    return build_document_graph(make_document(doc_id, concept_sets), ConceptLexicon(), ratio=ratio)


def random_concept_sets(rng, num_sentences, vocabulary, max_size=10):
    return [frozenset(rng.sample(vocabulary, rng.randint(1, min(max_size, len(vocabulary)))))
            for _ in range(num_sentences)]


@pytest.fixture
def graph_factory():
    return make_graph


@pytest.fixture
def document_factory():
    return make_document


@pytest.fixture
def rng():
    return random.Random(20240521)


def planted_corpus(num_docs=20, sentences_per_doc=8, words_per_sentence=4, copy_fraction=0.25):
    """Sources with private vocabularies; suspect j copies a quarter of source j's sentences.

    Every word is unique to its sentence, so no two sentences share a concept unless one is a copy.

    Returns:
        tuple: (sources, suspects, planted) where planted maps suspect id to the set of
            (source id, source sentence index, suspect sentence index) copies.
    """
    def sentence(prefix, i):
        return {f'{prefix}w{i}x{k}' for k in range(words_per_sentence)}

    sources = []
    suspects = []
    planted = {}
    num_copied = int(sentences_per_doc * copy_fraction)
    for j in range(num_docs):
        src_sets = [sentence(f'src{j}', i) for i in range(sentences_per_doc)]
        sus_sets = [sentence(f'sus{j}', i) for i in range(sentences_per_doc)]
        copies = set()
        for c in range(num_copied):
            src_index = 2 * c + 1
            sus_index = 2 * c
            sus_sets[sus_index] = src_sets[src_index]
            copies.add((f'src{j:02d}.txt', src_index, sus_index))
        sources.append((f'src{j:02d}.txt', src_sets))
        suspects.append((f'sus{j:02d}.txt', sus_sets))
        planted[f'sus{j:02d}.txt'] = copies
    return sources, suspects, planted


@pytest.fixture
def planted():
    return planted_corpus()


def _to_text(concept_sets):
    return ' '.join(' '.join(sorted(s)) + '.' for s in concept_sets) + '\n'


@pytest.fixture
def planted_dirs(tmp_path, planted):
    """The planted corpus written as text files."""
    sources, suspects, _ = planted
    src_dir = tmp_path / 'sources'
    sus_dir = tmp_path / 'suspects'
    src_dir.mkdir()
    sus_dir.mkdir()
    for doc_id, sets in sources:
        (src_dir / doc_id).write_text(_to_text(sets), encoding='utf-8')
    for doc_id, sets in suspects:
        (sus_dir / doc_id).write_text(_to_text(sets), encoding='utf-8')
    return src_dir, sus_dir
