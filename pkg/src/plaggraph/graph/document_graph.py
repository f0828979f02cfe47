"""
The graph of a document: sentence nodes linked in reading order, all crowned by a topic signature node.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from types import MappingProxyType

import networkx as nx
import numpy as np

from ..concept.lexicon import ConceptLexicon, ConceptSet, extract_concepts
from ..exceptions import DocumentEmptyError
from ..preprocess.document import Document, RawDocument, Sentence, preprocess_document
from .similarity import link_matrices, node_importance, select_important_nodes, sequential_weights, signature_weight
from .term_graph import TermGraph, build_term_graph

logger = logging.getLogger('plaggraph')

TOPIC_SIGNATURE_NODE = 'topic_signature'


@dataclass(frozen=True)
class TopicSignature:
    """All the concepts of a document and where they occur.

    Attributes:
        concepts (ConceptSet): Union of the sentence concept sets.
        inverted_index (Mapping[str, tuple[int, ...]]): Concept to the sorted indices of the sentences containing it.
    """
    concepts: ConceptSet
    inverted_index: Mapping[str, tuple[int, ...]]

    def sentences_with(self, concept: str) -> tuple[int, ...]:
        """Sentences containing a concept.

        Args:
            concept (str): Concept.

        Returns:
            tuple[int, ...]: Sorted sentence indices, empty if the concept is absent.
        """
        return self.inverted_index.get(concept, ())

    def __len__(self) -> int:
        return len(self.concepts)


@dataclass(frozen=True, eq=False)
class SentenceNode:
    """A sentence of the document graph.

    Attributes:
        sentence (Sentence): Sentence.
        term_graph (TermGraph): Graph of its terms.
        concept_set (ConceptSet): Its concepts.
        signature_weight (float): Fraction of the topic signature it covers.
        importance (float): Mean out-link and in-link weight.
    """
    sentence: Sentence
    term_graph: TermGraph
    concept_set: ConceptSet
    signature_weight: float
    importance: float

    @property
    def index(self) -> int:
        """Sentence index.

        Returns:
            int: Index.
        """
        return self.sentence.index


@dataclass(frozen=True, eq=False)
class DocumentGraph:
    """A sealed document graph.

    Attributes:
        doc_id (str): Document id.
        nodes (tuple[SentenceNode, ...]): Sentence nodes in reading order.
        sequential_weights (tuple[float, ...]): Similarity of every sentence with the next one.
        out_link (np.ndarray): Read-only out-link matrix.
        in_link (np.ndarray): Read-only in-link matrix.
        signature (TopicSignature): Topic signature.
        important (frozenset[int]): Indices of the important sentences.
        ratio (float): Fraction of sentences kept as important.
    """
    doc_id: str
    nodes: tuple[SentenceNode, ...]
    sequential_weights: tuple[float, ...]
    out_link: np.ndarray
    in_link: np.ndarray
    signature: TopicSignature
    important: frozenset[int]
    ratio: float

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def stems(self) -> list[str]:
        """All stems of the document in reading order.

        Returns:
            list[str]: Stems.
        """
        return [s for node in self.nodes for s in node.sentence.stems]

    def concept_set(self, index: int) -> ConceptSet:
        """Concepts of a sentence.

        Args:
            index (int): Sentence index.

        Returns:
            ConceptSet: Concepts.
        """
        return self.nodes[index].concept_set

    def to_dict(self, full: bool = False) -> dict:
        """JSON-ready representation.

        Args:
            full (bool, optional): Include the link matrices and the term graphs. Defaults to False.

        Returns:
            dict: The graph.
        """
        nodes = []
        for node in self.nodes:
            entry = {'index': node.index,
                     'concepts': list(node.concept_set),
                     'signature_weight': node.signature_weight,
                     'importance': node.importance}
            if full:
                entry['text'] = node.sentence.raw_text
                entry['term_graph'] = node.term_graph.to_dict()
            nodes.append(entry)
        result = {'doc_id': self.doc_id,
                  'num_sentences': len(self),
                  'nodes': nodes,
                  'sequential_weights': list(self.sequential_weights),
                  'signature': list(self.signature.concepts),
                  'important': sorted(self.important),
                  'ratio': self.ratio}
        if full:
            result['out_link'] = self.out_link.tolist()
            result['in_link'] = self.in_link.tolist()
        return result

    def to_networkx(self) -> nx.DiGraph:
        """The document graph as a networkx graph.

        Sentence nodes are keyed by index and linked in reading order; the ``topic_signature`` node is linked
        to every sentence. Node and edge attributes are scalars so the graph can be written as GraphML.

        Returns:
            nx.DiGraph: Graph.
        """
        graph = nx.DiGraph(doc_id=self.doc_id)
        graph.add_node(TOPIC_SIGNATURE_NODE, kind='signature', concepts=' '.join(self.signature.concepts))
        for node in self.nodes:
            graph.add_node(node.index,
                           kind='sentence',
                           text=node.sentence.raw_text,
                           concepts=' '.join(node.concept_set),
                           importance=float(node.importance),
                           important=node.index in self.important)
            graph.add_edge(TOPIC_SIGNATURE_NODE, node.index, kind='signature', weight=float(node.signature_weight))
        for i, weight in enumerate(self.sequential_weights):
            graph.add_edge(i, i + 1, kind='sequential', weight=float(weight))
        return graph


def build_topic_signature(concept_sets: Sequence[frozenset]) -> TopicSignature:
    """Group the concepts of all sentences into a topic signature.

    Args:
        concept_sets (Sequence[frozenset]): Concept sets in sentence order.

    Returns:
        TopicSignature: Topic signature.
    """
    index: dict[str, list[int]] = {}
    for i, concepts in enumerate(concept_sets):
        for concept in concepts:
            index.setdefault(concept, []).append(i)
    inverted_index = MappingProxyType({concept: tuple(index[concept]) for concept in sorted(index)})
    return TopicSignature(concepts=ConceptSet(index), inverted_index=inverted_index)


def build_document_graph(doc: Document, lexicon: ConceptLexicon, ratio: float = 0.5) -> DocumentGraph:
    """Build the graph of a preprocessed document.

    Args:
        doc (Document): Document.
        lexicon (ConceptLexicon): Concept lexicon.
        ratio (float, optional): Fraction of sentences kept as important. Defaults to 0.5.

    Raises:
        DocumentEmptyError: The document has no sentence.

    Returns:
        DocumentGraph: Sealed graph.
    """
    if len(doc) == 0:
        raise DocumentEmptyError(doc.doc_id)
    concept_sets = [extract_concepts(sentence, lexicon) for sentence in doc.sentences]
    signature = build_topic_signature(concept_sets)
    out_link, in_link = link_matrices(concept_sets)
    out_link.setflags(write=False)
    in_link.setflags(write=False)
    importance = node_importance(out_link, in_link)
    nodes = tuple(SentenceNode(sentence=sentence,
                               term_graph=build_term_graph(sentence),
                               concept_set=concepts,
                               signature_weight=signature_weight(concepts, signature.concepts),
                               importance=float(importance[i]))
                  for i, (sentence, concepts) in enumerate(zip(doc.sentences, concept_sets)))
    graph = DocumentGraph(doc_id=doc.doc_id,
                          nodes=nodes,
                          sequential_weights=tuple(sequential_weights(concept_sets)),
                          out_link=out_link,
                          in_link=in_link,
                          signature=signature,
                          important=select_important_nodes(out_link, in_link, ratio),
                          ratio=ratio)
    logger.debug('%s: %s sentences, %s signature concepts, %s important',
                 doc.doc_id, len(nodes), len(signature), len(graph.important))
    return graph


def build_corpus_graphs(documents: Iterable[RawDocument],
                        stoplist: frozenset[str],
                        lexicon: ConceptLexicon,
                        ratio: float = 0.5,
                        jobs: int = 1) -> tuple[list[DocumentGraph], list[tuple[str, str]]]:
    """Preprocess a corpus and build the graph of every document.

    Documents without any sentence left are skipped with a warning.

    Args:
        documents (Iterable[RawDocument]): Documents.
        stoplist (frozenset[str]): Stop words.
        lexicon (ConceptLexicon): Concept lexicon.
        ratio (float, optional): Fraction of sentences kept as important. Defaults to 0.5.
        jobs (int, optional): Number of worker threads. Defaults to 1.

    Returns:
        tuple[list[DocumentGraph], list[tuple[str, str]]]: Graphs in input order, and (doc_id, message)
            for every skipped document.
    """
    def _build(raw: RawDocument) -> DocumentGraph | DocumentEmptyError:
        try:
            return build_document_graph(preprocess_document(raw, stoplist), lexicon, ratio)
        except DocumentEmptyError as e:
            return e

    documents = list(documents)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(_build, documents))
    else:
        results = [_build(raw) for raw in documents]

    graphs = []
    skipped = []
    for raw, result in zip(documents, results):
        if isinstance(result, DocumentEmptyError):
            logger.warning('Skipping %s: %s', raw.doc_id, result.reason)
            skipped.append((raw.doc_id, result.reason))
        else:
            graphs.append(result)
    return graphs, skipped
