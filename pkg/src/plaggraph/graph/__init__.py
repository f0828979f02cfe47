"""
Builds the document graph: sentence nodes with their term graphs, sequential and link weights,
the topic signature node and the set of important sentences.
"""
from __future__ import annotations

from .document_graph import (DocumentGraph, SentenceNode, TopicSignature, build_corpus_graphs,
                             build_document_graph, build_topic_signature)
from .similarity import (jaccard, link_matrices, node_importance, select_important_nodes, sequential_weights,
                         signature_weight)
from .term_graph import TermGraph, build_term_graph

__all__ = [
    'DocumentGraph',
    'SentenceNode',
    'TermGraph',
    'TopicSignature',
    'build_corpus_graphs',
    'build_document_graph',
    'build_term_graph',
    'build_topic_signature',
    'jaccard',
    'link_matrices',
    'node_importance',
    'select_important_nodes',
    'sequential_weights',
    'signature_weight',
]
