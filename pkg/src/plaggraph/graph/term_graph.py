"""
The graph of the terms of one sentence.
"""
from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from ..preprocess.document import Sentence


@dataclass(frozen=True, eq=False)
class TermGraph:
    """Directed graph with one vertex per distinct term.

    An edge ``(u, v)`` means that ``v`` immediately follows ``u`` somewhere in the sentence.

    Attributes:
        graph (nx.DiGraph): Frozen graph.
    """
    graph: nx.DiGraph

    @property
    def vertices(self) -> frozenset[str]:
        """Distinct terms.

        Returns:
            frozenset[str]: Vertices.
        """
        return frozenset(self.graph.nodes)

    @property
    def edges(self) -> frozenset[tuple[str, str]]:
        """Term adjacencies.

        Returns:
            frozenset[tuple[str, str]]: Edges.
        """
        return frozenset(self.graph.edges)

    def to_dict(self) -> dict:
        """JSON-ready representation with vertices in first-occurrence order and sorted edges.

        Returns:
            dict: vertices, edges
        """
        return {'vertices': list(self.graph.nodes),
                'edges': [list(edge) for edge in sorted(self.graph.edges)]}


def build_term_graph(sentence: Sentence) -> TermGraph:
    """Build the term graph of a sentence.

    Args:
        sentence (Sentence): Sentence.

    Returns:
        TermGraph: Term graph.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(sentence.terms)
    graph.add_edges_from(zip(sentence.terms, sentence.terms[1:]))
    return TermGraph(nx.freeze(graph))
