"""
Similarity weights between sentence concept sets.

All weights are ratios of concept-set cardinalities and lie in [0, 1].
"""
from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction

import numpy as np

# Importances closer than this are treated as ties.
_TIE_DECIMALS = 12


def jaccard(a: frozenset, b: frozenset) -> float:
    """Jaccard similarity of two concept sets.

    Args:
        a (frozenset): Concept set.
        b (frozenset): Concept set.

    Returns:
        float: ``|a & b| / |a | b|``, or 0 when both are empty.
    """
    union = len(a | b)
    if union == 0:
        return 0.0
    return len(a & b) / union


def sequential_weights(concept_sets: Sequence[frozenset]) -> list[float]:
    """Similarity of every sentence with the sentence that follows it.

    Args:
        concept_sets (Sequence[frozenset]): Concept sets in sentence order.

    Returns:
        list[float]: ``n - 1`` weights.
    """
    return [jaccard(a, b) for a, b in zip(concept_sets, concept_sets[1:])]


def signature_weight(concept_set: frozenset, signature_concepts: frozenset) -> float:
    """Weight of the edge between the topic signature and a sentence.

    The sentence concepts are a subset of the signature, so this is the fraction of the signature it covers.

    Args:
        concept_set (frozenset): Concepts of the sentence.
        signature_concepts (frozenset): Concepts of the topic signature.

    Raises:
        ValueError: The signature is empty.

    Returns:
        float: ``|concept_set| / |signature_concepts|``.
    """
    if not signature_concepts:
        raise ValueError('the topic signature has no concept')
    return len(concept_set) / len(signature_concepts)


def intersection_counts(concept_sets: Sequence[frozenset]) -> np.ndarray:
    """Number of shared concepts for every ordered pair of sentences.

    Args:
        concept_sets (Sequence[frozenset]): Concept sets in sentence order.

    Returns:
        np.ndarray: ``n x n`` matrix whose diagonal holds the set sizes.
    """
    vocabulary = {concept: j for j, concept in enumerate(sorted(frozenset().union(*concept_sets)))}
    incidence = np.zeros((len(concept_sets), len(vocabulary)), dtype=np.float64)
    for i, concepts in enumerate(concept_sets):
        incidence[i, [vocabulary[c] for c in concepts]] = 1.0
    return incidence @ incidence.T


def link_matrices(concept_sets: Sequence[frozenset]) -> tuple[np.ndarray, np.ndarray]:
    """Out-link and in-link weights between every ordered pair of sentences.

    ``out_link[i, k] = |C_i & C_k| / |C_k|`` and ``in_link[i, k] = |C_i & C_k| / |C_i|``.

    Args:
        concept_sets (Sequence[frozenset]): Non-empty concept sets in sentence order.

    Raises:
        ValueError: A concept set is empty.

    Returns:
        tuple[np.ndarray, np.ndarray]: out_link, in_link
    """
    if any(len(concepts) == 0 for concepts in concept_sets):
        raise ValueError('link weights are undefined for an empty concept set')
    shared = intersection_counts(concept_sets)
    sizes = np.diag(shared).copy()
    out_link = shared / sizes[np.newaxis, :]
    in_link = shared / sizes[:, np.newaxis]
    return out_link, in_link


def node_importance(out_link: np.ndarray, in_link: np.ndarray) -> np.ndarray:
    """Mean of the off-diagonal out-link and in-link weights of every sentence.

    Args:
        out_link (np.ndarray): Out-link matrix.
        in_link (np.ndarray): In-link matrix.

    Raises:
        ValueError: The matrices are not square or differ in shape.

    Returns:
        np.ndarray: Importance of every sentence in [0, 1]. A lone sentence has importance 1.
    """
    if out_link.shape != in_link.shape or out_link.ndim != 2 or out_link.shape[0] != out_link.shape[1]:
        raise ValueError(f'link matrices must be square and equal in shape, got {out_link.shape} and {in_link.shape}')
    n = out_link.shape[0]
    if n == 1:
        return np.ones(1)
    off_diagonal = (out_link.sum(axis=1) - np.diag(out_link)) + (in_link.sum(axis=1) - np.diag(in_link))
    return off_diagonal / (2 * (n - 1))


def keep_count(n: int, ratio: float) -> int:
    """Number of sentences kept as important.

    Args:
        n (int): Number of sentences.
        ratio (float): Fraction in (0, 1].

    Returns:
        int: ``ceil(ratio * n)``.
    """
    # The decimal value of the ratio, so that 0.3 * 10 keeps 3.
    return min(n, math.ceil(Fraction(str(ratio)) * n))


def select_important_nodes(out_link: np.ndarray, in_link: np.ndarray, ratio: float = 0.5) -> frozenset[int]:
    """Indices of the most important sentences.

    Args:
        out_link (np.ndarray): Out-link matrix.
        in_link (np.ndarray): In-link matrix.
        ratio (float, optional): Fraction of sentences to keep. Defaults to 0.5.

    Raises:
        ValueError: ratio is outside (0, 1].

    Returns:
        frozenset[int]: ``ceil(ratio * n)`` indices; among equal importances lower indices win.
    """
    if not 0 < ratio <= 1:
        raise ValueError(f'ratio = {ratio} must be in (0, 1]')
    importance = np.round(node_importance(out_link, in_link), _TIE_DECIMALS)
    ranked = sorted(range(len(importance)), key=lambda i: (-importance[i], i))
    return frozenset(ranked[:keep_count(len(importance), ratio)])
