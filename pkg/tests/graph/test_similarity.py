from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import pytest

from conftest import random_concept_sets
from plaggraph.graph import (jaccard, link_matrices, node_importance, select_important_nodes, sequential_weights,
                             signature_weight)
from plaggraph.graph.similarity import keep_count


def test_jaccard_examples():
    assert jaccard(frozenset("abc"), frozenset("bcd")) == 0.5
    assert jaccard(frozenset("ab"), frozenset("ab")) == 1.0
    assert jaccard(frozenset("a"), frozenset("b")) == 0.0
    assert jaccard(frozenset(), frozenset()) == 0.0


def test_jaccard_is_symmetric(rng):
    vocabulary = [f'c{i}' for i in range(15)]
    for _ in range(200):
        a, b = random_concept_sets(rng, 2, vocabulary)
        assert jaccard(a, b) == jaccard(b, a)


def test_sequential_weights():
    sets = [frozenset("ab"), frozenset("bc"), frozenset("cd")]
    assert sequential_weights(sets) == [pytest.approx(1 / 3), pytest.approx(1 / 3)]
    assert sequential_weights([frozenset("a")]) == []
    assert sequential_weights([frozenset("xy")] * 3) == [1.0, 1.0]


def test_signature_weight():
    assert signature_weight(frozenset("ab"), frozenset("abcd")) == 0.5
    assert signature_weight(frozenset("a"), frozenset("a")) == 1.0
    assert signature_weight(frozenset("a"), frozenset("abcdefghij")) == pytest.approx(0.1)
    with pytest.raises(ValueError):
        signature_weight(frozenset(), frozenset())


def test_link_matrices_example():
    out_link, in_link = link_matrices([frozenset("ab"), frozenset("bcd")])
    assert out_link[0, 1] == pytest.approx(1 / 3)
    assert in_link[0, 1] == pytest.approx(1 / 2)
    assert out_link[1, 0] == pytest.approx(1 / 2)
    assert in_link[1, 0] == pytest.approx(1 / 3)
    assert np.all(np.diag(out_link) == 1.0)
    assert np.all(np.diag(in_link) == 1.0)


def test_link_matrices_disjoint():
    out_link, in_link = link_matrices([frozenset("ab"), frozenset("cd"), frozenset("ef")])
    np.testing.assert_array_equal(out_link, np.eye(3))
    np.testing.assert_array_equal(in_link, np.eye(3))


def test_link_matrices_reject_empty_sets():
    with pytest.raises(ValueError):
        link_matrices([frozenset("a"), frozenset()])


def test_equations_match_set_arithmetic_oracle(rng):
    vocabulary = [f'c{i}' for i in range(30)]
    for _ in range(1000):
        a, b = random_concept_sets(rng, 2, vocabulary)
        shared = len(a & b)
        assert jaccard(a, b) == pytest.approx(float(Fraction(shared, len(a | b))), abs=1e-12)
        out_link, in_link = link_matrices([a, b])
        assert out_link[0, 1] == pytest.approx(float(Fraction(shared, len(b))), abs=1e-12)
        assert in_link[0, 1] == pytest.approx(float(Fraction(shared, len(a))), abs=1e-12)
        assert out_link[1, 0] == pytest.approx(float(Fraction(shared, len(a))), abs=1e-12)


def test_link_matrices_cross_identity_and_range(rng):
    vocabulary = [f'c{i}' for i in range(20)]
    for _ in range(100):
        sets = random_concept_sets(rng, rng.randint(1, 12), vocabulary)
        out_link, in_link = link_matrices(sets)
        sizes = np.array([len(s) for s in sets], dtype=float)
        np.testing.assert_allclose(in_link * sizes[:, None], out_link * sizes[None, :], rtol=0, atol=1e-12)
        assert np.all((out_link >= 0) & (out_link <= 1))
        assert np.all((in_link >= 0) & (in_link <= 1))


def test_important_nodes_four_sentence_example():
    sets = [frozenset("ab"), frozenset("ab"), frozenset("ac"), frozenset("xy")]
    out_link, in_link = link_matrices(sets)
    expected = np.array([[1, 1, .5, 0], [1, 1, .5, 0], [.5, .5, 1, 0], [0, 0, 0, 1]])
    np.testing.assert_allclose(out_link, expected)
    np.testing.assert_allclose(in_link, expected)
    np.testing.assert_allclose(node_importance(out_link, in_link), [0.5, 0.5, 1 / 3, 0.0])
    assert select_important_nodes(out_link, in_link, 0.5) == {0, 1}


def test_important_nodes_single_sentence():
    out_link, in_link = link_matrices([frozenset("ab")])
    assert node_importance(out_link, in_link).tolist() == [1.0]
    assert select_important_nodes(out_link, in_link, 0.5) == {0}


def test_important_nodes_tie_break_by_index():
    out_link, in_link = link_matrices([frozenset("ab")] * 4)
    assert select_important_nodes(out_link, in_link, 0.5) == {0, 1}


def test_important_nodes_size(rng):
    vocabulary = [f'c{i}' for i in range(20)]
    for _ in range(200):
        n = rng.randint(1, 20)
        ratio = rng.choice([0.1, 0.25, 0.3, 0.5, 0.7, 1.0])
        out_link, in_link = link_matrices(random_concept_sets(rng, n, vocabulary, max_size=6))
        important = select_important_nodes(out_link, in_link, ratio)
        assert len(important) == math.ceil(Fraction(str(ratio)) * n)
        assert important <= set(range(n))


def test_select_important_nodes_validates_ratio():
    out_link, in_link = link_matrices([frozenset("a")])
    with pytest.raises(ValueError):
        select_important_nodes(out_link, in_link, 0.0)


def test_node_importance_rejects_mismatched_shapes():
    with pytest.raises(ValueError):
        node_importance(np.eye(2), np.eye(3))


@pytest.mark.parametrize("n, ratio, expected", [
    (10, 0.3, 3),
    (4, 0.5, 2),
    (4, 0.5000000001, 3),
    (7, 0.4999999999, 4),
    (3, 1.0, 3),
    (1, 0.01, 1),
])
def test_keep_count(n, ratio, expected):
    assert keep_count(n, ratio) == expected
    assert keep_count(n, ratio) == math.ceil(Fraction(str(ratio)) * n)
