from functools import lru_cache

import numpy as np
import pytest

from e6chev.rootgraph import (
    FULL_LABELS, REDUCED_LABELS, build_graph, export, k_numbers, path_counts, unitriangular_inverse,
)
from e6chev.rootsys import simple_root
from e6chev import tablesio

GRAPHS = [("neg", FULL_LABELS), ("pos", FULL_LABELS), ("neg", REDUCED_LABELS), ("pos", REDUCED_LABELS)]


@pytest.fixture(scope="module")
def graphs(numeric):
    return {(s, lab): build_graph(s, lab, numeric) for s, lab in GRAPHS}


def oracle(system, table, sign, labels):
    """Path counts and signed path sums by recursion over successors."""
    step = 1 if sign == "neg" else -1
    verts = [system.root(k * (-1 if sign == "neg" else 1)) for k in range(1, 37)]

    def succ(v):
        out = []
        for lab in labels:
            d = tuple(step * x for x in simple_root(lab))
            w = tuple(x + y for x, y in zip(v, d))
            if w in system and system.is_positive(w) == (sign == "pos"):
                out.append((w, table.n(d, v)))
        return out

    @lru_cache(None)
    def paths(v, w):  # number of paths v -> w of length >= 0
        return (v == w) + sum(paths(x, w) for x, _ in succ(v))

    @lru_cache(None)
    def signed(v, w):  # sum over paths v -> w of (-1)^len * product of weights
        return (v == w) + sum(-wt * signed(x, w) for x, wt in succ(v))

    n = len(verts)
    P = np.array([[paths(verts[i], verts[j]) - (i == j) for j in range(n)] for i in range(n)])
    S = np.array([[signed(verts[i], verts[j]) for j in range(n)] for i in range(n)])
    return P, S


def test_edge_examples(graphs, system):
    g = graphs["neg", FULL_LABELS]
    edges = {(e.source, e.target): e for e in g.edges}
    assert edges[-3, -1].label == "c"
    assert edges[-3, -2].weight == -1
    assert (-3, -2) not in {(e.source, e.target) for e in graphs["neg", REDUCED_LABELS].edges}


@pytest.mark.parametrize("key", GRAPHS)
def test_against_path_oracle(key, graphs, numeric, system):
    g = graphs[key]
    P, S = oracle(system, numeric, *key)
    assert np.array_equal(path_counts(g), P)
    # K_{r,s} sums over paths s -> r on the negative side and r -> s on the positive side
    K = k_numbers(g)
    assert np.array_equal(K, S.T if key[0] == "neg" else S)


def test_path_examples(graphs):
    P = path_counts(graphs["neg", FULL_LABELS])
    assert P[5, 1] == 2
    assert P[35, 3] == 168
    assert not np.diag(P).any()


def test_k_examples(graphs):
    K = k_numbers(graphs["neg", FULL_LABELS])
    assert K[0, 2] == -1 and K[0, 9] == -1
    assert K[1, 2] == 1 and K[0, 5] == 1
    assert (np.diag(K) == 1).all()


@pytest.mark.parametrize("key", GRAPHS)
def test_structural_invariants(key, graphs):
    g = graphs[key]
    A, W, K, P = g.adjacency(), g.weights(), k_numbers(g), path_counts(g)
    assert {e.weight for e in g.edges} <= {1, -1}
    assert not np.linalg.matrix_power(A, 36).any()
    assert np.array_equal((np.eye(36, dtype=np.int64) + W) @ K, np.eye(36, dtype=np.int64))
    assert np.array_equal(unitriangular_inverse(np.eye(36, dtype=np.int64) + W), K)
    bound = P.T if key[0] == "neg" else P
    assert (np.abs(K - np.eye(36, dtype=np.int64)) <= bound).all()


@pytest.mark.parametrize("sign", ["neg", "pos"])
def test_dropping_a_label_never_adds_paths(sign, graphs):
    assert (path_counts(graphs[sign, REDUCED_LABELS]) <= path_counts(graphs[sign, FULL_LABELS])).all()


@pytest.mark.parametrize("tid", sorted(tablesio.GRAPH_TABLES))
def test_reference_graph_tables(tid, fixtures_dir, symbolic, numeric):
    rep = tablesio.verify_table(tid, fixtures_dir, symbolic, numeric)
    assert rep.ok, rep.mismatches[:5]
    skipped = rep.by_class(tablesio.SKIPPED)
    assert len(skipped) == {"T9": 24, "T11": 4}.get(tid, 0)
    assert all(c.note == "paper-typo:not-unitriangular" for c in skipped)


def test_exports(graphs):
    g = graphs["neg", FULL_LABELS]
    dot = export(g, "dot", "dot")
    assert dot.count(";\n") - dot.count("->") == 36
    assert '"-3" -> "-2" [label="a (-1)"]' in dot
    text = export(g, "paths")
    assert text.startswith("s_index,r_index,value\n") and text.count("\n") == 1 + 36 * 36
    assert export(g, "paths") == text
    assert export(graphs["pos", FULL_LABELS], "knumbers").startswith("r_index,s_index,value\n1,1,1\n")
    with pytest.raises(ValueError):
        export(g, "dot", "csv")
    with pytest.raises(ValueError):
        export(g, "paths", "dot")
    with pytest.raises(ValueError):
        export(g, "nothing")


def test_bad_arguments(numeric):
    with pytest.raises(ValueError):
        build_graph("up", FULL_LABELS, numeric)
    with pytest.raises(ValueError):
        build_graph("neg", ("a", "z"), numeric)


def test_unitriangular_inverse_rejects_bad_shapes():
    with pytest.raises(ValueError):
        unitriangular_inverse(np.array([[2, 0], [0, 1]]))
    with pytest.raises(ValueError):
        unitriangular_inverse(np.array([[1, 1], [1, 1]]))
