"""Weighted digraphs on one sign class of roots, path counts and K-numbers.

Negative graph: v -> v + delta for a label delta when v + delta is a negative
root, weighted by N_{delta,v} (the coefficient in
[x_delta(u), x_v(t)] = x_{v+delta}(N_{delta,v} t u)).
Positive graph: r -> r - delta, weighted by N_{-delta,r}.

Matrices are 36 x 36 with row/column k-1 standing for the root of signed
index +-k.  Path counts P[s, r] count paths s -> r.  The weight matrix of the
negative graph has W[r, s] = weight of the edge s -> r; the positive graph is
the mirror image, W[r, s] = weight of the edge r -> s.  In both cases
K = (I + W)^-1.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .constants import ConstantTable
from .rootsys import FUNDAMENTAL, add_vectors, neg, simple_root

FULL_LABELS = FUNDAMENTAL
REDUCED_LABELS = ("b", "c", "d", "e", "f")


@dataclass(frozen=True)
class Edge:
    source: int  # signed root index
    target: int
    label: str
    weight: int


@dataclass(frozen=True)
class WeightedRootGraph:
    sign: str  # "neg" | "pos"
    labels: tuple[str, ...]
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def position(self, k: int) -> int:
        return abs(k) - 1

    def adjacency(self) -> np.ndarray:
        """A[s, r] = 1 for each edge s -> r."""
        a = np.zeros((len(self.vertices),) * 2, dtype=np.int64)
        for e in self.edges:
            a[self.position(e.source), self.position(e.target)] = 1
        return a

    def weights(self) -> np.ndarray:
        """W[r, s] = weight of s -> r (negative graph) or r -> s (positive graph)."""
        w = np.zeros((len(self.vertices),) * 2, dtype=np.int64)
        for e in self.edges:
            src, dst = self.position(e.source), self.position(e.target)
            if self.sign == "neg":
                w[dst, src] = e.weight
            else:
                w[src, dst] = e.weight
        return w


def build_graph(sign: str, labels, table: ConstantTable) -> WeightedRootGraph:
    if sign not in ("neg", "pos"):
        raise ValueError("sign must be 'neg' or 'pos'")
    labels = tuple(labels)
    unknown = set(labels) - set(FUNDAMENTAL)
    if unknown:
        raise ValueError(f"unknown labels {sorted(unknown)}")
    system = table.system
    ordered = tuple(x for x in FUNDAMENTAL if x in labels)
    verts = tuple(range(-1, -37, -1)) if sign == "neg" else tuple(range(1, 37))
    edges = []
    for k in verts:
        v = system.root(k)
        for lab in ordered:
            delta = simple_root(lab)
            if sign == "neg":
                w = add_vectors(v, delta)
                ok = w in system and system.index(w) < 0
                weight = table.n(delta, v) if ok else None
            else:
                w = add_vectors(v, neg(delta))
                ok = w in system and system.index(w) > 0
                weight = table.n(neg(delta), v) if ok else None
            if ok:
                edges.append(Edge(k, system.index(w), lab, int(weight)))
    return WeightedRootGraph(sign, ordered, verts, tuple(edges))


def _nilpotent_series(m: np.ndarray, sign: int) -> np.ndarray:
    """sum_{k>=1} (sign * m)^k for a nilpotent integer matrix."""
    n = len(m)
    total = np.zeros_like(m)
    power = np.eye(n, dtype=np.int64)
    for _ in range(n):
        power = power @ (sign * m)
        if not power.any():
            return total
        total = total + power
    if power.any():
        raise ValueError("matrix is not nilpotent; the graph has a cycle")
    return total


def path_counts(g: WeightedRootGraph) -> np.ndarray:
    """P[s, r] = number of directed paths of length >= 1 from s to r."""
    return _nilpotent_series(g.adjacency(), 1)


def k_numbers(g: WeightedRootGraph) -> np.ndarray:
    """K = (I + W)^-1 = I - W + W^2 - ..., exact over the integers."""
    w = g.weights()
    return np.eye(len(w), dtype=np.int64) + _nilpotent_series(w, -1)


def unitriangular_inverse(m: np.ndarray) -> np.ndarray:
    """Inverse of a triangular integer matrix with unit diagonal, by substitution.

    Independent of the series used by ``k_numbers``; handy as a cross-check.
    """
    n = len(m)
    if any(m[i, i] != 1 for i in range(n)):
        raise ValueError("matrix does not have a unit diagonal")
    upper = not np.tril(m, -1).any()
    if not upper and np.triu(m, 1).any():
        raise ValueError("matrix is not triangular")
    order = range(n - 1, -1, -1) if upper else range(n)
    inv = np.zeros((n, n), dtype=np.int64)
    for col in range(n):
        x = [0] * n
        for i in order:
            x[i] = (1 if i == col else 0) - sum(int(m[i, j]) * x[j] for j in range(n) if j != i and m[i, j])
        inv[:, col] = x
    return inv


def to_dot(g: WeightedRootGraph) -> str:
    lines = [f'digraph "G_{g.sign}" {{']
    for k in g.vertices:
        lines.append(f'  "{k}";')
    for e in g.edges:
        lines.append(f'  "{e.source}" -> "{e.target}" [label="{e.label} ({e.weight:+d})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def matrix_csv(m: np.ndarray, g: WeightedRootGraph, row_name: str, col_name: str) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([row_name, col_name, "value"])
    for i, ri in enumerate(g.vertices):
        for j, cj in enumerate(g.vertices):
            w.writerow([ri, cj, int(m[i, j])])
    return buf.getvalue()


EMITTERS = ("dot", "adjacency", "weights", "paths", "knumbers")


def export(g: WeightedRootGraph, what: str, fmt: str = "csv") -> str:
    """Deterministic text export of a graph artifact."""
    if what == "dot":
        if fmt != "dot":
            raise ValueError("the dot emitter only supports --format dot")
        return to_dot(g)
    if fmt != "csv":
        raise ValueError(f"{what} only supports --format csv")
    if what == "adjacency":
        return matrix_csv(g.adjacency(), g, "s_index", "r_index")
    if what == "weights":
        return matrix_csv(g.weights(), g, "r_index", "s_index")
    if what == "paths":
        return matrix_csv(path_counts(g), g, "s_index", "r_index")
    if what == "knumbers":
        return matrix_csv(k_numbers(g), g, "r_index", "s_index")
    raise ValueError(f"unknown emitter {what!r}")
