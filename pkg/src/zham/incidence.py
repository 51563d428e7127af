"""Incidence-matrix builders and column-shape validators.

Sign convention for digraphs: +1 marks the arc tail, -1 the head.  Columns
are always in ascending (lexicographic) arc/edge order and rows follow vertex
order, so matrices are reproducible byte for byte.  Entries are int8 in
{-1, 0, +1}.
"""

from __future__ import annotations

import numpy as np

from .core import BipartiteGraph, Digraph, Graph


def incidence_matrix(d: Digraph) -> np.ndarray:
    """n x |A| matrix; the column for arc (u, v) has +1 at row u, -1 at row v."""
    arcs = sorted(d.arcs)
    c = np.zeros((d.n, len(arcs)), dtype=np.int8)
    for col, (u, v) in enumerate(arcs):
        c[u - 1, col] = 1
        c[v - 1, col] = -1
    return c


def graph_incidence(g: Graph) -> np.ndarray:
    """n x |E| matrix; the column for edge {u, v} has +1 at rows u and v."""
    edges = sorted(g.edges)
    c = np.zeros((g.n, len(edges)), dtype=np.int8)
    for col, (u, v) in enumerate(edges):
        c[u - 1, col] = 1
        c[v - 1, col] = 1
    return c


def bipartite_incidence(g: BipartiteGraph) -> np.ndarray:
    """2n x |E| matrix; rows 1..n are the x part, rows n+1..2n the y part.

    The column for edge (x_i, y_j) has +1 at row i and +1 at row n+j.
    """
    edges = sorted(g.edges)
    c = np.zeros((2 * g.n, len(edges)), dtype=np.int8)
    for col, (i, j) in enumerate(edges):
        c[i - 1, col] = 1
        c[g.n + j - 1, col] = 1
    return c


def _entries_ok(c: np.ndarray) -> bool:
    return bool(np.isin(c, (-1, 0, 1)).all())


def is_digraph_incidence(c: np.ndarray) -> bool:
    """Each column holds exactly one +1 and one -1 (and nothing else)."""
    c = np.asarray(c)
    if c.ndim != 2 or not _entries_ok(c):
        return False
    if c.shape[1] == 0:
        return True
    plus = (c == 1).sum(axis=0)
    minus = (c == -1).sum(axis=0)
    return bool((plus == 1).all() and (minus == 1).all())


def is_graph_incidence(c: np.ndarray) -> bool:
    """Each column holds exactly two +1 entries and no -1."""
    c = np.asarray(c)
    if c.ndim != 2 or not _entries_ok(c):
        return False
    if c.shape[1] == 0:
        return True
    return bool(((c == 1).sum(axis=0) == 2).all() and not (c == -1).any())


def is_split_incidence(f: np.ndarray) -> bool:
    """Stacked-form check: 2n rows, one +1 in the top half and one +1 in the
    bottom half per column (the shape the vertex-split transform produces)."""
    f = np.asarray(f)
    if f.ndim != 2 or f.shape[0] % 2 != 0 or not _entries_ok(f):
        return False
    if (f == -1).any():
        return False
    n = f.shape[0] // 2
    if f.shape[1] == 0:
        return True
    top = (f[:n] == 1).sum(axis=0)
    bottom = (f[n:] == 1).sum(axis=0)
    return bool((top == 1).all() and (bottom == 1).all())
