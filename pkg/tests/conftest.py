"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the package's search machinery: they
enumerate raw subsets or raw strength vectors and apply only the predicate
layer, so solver tests have something genuinely independent to agree with.
"""

import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from bdom.broadcasts import Broadcast, is_minimal_dominating_broadcast, is_minimal_dominating_set
from bdom.graphs import Graph, build_graph, metrics


@pytest.fixture
def fig_graph() -> Graph:
    """Five-vertex path 0-1-2-3 with an extra leaf 4 at vertex 2."""
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)])


@pytest.fixture
def fig_broadcasts(fig_graph):
    """The three named minimal dominating broadcasts on the figure graph."""
    f = Broadcast((1, 0, 1, 0, 0))
    g = Broadcast((3, 0, 0, 0, 0))
    h = Broadcast((1, 0, 0, 1, 1))
    return f, g, h


def all_strength_vectors(g: Graph):
    ecc = metrics(g).ecc
    return itertools.product(*(range(e + 1) for e in ecc))


def brute_minimal_broadcasts(g: Graph, cost_bound=None):
    """Unpruned enumeration: every strength vector, predicate-filtered."""
    out = []
    for vec in all_strength_vectors(g):
        if cost_bound is not None and sum(vec) > cost_bound:
            continue
        b = Broadcast(vec)
        if is_minimal_dominating_broadcast(g, b):
            out.append(b)
    return out


def brute_upper_gamma_b(g: Graph) -> int:
    return max(sum(b.strengths) for b in brute_minimal_broadcasts(g))


def brute_gamma_b(g: Graph) -> int:
    return min(sum(b.strengths) for b in brute_minimal_broadcasts(g))


def brute_minimal_dominating_sets(g: Graph):
    out = []
    for r in range(1, g.n + 1):
        for comb in itertools.combinations(range(g.n), r):
            if is_minimal_dominating_set(g, comb):
                out.append(comb)
    return out
