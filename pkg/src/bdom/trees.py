"""Tree recognition, canonical forms, and tree generation.

Exhaustive generation walks rooted level sequences (the classic successor
rule that rewrites the tail of the sequence) and keeps one representative per
free-tree isomorphism class via a center-rooted canonical string.  Random
trees come from uniform Prüfer sequences with a caller-supplied RNG.
"""

from __future__ import annotations

import heapq
import random
from typing import Iterator

from .errors import CapabilityError, InputError
from .graphs import Graph, build_graph, is_connected

EXHAUSTIVE_TREE_CAP = 10


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.edge_count() == g.n - 1


def tree_centers(g: Graph) -> tuple[int, ...]:
    """The one or two middle vertices of a tree, found by peeling leaves."""
    if not is_tree(g):
        raise InputError("tree_centers requires a tree")
    if g.n <= 2:
        return tuple(range(g.n))
    deg = [g.degree(v) for v in range(g.n)]
    layer = [v for v in range(g.n) if deg[v] == 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in g.adjacency[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return tuple(sorted(layer))


def _rooted_canonical(g: Graph, v: int, parent: int) -> str:
    children = sorted(
        _rooted_canonical(g, w, v) for w in g.adjacency[v] if w != parent
    )
    return "(" + "".join(children) + ")"


def canonical_form(g: Graph) -> str:
    """Isomorphism-invariant string for a tree (equal iff trees isomorphic)."""
    centers = tree_centers(g)
    return min(_rooted_canonical(g, c, -1) for c in centers)


def _level_sequences(n: int) -> Iterator[list[int]]:
    """All canonical level sequences of rooted trees on n vertices."""
    if n == 1:
        yield [0]
        return
    seq = list(range(n))  # the path, lexicographically largest sequence
    while True:
        yield seq
        p = max((i for i in range(n) if seq[i] > 1), default=None)
        if p is None:
            return
        q = max(i for i in range(p) if seq[i] == seq[p] - 1)
        for i in range(p, n):
            seq[i] = seq[i - (p - q)]


def _level_sequence_to_graph(seq: list[int]) -> Graph:
    n = len(seq)
    edges = []
    stack = [0]  # vertices on the path from the root, indexed by level
    for i in range(1, n):
        level = seq[i]
        del stack[level:]
        edges.append((stack[-1], i))
        stack.append(i)
    return build_graph(n, edges)


def enumerate_trees(max_n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of trees on 1..max_n vertices.

    Deterministic order: by vertex count, then by first appearance in the
    level-sequence walk.  Capped because the class counts grow fast.
    """
    if max_n < 1:
        raise InputError(f"max_n must be positive, got {max_n}")
    if max_n > EXHAUSTIVE_TREE_CAP:
        raise CapabilityError(
            f"exhaustive tree enumeration capped at {EXHAUSTIVE_TREE_CAP} vertices"
            f" (asked for {max_n}); use random_tree for larger sizes"
        )
    for n in range(1, max_n + 1):
        seen: set[str] = set()
        for seq in _level_sequences(n):
            t = _level_sequence_to_graph(seq)
            key = canonical_form(t)
            if key not in seen:
                seen.add(key)
                yield t


def prufer_to_graph(seq: tuple[int, ...], n: int) -> Graph:
    """Labeled tree on n vertices decoded from a Prüfer sequence."""
    if n < 2:
        raise InputError("Prüfer decoding needs n >= 2")
    if len(seq) != n - 2:
        raise InputError(f"Prüfer sequence for n={n} must have length {n - 2}")
    degree = [1] * n
    for x in seq:
        if not (0 <= x < n):
            raise InputError(f"Prüfer entry {x} out of range")
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return build_graph(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labeled tree on n vertices."""
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    seq = tuple(rng.randrange(n) for _ in range(n - 2))
    return prufer_to_graph(seq, n)
