"""Diametrical-tree classification via limb decomposition of longest paths.

A tree whose maximum minimal-broadcast cost equals its diameter must be a
lobster: along a longest path, the only protrusions that can survive are a
pendant two-edge path (kind A), a pair of leaves (kind B), or a single leaf
(kind C).  Legality further requires strictly fewer limbs than half the
diameter and minimum spine gaps between neighboring limbs and the spine ends:

    A-A >= 4   A-B >= 3   A-C >= 3
    B-B >= 3   B-C >= 2   C-C >= 2
    end-A >= 2 end-B >= 2 end-C >= 1

The classifier accepts a tree when ANY longest path admits a legal
decomposition; the exhaustive oracle-agreement suite backs this reading.
A breadth-first parity labeling gives an independent non-diametricality
certificate: if the odd-depth class, broadcast at strength 1, is a minimal
dominating broadcast larger than the diameter, the graph cannot be
diametrical.  The labeling is only trusted after the minimality check
passes, so the certificate is sound but deliberately incomplete.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import broadcasts
from .errors import InputError
from .graphs import Graph, LobsterSpec, build_graph, gen_lobster, metrics
from .solvers import DEFAULT_BUDGET, SolverBudget, solve_upper_gamma_b
from .trees import canonical_form, is_tree

PAIR_MIN_GAP = {
    ("A", "A"): 4,
    ("A", "B"): 3,
    ("A", "C"): 3,
    ("B", "B"): 3,
    ("B", "C"): 2,
    ("C", "C"): 2,
}
END_MIN_GAP = {"A": 2, "B": 2, "C": 1}

NOT_TREE = "NotTree"
SINGLE_VERTEX = "SingleVertex"
LIMB_TOO_DEEP = "LimbTooDeep"
ILLEGAL_LIMB_SHAPE = "IllegalLimbShape"
TOO_MANY_LIMBS = "TooManyLimbs"
SPACING_VIOLATION = "SpacingViolation"
PARITY_CERTIFICATE = "ParityCertificate"


def _pair_gap(k1: str, k2: str) -> int:
    return PAIR_MIN_GAP[(k1, k2)] if (k1, k2) in PAIR_MIN_GAP else PAIR_MIN_GAP[(k2, k1)]


@dataclass(frozen=True)
class Limb:
    attach: int  # spine index
    kind: str  # A | B | C


@dataclass(frozen=True)
class Violation:
    """Why a tree (or one longest path of it) fails the classification."""

    kind: str
    at: int | None = None  # spine position, or certificate root
    pair: tuple[str, str] | None = None
    required: int | None = None
    actual: int | None = None
    count: int | None = None

    def to_json_dict(self) -> dict:
        out = {"kind": self.kind}
        for key in ("at", "pair", "required", "actual", "count"):
            val = getattr(self, key)
            if val is not None:
                out[key] = list(val) if isinstance(val, tuple) else val
        return out


@dataclass(frozen=True)
class LimbDecomposition:
    """A longest path plus the typed limbs hanging off it.

    limb_vertices[i] lists the off-spine vertices of limbs[i]; together the
    spine and the limbs cover the whole tree.
    """

    spine: tuple[int, ...]
    limbs: tuple[Limb, ...]
    limb_vertices: tuple[tuple[int, ...], ...]

    def diameter(self) -> int:
        return len(self.spine) - 1

    def to_lobster_spec(self) -> LobsterSpec:
        return LobsterSpec(
            self.diameter(), tuple((l.attach, l.kind) for l in self.limbs)
        )

    def to_json_dict(self) -> dict:
        return {
            "spine": list(self.spine),
            "limbs": [[l.attach, l.kind] for l in self.limbs],
        }


@dataclass(frozen=True)
class Verdict:
    diametrical: bool
    witness: LimbDecomposition | None = None
    reason: Violation | None = None

    def to_json_dict(self) -> dict:
        return {
            "diametrical": self.diametrical,
            "witness": self.witness.to_json_dict() if self.witness else None,
            "reason": self.reason.to_json_dict() if self.reason else None,
        }


def _tree_path(g: Graph, u: int, v: int) -> tuple[int, ...]:
    """The unique u-v path, by parent pointers from a BFS at u."""
    parent = {u: u}
    frontier = [u]
    while v not in parent:
        nxt = []
        for x in frontier:
            for w in g.adjacency[x]:
                if w not in parent:
                    parent[w] = x
                    nxt.append(w)
        frontier = nxt
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def diametrical_paths(t: Graph) -> list[tuple[int, ...]]:
    """Every longest path of the tree, one per unordered endpoint pair,
    ordered by endpoints."""
    if not is_tree(t):
        raise InputError("diametrical_paths requires a tree")
    m = metrics(t)
    d = m.diameter
    return [
        _tree_path(t, u, v)
        for u in range(t.n)
        for v in range(u + 1, t.n)
        if m.dist[u][v] == d
    ] or [(0,)]


def _validate_diametrical_path(t: Graph, path) -> None:
    if len(path) != len(set(path)):
        raise InputError("path revisits a vertex")
    for a, b in zip(path, path[1:]):
        if b not in t.adjacency[a]:
            raise InputError(f"path step {a}-{b} is not an edge")
    if len(path) - 1 != metrics(t).diameter:
        raise InputError("path is not a longest path of the tree")


def decompose(t: Graph, path) -> LimbDecomposition | Violation:
    """Classify every protrusion along the given longest path.

    Returns the decomposition when all protrusions are legal limbs, else the
    first violation scanning the spine left to right: a protrusion deeper
    than two edges, branching off the spine, a mix of depths at one spine
    vertex, or three or more protrusions at one spine vertex.
    """
    if not is_tree(t):
        raise InputError("decompose requires a tree")
    path = tuple(path)
    _validate_diametrical_path(t, path)
    on_spine = set(path)
    limbs: list[Limb] = []
    limb_vertices: list[tuple[int, ...]] = []
    for i, v in enumerate(path):
        roots = [u for u in t.adjacency[v] if u not in on_spine]
        if not roots:
            continue
        # a longest path cannot have protrusions at its endpoints
        assert 0 < i < len(path) - 1
        subtrees = []
        branching = False
        for r in roots:
            depth = 1
            verts = [r]
            frontier = [(r, v)]
            while frontier:
                nxt = []
                for x, par in frontier:
                    kids = [w for w in t.adjacency[x] if w != par]
                    if len(kids) > 1:
                        branching = True
                    for w in kids:
                        verts.append(w)
                        nxt.append((w, x))
                if nxt:
                    depth += 1
                frontier = nxt
            subtrees.append((depth, tuple(sorted(verts))))
        max_depth = max(depth for depth, _ in subtrees)
        if max_depth >= 3:
            return Violation(LIMB_TOO_DEEP, at=i)
        if branching:
            return Violation(ILLEGAL_LIMB_SHAPE, at=i)
        if len(subtrees) >= 3:
            return Violation(ILLEGAL_LIMB_SHAPE, at=i)
        if len(subtrees) == 2:
            if max_depth > 1:
                return Violation(ILLEGAL_LIMB_SHAPE, at=i)
            kind = "B"
        else:
            kind = "C" if max_depth == 1 else "A"
        limbs.append(Limb(i, kind))
        limb_vertices.append(tuple(sorted(subtrees[0][1] + subtrees[1][1]))
                             if len(subtrees) == 2 else subtrees[0][1])
    return LimbDecomposition(path, tuple(limbs), tuple(limb_vertices))


def check_spacing(dec: LimbDecomposition) -> Violation | None:
    """Validate spine gaps between neighboring limbs and both spine ends."""
    d = dec.diameter()
    if not dec.limbs:
        return None
    first, last = dec.limbs[0], dec.limbs[-1]
    if first.attach < END_MIN_GAP[first.kind]:
        return Violation(
            SPACING_VIOLATION,
            at=first.attach,
            pair=("e1", first.kind),
            required=END_MIN_GAP[first.kind],
            actual=first.attach,
        )
    for l1, l2 in zip(dec.limbs, dec.limbs[1:]):
        gap = l2.attach - l1.attach
        need = _pair_gap(l1.kind, l2.kind)
        if gap < need:
            return Violation(
                SPACING_VIOLATION,
                at=l1.attach,
                pair=(l1.kind, l2.kind),
                required=need,
                actual=gap,
            )
    if d - last.attach < END_MIN_GAP[last.kind]:
        return Violation(
            SPACING_VIOLATION,
            at=last.attach,
            pair=(last.kind, "e2"),
            required=END_MIN_GAP[last.kind],
            actual=d - last.attach,
        )
    return None


def classify_tree(t: Graph) -> Verdict:
    """Structural diametricality verdict for a tree.

    Accepts when some longest path decomposes into legal limbs, strictly
    fewer than half the diameter of them, with all spine gaps satisfied.
    On rejection the reason is the first failure seen on the first longest
    path examined.
    """
    if not is_tree(t):
        raise InputError("classify_tree requires a tree")
    if t.n == 1:
        return Verdict(False, reason=Violation(SINGLE_VERTEX))
    first_violation: Violation | None = None

    def note(v: Violation):
        nonlocal first_violation
        if first_violation is None:
            first_violation = v

    d = metrics(t).diameter
    for path in diametrical_paths(t):
        dec = decompose(t, path)
        if isinstance(dec, Violation):
            note(dec)
            continue
        if 2 * len(dec.limbs) >= d:
            note(Violation(TOO_MANY_LIMBS, count=len(dec.limbs), required=d))
            continue
        bad = check_spacing(dec)
        if bad is not None:
            note(bad)
            continue
        return Verdict(True, witness=dec)
    return Verdict(False, reason=first_violation)


def reconstruct_witness(dec: LimbDecomposition) -> Graph:
    """Rebuild a tree from a decomposition; isomorphic to the original."""
    return gen_lobster(dec.to_lobster_spec())


def witness_matches(t: Graph, dec: LimbDecomposition) -> bool:
    return canonical_form(reconstruct_witness(dec)) == canonical_form(t)


def parity_certificate(g: Graph, budget: SolverBudget = DEFAULT_BUDGET):
    """Search all roots for a breadth-first odd-parity certificate.

    Returns (root, count) for the first root whose odd-depth class, taken as
    a strength-1 broadcast, is verified minimal dominating with more members
    than the diameter; None when no root certifies.  Unverifiable labelings
    are discarded rather than trusted.
    """
    m = metrics(g)
    if not m.connected:
        raise InputError("parity_certificate requires a connected graph")
    for root in range(g.n):
        odd = [v for v in range(g.n) if m.dist[root][v] % 2 == 1]
        if len(odd) <= m.diameter:
            continue
        f = broadcasts.broadcast_from_set(g, odd)
        if broadcasts.is_minimal_dominating_broadcast(g, f):
            return root, len(odd)
    return None


def concatenate(t1: Graph, d1, t2: Graph, d2) -> Graph:
    """Glue two trees by identifying the end of one longest path with the
    start of another; the result is a tree of diameter len(d1)+len(d2)."""
    if not is_tree(t1) or not is_tree(t2):
        raise InputError("concatenate requires trees")
    d1, d2 = tuple(d1), tuple(d2)
    _validate_diametrical_path(t1, d1)
    _validate_diametrical_path(t2, d2)
    joint = d1[-1]
    glued = d2[0]
    mapping = {}
    nxt = t1.n
    for w in range(t2.n):
        if w == glued:
            mapping[w] = joint
        else:
            mapping[w] = nxt
            nxt += 1
    edges = t1.edges() + [(mapping[a], mapping[b]) for a, b in t2.edges()]
    return build_graph(nxt, edges)


@lru_cache(maxsize=4096)
def _upper_gamma_b_value(g: Graph, budget: SolverBudget) -> int:
    return solve_upper_gamma_b(g, budget).value


def is_diametrical_exact(g: Graph, budget: SolverBudget = DEFAULT_BUDGET) -> bool:
    """Oracle: maximum minimal-broadcast cost equals the diameter.

    A single vertex has no dominating broadcast at all and counts as
    non-diametrical.
    """
    if g.n == 1:
        return False
    return _upper_gamma_b_value(g, budget) == metrics(g).diameter
