"""Comparability and incomparability graphs, 2-cliques and caterpillars."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .bichain import enumerate_two_chains
from .binseq import canonical_sequence
from .errors import NotCaterpillar, SizeError, check_cap
from .poset import Poset, bits, compatible_covers, dual, popcount

TWO_CLIQUE_DEFINITION_CAP = 12
CATERPILLAR_SEARCH_CAP = 14


@dataclass(frozen=True)
class UGraph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise IndexError(f"edge ({u}, {v}) out of range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n, edges) -> "UGraph":
        return cls(n, frozenset(edges))

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    def degree(self, v: int) -> int:
        return popcount(self.adjacency[v])


def complement(g: UGraph) -> UGraph:
    return UGraph(g.n, frozenset(e for e in combinations(range(g.n), 2) if e not in g.edges))


def path_graph(n: int) -> UGraph:
    return UGraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def star_graph(n: int) -> UGraph:
    """Vertex 0 joined to every other vertex."""
    return UGraph(n, frozenset((0, i) for i in range(1, n)))


def triskelion() -> UGraph:
    """Three paths of length 2 hanging from vertex 0."""
    return UGraph(7, frozenset({(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)}))


def comparability_graph(p: Poset) -> UGraph:
    return UGraph(p.n, frozenset((i, j) for j in range(p.n) for i in bits(p.down[j])))


def incomparability_graph(p: Poset) -> UGraph:
    return complement(comparability_graph(p))


def _connected(g: UGraph) -> bool:
    if g.n == 0:
        return False
    seen = frontier = 1
    while frontier:
        x = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        new = g.adjacency[x] & ~seen
        seen |= new
        frontier |= new
    return seen == (1 << g.n) - 1


def is_tree(g: UGraph) -> bool:
    return len(g.edges) == g.n - 1 and _connected(g)


def spine(g: UGraph) -> list[int] | None:
    """Non-leaf vertices in path order, or ``None`` when they do not form a path."""
    inner = [v for v in range(g.n) if g.degree(v) >= 2]
    if not inner:
        return []
    inner_mask = sum(1 << v for v in inner)
    inner_deg = {v: popcount(g.adjacency[v] & inner_mask) for v in inner}
    ends = [v for v in inner if inner_deg[v] <= 1]
    if len(inner) == 1:
        return inner
    if len(ends) != 2 or any(d > 2 for d in inner_deg.values()):
        return None
    order = [ends[0]]
    prev = -1
    while len(order) < len(inner):
        nxt = [u for u in bits(g.adjacency[order[-1]] & inner_mask) if u != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order


def is_caterpillar(g: UGraph) -> bool:
    return is_tree(g) and spine(g) is not None


def caterpillar_code(g: UGraph) -> tuple[int, tuple[int, ...]]:
    """Vertex count and spine degree sequence, minimised over both directions."""
    if not is_caterpillar(g):
        raise NotCaterpillar("graph is not a caterpillar")
    degs = tuple(g.degree(v) for v in spine(g))
    return g.n, min(degs, degs[::-1])


def two_clique_covers(g: UGraph, limit: int | None = None) -> set[tuple[int, ...]]:
    """Unordered pairs of cliques (bitmasks, possibly empty or overlapping) covering ``g``."""
    return compatible_covers(g.adjacency, 2, limit)


def is_two_clique(g: UGraph, method: str = "complement") -> bool:
    """Whether ``g`` is uniquely a union of two cliques and edge-maximal for that.

    ``method="complement"`` tests whether the complement is a tree;
    ``method="definition"`` checks the two conditions literally (``n <= 12``).
    """
    if method == "complement":
        return g.n >= 2 and is_tree(complement(g))
    if method != "definition":
        raise ValueError(f"unknown method {method!r}")
    check_cap(g.n, TWO_CLIQUE_DEFINITION_CAP, "is_two_clique")
    if g.n < 2 or len(two_clique_covers(g, limit=2)) != 1:
        return False
    for e in combinations(range(g.n), 2):
        if e not in g.edges:
            bigger = UGraph(g.n, g.edges | {e})
            if len(two_clique_covers(bigger, limit=2)) < 2:
                return False
    return True


def is_realizable_tree(g: UGraph) -> bool:
    """Whether the tree ``g`` is the incomparability graph of some poset."""
    return is_caterpillar(g)


def two_chain_from_caterpillar(g: UGraph) -> Poset:
    """A 2-chain whose incomparability graph is isomorphic to the caterpillar ``g``.

    The solutions are one 2-chain and its dual; the one with the smaller
    canonical sequence is returned.
    """
    if not is_caterpillar(g):
        raise NotCaterpillar("graph is not a caterpillar")
    if g.n < 2:
        raise SizeError("need at least 2 vertices")
    check_cap(g.n, CATERPILLAR_SEARCH_CAP, "two_chain_from_caterpillar")
    target = caterpillar_code(g)
    for p in enumerate_two_chains(g.n):
        if caterpillar_code(incomparability_graph(p)) == target:
            # enumeration is sorted by canonical sequence, so the first hit wins
            return p
    raise AssertionError("every caterpillar is an incomparability graph")


def caterpillar_class_count(n: int) -> int:
    """Caterpillars on ``n`` vertices up to isomorphism (``n >= 2``)."""
    if n < 2:
        raise ValueError("need n >= 2")
    if n < 4:
        return 1
    return 2 ** (n - 4) + 2 ** ((n - 4) // 2)


def dual_class_representative(p: Poset) -> str:
    """Smaller canonical sequence of ``p`` and its dual."""
    return min(canonical_sequence(p), canonical_sequence(dual(p)))
