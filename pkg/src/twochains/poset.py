"""Finite posets on ``range(n)`` and the brute-force oracles built on them.

A :class:`Poset` stores the strict relation as bitmasks: ``down[j]`` has bit
``i`` set iff ``i < j``.  Everything is immutable; every constructor validates
irreflexivity and transitivity (antisymmetry follows from the two).
"""

from __future__ import annotations

import itertools
import random
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CycleError, SizeError, check_cap

CHAIN_PAIR_CAP = 20
LINEAR_EXTENSION_CAP = 20
ISOMORPHISM_CAP = 10
LABELLED_ENUMERATION_CAP = 6
NATURAL_ENUMERATION_CAP = 7


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Poset:
    """A finite strict partial order on ``0..n-1``."""

    __slots__ = ("n", "down", "up", "__dict__")

    def __init__(self, n: int, lt: Iterable[tuple[int, int]] = ()):
        down = [0] * n
        for i, j in lt:
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"pair ({i}, {j}) out of range for n={n}")
            down[j] |= 1 << i
        self._init(n, down)

    def _init(self, n: int, down: Sequence[int]) -> None:
        up = [0] * n
        for j in range(n):
            dj = down[j]
            if dj >> j & 1:
                raise ValueError(f"relation is not irreflexive at {j}")
            for i in bits(dj):
                if down[i] & ~dj:
                    raise ValueError(f"relation is not transitive at ({i}, {j})")
                up[i] |= 1 << j
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "down", tuple(down))
        object.__setattr__(self, "up", tuple(up))

    @classmethod
    def from_down_masks(cls, down: Sequence[int]) -> "Poset":
        p = cls.__new__(cls)
        p._init(len(down), list(down))
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Poset is immutable")

    # -- relation queries --------------------------------------------------

    @cached_property
    def lt(self) -> frozenset[tuple[int, int]]:
        return frozenset((i, j) for j in range(self.n) for i in bits(self.down[j]))

    def less(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def leq(self, i: int, j: int) -> bool:
        return i == j or self.less(i, j)

    def comparable(self, i: int, j: int) -> bool:
        return i == j or self.less(i, j) or self.less(j, i)

    @cached_property
    def comparable_masks(self) -> tuple[int, ...]:
        """``comparable_masks[i]``: elements strictly comparable with ``i``."""
        return tuple(d | u for d, u in zip(self.down, self.up))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_chain_mask(self, m: int) -> bool:
        comp = self.comparable_masks
        return all((comp[x] | 1 << x) & m == m for x in bits(m))

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """Number of elements in a longest chain ending at each element."""
        h = [0] * self.n
        for x in sorted(range(self.n), key=lambda x: popcount(self.down[x])):
            h[x] = 1 + max((h[y] for y in bits(self.down[x])), default=0)
        return tuple(h)

    def induced(self, elements: Iterable[int]) -> "Poset":
        """Subposet on ``elements``, relabelled order-preservingly to ``0..k-1``."""
        keep = sorted(set(elements))
        index = {x: k for k, x in enumerate(keep)}
        down = [mask_of(index[y] for y in bits(self.down[x]) if y in index) for x in keep]
        return Poset.from_down_masks(down)

    def relabel(self, perm: Sequence[int]) -> "Poset":
        """Image of this poset under the bijection ``x -> perm[x]``."""
        down = [0] * self.n
        for j in range(self.n):
            down[perm[j]] = mask_of(perm[i] for i in bits(self.down[j]))
        return Poset.from_down_masks(down)

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.down == other.down

    def __hash__(self):
        return hash(self.down)

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Poset({self.n}, {sorted(self.lt)})"


# -- constructors -------------------------------------------------------------


def poset_from_covers(n: int, covers: Iterable[tuple[int, int]]) -> Poset:
    """Transitive closure of ``covers`` as a :class:`Poset`.

    Raises :class:`CycleError` when the closure is not antisymmetric.
    """
    down = [0] * n
    for i, j in covers:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"pair ({i}, {j}) out of range for n={n}")
        if i == j:
            raise CycleError(f"loop at {i}")
        down[j] |= 1 << i
    down = _close(down)
    for j in range(n):
        if down[j] >> j & 1:
            raise CycleError(f"relation has a cycle through {j}")
    return Poset.from_down_masks(down)


def _close(down: list[int]) -> list[int]:
    n = len(down)
    # Warshall on bitmasks: if k < j then everything below k is below j.
    for k in range(n):
        bit = 1 << k
        dk = down[k]
        for j in range(n):
            if down[j] & bit:
                down[j] |= dk
    return down


def chain(n: int) -> Poset:
    return Poset.from_down_masks([(1 << j) - 1 for j in range(n)])


def antichain(n: int) -> Poset:
    return Poset.from_down_masks([0] * n)


def ordinal_sum(p: Poset, q: Poset) -> Poset:
    """``p ⊕ q``: ``q`` placed entirely above ``p``; ``q`` relabelled after ``p``."""
    shift = p.n
    down = list(p.down) + [d << shift | p.full_mask for d in q.down]
    return Poset.from_down_masks(down)


# -- basic queries ------------------------------------------------------------


def covers(p: Poset) -> list[tuple[int, int]]:
    """Pairs ``(x, y)`` with ``y`` covering ``x``, sorted."""
    out = []
    for y in range(p.n):
        below = p.down[y]
        for x in bits(below):
            if not (p.up[x] & below):
                out.append((x, y))
    return sorted(out)


def maximal_elements(p: Poset) -> set[int]:
    return {x for x in range(p.n) if not p.up[x]}


def minimal_elements(p: Poset) -> set[int]:
    return {x for x in range(p.n) if not p.down[x]}


def dual(p: Poset) -> Poset:
    return Poset.from_down_masks(p.up)


def comparable_pair_count(p: Poset) -> int:
    """Ordered pairs ``(x, y)`` with ``x <= y``, reflexive pairs included."""
    return p.n + sum(popcount(d) for d in p.down)


def incomparable_pair_count(p: Poset) -> int:
    """Unordered pairs of distinct incomparable elements."""
    return p.n * (p.n - 1) // 2 - sum(popcount(d) for d in p.down)


# -- chain covers -------------------------------------------------------------


def compatible_covers(
    comp: Sequence[int], r: int, limit: int | None = None
) -> set[tuple[int, ...]]:
    """Unordered ``r``-tuples of pairwise-compatible sets covering ``range(n)``.

    ``comp[x]`` is the mask of elements allowed to share a set with ``x``.  Sets
    may be empty and may overlap; each cover is a sorted tuple of bitmasks.
    With ``limit`` the search stops once that many distinct covers are found.
    """
    n = len(comp)
    found: set[tuple[int, ...]] = set()
    masks = [0] * r
    choices = list(range(1, 1 << r))
    # low-degree elements first: they prune hardest
    order = sorted(range(n), key=lambda x: popcount(comp[x]))

    def rec(k: int) -> bool:
        if k == n:
            found.add(tuple(sorted(masks)))
            return limit is not None and len(found) >= limit
        x = order[k]
        ok = comp[x]
        for sub in choices:
            # first element goes in set 0; every unordered cover still occurs
            if k == 0 and not sub & 1:
                continue
            if all(not (sub >> c & 1) or masks[c] & ok == masks[c] for c in range(r)):
                saved = masks[:]
                for c in range(r):
                    if sub >> c & 1:
                        masks[c] |= 1 << x
                stop = rec(k + 1)
                masks[:] = saved
                if stop:
                    return True
        return False

    if n == 0:
        found.add((0,) * r)
    else:
        rec(0)
    return found


def chain_covers(p: Poset, r: int, limit: int | None = None) -> set[tuple[int, ...]]:
    """Unordered ``r``-tuples of chains (bitmasks) whose union is ``p``."""
    return compatible_covers(p.comparable_masks, r, limit)


def chain_pair_decompositions(p: Poset) -> list[tuple[frozenset[int], frozenset[int]]]:
    """All unordered pairs of chains whose union is ``p``, sorted."""
    check_cap(p.n, CHAIN_PAIR_CAP, "chain_pair_decompositions")
    out = []
    for b, c in chain_covers(p, 2):
        out.append((frozenset(bits(b)), frozenset(bits(c))))
    return sorted(out, key=lambda bc: (sorted(bc[0]), sorted(bc[1])))


def count_chain_covers(p: Poset, r: int = 2, limit: int | None = None) -> int:
    return len(chain_covers(p, r, limit))


# -- refinements --------------------------------------------------------------


def add_relation(p: Poset, x: int, y: int) -> Poset:
    """Transitive closure of ``p`` plus ``x < y`` (``x``, ``y`` incomparable)."""
    if p.comparable(x, y):
        raise ValueError(f"{x} and {y} are already comparable")
    below_x = p.down[x] | 1 << x
    down = list(p.down)
    for z in bits(p.up[y] | 1 << y):
        down[z] |= below_x
    return Poset.from_down_masks(down)


def minimal_proper_refinements(p: Poset) -> list[Poset]:
    """One single-pair closure per incomparable ordered pair, duplicates removed."""
    out: list[Poset] = []
    seen = set()
    for x in range(p.n):
        for y in range(p.n):
            if x != y and not p.comparable(x, y):
                q = add_relation(p, x, y)
                if q not in seen:
                    seen.add(q)
                    out.append(q)
    return out


# -- ideals and linear extensions --------------------------------------------


def ideal_layers(p: Poset) -> Iterator[set[int]]:
    """Down-sets of ``p`` grouped by size, as bitmasks, sizes ``0..n``."""
    layer = {0}
    yield layer
    for _ in range(p.n):
        nxt = set()
        for ideal in layer:
            for x in range(p.n):
                if not ideal >> x & 1 and p.down[x] & ideal == p.down[x]:
                    nxt.add(ideal | 1 << x)
        layer = nxt
        yield layer


def ideals_of_size(p: Poset, m: int) -> list[frozenset[int]]:
    if not 0 <= m <= p.n:
        raise ValueError(f"ideal size {m} outside 0..{p.n}")
    for k, layer in enumerate(ideal_layers(p)):
        if k == m:
            return sorted((frozenset(bits(i)) for i in layer), key=sorted)
    raise AssertionError("unreachable")


def count_linear_extensions(p: Poset) -> int:
    """Exact count by dynamic programming over the lattice of down-sets."""
    check_cap(p.n, LINEAR_EXTENSION_CAP, "count_linear_extensions")
    counts = {0: 1}
    for _ in range(p.n):
        nxt: dict[int, int] = {}
        for ideal, c in counts.items():
            for x in range(p.n):
                if not ideal >> x & 1 and p.down[x] & ideal == p.down[x]:
                    key = ideal | 1 << x
                    nxt[key] = nxt.get(key, 0) + c
        counts = nxt
    return counts.get(p.full_mask, 1 if p.n == 0 else 0)


def linear_extensions(p: Poset) -> Iterator[tuple[int, ...]]:
    """Linear extensions as bottom-to-top element tuples, lexicographic order."""
    order: list[int] = []

    def rec(placed: int) -> Iterator[tuple[int, ...]]:
        if len(order) == p.n:
            yield tuple(order)
            return
        for x in range(p.n):
            if not placed >> x & 1 and p.down[x] & placed == p.down[x]:
                order.append(x)
                yield from rec(placed | 1 << x)
                order.pop()

    yield from rec(0)


# -- isomorphism --------------------------------------------------------------


def _invariants(p: Poset) -> list[tuple[int, int, int]]:
    return [(popcount(p.down[x]), popcount(p.up[x]), p.heights[x]) for x in range(p.n)]


def isomorphisms(p: Poset, q: Poset) -> Iterator[tuple[int, ...]]:
    """Every order isomorphism ``p -> q`` as an image tuple (backtracking)."""
    if p.n != q.n:
        return
    n = p.n
    ip, iq = _invariants(p), _invariants(q)
    if sorted(ip) != sorted(iq):
        return
    candidates = [[y for y in range(n) if iq[y] == ip[x]] for x in range(n)]
    # most constrained first, then by height so neighbours get fixed early
    order = sorted(range(n), key=lambda x: (len(candidates[x]), ip[x][2], x))
    image = [-1] * n
    used = 0

    def consistent(x: int, y: int) -> bool:
        for u in range(n):
            v = image[u]
            if v < 0:
                continue
            if p.less(u, x) != q.less(v, y) or p.less(x, u) != q.less(y, v):
                return False
        return True

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        nonlocal used
        if k == n:
            yield tuple(image)
            return
        x = order[k]
        for y in candidates[x]:
            if not used >> y & 1 and consistent(x, y):
                image[x] = y
                used |= 1 << y
                yield from rec(k + 1)
                used &= ~(1 << y)
                image[x] = -1

    yield from rec(0)


def are_isomorphic(p: Poset, q: Poset) -> bool:
    check_cap(max(p.n, q.n), ISOMORPHISM_CAP, "are_isomorphic")
    return next(isomorphisms(p, q), None) is not None


def automorphism_count(p: Poset) -> int:
    return sum(1 for _ in isomorphisms(p, p))


def is_isomorphism(p: Poset, q: Poset, image: Sequence[int]) -> bool:
    """Whether ``x -> image[x]`` is an order isomorphism ``p -> q``."""
    if p.n != q.n or sorted(image) != list(range(q.n)):
        return False
    return all(
        q.down[image[j]] == mask_of(image[i] for i in bits(p.down[j])) for j in range(p.n)
    )


# -- exhaustive and random generation ----------------------------------------


def _extensions_by_new_element(p: Poset, labelled: bool) -> Iterator[Poset]:
    """Posets on ``n+1`` elements restricting to ``p`` on ``0..n-1``.

    The new element ``n`` gets a down-set ``D`` and an up-set ``U`` with every
    element of ``D`` already below every element of ``U``.  With
    ``labelled=False`` only ``U = {}`` is used (natural labellings).
    """
    n = p.n
    ideals = [i for layer in ideal_layers(p) for i in layer]
    filters = [mask_of(bits(p.full_mask & ~i)) for i in ideals] if labelled else [0]
    new = 1 << n
    for d in ideals:
        # elements of U must lie above all of D
        above_all = p.full_mask
        for x in bits(d):
            above_all &= p.up[x]
        for u in filters:
            if u & d or (d and u & ~above_all):
                continue
            down = list(p.down)
            for y in bits(u):
                down[y] |= new | d
            down.append(d)
            yield Poset.from_down_masks(down)


def all_labelled_posets(n: int) -> Iterator[Poset]:
    """Every strict partial order on ``range(n)``, each exactly once."""
    check_cap(n, LABELLED_ENUMERATION_CAP, "all_labelled_posets")
    yield from _grow(n, labelled=True)


def naturally_labelled_posets(n: int) -> Iterator[Poset]:
    """Posets on ``range(n)`` with ``i < j`` only if ``i < j`` as integers."""
    check_cap(n, NATURAL_ENUMERATION_CAP, "naturally_labelled_posets")
    yield from _grow(n, labelled=False)


def _grow(n: int, labelled: bool) -> Iterator[Poset]:
    level = [Poset(0)]
    for _ in range(n):
        level = [q for p in level for q in _extensions_by_new_element(p, labelled)]
    yield from level


def random_poset(n: int, p: float, rng: random.Random) -> Poset:
    """Random DAG with edge probability ``p``, closed, then randomly relabelled."""
    pairs = [(i, j) for i, j in itertools.combinations(range(n), 2) if rng.random() < p]
    base = poset_from_covers(n, pairs)
    perm = list(range(n))
    rng.shuffle(perm)
    return base.relabel(perm)


__all__ = [
    "Poset", "SizeError", "add_relation", "all_labelled_posets", "antichain",
    "are_isomorphic", "automorphism_count", "bits", "chain", "chain_covers",
    "chain_pair_decompositions", "comparable_pair_count", "compatible_covers", "count_chain_covers",
    "count_linear_extensions", "covers", "dual", "ideal_layers", "ideals_of_size",
    "incomparable_pair_count", "is_isomorphism", "isomorphisms", "linear_extensions",
    "mask_of", "maximal_elements", "minimal_elements", "minimal_proper_refinements",
    "naturally_labelled_posets", "ordinal_sum", "popcount", "poset_from_covers",
    "random_poset",
]
