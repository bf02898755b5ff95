"""Closed formulas for covers and linear extensions of 2-chains, by splice shape."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .binseq import canonical_sequence
from .errors import NotTwoChain, ShapeError
from .poset import (
    Poset,
    chain,
    comparable_pair_count,
    count_linear_extensions,
    covers,
    ideal_layers,
    ordinal_sum,
)
from .splice import SpliceShape, reconstruct, shape_of_sequence, shape_size


def fibonacci(k: int) -> int:
    """``F_k`` with ``F_0 = 0``, ``F_1 = 1``."""
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def _validated(shape: Sequence[int]) -> SpliceShape:
    shape = tuple(shape)
    if any(k < 3 for k in shape):
        raise ShapeError(f"every part must be at least 3: {shape}")
    return shape


def _drop_trailing_two(shape: SpliceShape) -> SpliceShape:
    # Q(2) is the 2-element antichain, the identity for splicing
    return shape[:-1] if shape and shape[-1] == 2 else shape


def cover_count_formula(shape: Sequence[int]) -> int:
    shape = _validated(shape)
    return 2 * shape_size(shape) - len(shape) - 4


def _last_big_part(shape: SpliceShape) -> int | None:
    for k in range(len(shape) - 1, -1, -1):
        if shape[k] >= 4:
            return k
    return None


def linear_extension_recurrence(shape: Sequence[int]) -> int:
    return _ext(_validated(shape))


@lru_cache(maxsize=None)
def _ext(shape: SpliceShape) -> int:
    r = _last_big_part(shape)
    if r is None:
        return shape_size(shape)
    without_super = _drop_trailing_two(shape[:-1] + (shape[-1] - 1,))
    # the other branch is A ⊕ chain, and l(A ⊕ chain) = l(A)
    without_other = _drop_trailing_two(shape[:r] + (shape[r] - 2,))
    return _ext(without_super) + _ext(without_other)


def remove_max_shapes(shape: Sequence[int]) -> tuple[SpliceShape, Poset]:
    """Shapes of ``P`` minus each of its two maximal elements.

    The first entry is the splice shape of ``P`` minus its supermaximal element.
    The second is ``P`` minus the other maximal element, as a poset
    ``Q(n_1) ⊠ ... ⊠ Q(n_r - 2) ⊕ chain(s - r + 1)`` with ``r`` the last part
    of size at least 4 (``r = 0`` when all parts are 3, giving a chain).
    """
    shape = _validated(shape)
    if shape_size(shape) < 3:
        raise ShapeError("need at least 3 elements")
    first = _drop_trailing_two(shape[:-1] + (shape[-1] - 1,))
    r = _last_big_part(shape)
    if r is None:
        return first, chain(len(shape) + 1)
    lower = reconstruct(_drop_trailing_two(shape[:r] + (shape[r] - 2,)))
    return first, ordinal_sum(lower, chain(len(shape) - r))


def extremal_bounds(n: int) -> tuple[int, int, int, int]:
    """``(min covers, max covers, min extensions, max extensions)`` over 2-chains of size ``n``."""
    if n < 3:
        raise ValueError("bounds are stated for n >= 3")
    return n - 2, 2 * n - 5, n, fibonacci(n + 1)


def count_linear_extensions_narrow(p: Poset) -> int:
    """Linear extensions of a poset whose ideal lattice has at most two ideals per rank."""
    counts = {0: 1}
    for layer in list(ideal_layers(p))[1:]:
        if len(layer) > 2:
            raise NotTwoChain("more than two ideals of one size")
        nxt = {}
        for ideal in layer:
            nxt[ideal] = sum(c for below, c in counts.items() if below & ideal == below)
        counts = nxt
    return sum(counts.values())


@dataclass(frozen=True)
class TwoChainStats:
    n: int
    sequence: str
    shape: SpliceShape
    covers: int
    linear_extensions: int
    comparable_pairs: int


def two_chain_stats(p: Poset) -> TwoChainStats:
    a = canonical_sequence(p)
    return TwoChainStats(
        n=p.n,
        sequence=a,
        shape=shape_of_sequence(a),
        covers=len(covers(p)),
        linear_extensions=count_linear_extensions(p),
        comparable_pairs=comparable_pair_count(p),
    )
