"""Splicing posets along their two top and two bottom elements, and the Q(n) blocks."""

from __future__ import annotations

from typing import Sequence

from .bichain import top_pair
from .binseq import canonical_sequence, check_word, complement
from .errors import ShapeError, SizeError
from .poset import Poset, antichain, bits, dual

SpliceShape = tuple[int, ...]


def make_qn(n: int, r: int = 2) -> Poset:
    """``i < j`` iff ``i <= j - r`` on ``0..n-1`` (``r = 2`` gives Q(n))."""
    if n < 0 or r < 1:
        raise ValueError(f"bad parameters n={n}, r={r}")
    return Poset.from_down_masks([(1 << max(j - r + 1, 0)) - 1 for j in range(n)])


def _is_empty_pair(p: Poset) -> bool:
    return p.n == 2 and not p.down[0] and not p.down[1]


def glue(p: Poset, q: Poset, tops: Sequence[int], bottoms: Sequence[int]) -> Poset:
    """Place ``q`` above ``p``, identifying ``tops[i]`` in ``p`` with ``bottoms[i]`` in ``q``.

    ``a`` in ``p`` lies below ``b`` in ``q`` iff ``a <= tops[i]`` and
    ``bottoms[i] <= b`` for some ``i``.  Elements of ``p`` keep their labels;
    the rest of ``q`` is numbered from ``p.n`` upward in its own order.
    """
    if len(tops) != len(bottoms):
        raise ShapeError("tops and bottoms differ in length")
    label = dict(zip(bottoms, tops))
    for y in range(q.n):
        if y not in label:
            label[y] = p.n + len(label) - len(bottoms)
    down = list(p.down) + [0] * (q.n - len(bottoms))
    for y in range(q.n):
        if y in bottoms:
            if q.down[y]:
                raise ShapeError(f"{y} is not minimal in the upper poset")
            continue
        m = 0
        for z in bits(q.down[y]):
            m |= 1 << label[z]
        for t, b in zip(tops, bottoms):
            if q.down[y] >> b & 1:
                m |= p.down[t] | 1 << t
        down[label[y]] = m
    try:
        return Poset.from_down_masks(down)
    except ValueError as exc:
        raise ShapeError(f"glued relation is not a partial order: {exc}") from None


def splice(p: Poset, q: Poset) -> Poset:
    """``p ⊠ q``: super top of ``p`` meets super bottom of ``q``, and likewise the others."""
    if _is_empty_pair(p):
        tops = (0, 1)
    else:
        pair = top_pair(p) if p.n >= 3 else None
        if pair is None:
            raise ShapeError("lower poset needs exactly two maximal elements, one supermaximal")
        tops = pair
    if _is_empty_pair(q):
        return p
    pair = top_pair(dual(q)) if q.n >= 3 else None
    if pair is None:
        raise ShapeError("upper poset needs exactly two minimal elements, one superminimal")
    return glue(p, q, tops, pair)


def splice_sequences(a: str, b: str) -> str:
    check_word(a)
    check_word(b)
    if not a or not b or a[-1] == b[0]:
        return a + b
    return a + complement(b)


def reconstruct(shape: Sequence[int]) -> Poset:
    """``Q(n_1) ⊠ ... ⊠ Q(n_s)``; the empty shape gives the 2-element antichain."""
    _check_shape(shape)
    p = antichain(2)
    for k in shape:
        p = splice(p, make_qn(k))
    return p


def shape_of_sequence(a: str) -> SpliceShape:
    """Split ``a`` into maximal alternating runs; a run of length ``l`` is Q(l + 2)."""
    check_word(a)
    if not a:
        return ()
    parts = []
    run = 1
    for x, y in zip(a, a[1:]):
        if x == y:
            parts.append(run + 2)
            run = 1
        else:
            run += 1
    parts.append(run + 2)
    return tuple(parts)


def sequence_of_shape(shape: Sequence[int]) -> str:
    """The word starting with 0 whose runs give ``shape``."""
    _check_shape(shape)
    out = ""
    for k in shape:
        start = out[-1] if out else "0"
        out += alternating_from(start, k - 2)
    return out


def alternating_from(start: str, length: int) -> str:
    other = "1" if start == "0" else "0"
    return "".join(start if i % 2 == 0 else other for i in range(length))


def splice_decomposition(p: Poset) -> SpliceShape:
    if p.n < 3:
        raise SizeError("splice decomposition needs at least 3 elements")
    return shape_of_sequence(canonical_sequence(p))


def shape_size(shape: Sequence[int]) -> int:
    """Element count of the spliced poset: ``sum(parts) - 2s + 2``."""
    return sum(shape) - 2 * len(shape) + 2


def _check_shape(shape: Sequence[int]) -> None:
    if any(k < 3 for k in shape):
        raise ShapeError(f"every part must be at least 3: {tuple(shape)}")
