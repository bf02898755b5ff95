"""Posets built from binary words by single-symbol insertion.

Words are plain ``str`` over ``"01"``; positions in docstrings are 1-based to
match the usual notation ``a = a_1 ... a_n``.  For a word ``a`` of length ``n``
the ``n + 2`` insertions are listed twice, as ``a(0..n+1)`` ("lower") and
``a[0..n+1]`` ("upper"); the permutation ``w`` matches the two listings and
the order is the intersection of the two index orders.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .bichain import is_two_chain_fast, top_pair
from .errors import InternalInconsistency, LengthMismatch, NotTwoChain, ParseError
from .poset import Poset, bits, popcount

_WORD = re.compile(r"[01]*")


def check_word(a: str) -> str:
    if not isinstance(a, str) or not _WORD.fullmatch(a):
        raise ParseError(f"not a binary word: {a!r}")
    return a


def complement(a: str) -> str:
    return check_word(a).translate(str.maketrans("01", "10"))


def reverse(a: str) -> str:
    return check_word(a)[::-1]


def alternating(n: int, start: str = "1") -> str:
    other = "0" if start == "1" else "1"
    return "".join(start if k % 2 == 0 else other for k in range(n))


def lower_insertions(a: str) -> list[str]:
    """``[a(0), ..., a(n+1)]``.

    ``a(0) = 1a``, ``a(n+1) = a0``, and for ``1 <= i <= n`` the symbol ``a_i``
    is replaced by ``01``.
    """
    check_word(a)
    n = len(a)
    return ["1" + a] + [a[: i - 1] + "01" + a[i:] for i in range(1, n + 1)] + [a + "0"]


def upper_insertions(a: str) -> list[str]:
    """``[a[0], ..., a[n+1]]``: the lower list with the roles of 0 and 1 swapped."""
    check_word(a)
    n = len(a)
    return ["0" + a] + [a[: i - 1] + "10" + a[i:] for i in range(1, n + 1)] + [a + "1"]


def w_of(a: str) -> tuple[int, ...]:
    """The permutation ``w`` of ``0..n+1`` with ``a(i) = a[w(i)]``.

    At ``i = 0`` or ``a_i = 0`` it jumps right to the next ``k`` with ``a_k = 0``
    (or ``n + 1``); otherwise left to the previous ``k`` with ``a_k = 1`` (or 0).
    """
    check_word(a)
    n = len(a)
    w = []
    for i in range(n + 2):
        if i == 0 or (i <= n and a[i - 1] == "0"):
            k = i + 1
            while k <= n and a[k - 1] != "0":
                k += 1
        else:
            k = i - 1
            while k >= 1 and a[k - 1] != "1":
                k -= 1
        w.append(k)
    return tuple(w)


def w_by_matching(a: str) -> tuple[int, ...]:
    """``w`` found by looking each ``a(i)`` up in the upper list."""
    where = {s: k for k, s in enumerate(upper_insertions(a))}
    return tuple(where[s] for s in lower_insertions(a))


def opposed(b: str, c: str) -> bool:
    """Each word exceeds the other in some position."""
    if len(b) != len(c):
        raise LengthMismatch(f"lengths {len(b)} and {len(c)} differ")
    return any(x > y for x, y in zip(b, c)) and any(x < y for x, y in zip(b, c))


@dataclass(frozen=True)
class LabelledTwoChain:
    base: str
    elements: tuple[str, ...]
    order: Poset
    w: tuple[int, ...]

    def index(self, s: str) -> int:
        return self.elements.index(s)


def _order_from_w(w: tuple[int, ...]) -> Poset:
    m = len(w)
    down = [0] * m
    for j in range(m):
        for i in range(j):
            if w[i] < w[j]:
                down[j] |= 1 << i
    return Poset.from_down_masks(down)


def opposedness_order(a: str) -> list[int]:
    """Down masks of ``{(i, j): i < j, a(i) and a(j) opposed}``, not closed."""
    seqs = lower_insertions(a)
    down = [0] * len(seqs)
    for j, sj in enumerate(seqs):
        for i in range(j):
            if opposed(seqs[i], sj):
                down[j] |= 1 << i
    return down


def seq_poset(a: str, check: bool = False) -> LabelledTwoChain:
    """The labelled 2-chain on the insertions of ``a``, in ``a(i)`` index order.

    With ``check`` the order is also built from opposedness and the two
    constructions must agree exactly.
    """
    w = w_of(a)
    order = _order_from_w(w)
    if check:
        if w != w_by_matching(a):
            raise InternalInconsistency(f"w rule and sequence matching differ for {a!r}")
        if tuple(opposedness_order(a)) != order.down:
            raise InternalInconsistency(f"opposedness and index orders differ for {a!r}")
    return LabelledTwoChain(a, tuple(lower_insertions(a)), order, w)


def sequence_isomorphism(p: Poset) -> tuple[str, tuple[int, ...]]:
    """A word ``a`` and an isomorphism ``p -> seq_poset(a).order``.

    Strips supermaximal elements down to two, then rebuilds: each step appends
    the bit that tells which maximal element the kept one corresponds to.
    """
    if not is_two_chain_fast(p):
        raise NotTwoChain("poset is not a 2-chain")
    rem = p.full_mask
    steps = []
    while popcount(rem) > 2:
        pair = top_pair(p, rem)
        if pair is None:
            raise NotTwoChain("no supermaximal element")
        steps.append(pair)
        rem &= ~(1 << pair[0])
    u, v = bits(rem)
    image = [0] * p.n
    image[u], image[v] = 0, 1
    word = []
    for top, kept in reversed(steps):
        m = len(word)
        # kept maps to one of the two maximal elements of P_word:
        # index m+1 is word|0, the other one is word|1
        if image[kept] == m + 1:
            word.append("0")
            image[kept], image[top] = m + 2, m + 1
        else:
            word.append("1")
            image[top] = m + 2
    return "".join(word), tuple(image)


def canonical_sequence(p: Poset) -> str:
    """The lexicographically smaller of the two words whose poset is ``p``."""
    a, _ = sequence_isomorphism(p)
    return min(a, complement(a))


@dataclass(frozen=True)
class SelfDuality:
    self_dual: bool
    preserves_chains: bool
    swaps_chains: bool


def is_self_dual(a: str) -> SelfDuality:
    r = reverse(a)
    keep = r == a
    swap = r == complement(a)
    return SelfDuality(keep or swap, keep, swap)
