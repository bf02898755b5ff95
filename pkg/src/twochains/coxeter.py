"""Permutations, Coxeter elements of S_n and the posets they define.

Permutations are tuples of images of ``0..n-1``; they are shown 1-indexed in
one-line notation (``[2,3,4,1]``) at the I/O boundary only.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache
from typing import Sequence

from .binseq import canonical_sequence, w_of
from .errors import ParseError, SizeError, check_cap
from .poset import Poset

Permutation = tuple[int, ...]

COXETER_ENUMERATION_CAP = 12
GENERATOR_ORACLE_CAP = 7


def inverse(w: Sequence[int]) -> Permutation:
    inv = [0] * len(w)
    for i, x in enumerate(w):
        inv[x] = i
    return tuple(inv)


def compose(v: Sequence[int], w: Sequence[int]) -> Permutation:
    """``v ∘ w``: apply ``w`` first."""
    return tuple(v[x] for x in w)


def inversion_length(w: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def order(w: Sequence[int]) -> int:
    ident = tuple(range(len(w)))
    k, cur = 1, tuple(w)
    while cur != ident:
        cur = compose(w, cur)
        k += 1
    return k


def is_coxeter(w: Sequence[int]) -> bool:
    """Every interior point is moved up by one of ``w``, ``w^-1`` and down by the other.

    The extra requirement ``w(0) != 0`` only matters in S_2, where the interior
    condition is vacuous; for ``n >= 3`` it follows from the interior condition.
    """
    n = len(w)
    if n < 2:
        raise SizeError("Coxeter elements are defined for n >= 2")
    inv = inverse(w)
    if w[0] == 0:
        return False
    for r in range(1, n - 1):
        a, b = w[r], inv[r]
        if not ((a > r and b < r) or (a < r and b > r)):
            return False
    return True


def simple_transposition(n: int, i: int) -> Permutation:
    """``s_i`` swapping ``i`` and ``i+1`` (0-indexed)."""
    w = list(range(n))
    w[i], w[i + 1] = w[i + 1], w[i]
    return tuple(w)


@lru_cache(maxsize=None)
def coxeter_elements_by_generators(n: int) -> frozenset[Permutation]:
    """Products of ``s_0..s_{n-2}`` taken once each in every order (test oracle)."""
    check_cap(n, GENERATOR_ORACLE_CAP, "coxeter_elements_by_generators")
    gens = [simple_transposition(n, i) for i in range(n - 1)]
    out = set()
    for word in itertools.permutations(gens):
        w = tuple(range(n))
        for s in word:
            w = compose(w, s)
        out.add(w)
    return frozenset(out)


def enumerate_coxeter(n: int) -> list[Permutation]:
    """All Coxeter elements of S_n, sorted by image tuple.

    Each is the n-cycle ``0 -> (A ascending) -> n-1 -> (B descending) -> 0`` for a
    split ``A ⊔ B`` of the interior points.
    """
    if n < 2:
        raise SizeError("need n >= 2")
    check_cap(n, COXETER_ENUMERATION_CAP, "enumerate_coxeter")
    interior = range(1, n - 1)
    out = []
    for flags in itertools.product((True, False), repeat=n - 2):
        up = [r for r, f in zip(interior, flags) if f]
        down = [r for r, f in zip(interior, flags) if not f][::-1]
        cycle = [0] + up + [n - 1] + down
        w = [0] * n
        for k, x in enumerate(cycle):
            w[x] = cycle[(k + 1) % n]
        out.append(tuple(w))
    return sorted(out)


def perm_poset(w: Sequence[int]) -> Poset:
    """``i < j`` iff ``i < j`` and ``w(i) < w(j)``."""
    n = len(w)
    down = [0] * n
    for j in range(n):
        for i in range(j):
            if w[i] < w[j]:
                down[j] |= 1 << i
    return Poset.from_down_masks(down)


def coxeter_from_two_chain(p: Poset) -> Permutation:
    """A Coxeter element ``w`` with ``perm_poset(w)`` isomorphic to ``p``.

    Of the two solutions ``w`` and ``w^-1`` the lexicographically smaller one is
    returned.
    """
    w = w_of(canonical_sequence(p))
    return min(w, inverse(w))


def coxeter_key(w: Sequence[int]) -> str:
    """Isomorphism invariant of ``perm_poset(w)`` for Coxeter ``w``."""
    return canonical_sequence(perm_poset(w))


def format_permutation(w: Sequence[int]) -> str:
    return "[" + ",".join(str(x + 1) for x in w) + "]"


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Parse 1-indexed one-line ``[2,3,4,1]`` or cycle ``(1,2,3,4)(5,6)`` notation."""
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise ParseError(f"unterminated one-line permutation: {text!r}")
        body = text[1:-1].strip()
        try:
            images = [int(x) - 1 for x in body.split(",")] if body else []
        except ValueError:
            raise ParseError(f"bad permutation: {text!r}") from None
        if sorted(images) != list(range(len(images))):
            raise ParseError(f"not a bijection: {text!r}")
        return tuple(images)
    cycles = re.findall(r"\(([^()]*)\)", text)
    if not cycles or re.sub(r"\([^()]*\)", "", text).strip():
        raise ParseError(f"bad cycle notation: {text!r}")
    try:
        parsed = [[int(x) - 1 for x in c.split(",") if x.strip()] for c in cycles]
    except ValueError:
        raise ParseError(f"bad cycle notation: {text!r}") from None
    size = max([x + 1 for c in parsed for x in c] + [n or 0])
    w = list(range(size))
    seen = set()
    for c in parsed:
        for k, x in enumerate(c):
            if x < 0 or x in seen:
                raise ParseError(f"cycles are not disjoint: {text!r}")
            seen.add(x)
            w[x] = c[(k + 1) % len(c)]
    return tuple(w)
