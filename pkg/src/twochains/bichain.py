"""Recognizers for 2-chains, supermaximal elements, and enumeration by size."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotMaximal, NotTwoChain, SizeError, check_cap
from .poset import (
    Poset,
    antichain,
    bits,
    chain_pair_decompositions,
    count_chain_covers,
    ideal_layers,
    maximal_elements,
    minimal_proper_refinements,
    popcount,
)

DEFINITION_CAP = 12
ENUMERATION_CAP = 16


@dataclass(frozen=True)
class TwoChainCertificate:
    decomposition: tuple[frozenset[int], frozenset[int]]
    supermaximal: int | None
    other_maximal: int | None


def top_pair(p: Poset, rem: int | None = None) -> tuple[int, int] | None:
    """``(supermaximal, other maximal)`` of the subposet on mask ``rem``.

    Returns ``None`` unless that subposet has exactly two maximal elements with
    exactly one of them above every non-maximal element.
    """
    if rem is None:
        rem = p.full_mask
    tops = [x for x in bits(rem) if not p.up[x] & rem]
    if len(tops) != 2:
        return None
    a, b = tops
    rest = rem & ~(1 << a | 1 << b)
    a_super = p.down[a] & rest == rest
    b_super = p.down[b] & rest == rest
    if a_super == b_super:
        return None
    return (a, b) if a_super else (b, a)


def is_two_chain_by_definition(p: Poset) -> bool:
    """Unique chain-pair cover, and no single-pair refinement keeps it unique.

    Posets with fewer than two elements are rejected (the empty poset satisfies
    both conditions vacuously but is not counted as a 2-chain).
    """
    check_cap(p.n, DEFINITION_CAP, "is_two_chain_by_definition")
    if p.n < 2:
        return False
    if count_chain_covers(p, 2, limit=2) != 1:
        return False
    return all(count_chain_covers(q, 2, limit=2) >= 2 for q in minimal_proper_refinements(p))


def is_two_chain_fast(p: Poset) -> bool:
    """Whether the incomparability graph of ``p`` is a tree (``n >= 2``)."""
    n = p.n
    if n < 2:
        return False
    related = sum(popcount(d) for d in p.down)
    if n * (n - 1) // 2 - related != n - 1:
        return False
    full = p.full_mask
    comp = p.comparable_masks
    seen = frontier = 1
    while frontier:
        x = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        new = full & ~comp[x] & ~(1 << x) & ~seen
        seen |= new
        frontier |= new
    return seen == full


def has_two_ideals_each_size(p: Poset) -> bool:
    if p.n < 2:
        return False
    for m, layer in enumerate(ideal_layers(p)):
        if m == p.n:
            break
        if m >= 1 and len(layer) != 2:
            return False
    return True


def supermaximal_element(p: Poset, strict: bool = False) -> int | None:
    """The unique supermaximal element, or ``None``.

    For ``n <= 2`` every maximal element is vacuously supermaximal and ``None``
    is returned.  With ``strict`` a missing or ambiguous answer raises
    :class:`NotTwoChain`.
    """
    pair = top_pair(p) if p.n >= 3 else None
    if pair is None:
        if strict:
            raise NotTwoChain("no unique supermaximal element")
        return None
    return pair[0]


def certificate(p: Poset) -> TwoChainCertificate:
    if not is_two_chain_fast(p):
        raise NotTwoChain("poset is not a 2-chain")
    (decomp,) = chain_pair_decompositions(p)
    pair = top_pair(p) if p.n >= 3 else None
    return TwoChainCertificate(
        decomposition=decomp,
        supermaximal=pair[0] if pair else None,
        other_maximal=pair[1] if pair else None,
    )


def remove_supermaximal(p: Poset) -> Poset:
    if p.n < 3 or not is_two_chain_fast(p):
        raise NotTwoChain("need a 2-chain with at least 3 elements")
    top = supermaximal_element(p, strict=True)
    return p.induced(x for x in range(p.n) if x != top)


def extend_with_supermaximal(p: Poset, keep: int) -> Poset:
    """Add element ``n`` above everything except the maximal element ``keep``."""
    if not is_two_chain_fast(p):
        raise NotTwoChain("poset is not a 2-chain")
    if keep not in maximal_elements(p):
        raise NotMaximal(f"{keep} is not maximal")
    return Poset.from_down_masks(list(p.down) + [p.full_mask & ~(1 << keep)])


def enumerate_two_chains(n: int) -> list[Poset]:
    """One 2-chain per isomorphism class, ordered by canonical sequence.

    Built level by level: every class of size ``k`` is extended in both ways
    and the children are deduplicated by canonical sequence.
    """
    from .binseq import canonical_sequence

    if n < 2:
        raise SizeError(f"2-chains have at least 2 elements, got {n}")
    check_cap(n, ENUMERATION_CAP, "enumerate_two_chains")
    level = {"": antichain(2)}
    for _ in range(3, n + 1):
        nxt: dict[str, Poset] = {}
        for p in level.values():
            for keep in sorted(maximal_elements(p)):
                q = extend_with_supermaximal(p, keep)
                nxt.setdefault(canonical_sequence(q), q)
        level = nxt
    return [level[a] for a in sorted(level)]
