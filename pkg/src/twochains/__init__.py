"""Finite posets uniquely covered by two chains, and everything built from them."""

from .bichain import (
    certificate,
    enumerate_two_chains,
    extend_with_supermaximal,
    has_two_ideals_each_size,
    is_two_chain_by_definition,
    is_two_chain_fast,
    remove_supermaximal,
    supermaximal_element,
)
from .binseq import canonical_sequence, complement, is_self_dual, reverse, seq_poset, w_of
from .counting import cover_count_formula, extremal_bounds, linear_extension_recurrence
from .coxeter import coxeter_from_two_chain, enumerate_coxeter, is_coxeter, perm_poset
from .errors import (
    CycleError,
    LengthMismatch,
    NotCaterpillar,
    NotMaximal,
    NotTwoChain,
    ParseError,
    ShapeError,
    SizeError,
    TwoChainError,
)
from .graphs import incomparability_graph, is_caterpillar, two_chain_from_caterpillar
from .poset import Poset, antichain, are_isomorphic, chain, covers, dual, poset_from_covers
from .posetfile import format_poset, parse_poset, read_poset
from .splice import make_qn, reconstruct, splice_decomposition, splice_sequences

__all__ = [name for name in dir() if not name.startswith("_")]
