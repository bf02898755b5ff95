import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import one_indexed
from twochains.bichain import enumerate_two_chains, is_two_chain_by_definition, is_two_chain_fast
from twochains.binseq import alternating, canonical_sequence, seq_poset
from twochains.errors import ShapeError, SizeError
from twochains.poset import antichain, are_isomorphic, chain, covers, is_isomorphism
from twochains.splice import (
    glue,
    make_qn,
    reconstruct,
    sequence_of_shape,
    shape_of_sequence,
    shape_size,
    splice,
    splice_decomposition,
    splice_sequences,
)
from twochains.verify import alternating_index_map, same_two_chain

SMALL = [p for n in range(2, 7) for p in enumerate_two_chains(n)]


def test_qn_examples():
    q8 = make_qn(8)
    expected = sorted({(a, a + 2) for a in range(6)} | {(a, a + 3) for a in range(5)})
    assert covers(q8) == expected
    assert make_qn(2) == antichain(2)
    assert covers(make_qn(3)) == [(0, 2)]
    assert make_qn(5, 1) == chain(5)


def test_splice_001_with_001():
    p = seq_poset("001").order
    got = splice(p, p)
    # a<b<c<d and e<f<g<h, with c<h and f<b, letters a..h as 1..8
    expected = one_indexed(8, [(1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8), (3, 8), (6, 2)])
    assert are_isomorphic(got, expected)
    assert are_isomorphic(got, seq_poset("001110").order)


def test_empty_pair_is_identity():
    for p in SMALL:
        assert splice(p, antichain(2)) == p
        assert are_isomorphic(splice(antichain(2), p), p)


def test_splice_shape_errors():
    with pytest.raises(ShapeError):
        splice(chain(3), make_qn(4))
    with pytest.raises(ShapeError):
        splice(make_qn(4), chain(3))
    with pytest.raises(ShapeError):
        glue(make_qn(4), make_qn(4), (2, 3), (0,))


def test_splice_of_qn_blocks_example():
    assert are_isomorphic(reconstruct((4, 5, 3)), seq_poset("011011").order)
    assert splice_decomposition(seq_poset("011011").order) == (4, 5, 3)


def test_glued_sizes():
    for p, q in itertools.product(SMALL[:6], repeat=2):
        assert splice(p, q).n == p.n + q.n - 2


def test_splice_keeps_lower_labels():
    p, q = make_qn(5), make_qn(4)
    s = splice(p, q)
    assert s.induced(range(5)) == p


def test_splice_of_two_chains_is_two_chain():
    for p, q in itertools.product(SMALL, repeat=2):
        s = splice(p, q)
        assert is_two_chain_fast(s)
        assert is_two_chain_by_definition(s)


def test_splice_sequence_examples():
    assert splice_sequences("001", "001") == "001110"
    assert splice_sequences("01", "10") == "0110"
    assert splice_sequences("0110", "") == "0110"
    assert splice_sequences("", "0110") == "0110"


@given(st.text("01", max_size=4), st.text("01", max_size=4))
def test_splice_sequences_matches_posets(a, b):
    glued = splice(seq_poset(a).order, seq_poset(b).order)
    assert are_isomorphic(glued, seq_poset(splice_sequences(a, b)).order)


@given(st.text("01", max_size=8), st.text("01", max_size=8))
def test_splice_sequences_matches_posets_large(a, b):
    glued = splice(seq_poset(a).order, seq_poset(b).order)
    assert same_two_chain(glued, seq_poset(splice_sequences(a, b)).order)


@given(st.sampled_from(SMALL[:9]), st.sampled_from(SMALL[:9]), st.sampled_from(SMALL[:9]))
def test_associativity(p, q, r):
    left, right = splice(splice(p, q), r), splice(p, splice(q, r))
    assert same_two_chain(left, right)


@pytest.mark.parametrize("n", range(0, 13))
def test_alternating_index_map(n):
    assert is_isomorphism(seq_poset(alternating(n)).order, make_qn(n + 2), alternating_index_map(n))


def test_decomposition_examples():
    for n in range(3, 12):
        assert splice_decomposition(make_qn(n)) == (n,)
        point = one_indexed(n, [(i, i + 1) for i in range(1, n - 1)])
        shape = splice_decomposition(point)
        assert shape == (3,) * (n - 2)
        if n <= 10:
            assert are_isomorphic(reconstruct(shape), point)
    with pytest.raises(SizeError):
        splice_decomposition(antichain(2))


@given(st.lists(st.integers(3, 7), max_size=4))
def test_shape_round_trip(shape):
    shape = tuple(shape)
    p = reconstruct(shape)
    assert p.n == shape_size(shape)
    assert shape_of_sequence(sequence_of_shape(shape)) == shape
    if p.n >= 3:
        assert splice_decomposition(p) == shape
        assert canonical_sequence(p) == sequence_of_shape(shape)


def test_bad_shapes():
    with pytest.raises(ShapeError):
        reconstruct((3, 2))
    with pytest.raises(ShapeError):
        sequence_of_shape((1,))


def test_shape_sizes(two_chains_by_size):
    for n, ps in two_chains_by_size.items():
        if n < 3:
            continue
        for p in ps:
            shape = splice_decomposition(p)
            assert sum(shape) == n + 2 * len(shape) - 2
            assert same_two_chain(reconstruct(shape), p)
