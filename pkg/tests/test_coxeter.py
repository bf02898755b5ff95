import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import one_indexed
from twochains.bichain import enumerate_two_chains, is_two_chain_fast
from twochains.binseq import w_of
from twochains.coxeter import (
    compose,
    coxeter_elements_by_generators,
    coxeter_from_two_chain,
    coxeter_key,
    enumerate_coxeter,
    format_permutation,
    inverse,
    inversion_length,
    is_coxeter,
    order,
    parse_permutation,
    perm_poset,
)
from twochains.errors import ParseError, SizeError
from twochains.graphs import incomparability_graph, _connected
from twochains.poset import are_isomorphic, chain, incomparable_pair_count, is_isomorphism
from twochains.splice import make_qn

perms = st.integers(1, 8).flatmap(lambda n: st.permutations(list(range(n))))


def test_length_examples():
    assert inversion_length((0, 1, 2, 3)) == 0
    assert inversion_length(tuple(range(6))[::-1]) == 15


@given(perms)
def test_inverse_and_compose(w):
    w = tuple(w)
    ident = tuple(range(len(w)))
    assert compose(w, inverse(w)) == ident == compose(inverse(w), w)
    assert inversion_length(inverse(w)) == inversion_length(w)


def test_s4():
    cycles = ["(1,2,3,4)", "(1,3,4,2)", "(1,2,4,3)", "(1,4,3,2)"]
    expected = sorted(parse_permutation(c) for c in cycles)
    assert enumerate_coxeter(4) == expected
    assert [w for w in itertools.permutations(range(4)) if is_coxeter(w)] == expected


def test_small_cases():
    assert enumerate_coxeter(2) == [(1, 0)]
    assert not is_coxeter((0, 1))
    assert not is_coxeter(tuple(range(5)))
    with pytest.raises(SizeError):
        is_coxeter((0,))
    with pytest.raises(SizeError):
        enumerate_coxeter(13)
    with pytest.raises(SizeError):
        coxeter_elements_by_generators(8)


@pytest.mark.parametrize("n", range(2, 8))
def test_criterion_matches_generator_products(n):
    by_criterion = {w for w in itertools.permutations(range(n)) if is_coxeter(w)}
    assert by_criterion == coxeter_elements_by_generators(n) == set(enumerate_coxeter(n))


@pytest.mark.parametrize("n", range(2, 11))
def test_coxeter_properties(n):
    elems = enumerate_coxeter(n)
    assert len(elems) == 2 ** (n - 2)
    for w in elems:
        assert inversion_length(w) == n - 1
        assert order(w) == n
        if n >= 3:
            assert w != inverse(w)


def test_perm_poset_examples():
    w = parse_permutation("[2,3,4,1]")
    assert perm_poset(w) == one_indexed(4, [(1, 2), (2, 3)])
    assert perm_poset(tuple(range(5))) == chain(5)


@given(perms)
def test_perm_poset_properties(w):
    w = tuple(w)
    p = perm_poset(w)
    assert incomparable_pair_count(p) == inversion_length(w)
    # w itself maps the poset of w onto the poset of its inverse
    assert is_isomorphism(p, perm_poset(inverse(w)), w)


@pytest.mark.parametrize("n", range(2, 7))
def test_two_chain_iff_coxeter(n):
    for w in itertools.permutations(range(n)):
        assert is_two_chain_fast(perm_poset(w)) == is_coxeter(w)


@pytest.mark.parametrize("n", range(3, 7))
def test_other_length_n_minus_1_elements_are_disconnected(n):
    for w in itertools.permutations(range(n)):
        if inversion_length(w) == n - 1 and not is_coxeter(w):
            assert not _connected(incomparability_graph(perm_poset(w)))


@pytest.mark.parametrize("n", range(2, 9))
def test_isomorphic_iff_inverse_pair(n):
    elems = enumerate_coxeter(n)
    for v, w in itertools.combinations_with_replacement(elems, 2):
        same = coxeter_key(v) == coxeter_key(w)
        assert same == (v in (w, inverse(w)))
        if n <= 6:
            assert are_isomorphic(perm_poset(v), perm_poset(w)) == same


@given(st.text("01", max_size=10))
def test_word_permutation_is_coxeter(a):
    assert is_coxeter(w_of(a))


def test_from_two_chain_examples():
    point = one_indexed(4, [(1, 2), (2, 3)])
    w = coxeter_from_two_chain(point)
    assert w in (parse_permutation("[2,3,4,1]"), inverse(parse_permutation("[2,3,4,1]")))
    assert format_permutation(w) == "[2,3,4,1]"
    for n in range(2, 9):
        assert are_isomorphic(perm_poset(coxeter_from_two_chain(make_qn(n))), make_qn(n))


def test_from_two_chain_round_trip(two_chains_by_size):
    for n, ps in two_chains_by_size.items():
        for p in ps:
            w = coxeter_from_two_chain(p)
            assert is_coxeter(w) and w <= inverse(w)
            assert are_isomorphic(perm_poset(w), p)


def test_permutation_io():
    assert format_permutation((1, 2, 3, 0)) == "[2,3,4,1]"
    assert parse_permutation("[2,3,4,1]") == (1, 2, 3, 0)
    assert parse_permutation("(1,2,3,4)") == (1, 2, 3, 0)
    assert parse_permutation("(1,2)", n=4) == (1, 0, 2, 3)
    assert parse_permutation("(1,2)(3,4)") == (1, 0, 3, 2)
    for bad in ("[1,1]", "[1,2", "(1,2)(2,3)", "1,2", "[a]"):
        with pytest.raises(ParseError):
            parse_permutation(bad)


@given(perms)
def test_format_parse_round_trip(w):
    assert parse_permutation(format_permutation(w)) == tuple(w)
