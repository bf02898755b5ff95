import itertools

import networkx as nx
import pytest
from hypothesis import given

from conftest import one_indexed, posets
from twochains.bichain import enumerate_two_chains, is_two_chain_fast
from twochains.binseq import canonical_sequence
from twochains.errors import NotCaterpillar, SizeError
from twochains.graphs import (
    UGraph,
    caterpillar_class_count,
    caterpillar_code,
    comparability_graph,
    complement,
    incomparability_graph,
    is_caterpillar,
    is_realizable_tree,
    is_tree,
    is_two_clique,
    path_graph,
    spine,
    star_graph,
    triskelion,
    two_chain_from_caterpillar,
)
from twochains.poset import all_labelled_posets, antichain, are_isomorphic, dual
from twochains.splice import make_qn


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_graph_validation():
    with pytest.raises(ValueError):
        UGraph(3, frozenset({(1, 1)}))
    with pytest.raises(IndexError):
        UGraph(2, frozenset({(0, 2)}))
    assert UGraph(3, frozenset({(2, 0)})).edges == {(0, 2)}


def test_graph_examples():
    for n in range(2, 10):
        assert incomparability_graph(make_qn(n)) == path_graph(n)
    point = one_indexed(6, [(1, 2), (2, 3), (3, 4), (4, 5)])
    assert nx.is_isomorphic(to_nx(incomparability_graph(point)), nx.star_graph(5))
    assert len(incomparability_graph(antichain(3)).edges) == 3
    assert not comparability_graph(antichain(3)).edges


@given(posets(max_n=8))
def test_graphs_are_complementary(p):
    comp, incomp = comparability_graph(p), incomparability_graph(p)
    assert not comp.edges & incomp.edges
    assert len(comp.edges) + len(incomp.edges) == p.n * (p.n - 1) // 2


@given(posets(max_n=9))
def test_tree_check_matches_networkx(p):
    g = incomparability_graph(p)
    assert is_tree(g) == (g.n > 0 and nx.is_tree(to_nx(g)))


def brute_caterpillar(g):
    h = to_nx(g)
    if g.n == 0 or not nx.is_tree(h):
        return False
    inner = [v for v in h if h.degree(v) >= 2]
    sub = h.subgraph(inner)
    return len(inner) <= 1 or (nx.is_connected(sub) and max(d for _, d in sub.degree) <= 2)


def test_caterpillar_examples():
    for n in range(1, 9):
        assert is_caterpillar(path_graph(n))
        assert is_caterpillar(star_graph(n))
    assert is_tree(triskelion()) and not is_caterpillar(triskelion())
    assert spine(triskelion()) is None
    assert spine(path_graph(5)) in ([1, 2, 3], [3, 2, 1])


@pytest.mark.parametrize("n", range(1, 9))
def test_caterpillar_recognition_on_all_trees(n):
    for t in nx.nonisomorphic_trees(n) if n > 1 else [nx.empty_graph(1)]:
        g = UGraph(n, frozenset(t.edges))
        assert is_caterpillar(g) == brute_caterpillar(g)
        assert is_realizable_tree(g) == is_caterpillar(g)


@pytest.mark.parametrize("n", range(2, 10))
def test_caterpillar_code_is_complete(n):
    trees = [UGraph(n, frozenset(t.edges)) for t in nx.nonisomorphic_trees(n)]
    cats = [g for g in trees if is_caterpillar(g)]
    assert len({caterpillar_code(g) for g in cats}) == len(cats)
    with pytest.raises(NotCaterpillar):
        caterpillar_code(UGraph(n, frozenset()))


def test_two_clique_examples():
    assert is_two_clique(complement(path_graph(5)))
    assert is_two_clique(complement(path_graph(5)), method="definition")
    k5 = complement(UGraph(5, frozenset()))
    assert not is_two_clique(k5) and not is_two_clique(k5, method="definition")
    assert is_two_clique(complement(triskelion()))
    assert is_two_clique(complement(triskelion()), method="definition")
    assert not is_realizable_tree(triskelion())
    with pytest.raises(ValueError):
        is_two_clique(k5, method="other")
    with pytest.raises(SizeError):
        is_two_clique(path_graph(13), method="definition")


@pytest.mark.parametrize("n", range(0, 6))
def test_three_characterisations_agree(n):
    for p in all_labelled_posets(n):
        comp = comparability_graph(p)
        fast = is_two_chain_fast(p)
        if n >= 2:
            assert fast == is_tree(incomparability_graph(p))
        assert is_two_clique(comp) == fast
        assert is_two_clique(comp, method="definition") == fast


@given(posets(min_n=6, max_n=9))
def test_two_clique_on_random_posets(p):
    assert is_two_clique(comparability_graph(p)) == is_two_chain_fast(p)


def test_all_incomparability_graphs_are_caterpillars(two_chains_by_size):
    for ps in two_chains_by_size.values():
        for p in ps:
            g = incomparability_graph(p)
            assert is_caterpillar(g) and len(g.edges) == p.n - 1


def test_caterpillar_to_two_chain_examples():
    for n in range(2, 10):
        assert are_isomorphic(two_chain_from_caterpillar(path_graph(n)), make_qn(n))
        point = one_indexed(n, [(i, i + 1) for i in range(1, n - 1)])
        assert are_isomorphic(two_chain_from_caterpillar(star_graph(n)), point)
    with pytest.raises(NotCaterpillar):
        two_chain_from_caterpillar(triskelion())


def test_caterpillar_round_trip(two_chains_by_size):
    for n, ps in two_chains_by_size.items():
        if n > 9:
            continue
        for p in ps:
            q = two_chain_from_caterpillar(incomparability_graph(p))
            assert are_isomorphic(q, p) or are_isomorphic(q, dual(p))


def test_dual_pairs_share_graphs_and_nothing_else(two_chains_by_size):
    for n, ps in two_chains_by_size.items():
        graphs = [to_nx(incomparability_graph(p)) for p in ps]
        for p, g in zip(ps, graphs):
            assert nx.is_isomorphic(g, to_nx(incomparability_graph(dual(p))))
        if n > 9:
            continue
        for (i, p), (j, q) in itertools.combinations(enumerate(ps), 2):
            dual_pair = canonical_sequence(q) == canonical_sequence(dual(p))
            assert nx.is_isomorphic(graphs[i], graphs[j]) == dual_pair


@pytest.mark.parametrize("n,count", [(2, 1), (3, 1), (4, 2), (5, 3), (12, 272)])
def test_class_count_examples(n, count):
    assert caterpillar_class_count(n) == count


@pytest.mark.parametrize("n", range(2, 11))
def test_class_count_matches_trees(n):
    cats = [t for t in nx.nonisomorphic_trees(n) if brute_caterpillar(UGraph(n, frozenset(t.edges)))]
    assert len(cats) == caterpillar_class_count(n)
