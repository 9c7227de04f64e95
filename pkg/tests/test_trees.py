# Copyright (c) 2024 The phigraph developers

import networkx as nx
import pytest

from phigraph.lib.trees import UnlabeledTree, code_height, code_size, split_code


def path(n):
    return UnlabeledTree(n, [(i, i + 1) for i in range(n - 1)])


def star(n):
    return UnlabeledTree(n + 1, [(0, i) for i in range(1, n + 1)])


def test_edges_are_normalized():
    tree = UnlabeledTree(3, [(2, 1), (1, 0)])
    assert tree.edges == ((0, 1), (1, 2))
    assert tree.neighbors(1) == (0, 2)
    assert tree.degree(1) == 2
    assert tree.leaves() == [0, 2]


@pytest.mark.parametrize("order, edges", [
    (0, []),
    (3, [(0, 1)]),
    (3, [(0, 1), (1, 2), (0, 2)]),
    (4, [(0, 1), (2, 3), (1, 0)]),
    (2, [(0, 2)]),
    (2, [(1, 1)]),
    ])
def test_rejects_non_trees(order, edges):
    with pytest.raises(ValueError):
        UnlabeledTree(order, edges)


def test_parse_edge_list():
    text = "# a path\n0 1\n\n1 2   # middle\n2 3\n"
    assert UnlabeledTree.parse(text) == path(4)


def test_parse_single_vertex():
    tree = UnlabeledTree.parse("order 1\n")
    assert tree.order == 1 and tree.edges == ()
    assert UnlabeledTree.parse(tree.to_text()) == tree


def test_rejects_huge_ids_without_allocating():
    with pytest.raises(ValueError, match="2 edges on 30000001 vertices"):
        UnlabeledTree.parse("0 1\n1 30000000\n")
    with pytest.raises(ValueError, match="outside"):
        UnlabeledTree(3, [(0, 1), (1, 30000000)])
    with pytest.raises(ValueError, match="outside"):
        UnlabeledTree(3, [(0, 1), (-1, 2)])


@pytest.mark.parametrize("text", ["", "0 1 2\n", "0 x\n", "order 3\n0 1\n"])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(ValueError):
        UnlabeledTree.parse(text)


def test_dot_round_trip():
    tree = star(4)
    assert UnlabeledTree.parse(tree.to_dot()) == tree


def test_parse_dot_with_arbitrary_ids():
    text = "graph G {\n  10 -- 20;\n  20 -- 30;\n  20 -- 40;\n}\n"
    tree = UnlabeledTree.parse(text)
    assert tree.order == 4
    assert tree.is_isomorphic(star(3))


def test_from_networkx_numbers_breadth_first():
    graph = nx.Graph([(5, 7), (5, 6), (7, 8)])
    tree = UnlabeledTree.from_networkx(graph, root=5)
    assert tree.edges == ((0, 1), (0, 2), (2, 3))


def test_rooted_codes():
    assert star(3).rooted_code(0) == '(()()())'
    assert star(3).rooted_code(1) == '((()()))'
    assert path(1).rooted_code(0) == '()'
    codes, parent = path(3).rooted_codes(0)
    assert codes == {0: '((()))', 1: '(())', 2: '()'}
    assert parent == {0: None, 1: 0, 2: 1}


def test_split_code():
    assert split_code('(()(())())') == ['()', '(())', '()']
    assert split_code('()') == []
    assert code_size('(()(())())') == 5


def test_code_height():
    assert code_height('()') == 0
    assert code_height(star(3).rooted_code(0)) == 1
    assert code_height(star(3).rooted_code(1)) == 2
    assert code_height(path(66).rooted_code(0)) == 65
    assert code_height(path(66).rooted_code(33)) == 33


def test_centers():
    assert path(5).centers() == [2]
    assert path(4).centers() == [1, 2]
    assert path(1).centers() == [0]


def test_isomorphism():
    relabeled = UnlabeledTree(4, [(3, 1), (1, 0), (0, 2)])
    assert path(4).is_isomorphic(relabeled)
    assert not star(3).is_isomorphic(path(4))
    assert path(4).canonical_form() == relabeled.canonical_form()


def test_isomorphism_sees_beyond_degree_sequences():
    # same degree sequence, different shapes
    first = UnlabeledTree(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 6),
                              (4, 7)])
    second = UnlabeledTree(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 6),
                               (3, 7)])
    assert first.degree_sequence() == second.degree_sequence()
    assert not first.is_isomorphic(second)
