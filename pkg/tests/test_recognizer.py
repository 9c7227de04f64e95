# Copyright (c) 2024 The phigraph developers

import pytest

from phigraph import build, closure, isomorphic
from phigraph.errors import DomainError, MalformedLabelingError
from phigraph.families import generate
from phigraph.lib.trees import UnlabeledTree
from phigraph.recognizer import (
    BUDGET_EXCEEDED, REALIZED, REFUTED, Recognizer, certify, parse_tree,
    recognize, recognize_family
    )


def assert_witness(tree, result):
    assert result.verdict == REALIZED
    assert certify(tree, result.labeling)
    assert isomorphic(build(result.minimal_seed), tree)
    assert result.labeling[result.root] == 1
    assert result.nodes_explored >= 0


@pytest.mark.parametrize("n, labels", [
    (1, {1, 2}), (2, {1, 2, 3}), (3, {1, 2, 3, 4}), (4, {1, 2, 3, 4, 6}),
    ])
def test_small_stars_are_realized(n, labels):
    tree = generate(f'star:{n}')
    result = recognize(tree)
    assert_witness(tree, result)
    assert closure(result.labeling.values()) == labels


@pytest.mark.parametrize("n", range(5, 9))
def test_large_stars_are_refuted(n):
    result = recognize(generate(f'star:{n}'))
    assert result.verdict == REFUTED
    assert result.labeling is None and result.minimal_seed is None


def test_star_witness():
    result = recognize(generate('star:4'))
    assert result.labeling == {0: 2, 1: 1, 2: 3, 3: 4, 4: 6}
    assert result.root == 1


def test_path_witness_takes_smallest_labels():
    result = recognize(generate('path:4'))
    assert result.labeling == {0: 1, 1: 2, 2: 4, 3: 5}
    assert result.minimal_seed == {5}


@pytest.mark.parametrize("n", range(2, 21))
def test_paths_are_realized(n):
    tree = generate(f'path:{n}')
    assert_witness(tree, recognize(tree))


@pytest.mark.parametrize("text", [
    'isomer:neopentane', 'corona:path:2,m=4', 'corona:path:3,m=4',
    'banana:1x6', 'banana:2x6', 'banana:1x7', 'banana:2x7',
    ])
def test_refuted_families(text):
    result = recognize_family(text)
    assert result.verdict == REFUTED
    assert result.roots_tried >= 1


@pytest.mark.parametrize("text", [
    *(f'centipede:{n}' for n in range(2, 11)),
    *(f'alkane:{n}' for n in range(1, 9)),
    'isomer:butane', 'isomer:isobutane', 'isomer:pentane', 'isomer:isopentane',
    'nanostar:d2',
    ])
def test_realized_families(text):
    tree = generate(text)
    assert_witness(tree, recognize_family(text))


def test_single_vertex():
    tree = parse_tree("order 1\n")
    result = recognize(tree)
    assert result.verdict == REALIZED
    assert result.labeling == {0: 1}
    assert result.minimal_seed == {1}
    assert certify(tree, result.labeling)


def test_budget_is_a_verdict():
    result = recognize(generate('star:5'), budget=1)
    assert result.verdict == BUDGET_EXCEEDED
    assert result.labeling is None


def test_refutation_is_stable_under_larger_budget():
    tree = generate('banana:1x6')
    small = recognize(tree)
    large = recognize(tree, budget=10 * max(small.nodes_explored, 1))
    assert small.verdict == large.verdict == REFUTED
    assert small.nodes_explored <= 10**7


def test_deterministic_witness():
    tree = generate('alkane:5')
    assert recognize(tree) == recognize(tree)


def test_root_deduplication_keeps_the_answer():
    for text in ('star:6', 'centipede:5', 'isomer:isopentane'):
        tree = generate(text)
        fast = Recognizer().recognize(tree)
        slow = Recognizer(dedupe_roots=False).recognize(tree)
        assert fast.verdict == slow.verdict
        assert fast.labeling == slow.labeling
        assert fast.roots_tried <= slow.roots_tried


def test_options_update():
    recognizer = Recognizer()
    recognizer.options.update(budget=1)
    assert recognizer(generate('star:5')).verdict == BUDGET_EXCEEDED


def test_certify_examples():
    star = generate('star:4')
    path = generate('path:4')
    assert certify(star, {0: 2, 1: 1, 2: 3, 3: 4, 4: 6})
    assert certify(path, {0: 8, 1: 4, 2: 2, 3: 1})
    assert not certify(path, {0: 8, 1: 4, 2: 2, 3: 3})
    assert not certify(path, {0: 1, 1: 4, 2: 2, 3: 8})


@pytest.mark.parametrize("labeling", [
    {0: 8, 1: 4, 2: 2},
    {0: 8, 1: 4, 2: 2, 3: 1, 4: 16},
    {0: 8, 1: 4, 2: 4, 3: 1},
    {0: 8, 1: 4, 2: 2, 3: 0},
    {0: 8, 1: 4, 2: 2, 3: 'one'},
    ])
def test_certify_rejects_malformed_labelings(labeling):
    with pytest.raises(MalformedLabelingError):
        certify(generate('path:4'), labeling)


def test_parse_tree():
    assert parse_tree("0 1\n1 2\n") == UnlabeledTree(3, [(0, 1), (1, 2)])
    with pytest.raises(DomainError):
        parse_tree("0 1\n2 3\n")


@pytest.mark.parametrize("text", ['path:66', 'path:100'])
def test_trees_too_tall_for_64_bit_labels_stop_at_once(text):
    result = recognize_family(text)
    assert result.verdict == BUDGET_EXCEEDED
    assert result.nodes_explored == 0
    assert result.roots_tried == 0
