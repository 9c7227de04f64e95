# Copyright (c) 2024 The phigraph developers

import logging

import pytest

from phigraph import build, closure, isomorphic
from phigraph.errors import FamilySpecError, RangeError
from phigraph.families import FamilySpec, generate, known_seed
from phigraph.families.families import ISOMERS


@pytest.mark.parametrize("text", [
    'path:5', 'star:4', 'centipede:7', 'corona:path:3,m=4', 'banana:2x7',
    'alkane:6', 'isomer:neopentane', 'nanostar:d2',
    'corona:corona:star:2,m=1,m=2',
    ])
def test_spec_strings_round_trip(text):
    spec = FamilySpec.parse(text)
    assert str(spec) == text
    assert FamilySpec.parse(str(spec)) == spec


def test_nested_corona_parses_from_the_right():
    spec = FamilySpec.parse('corona:corona:star:2,m=1,m=2')
    assert spec.m == 2
    assert spec.base.kind == 'corona' and spec.base.m == 1
    assert spec.base.base == FamilySpec('star', n=2)


@pytest.mark.parametrize("text", [
    'path:0', 'centipede:1', 'banana:2x1', 'banana:0x6', 'banana:2', 'star',
    'star:', 'foo:3', 'isomer:hexane', 'corona:path:3', 'corona:path:3,m=0',
    'nanostar:d3', 'path:-1', 'path:two',
    ])
def test_bad_spec_strings(text):
    with pytest.raises(FamilySpecError):
        FamilySpec.parse(text)


def test_spec_constructor_validates():
    with pytest.raises(FamilySpecError):
        FamilySpec('star', n=True)
    with pytest.raises(FamilySpecError):
        FamilySpec('corona', m=2)


def test_generated_ids_are_breadth_first():
    assert generate('path:4').edges == ((0, 1), (1, 2), (2, 3))
    assert generate('star:3').edges == ((0, 1), (0, 2), (0, 3))
    assert generate('path:1').order == 1


def test_alkane_one_is_methane():
    assert isomorphic(generate('alkane:1'), generate('star:4'))
    assert generate('alkane:1') == generate('isomer:methane')


@pytest.mark.parametrize("n", range(1, 9))
def test_alkane_degrees(n):
    tree = generate(FamilySpec('alkane', n=n))
    degrees = tree.degree_sequence()
    assert tree.order == 3*n + 2
    assert degrees.count(4) == n
    assert degrees.count(1) == 2*n + 2


def test_isomer_orders():
    orders = {name: generate(FamilySpec('isomer', name=name)).order
              for name in ISOMERS}
    assert orders == dict(methane=5, ethane=8, propane=11, butane=14,
                          isobutane=14, pentane=17, isopentane=17, neopentane=17)
    assert not isomorphic(generate('isomer:butane'), generate('isomer:isobutane'))


def test_centipede_and_corona():
    assert generate('centipede:3').order == 6
    for n in range(2, 8):
        assert generate(f'corona:path:{n},m=1') == generate(f'centipede:{n}')
    assert generate('corona:path:2,m=4').order == 10


@pytest.mark.parametrize("n, m", [(1, 6), (2, 6), (1, 7), (2, 7), (3, 2)])
def test_banana_order(n, m):
    tree = generate(FamilySpec('banana', n=n, m=m))
    assert tree.order == n * (m + 1) + 1
    assert tree.degree(0) == n


def test_nanostar():
    tree = generate('nanostar:d2')
    assert tree.order == 16
    assert len(tree.leaves()) == 6
    assert tree.degree_sequence().count(3) == 4


@pytest.mark.parametrize("text, seed", [
    ('path:5', {16}),
    ('path:1', {1}),
    ('star:4', {1, 2, 3, 4, 6}),
    ('star:1', {1, 2}),
    ('nanostar:d2', {3, 256, 376, 384, 564}),
    ('alkane:6', {3, 5, 6, 12, 15, 20, 40, 80, 160, 48, 96, 192, 128}),
    ('isomer:isopentane', {3, 5, 6, 12, 13, 15, 20, 21, 28, 32, 40, 48}),
    ('isomer:butane', {3, 5, 6, 12, 15, 17, 20, 32, 48}),
    ('centipede:3', {1, 2, 4, 8, 12, 24}),
    ('corona:path:3,m=1', {1, 2, 4, 8, 12, 24}),
    ])
def test_known_seed_golden(text, seed):
    assert known_seed(text) == seed


@pytest.mark.parametrize("text", [
    'isomer:neopentane', 'star:5', 'banana:2x7', 'corona:path:2,m=4',
    ])
def test_no_known_seed(text):
    assert known_seed(text) is None


@pytest.mark.parametrize("text", ['alkane:63', 'centipede:63', 'path:65'])
def test_known_seed_overflow(text):
    with pytest.raises(RangeError):
        known_seed(text)


@pytest.mark.parametrize("text", [
    'path:2', 'path:20', 'path:64', 'star:2', 'star:3', 'centipede:2',
    'centipede:20', 'alkane:2', 'alkane:7', 'alkane:62', 'isomer:ethane',
    'isomer:propane', 'isomer:isobutane', 'isomer:pentane',
    ])
def test_known_seeds_build_their_shape(text):
    assert isomorphic(build(known_seed(text)), generate(text))


def test_isopentane_closure_has_seventeen_atoms():
    assert len(closure(known_seed('isomer:isopentane'))) == 17


@pytest.mark.parametrize("text, listed_atoms, atoms", [
    ('isomer:butane', 11, 14), ('alkane:4', 11, 14), ('isomer:isopentane', 16, 17),
    ])
def test_corrected_seeds_are_announced(caplog, text, listed_atoms, atoms):
    with caplog.at_level(logging.WARNING, logger='phigraph.families.seeds'):
        seed = known_seed(text)
    assert len(closure(seed)) == atoms
    (record,) = caplog.records
    assert record.levelno == logging.WARNING
    assert f"closes to {listed_atoms} atoms" in record.getMessage()
    assert f"({atoms} atoms)" in record.getMessage()


def test_other_seeds_are_quiet(caplog):
    with caplog.at_level(logging.WARNING, logger='phigraph.families.seeds'):
        known_seed('isomer:pentane')
        known_seed('alkane:7')
    assert caplog.records == []
