# Copyright (c) 2024 The phigraph developers

import pytest

from phigraph.errors import RangeError
from phigraph.totient import (
    brute_preimage_table, inverse_totient, inverse_totient_brute,
    is_nontotient, preimages, totient
    )


@pytest.mark.parametrize("m, solutions", [
    (1, (1, 2)),
    (2, (3, 4, 6)),
    (3, ()),
    (4, (5, 8, 10, 12)),
    (5, ()),
    (6, (7, 9, 14, 18)),
    (7, ()),
    (14, ()),
    ])
def test_inverse_totient_golden(m, solutions):
    found = inverse_totient(m)
    assert found.target == m
    assert found.solutions == solutions


@pytest.mark.parametrize("m, bound, solutions", [
    (2, 100, (3, 4, 6)),
    (1, 2, (1, 2)),
    (10, 50, (11, 22)),
    ])
def test_inverse_totient_brute(m, bound, solutions):
    assert inverse_totient_brute(m, bound).solutions == solutions


@pytest.mark.parametrize("m, expected", [(14, True), (2, False), (5, True),
                                         (24, False)])
def test_is_nontotient(m, expected):
    assert is_nontotient(m) is expected


@pytest.mark.parametrize("m", [0, 2**32])
def test_inverse_totient_range(m):
    with pytest.raises(RangeError):
        inverse_totient(m)


def test_brute_bound_range():
    with pytest.raises(RangeError):
        inverse_totient_brute(4, 2**40)


def test_solutions_are_sound_and_bounded():
    for m in range(1, 1001):
        solutions = inverse_totient(m).solutions
        assert list(solutions) == sorted(set(solutions))
        for x in solutions:
            assert totient(x) == m
            assert x <= 2 * m**2 + 10


def test_odd_targets_have_no_solutions():
    for m in range(3, 1000, 2):
        assert inverse_totient(m).solutions == ()


def test_agrees_with_brute_force_scan():
    for m in range(1, 301):
        bound = 2 * m**2 + 10
        assert inverse_totient(m) == inverse_totient_brute(m, bound), m


def test_preimage_table_matches_single_scans():
    table = brute_preimage_table(50, 1000)
    assert sorted(table) == list(range(1, 51))
    for m in range(1, 51):
        assert table[m] == inverse_totient_brute(m, 1000).solutions


@pytest.mark.slow
def test_agrees_with_brute_force_up_to_2000():
    table = brute_preimage_table(2000, 2 * 2000**2 + 10)
    for m in range(1, 2001):
        bound = 2 * m**2 + 10
        brute = tuple(x for x in table[m] if x <= bound)
        assert inverse_totient(m).solutions == brute, m


def test_preimages_beyond_the_solver_range():
    solutions, truncated = preimages(2**40)
    assert not truncated
    assert 2**41 in solutions
    assert all(totient(x) == 2**40 for x in solutions)


def test_preimages_report_truncation():
    solutions, truncated = preimages(2**63)
    assert truncated
    assert 2**64 not in solutions
    assert all(x < 2**64 for x in solutions)
