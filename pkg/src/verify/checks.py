# Copyright (c) 2024 The phigraph developers

"""The verification suite behind ``phigraph verify-paper``.

Each check recomputes one published result from scratch and compares it
with the expected values, exactly.  A check returns a list of failures; an
empty list means it passed.  `run_checks` times the checks and collects them
into `CheckResult` rows.
"""

import logging
import time
from typing import NamedTuple

from .._phigraphcore import build, closure, construct_seed_with_leaves
from .._phigraphcore import depth, is_tree, isomorphic, leaves, minimal_seed
from ..families import FamilySpec, generate, known_seed
from ..recognizer import REALIZED, REFUTED, recognize
from ..totient import brute_preimage_table, divisor_totient_sum, inverse_totient
from ..totient import is_perfect_totient, is_prime, iteration_length, ptn_lift
from ..totient import totient_sum, totient_sum_table
from .corpus import SeedCorpus


logger = logging.getLogger(__name__)

INVERSE_GOLDEN = {
    1: (1, 2), 2: (3, 4, 6), 3: (), 4: (5, 8, 10, 12), 5: (), 6: (7, 9, 14, 18),
    7: (), 14: (),
    }

SAMPLE_EDGES = {
    (3, 2), (2, 1), (4, 2), (6, 2), (7, 6), (8, 4), (10, 4), (11, 10), (20, 8)
    }

STAR_CLOSURES = {1: {1, 2}, 2: {1, 2, 3}, 3: {1, 2, 3, 4}, 4: {1, 2, 3, 4, 6}}

NANOSTAR_VERTICES = {
    1, 2, 3, 4, 8, 16, 32, 40, 64, 88, 128, 184, 256, 376, 384, 564
    }

MOLECULES = (
    'isomer:methane', 'isomer:ethane', 'isomer:propane', 'isomer:butane',
    'isomer:isobutane', 'isomer:pentane', 'isomer:isopentane', 'nanostar:d2'
    )


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str
    seconds: float


# =============================================================================
def check_seed_graph():
    g = build({3, 7, 11, 20})
    fails = []
    if g.vertices != {1, 2, 3, 4, 6, 7, 8, 10, 11, 20}:
        fails.append(f"vertices {sorted(g.vertices)}")
    if set(g.edges) != SAMPLE_EDGES:
        fails.append(f"edges {g.edges}")
    return fails


def check_inverse_totient(max_m=2000):
    fails = [
        f"invphi({m}) = {inverse_totient(m).solutions}"
        for m, want in INVERSE_GOLDEN.items()
        if inverse_totient(m).solutions != want
        ]
    table = brute_preimage_table(max_m, 2 * max_m**2 + 10)
    for m in range(1, max_m + 1):
        bound = 2 * m**2 + 10
        brute = tuple(x for x in table[m] if x <= bound)
        if inverse_totient(m).solutions != brute:
            fails.append(f"invphi({m}) differs from the sieve scan")
    return fails


def check_gauss_identity(upto=10**5):
    return [f"sum of phi(d) over d | {n}" for n in range(1, upto + 1)
            if divisor_totient_sum(n) != n]


def check_tree_and_depth(corpus):
    fails = []
    for seed in corpus:
        g = build(seed)
        if not is_tree(g) or g.edge_count != g.order - 1:
            fails.append(f"build({sorted(seed)}) is not a tree")
        fails.extend(f"depth({v}) != R({v}) in build({sorted(seed)})"
                     for v in g.vertices if depth(g, v) != iteration_length(v))
    return fails


def check_stars():
    fails = []
    for n in range(1, 9):
        result = recognize(generate(FamilySpec('star', n=n)))
        if n in STAR_CLOSURES:
            if not result.realized:
                fails.append(f"star:{n} {result.verdict}")
            elif closure(result.labeling.values()) != STAR_CLOSURES[n]:
                fails.append(f"star:{n} witness {sorted(result.labeling.values())}")
        elif result.verdict != REFUTED:
            fails.append(f"star:{n} {result.verdict}")
    return fails


def check_corona_banana():
    specs = ('corona:path:2,m=4', 'corona:path:3,m=4',
             'banana:1x6', 'banana:2x6', 'banana:1x7')
    return [f"{s} {r.verdict}" for s in specs
            if (r := recognize(generate(s))).verdict != REFUTED]


def check_centipedes(upto=20):
    fails = []
    for n in range(2, upto + 1):
        spec = FamilySpec('centipede', n=n)
        tree = generate(spec)
        if not isomorphic(build(known_seed(spec)), tree):
            fails.append(f"seed of {spec} builds another shape")
        if recognize(tree).verdict != REALIZED:
            fails.append(f"{spec} not realized")
    return fails


def check_chemical_trees():
    fails = []
    for text in MOLECULES:
        if not isomorphic(build(known_seed(text)), generate(text)):
            fails.append(f"seed of {text} builds another shape")
    if recognize(generate('isomer:neopentane')).verdict != REFUTED:
        fails.append("neopentane not refuted")
    for n in range(1, 9):
        if recognize(generate(FamilySpec('alkane', n=n))).verdict != REALIZED:
            fails.append(f"alkane:{n} not realized")
    for n in range(6, 13):
        g = build(known_seed(FamilySpec('alkane', n=n)))
        degrees = [g.degree(v) for v in g.vertices]
        if (degrees.count(4), degrees.count(1), g.order) != (n, 2*n + 2, 3*n + 2):
            fails.append(f"alkane:{n} seed has the wrong degrees")
    return fails


def check_nanostar():
    seed = known_seed('nanostar:d2')
    fails = []
    if closure(seed) != NANOSTAR_VERTICES:
        fails.append(f"closure {sorted(closure(seed))}")
    if not isomorphic(build(seed), generate('nanostar:d2')):
        fails.append("shape differs from the generated nanostar")
    return fails


def check_perfect_totients(upto=10**4):
    fails = []
    if totient_sum(15) != 15:
        fails.append("Phi(15) != 15")
    fails.extend(f"3**{k} not perfect" for k in range(1, 13)
                 if not is_perfect_totient(3**k))
    fails.extend(f"{p}**{k} perfect" for p in (2, 5, 7, 11, 13) for k in range(1, 9)
                 if is_perfect_totient(p**k))
    table = totient_sum_table(upto)
    for n in range(2, upto):
        if table[n] != n:
            continue
        if not is_perfect_totient(n):
            fails.append(f"{n} perfect by the sieve but not by factorization")
        if is_prime(4*n + 1) and not is_perfect_totient(ptn_lift(n)):
            fails.append(f"lift of {n} is not perfect")
    return fails


def check_leaf_bounds(corpus):
    fails = []
    for seed in corpus:
        g = build(seed)
        if g.order < 2:
            continue
        t, a_min = len(leaves(g)), len(minimal_seed(g))
        if not (a_min >= t - 1 and t <= a_min + 1):
            fails.append(f"build({sorted(seed)}): {t} leaves, minimal seed {a_min}")
    if len(leaves(build(construct_seed_with_leaves(5, 3)))) != 3:
        fails.append("construct_seed_with_leaves(5, 3) does not give 3 leaves")
    return fails


# =============================================================================
def _checks(corpus):
    return {
        1: ("graph of {3,7,11,20}", check_seed_graph),
        2: ("inverse totient", check_inverse_totient),
        3: ("Gauss identity", check_gauss_identity),
        4: ("tree and depth", lambda: check_tree_and_depth(corpus)),
        5: ("stars", check_stars),
        6: ("coronas and bananas", check_corona_banana),
        7: ("centipedes", check_centipedes),
        8: ("chemical trees", check_chemical_trees),
        9: ("nanostar D2", check_nanostar),
        10: ("perfect totients", check_perfect_totients),
        11: ("leaf bounds", lambda: check_leaf_bounds(corpus)),
        }


def run_checks(only=None, corpus=None):
    """Run the numbered checks (all by default) and return their
    `CheckResult` rows in order.
    """
    corpus = list(corpus if corpus is not None else SeedCorpus())
    checks = _checks(corpus)
    results = []
    for number in sorted(checks if only is None else set(only)):
        if number not in checks:
            raise KeyError(f"no check number {number}")
        name, func = checks[number]
        name = f"{number:2d} {name}"
        logger.info("running check %s", name)
        tic = time.perf_counter()
        try:
            fails = func()
        except Exception as err:
            fails = [f"{type(err).__name__}: {err}"]
        toc = time.perf_counter()
        detail = 'ok' if not fails else f"{len(fails)} failure(s), first: {fails[0]}"
        results.append(CheckResult(name, not fails, detail, toc - tic))
    return results


def format_table(results):
    width = max((len(r.name) for r in results), default=0)
    lines = [f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}"
             f"  {r.seconds:8.2f}s  {r.detail}" for r in results]
    return '\n'.join(lines) + '\n'
