# Copyright (c) 2024 The phigraph developers

"""The inverse totient problem: all `n` with phi(n) = m.

`inverse_totient` assembles the solutions from prime powers, never scanning;
`inverse_totient_brute` scans a sieved phi table and serves as its oracle.

    >>> inverse_totient(4).solutions
    (5, 8, 10, 12)
    >>> is_nontotient(14)
    True
"""

from functools import lru_cache
from typing import NamedTuple

import numpy as np

from ..errors import check_natural
from .tables import totient_table, SIEVE_LIMIT
from .totient import divisors, is_prime, totient


U64 = 2**64
BRUTE_BOUND_LIMIT = 2**40


# =============================================================================
class PreimageSet(NamedTuple):
    """The solutions of phi(x) = target, strictly ascending.

    Every solution satisfies ``x <= 2 * target**2 + 10`` because
    phi(n) > sqrt(n / 2).
    """
    target: int
    solutions: tuple


# =============================================================================
@lru_cache(maxsize=2**16, typed=True)
def preimages(m):
    """Return `(solutions, truncated)` for phi(x) = m and `1 <= m < 2**64`.

    `solutions` holds the ascending solutions below 2**64; `truncated` tells
    whether solutions at or above 2**64 exist and were dropped.

    Candidate primes are the `p` with ``(p - 1) | m``.  A depth-first search
    takes them in increasing order and, for each, every power `p**k` whose
    totient still divides what is left of `m`.  The fixed point one is part
    of the answer for ``m = 1``.
    """
    m = check_natural(m, name='m')
    primes = [d + 1 for d in divisors(m) if d + 1 < U64 and is_prime(d + 1)]
    solutions = set()

    def search(start, rest, acc):
        if rest == 1:
            solutions.add(acc)
        for i in range(start, len(primes)):
            p = primes[i]
            if p - 1 > rest:
                break
            if rest % (p - 1):
                continue
            rest_p, power = rest // (p - 1), p
            while True:
                search(i + 1, rest_p, acc * power)
                if rest_p % p:
                    break
                rest_p, power = rest_p // p, power * p

    search(0, m, 1)
    found = sorted(solutions)
    kept = tuple(x for x in found if x < U64)
    return kept, len(kept) < len(found)


def inverse_totient(m):
    """Return the complete `PreimageSet` of `1 <= m < 2**32`.

    The bound keeps every solution, at most 2m**2 + 10, inside 64 bits;
    use `preimages` for larger targets.
    """
    m = check_natural(m, name='m', high=2**32)
    return PreimageSet(m, preimages(m)[0])


def inverse_totient_brute(m, bound):
    """Return all ``x <= bound`` with phi(x) = m by direct scan.

    Bounds up to `SIEVE_LIMIT` scan a sieved table; larger ones (up to
    2**40) fall back to evaluating phi one `x` at a time.
    """
    m = check_natural(m, name='m', low=0)
    bound = check_natural(bound, name='bound', low=0, high=BRUTE_BOUND_LIMIT)
    if bound <= SIEVE_LIMIT:
        table = totient_table(bound)
        found = np.flatnonzero(table == m)
        return PreimageSet(m, tuple(int(x) for x in found if x >= 1))
    return PreimageSet(m, tuple(x for x in range(1, bound + 1) if totient(x) == m))


def brute_preimage_table(max_m, bound):
    """Brute-force preimages of every ``m <= max_m`` in one sieve scan.

    Returns a dict ``{m: (x, ...)}`` holding, for each ``1 <= m <= max_m``,
    the ascending ``x <= bound`` with phi(x) = m; it agrees entry by entry
    with `inverse_totient_brute(m, bound)`.
    """
    max_m = check_natural(max_m, name='max_m')
    table = totient_table(check_natural(bound, name='bound', high=SIEVE_LIMIT + 1))
    xs = np.flatnonzero((table >= 1) & (table <= max_m))
    out = {m: [] for m in range(1, max_m + 1)}
    for x, m in zip(xs.tolist(), table[xs].tolist()):
        out[m].append(x)
    return {m: tuple(v) for m, v in out.items()}


def is_nontotient(m):
    """True iff phi(x) = m has no solution."""
    return not inverse_totient(m).solutions
