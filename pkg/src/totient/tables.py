# Copyright (c) 2024 The phigraph developers

"""Sieved tables of phi and Phi, used as brute-force oracles.

The tables are computed with numpy, independently of the factorization code
in `totient.py`, so that comparing the two is a meaningful check.  The
largest table built so far is kept and sliced for smaller requests.
"""

import logging
import threading

import numpy as np

from ..errors import RangeError, check_natural
from ..lib.primes import prime_sieve


logger = logging.getLogger(__name__)

SIEVE_LIMIT = 2 * 10**7

_lock = threading.Lock()
_cache = dict(phi=None)


# =============================================================================
def _sieve_totients(limit):
    phi = np.arange(limit + 1, dtype=np.int64)
    for p in prime_sieve(limit):
        phi[p::p] -= phi[p::p] // p
    return phi


def totient_table(limit):
    """Return a read-only array with ``table[n] == phi(n)`` for
    ``0 <= n <= limit`` (``table[0]`` is zero).
    """
    limit = check_natural(limit, name='limit', low=0)
    if limit > SIEVE_LIMIT:
        raise RangeError(f"sieve limit {limit} exceeds {SIEVE_LIMIT}")
    with _lock:
        table = _cache['phi']
        if table is None or len(table) <= limit:
            logger.debug("sieving phi up to %d", limit)
            table = _sieve_totients(limit)
            table.flags.writeable = False
            _cache['phi'] = table
    return table[:limit + 1]


def totient_sum_table(limit):
    """Return ``table[n] == Phi(n)`` for ``0 <= n <= limit``, built from the
    recurrence Phi(n) = phi(n) + Phi(phi(n)) over the phi table.
    """
    phi = totient_table(limit)
    big_phi = np.zeros(limit + 1, dtype=np.int64)
    for n in range(2, limit + 1):
        big_phi[n] = phi[n] + big_phi[phi[n]]
    return big_phi
