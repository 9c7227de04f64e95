# Copyright (c) 2024 The phigraph developers

"""Primality and factor splitting for naturals below 2**64.

Primality is decided by Miller-Rabin with the first twelve prime bases, which
is deterministic for every 64-bit input.  Composites without small factors
are split by Brent's variant of Pollard's rho, seeded with a fixed value so
that runs are reproducible.
"""

import math
import random

import numpy as np


TRIAL_DIVISION_LIMIT = 10**6
RHO_SEED = 20240601

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_U64 = 2**64


# =============================================================================
def prime_sieve(limit):
    """Return a sorted `np.ndarray` of all primes `p <= limit`."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    is_p[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if is_p[p]:
            is_p[p*p::2*p] = False
    return np.flatnonzero(is_p).astype(np.int64)


SMALL_PRIMES = prime_sieve(TRIAL_DIVISION_LIMIT)
_SMALL_PRIMES_U64 = SMALL_PRIMES.astype(np.uint64)


def is_prime(n):
    """Deterministic primality test for `0 <= n < 2**64`."""
    if n >= _U64:
        raise ValueError(f"{n} does not fit in 64 bits")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d, s = d // 2, s + 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n):
    """Return the smallest prime `p >= n`."""
    p = max(n, 2)
    if p > 2 and p % 2 == 0:
        p += 1
    while not is_prime(p):
        p += 1 if p == 2 else 2
    return p


def small_prime_divisors(n):
    """Return the primes `p <= min(isqrt(n), TRIAL_DIVISION_LIMIT)` dividing
    `n`, ascending.  The division is done in one vectorized sweep.
    """
    bound = min(math.isqrt(n), TRIAL_DIVISION_LIMIT)
    stop = np.searchsorted(SMALL_PRIMES, bound, side='right')
    if stop == 0:
        return []
    residues = np.uint64(n) % _SMALL_PRIMES_U64[:stop]
    return SMALL_PRIMES[:stop][residues == 0].tolist()


def pollard_brent(n, rng=None):
    """Return a nontrivial factor of the odd composite `n`.

    Brent's cycle detection with batched gcds; a fresh random polynomial
    `x**2 + c` is drawn whenever a round degenerates.
    """
    if n % 2 == 0:
        return 2
    if rng is None:
        rng = random.Random(RHO_SEED)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # the batch overshot; step back one product at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def prime_factors(n):
    """Return the prime factors of `1 <= n < 2**64` with multiplicity as a
    dict `{p: k}`, ordered by ascending `p`.
    """
    if not 1 <= n < _U64:
        raise ValueError(f"{n} is outside [1, 2**64)")
    factors = {}
    for p in small_prime_divisors(n):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    if n > 1:
        if n <= TRIAL_DIVISION_LIMIT**2:
            # no factor up to the trial-division limit remains
            factors[n] = factors.get(n, 0) + 1
        else:
            rng = random.Random(RHO_SEED)
            stack = [n]
            while stack:
                m = stack.pop()
                if is_prime(m):
                    factors[m] = factors.get(m, 0) + 1
                else:
                    f = pollard_brent(m, rng)
                    stack.extend([f, m // f])
    return dict(sorted(factors.items()))
