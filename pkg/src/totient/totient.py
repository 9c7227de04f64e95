# Copyright (c) 2024 The phigraph developers

"""Exact arithmetic with the Euler totient on naturals below 2**64.

The central functions are `factorize` and `totient`; everything else is
built on them:

    >>> totient(20)
    8
    >>> chain(20).values
    (20, 8, 4, 2, 1)
    >>> totient_sum(15)        # 8 + 4 + 2 + 1
    15

Both `factorize` and `totient` are memoized; the caches are invisible to
callers and safe under concurrent use.
"""

from functools import lru_cache
from itertools import product
from typing import NamedTuple

from ..errors import DomainError, RangeError, check_natural
from ..lib.primes import is_prime as _is_prime, prime_factors


U64 = 2**64
CACHE_SIZE = 2**18


# =============================================================================
class Factorization(NamedTuple):
    """Prime-power decomposition ``n = prod(p**k for p, k in factors)``.

    `factors` holds `(prime, exponent)` pairs with strictly increasing primes;
    it is empty exactly when ``n == 1``.
    """
    n: int
    factors: tuple

    @property
    def primes(self):
        return tuple(p for p, _ in self.factors)

    def value(self):
        """Multiply the factors back together, checking the 64-bit range."""
        out = 1
        for p, k in self.factors:
            out *= p**k
            if out >= U64:
                raise RangeError(f"product of {self.factors} overflows 64 bits")
        return out


class TotientChain(NamedTuple):
    """The iterates ``origin, phi(origin), ..., 1``.

    `steps` is R(origin), the number of applications of phi needed to reach
    one, and `phi_sum` is Phi(origin), the sum of all iterates but the first.
    """
    origin: int
    values: tuple
    steps: int
    phi_sum: int


# =============================================================================
@lru_cache(maxsize=CACHE_SIZE, typed=True)
def factorize(n):
    """Return the `Factorization` of `1 <= n < 2**64`."""
    n = check_natural(n)
    fac = Factorization(n, tuple(prime_factors(n).items()))
    assert fac.value() == n, f"factorization of {n} does not multiply back"
    return fac


def is_prime(n):
    """Deterministic primality test for `0 <= n < 2**64`."""
    return _is_prime(check_natural(n, low=0))


@lru_cache(maxsize=CACHE_SIZE, typed=True)
def totient(n):
    """Euler's phi: ``prod(p**(k-1) * (p-1))`` over the factorization of `n`,
    with ``totient(1) == 1``.
    """
    out = 1
    for p, k in factorize(n).factors:
        out *= p**(k - 1) * (p - 1)
    return out


def iterate_totient(n, k):
    """Return phi applied `k` times to `n`; ``k = 0`` gives `n` back."""
    n = check_natural(n)
    k = check_natural(k, name='k', low=0, high=float('inf'))
    while k > 0 and n > 1:
        n, k = totient(n), k - 1
    return n


def chain(n):
    """Return the full `TotientChain` of `n` down to one.

    By convention R(1) = 0: the chain of one is ``(1,)``.
    """
    values = [check_natural(n)]
    while values[-1] > 1:
        values.append(totient(values[-1]))
    return TotientChain(
            origin=values[0],
            values=tuple(values),
            steps=len(values) - 1,
            phi_sum=sum(values[1:])
            )


def iteration_length(n):
    """R(n): the smallest `k` with phi^k(n) = 1."""
    n, steps = check_natural(n), 0
    while n > 1:
        n, steps = totient(n), steps + 1
    return steps


def totient_sum(n):
    """Phi(n) = phi(n) + phi^2(n) + ... + 1 (zero for ``n = 1``)."""
    return chain(n).phi_sum


def is_perfect_totient(n):
    """True iff Phi(n) = n; `n` must be at least 2."""
    n = check_natural(n)
    if n < 2:
        raise DomainError("perfect totient numbers are defined for n >= 2")
    return totient_sum(n) == n


def divisors(n):
    """All divisors of `n`, ascending."""
    fac = factorize(n)
    powers = [[p**e for e in range(k + 1)] for p, k in fac.factors]
    out = []
    for combo in product(*powers):
        d = 1
        for q in combo:
            d *= q
        out.append(d)
    return sorted(out)


def divisor_totient_sum(n):
    """Sum of phi(d) over the divisors `d` of `n`.

    Gauss's identity says the result is `n`; each phi(d) is computed from its
    own factorization so that the identity is an actual check.
    """
    return sum(totient(d) for d in divisors(n))


def perfect_totients(upto):
    """All perfect totient numbers `2 <= n <= upto`, ascending."""
    upto = check_natural(upto, name='upto', low=0)
    return [n for n in range(2, upto + 1) if totient_sum(n) == n]


def ptn_lift(n):
    """Return 3(4n + 1) when `n` is a perfect totient number and 4n + 1 is
    prime (the lift then is a perfect totient number too); None otherwise.
    """
    if not is_perfect_totient(n) or not is_prime(4*n + 1):
        return None
    return check_natural(3 * (4*n + 1), name='3(4n+1)')
