from .primes import is_prime, next_prime, prime_factors, prime_sieve
from .primes import pollard_brent, small_prime_divisors
from .primes import SMALL_PRIMES, TRIAL_DIVISION_LIMIT, RHO_SEED
