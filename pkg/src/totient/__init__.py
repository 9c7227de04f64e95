# Copyright (c) 2024 The phigraph developers

from .totient import Factorization, TotientChain
from .totient import factorize, is_prime, totient, iterate_totient, chain
from .totient import iteration_length, totient_sum, is_perfect_totient
from .totient import divisors, divisor_totient_sum, perfect_totients, ptn_lift

from .tables import totient_table, totient_sum_table, SIEVE_LIMIT

from .inverse import PreimageSet, inverse_totient, inverse_totient_brute
from .inverse import preimages, brute_preimage_table, is_nontotient
