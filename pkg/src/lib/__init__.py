from . import primes
from . import trees
