# Copyright (c) 2024 The phigraph developers

# _phigraphcore
from ._phigraphcore import SeedSet, PhiGraph
from ._phigraphcore import closure, build, is_tree, depth, distance, leaves
from ._phigraphcore import minimal_seed, construct_seed_with_leaves, isomorphic
from ._phigraphcore import seed_with_order, seed_with_edge_count, export

# the rest...
from . import errors
from . import lib
from . import totient
from . import families
from . import recognizer
from . import verify
from .errors import PhiGraphError
from .lib.trees import UnlabeledTree
from .families import FamilySpec, generate, known_seed
from .recognizer import recognize, recognize_family, certify, parse_tree
from .totient import inverse_totient, iteration_length, totient_sum
