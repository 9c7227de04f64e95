# Copyright (c) 2024 The phigraph developers

from .families import FamilySpec, generate, KINDS, ISOMERS
from .families import corona, banana, hydrogenate, nanostar_d2
from .seeds import known_seed, path_seed, centipede_seed, alkane_seed
from .seeds import ISOMER_SEEDS, NANOSTAR_D2_SEED, STAR_SEEDS
