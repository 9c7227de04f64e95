# Copyright (c) 2024 The phigraph developers

from .corpus import SeedCorpus, CORPUS_SEED
from .checks import CheckResult, run_checks, format_table
