# Copyright (c) 2024 The phigraph developers

from .cli import CommandResult, run, main, make_parser
