# Copyright (c) 2024 The phigraph developers

"""Make `src/` importable as `phigraph` when the package is not installed."""

import importlib.util
import pathlib
import sys


SRC = pathlib.Path(__file__).resolve().parent.parent / 'src'


def _load_from_source():
    spec = importlib.util.spec_from_file_location(
            'phigraph', SRC / '__init__.py', submodule_search_locations=[str(SRC)]
            )
    module = importlib.util.module_from_spec(spec)
    sys.modules['phigraph'] = module
    spec.loader.exec_module(module)


try:
    import phigraph  # noqa: F401
except ImportError:
    _load_from_source()


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: oracle sweeps taking up to a minute")
