# Copyright (c) 2024 The phigraph developers

"""Exceptions raised by the phigraph package.

Every error derives from `PhiGraphError` and from the closest builtin
exception, so callers may catch either the package error or, say, a plain
`ValueError`.
"""

import numpy as np


class PhiGraphError(Exception):
    """Base class of all errors raised by phigraph."""


class RangeError(PhiGraphError, OverflowError):
    """An argument or a result does not fit in the supported 64-bit range."""


class DomainError(PhiGraphError, ValueError):
    """An argument violates the precondition of an operation."""


class UnknownVertexError(PhiGraphError, KeyError):
    """The requested vertex is not a vertex of the graph."""

    def __str__(self):
        # KeyError would otherwise print the repr of the message
        return str(self.args[0]) if self.args else ''


class DegenerateGraphError(PhiGraphError, ValueError):
    """The operation is undefined on a single-vertex graph."""


class InfeasibleParametersError(PhiGraphError, ValueError):
    """A constructive operation could not produce a validated result."""


class MalformedLabelingError(PhiGraphError, ValueError):
    """A labeling is partial, non-injective or not made of naturals."""


class FamilySpecError(PhiGraphError, ValueError):
    """A family specification cannot be parsed or is out of range."""


class SeedValidationError(PhiGraphError, RuntimeError):
    """A tabulated seed set does not build the shape it is supposed to."""


U64 = 2**64


def check_natural(n, name='n', low=1, high=U64):
    """Return `n` as an int after checking `low <= n < high`.

    Booleans and non-integral values are rejected with `DomainError`;
    integers outside the range raise `RangeError`.
    """
    if isinstance(n, np.integer):
        n = int(n)
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"{name} must be an integer, got {n!r}")
    if not low <= n < high:
        raise RangeError(f"{name}={n} is outside [{low}, {high})")
    return n
