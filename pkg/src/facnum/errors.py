"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so keep the split:
input problems (ValidationError / DomainError / ParseError) versus
resource-cap problems (ResourceLimitError).  Internal invariants that
must never fail (exact divisions, presentation self-checks) use plain
``assert`` / AssertionError instead.
"""


class FacnumError(Exception):
    """Base class for all errors raised by facnum."""


class ValidationError(FacnumError, ValueError):
    """A value fails validation (non-prime p, broken Cayley law, ...)."""


class DomainError(FacnumError, ValueError):
    """Arguments are outside the domain of an operation (i > n, p = 2 for
    the odd-prime group families, non-normal subgroup for a quotient)."""


class ParseError(FacnumError, ValueError):
    """Malformed textual input (Cayley table files, group descriptors)."""


class ResourceLimitError(FacnumError, RuntimeError):
    """A configured safety cap (group order, subgroup count) was exceeded."""
