"""Exceptions raised by the cartomat modules.

Everything derives from CartomatError so the CLI can tell a domain failure
(exit code 1) from a usage problem (exit code 2).
"""


class CartomatError(Exception):
    """Base class for all domain errors."""


class PermutationError(CartomatError, ValueError):
    "Raised for malformed permutations or mismatched degrees."


class InvalidMapError(CartomatError, ValueError):
    "Raised when a map document violates the oriented-map invariants."


class InvalidMatroidError(CartomatError, ValueError):
    "Raised for malformed base collections."


class InvalidMatrixError(CartomatError, ValueError):
    "Raised when a matrix is not a (Lagrangian) representation."


class InvalidWordError(CartomatError, ValueError):
    "Raised when a BC_n word cannot be parsed into generators."


class BoundExceededError(CartomatError, ValueError):
    "Raised when an exhaustive computation would exceed its configured bound."


class OracleMismatchError(CartomatError, RuntimeError):
    "Raised when a constructed representation disagrees with the combinatorial bases."


class UnboundedError(CartomatError):
    "Raised when the linear program has no finite optimum."


class InfeasibleError(CartomatError):
    "Raised when the linear program has no feasible point."
