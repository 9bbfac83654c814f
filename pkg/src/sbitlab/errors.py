"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: malformed input and structural problems
exit 2, resource caps exit 3, domain verdict failures exit 1.
"""

from __future__ import annotations


class SbitError(Exception):
    """Base class for all sbitlab errors."""


class MalformedError(SbitError, ValueError):
    """Malformed operand: bad word literal, length or arity mismatch, bad file."""


class StructuralError(MalformedError):
    """A netlist violates the DAG / single-driver / single-use discipline."""

    def __init__(self, message: str, node: int | None = None):
        self.node = node
        if node is not None:
            message = f"node {node}: {message}"
        super().__init__(message)


class InvalidEncodingError(MalformedError):
    """A dual-rail vector contains the forbidden (0,0) pair."""

    def __init__(self, pair_index: int):
        self.pair_index = pair_index
        super().__init__(f"rail pair {pair_index} is (0,0), which encodes no sbit")


class CapExceededError(SbitError):
    """An exhaustive sweep would exceed the configured input-width cap."""

    def __init__(self, n: int, cap: int, base: int = 3):
        self.n = n
        self.cap = cap
        super().__init__(
            f"exhaustive sweep needs {base}^{n} = {base ** n} evaluations; "
            f"input width {n} exceeds cap {cap}"
        )


class VerdictError(SbitError):
    """A domain-level check failed (violation, inconsistency, not convertible)."""


class NotWAdditiveError(VerdictError):
    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(f"circuit is not w-additive (witness {verdict.witness})")


class InconsistentOracleError(VerdictError):
    pass
