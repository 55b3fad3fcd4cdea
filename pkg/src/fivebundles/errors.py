"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: ``ValidationError`` subclasses exit 2,
``ComputationError`` subclasses exit 3 and ``ParseError`` exits 65.
"""

from __future__ import annotations


class FiveBundlesError(Exception):
    """Base class for every error raised by the package."""


class ParseError(FiveBundlesError, ValueError):
    """Malformed textual input (``.scx`` files, loop JSON, class tokens)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(FiveBundlesError, ValueError):
    """Input is well formed but violates a precondition."""


class ComplexError(ValidationError):
    """A facet list does not describe a valid simplicial complex."""


class NonOrientable(ValidationError):
    """Orientation propagation reached a contradiction."""

    def __init__(self, message: str, witness: tuple[int, ...] | None = None):
        self.witness = witness
        super().__init__(message)


class OrientabilityRequired(NonOrientable):
    """An operation defined only on oriented manifolds got a nonorientable one."""


class NotSpin(ValidationError):
    """An operation requiring w1 = w2 = 0 got a non-spin complex."""


class RingMismatch(ValidationError):
    """Operands live over different coefficient rings or degrees."""


class ComputationError(FiveBundlesError, RuntimeError):
    """A numerical or algebraic computation failed to certify its result."""


class SingularPairing(ComputationError):
    """The mod-2 duality pairing is degenerate, so the input is not a manifold."""


class StepBoundError(ValidationError):
    """A sampled loop in SO(5) moves too far between consecutive samples."""


class LiftError(ComputationError):
    """The continuation lift did not end within tolerance of +I or -I."""


class NoSolution(FiveBundlesError):
    """A linear system has no solution over the requested ring.

    Deliberately not a ``ValueError``: callers test membership by catching it.
    """
