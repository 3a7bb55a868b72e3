"""Exception types shared across the package."""


class KernelError(Exception):
    """Base class for all errors raised by supergeom operations."""


class ContextMismatch(KernelError):
    """Operands built over different generator contexts."""


class ParityError(KernelError):
    """A value violates a parity or homogeneity requirement."""


class NotInvertible(KernelError):
    """Matrix or scalar has no inverse over the ring."""


class NeitherBlockInvertible(NotInvertible):
    """Berezinian needs at least one invertible diagonal block."""


class NonConstantBody(KernelError):
    """An operation needs constant-body entries and found a variable one."""


class PointNotOnVariety(KernelError):
    """The marked point does not satisfy the defining ideal."""


class ReservedGeneratorCollision(KernelError):
    """User data depends on the odd generators reserved for dual parameters."""


class ScriptError(KernelError):
    """Script or expression error, carrying a source position."""

    def __init__(self, message, line=None, col=None):
        if line is not None:
            where = f"line {line}" + (f", column {col}" if col is not None else "")
            message = f"{where}: {message}"
        elif col is not None:
            message = f"column {col}: {message}"
        super().__init__(message)
        self.line = line
        self.col = col
