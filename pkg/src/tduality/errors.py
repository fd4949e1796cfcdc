"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates a structural invariant (bad range, broken
    divisibility constraint, mismatched lengths).  The message names the
    violated constraint."""


class SizeGuardError(RuntimeError):
    """A brute-force cross-check was refused because the requested
    parameters would build matrices beyond the guarded size."""
