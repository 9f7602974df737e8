"""
Exception hierarchy for z2s-simplex.

Every error raised by the library derives from Z2sError so callers (and the
CLI) can catch one type and map it to an exit code.
"""

from typing import Optional

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4


class Z2sError(Exception):
    """Base error for the package"""

    exit_code = EXIT_FAILURE

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ModulusMismatch(Z2sError):
    exit_code = EXIT_INVALID


class LengthMismatch(Z2sError):
    exit_code = EXIT_INVALID


class InvalidParameter(Z2sError):
    exit_code = EXIT_INVALID


class InvalidIndex(Z2sError):
    exit_code = EXIT_INVALID


class NotInImage(Z2sError):
    exit_code = EXIT_INVALID


class MatrixFormatError(Z2sError):
    exit_code = EXIT_INVALID


class StructureViolation(Z2sError):
    exit_code = EXIT_MISMATCH


class NotLinear(Z2sError):
    exit_code = EXIT_MISMATCH


class BudgetExceeded(Z2sError):
    """Raised before any work that would go past a configured budget"""

    exit_code = EXIT_BUDGET

    def __init__(self, what: str, required: int, budget: int, partial: Optional[dict] = None):
        super().__init__(f"{what}: requires {required:,} but budget is {budget:,}")
        self.what = what
        self.required = required
        self.budget = budget
        self.partial = partial or {}
