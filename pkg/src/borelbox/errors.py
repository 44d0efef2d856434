"""Exception types shared across the package.

Every error class carries the exit code used by the command line front
end: 1 for malformed input, 2 for a violated semantic precondition (or a
failed exact-arithmetic self check), 3 for a blown resource budget.
"""


class BorelboxError(Exception):
    """Base class for all library errors."""

    exit_code = 2


class InputError(BorelboxError):
    """Structurally malformed input: bad JSON shape, bad coordinates."""

    exit_code = 1


class DimensionMismatch(InputError):
    pass


class InvalidCell(InputError):
    pass


class ClosureViolation(InputError):
    """A cell whose predecessor along some axis is missing."""

    def __init__(self, cell, axis):
        self.cell = tuple(cell)
        self.axis = axis  # 1-based
        super().__init__(
            f"cell {self.cell} has no predecessor along axis {axis}"
        )


class PreconditionError(BorelboxError):
    """An operation was applied outside its stated domain."""

    exit_code = 2


class CellNotInPartition(PreconditionError):
    pass


class InvalidMove(PreconditionError):
    def __init__(self, step, message):
        self.step = step  # 1-based position in the move list
        super().__init__(f"move {step}: {message}")


class EmptyInput(PreconditionError):
    pass


class NotStronglyStable(PreconditionError):
    pass


class NotTotallySymmetric(PreconditionError):
    pass


class NotArtinian(PreconditionError):
    pass


class NotSymmetric(PreconditionError):
    pass


class NotWeaklyIncreasing(PreconditionError):
    pass


class MissingPurePower(PreconditionError):
    pass


class InvalidFSet(PreconditionError):
    pass


class UnsupportedDimension(PreconditionError):
    pass


class ArithmeticSelfCheck(BorelboxError):
    """Exact arithmetic produced a result the theory forbids; a bug, not
    a property of the input."""

    exit_code = 2


class NonIntegerProduct(ArithmeticSelfCheck):
    pass


class InexactDivision(ArithmeticSelfCheck):
    pass


class ResourceLimit(BorelboxError):
    """Enumeration exceeded its configured node budget."""

    exit_code = 3

    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"enumeration exceeded the node budget of {budget}")
