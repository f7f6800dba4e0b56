"""Exception types shared across the package."""


class PolyboxError(Exception):
    """Base class for domain errors (CLI maps these to exit code 2)."""


class ParseError(PolyboxError):
    """Text input rejected; carries the 0-based offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class BudgetExceededError(PolyboxError):
    """An enumeration would exceed its caller-set cap (CLI exit code 3)."""

    def __init__(self, message: str, required: int, budget: int):
        super().__init__(f"{message}: needs {required}, budget {budget}")
        self.required = required
        self.budget = budget


class FullRankError(PolyboxError):
    """Interpolation matrix has full rank: no curve through the points."""
