"""Exception hierarchy.

InputError subclasses signal bad user input (CLI exit 2); ComputationError
subclasses signal a well-formed request that cannot be carried out (exit 3).
"""


class InputError(ValueError):
    pass


class ComputationError(ArithmeticError):
    pass


class SizeMismatch(InputError):
    pass


class InconsistentMatrix(InputError):
    pass


class NotAGroup(InputError):
    pass


class NotOrthogonal(InputError):
    pass


class NonIntegerMultiplicity(InputError):
    pass


class UndefinedPad(ComputationError):
    pass


class EmptyStar(ComputationError):
    pass


class NonStabilized(ComputationError):
    pass


class NoncommutativeRing(ComputationError):
    pass


class BudgetExceeded(ComputationError):
    pass
