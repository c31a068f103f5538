"""Exception types and the structured violation record shared by all checkers."""

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Violation:
    """One failed axiom together with the tuple that witnesses the failure."""

    axiom: str
    witness: tuple = ()

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "witness": [str(w) for w in self.witness]}


class IsgcohError(Exception):
    """Base class. `witness` carries whatever tuple exposed the problem."""

    def __init__(self, message: str = "", witness: Any = None):
        super().__init__(message)
        self.witness = witness


class NotAssociative(IsgcohError):
    pass


class NotInverse(IsgcohError):
    pass


class InvalidKernelSystem(IsgcohError):
    pass


class EmptyWord(IsgcohError):
    pass


class DegreeOutOfRange(IsgcohError):
    pass


class BudgetExceeded(IsgcohError):
    def __init__(self, message: str = "", size: int = 0, budget: int = 0):
        super().__init__(message, witness=size)
        self.size = size
        self.budget = budget


class NotOrderPreservingCocycle(IsgcohError):
    pass


class WitnessMismatch(IsgcohError):
    pass


class PreimageUnavailable(IsgcohError):
    pass


class NotTransversal(IsgcohError):
    pass


class NotStronglyNormalized(IsgcohError):
    pass


class FactorSetViolation(IsgcohError):
    pass


class ExactnessViolation(IsgcohError):
    pass


class CocycleViolation(IsgcohError):
    pass


class WitnessPreconditionFailed(IsgcohError):
    pass


class NotAdmissible(IsgcohError):
    pass


class NotFInverse(IsgcohError):
    pass


class CohomologyWitnessNotFound(IsgcohError):
    pass


class ParseError(IsgcohError):
    def __init__(self, message: str = "", line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class ValidationError(IsgcohError):
    def __init__(self, message: str = "", violations: list | None = None):
        super().__init__(message, witness=violations)
        self.violations = list(violations) if violations else []
