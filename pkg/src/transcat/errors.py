"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all structural errors raised by transcat."""


class NonAssociative(AlgebraError):
    def __init__(self, x: int, y: int, z: int):
        super().__init__(f"(x*y)*z != x*(y*z) at {(x, y, z)}")
        self.witness = (x, y, z)


class IndexOutOfRange(AlgebraError):
    pass


class MissingUnary(AlgebraError):
    def __init__(self, what: str, unary: str):
        super().__init__(f"{what} needs the unary map {unary!r}")
        self.unary = unary


class UnknownAxiomId(AlgebraError):
    pass


class NotAProjection(AlgebraError):
    pass


class AxiomViolation(AlgebraError):
    """An identity failed; ``witness`` is the lexicographically least failing tuple."""

    def __init__(self, axiom: str, witness: tuple[int, ...] | None = None, message: str = ""):
        text = f"axiom {axiom} fails"
        if witness is not None:
            text += f" at {witness}"
        if message:
            text += f": {message}"
        super().__init__(text)
        self.axiom = axiom
        self.witness = witness


class DomainMismatch(AxiomViolation):
    def __init__(self, x: int, y: int, message: str = ""):
        super().__init__("2.1c", (x, y), message)


class NotLocalisable(AxiomViolation):
    pass


class StarAxiomsFail(AxiomViolation):
    pass


class NotACrossSection(AlgebraError):
    pass


class NotIdempotents(AlgebraError):
    pass


class OrderTooLarge(AlgebraError):
    pass


class TheoremViolation(AssertionError):
    """A proven identity failed on a concrete instance; always a bug."""


class ParseError(AlgebraError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class VersionUnsupported(ParseError):
    pass
