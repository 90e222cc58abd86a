"""Exception types shared across the package."""


class PermutreeError(Exception):
    """Base class for every error raised by this package."""


class UnknownLetter(PermutreeError, ValueError):
    def __init__(self, letter: str, index: int):
        super().__init__(f"unknown decoration letter {letter!r} at index {index}")
        self.letter = letter
        self.index = index


class EmptyInput(PermutreeError, ValueError):
    pass


class InvalidInput(PermutreeError, ValueError):
    pass


class InvalidTree(PermutreeError, ValueError):
    pass


class NotAnEdge(PermutreeError, ValueError):
    pass


class DecorationMismatch(PermutreeError, ValueError):
    pass


class NotARefinement(PermutreeError, ValueError):
    pass


class MethodInapplicable(PermutreeError, ValueError):
    pass


class SizeBound(PermutreeError, ValueError):
    """Raised when a brute-force computation would exceed the configured size."""


class MixedGrading(PermutreeError, ValueError):
    pass


class EmptyOperand(PermutreeError, ValueError):
    pass


class ScopeError(PermutreeError, ValueError):
    pass


class DegreeBound(PermutreeError, ValueError):
    pass


class SizeMismatch(PermutreeError, ValueError):
    pass
