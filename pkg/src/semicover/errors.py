"""Exception types shared across the package."""

from __future__ import annotations


class SemicoverError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SemicoverError):
    """A carrier description was malformed or violates a constructor contract.

    The CLI maps these to exit code 3.
    """


class OutOfRangeError(InputError):
    def __init__(self, row: int, col: int, value: int, n: int):
        super().__init__(f"entry {value} at ({row},{col}) outside [0,{n})")
        self.row, self.col, self.value = row, col, value


class NotAssociativeError(InputError):
    def __init__(self, a: int, b: int, c: int):
        super().__init__(f"(a*b)*c != a*(b*c) for a={a}, b={b}, c={c}")
        self.triple = (a, b, c)


class BadImageError(InputError):
    def __init__(self, generator: int, point: int, value: int, m: int):
        super().__init__(
            f"generator {generator} sends point {point} to {value}, outside [0,{m})"
        )


class EmptyGeneratorsError(InputError):
    pass


class TooLargeError(InputError):
    pass


class NotAGroupError(InputError):
    pass


class NotInverseError(InputError):
    pass


class NoIdentityError(InputError):
    pass


class ZeroEntryInPlainReesError(InputError):
    def __init__(self, row: int, col: int):
        super().__init__(f"plain Rees matrix has a zero entry at ({row},{col})")


class IrregularMatrixError(InputError):
    def __init__(self, axis: str, index: int):
        super().__init__(f"matrix {axis} {index} has no nonzero entry")
        self.axis, self.index = axis, index


class ParseError(InputError):
    def __init__(self, line: int, col: int, expected: str):
        super().__init__(f"line {line}, col {col}: expected {expected}")
        self.line, self.col, self.expected = line, col, expected


class OrderCapExceededError(SemicoverError):
    """Carrier too large for an exhaustive computation; CLI exit code 4."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"order {n} exceeds cap {cap}")
        self.n, self.cap = n, cap


class NotSimpleError(SemicoverError):
    pass


class NotZeroSimpleError(SemicoverError):
    pass


class IsoCheckFailedError(SemicoverError):
    """Internal consistency failure: a constructed isomorphism did not verify."""


class NotSquareError(SemicoverError):
    pass


class IsGroupCaseError(SemicoverError):
    pass


class KTooSmallError(SemicoverError):
    pass


class TrivialGroupError(SemicoverError):
    pass


class NotMinimalIndexError(SemicoverError):
    pass


class NotMaximalError(SemicoverError):
    pass


class PartNotProperAfterLiftError(SemicoverError):
    pass


class EmptyComplementError(SemicoverError):
    pass
