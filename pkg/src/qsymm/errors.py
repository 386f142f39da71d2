"""Exception types shared across the package."""


class QSymmError(Exception):
    """Base class for errors raised by this package."""


class IntegralityError(QSymmError):
    """An operation that is guaranteed to stay over the integers produced a
    non-integer coefficient.

    Lambda operations on integral elements and elementary-composed-with-power
    plethysms divide by integers at intermediate steps; every such division
    must be exact. An inexact division indicates an implementation bug, not
    bad input, so this error should never be caught and ignored.
    """


class ConsistencyError(QSymmError):
    """An internal invariant that the theory guarantees was violated at
    runtime (a remainder failed to drop in the weight-length-lex order, or a
    generator transition matrix came out non-square or non-unimodular).
    """


class ParseError(QSymmError):
    """A textual literal could not be parsed. `position` is the 0-based index
    of the offending character."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
