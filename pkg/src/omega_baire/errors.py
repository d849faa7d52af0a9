"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class AutomataError(Exception):
    """Base class for every error raised by this package."""


class FormatError(AutomataError):
    """A problem in an automaton text file, reported with its line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BadHeader(FormatError):
    """Malformed, missing, or duplicated header line."""


class MissingTransition(FormatError):
    """Some (state, symbol) pair has no transition line."""


class DuplicateTransition(FormatError):
    """A (state, symbol) pair has more than one transition line."""


class UnknownSymbol(FormatError):
    """A symbol token that is not in the declared alphabet."""


class BadStateIndex(FormatError):
    """A state index outside 0..n_states-1."""


class SizeGuard(AutomataError):
    """An exhaustive enumeration would exceed its configured budget."""


class BadLoop(AutomataError):
    """A state set that violates the loop preconditions of an operation."""


class PreconditionViolated(AutomataError):
    """Structural precondition of a construction does not hold."""


class AlphabetMismatch(AutomataError):
    """Two automata that must share an alphabet do not."""
