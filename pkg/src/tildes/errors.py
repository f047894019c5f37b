"""Exception types shared across the package."""


class AtomOutOfRange(ValueError):
    """A formula mentions an atom outside ``1..n``."""


class WidthTooLarge(ValueError):
    """Truth-table enumeration was asked for more atoms than the cap allows."""


class ParseError(ValueError):
    """Malformed formula or expression text.

    ``position`` is the 0-based offset in the input where parsing failed.
    """

    def __init__(self, message, text="", position=0):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")


class UnknownSymbol(ValueError):
    """A word uses a symbol outside the automaton's alphabet."""


class StateCapExceeded(RuntimeError):
    """Derived-term construction produced more states than the safety cap."""


class PositionCapExceeded(RuntimeError):
    """Glushkov construction produced more positions than the safety cap."""


class AlphabetTooSmall(ValueError):
    """Not enough distinct letters to build the requested expression."""


class VerificationFailed(RuntimeError):
    """A fooling-set condition did not hold."""
