from enum import Enum


class TruthValue(Enum):
    """The three truth values, declared in valuation order T < F < U."""

    T = "T"
    F = "F"
    U = "U"

    @classmethod
    def of(cls, value):
        """Accept a TruthValue, a constant term or a one-letter string."""
        if isinstance(value, cls):
            return value
        return cls(getattr(value, "value", value))

    def neg(self):
        if self is TruthValue.T:
            return TruthValue.F
        if self is TruthValue.F:
            return TruthValue.T
        return self

    # Left-sequential connectives: the right operand is only consulted when
    # the left one does not settle the result.

    def sc_and(self, other):
        if self is TruthValue.T:
            return other
        return self

    def sc_or(self, other):
        if self is TruthValue.F:
            return other
        return self

    # Full connectives are strict in U.

    def full_and(self, other):
        if TruthValue.U in (self, other):
            return TruthValue.U
        return self.sc_and(other)

    def full_or(self, other):
        if TruthValue.U in (self, other):
            return TruthValue.U
        return self.sc_or(other)

    def __str__(self):
        return self.value


VALUES = tuple(TruthValue)
TWO_VALUES = (TruthValue.T, TruthValue.F)
