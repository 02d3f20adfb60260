from dataclasses import dataclass, field
from typing import Mapping, Tuple

from ..terms import Atom, Cond, Const, FullAnd, FullOr, Neg, ScAnd, ScOr, Var


@dataclass(frozen=True)
class FiniteAlgebra:
    """Operation tables over the domain ``0 .. size-1``."""

    size: int
    neg: Tuple[int, ...]
    and_: Tuple[Tuple[int, ...], ...]
    or_: Tuple[Tuple[int, ...], ...]
    consts: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        n = self.size
        if n < 1:
            raise ValueError("An algebra needs at least one element")
        cells = list(self.neg) + [x for row in self.and_ + self.or_ for x in row] + list(self.consts.values())
        if len(self.neg) != n or len(self.and_) != n or len(self.or_) != n:
            raise ValueError("Tables must have %d rows" % n)
        if any(len(row) != n for row in self.and_ + self.or_):
            raise ValueError("Tables must have %d columns" % n)
        if any(not 0 <= x < n for x in cells):
            raise ValueError("Table entries must lie in 0..%d" % (n - 1))

    def full_and(self, a, b):
        f = self.consts["F"]
        return self.and_[self.or_[a][self.and_[b][f]]][b]

    def full_or(self, a, b):
        neg = self.neg
        return neg[self.full_and(neg[a], neg[b])]

    def evaluate(self, t, env):
        """Value of the sequential term ``t`` with variables bound by ``env`` (name to element)."""
        if isinstance(t, Var):
            return env[t.name]
        if isinstance(t, Const):
            try:
                return self.consts[t.value]
            except KeyError:
                raise ValueError("Constant %s is not interpreted in this algebra" % t.value) from None
        if isinstance(t, Neg):
            return self.neg[self.evaluate(t.arg, env)]
        if isinstance(t, (Atom, Cond)):
            raise TypeError("Algebras interpret closed-over sequential terms only, got %s" % t)
        a = self.evaluate(t.left, env)
        b = self.evaluate(t.right, env)
        if isinstance(t, ScAnd):
            return self.and_[a][b]
        if isinstance(t, ScOr):
            return self.or_[a][b]
        if isinstance(t, FullAnd):
            return self.full_and(a, b)
        if isinstance(t, FullOr):
            return self.full_or(a, b)
        raise TypeError("Unknown term node %r" % (t,))

    def format(self):
        lines = ["size %d" % self.size, "neg " + " ".join(map(str, self.neg))]
        lines.extend("and " + " ".join(map(str, row)) for row in self.and_)
        lines.extend("or " + " ".join(map(str, row)) for row in self.or_)
        lines.extend("const %s %d" % (c, self.consts[c]) for c in "TFU" if c in self.consts)
        return "\n".join(lines)

    def __str__(self):
        return self.format()


@dataclass(frozen=True)
class CounterExample:
    """An algebra of the axioms together with variable values that refute the goal."""

    algebra: FiniteAlgebra
    witness: Mapping[str, int]
    goal: object = None

    def format(self):
        binding = " ".join("?%s=%d" % (name, value) for name, value in self.witness.items())
        return ("%s\nwitness %s" % (self.algebra.format(), binding)).rstrip()

    def __str__(self):
        return self.format()
