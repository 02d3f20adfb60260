"""
Term nodes for the two signatures.

The conditional signature has the constants, atoms, variables and Hoare's
ternary ``P <| Q |> R`` (``Cond``). The sequential signature has the same
leaves plus negation and the short-circuit and full left-sequential
connectives. Leaves are shared by both signatures, so one set of node classes
serves both and the type aliases below describe the legal shapes.
"""
import re
import sys
from dataclasses import dataclass
from typing import Union

NAME = re.compile(r"[a-z][a-z0-9_]*\Z")
CONSTANTS = ("T", "F", "U")


class Term(object):
    """Base class of all term nodes"""

    __slots__ = ()
    symbol = None

    @property
    def children(self):
        return ()

    def __str__(self):
        from ..syntax.printer import to_text

        return to_text(self)


@dataclass(frozen=True)
class Const(Term):
    value: str

    def __post_init__(self):
        if self.value not in CONSTANTS:
            raise ValueError("Unknown truth constant %r" % (self.value,))


@dataclass(frozen=True)
class Atom(Term):
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not NAME.match(self.name):
            raise ValueError("Invalid atom name %r" % (self.name,))
        object.__setattr__(self, "name", sys.intern(self.name))


@dataclass(frozen=True)
class Var(Term):
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not NAME.match(self.name):
            raise ValueError("Invalid variable name %r" % (self.name,))


@dataclass(frozen=True)
class Cond(Term):
    """``body <| test |> orelse``: if test then body else orelse."""

    body: Term
    test: Term
    orelse: Term

    @property
    def children(self):
        return (self.body, self.test, self.orelse)


@dataclass(frozen=True)
class Neg(Term):
    arg: Term
    symbol = "!"

    @property
    def children(self):
        return (self.arg,)


@dataclass(frozen=True)
class Binary(Term):
    left: Term
    right: Term

    @property
    def children(self):
        return (self.left, self.right)


class ScAnd(Binary):
    symbol = "&&"


class ScOr(Binary):
    symbol = "||"


class FullAnd(Binary):
    symbol = "&*"


class FullOr(Binary):
    symbol = "|*"


TRUE = Const("T")
FALSE = Const("F")
UNDEFINED = Const("U")

Leaf = Union[Const, Atom, Var]
CondTerm = Union[Const, Atom, Var, Cond]
SeqTerm = Union[Const, Atom, Var, Neg, ScAnd, ScOr, FullAnd, FullOr]

SEQ_NODES = (Neg, ScAnd, ScOr, FullAnd, FullOr)
BINARY_BY_SYMBOL = {cls.symbol: cls for cls in (ScAnd, ScOr, FullAnd, FullOr)}
