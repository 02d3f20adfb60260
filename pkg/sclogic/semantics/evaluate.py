"""
Static evaluation of closed terms under a total valuation of their atoms.

A valuation maps atoms (or atom names) to truth values. Conditional terms
evaluate the test first and select a branch; a U test yields U.
"""
from itertools import product
from typing import Mapping, NamedTuple, Optional, Sequence, Tuple

from ..sclogic_error import OpenTermError, ValuationError
from ..terms import Atom, Cond, Const, FullAnd, FullOr, Neg, ScAnd, ScOr, Var, alphabet, is_closed
from .truthvalues import TWO_VALUES, VALUES, TruthValue

_BINARY = {
    ScAnd: TruthValue.sc_and,
    ScOr: TruthValue.sc_or,
    FullAnd: TruthValue.full_and,
    FullOr: TruthValue.full_or,
}


def _normalise_valuation(v):
    out = {}
    for key, value in v.items():
        name = key.name if isinstance(key, Atom) else key
        out[name] = TruthValue.of(value)
    return out


def _eval(t, v):
    if isinstance(t, Const):
        return TruthValue(t.value)
    if isinstance(t, Atom):
        try:
            return v[t.name]
        except KeyError:
            raise ValuationError("Valuation does not assign atom %s" % t.name) from None
    if isinstance(t, Var):
        raise OpenTermError("Cannot evaluate variable ?%s" % t.name)
    if isinstance(t, Cond):
        test = _eval(t.test, v)
        if test is TruthValue.T:
            return _eval(t.body, v)
        if test is TruthValue.F:
            return _eval(t.orelse, v)
        return TruthValue.U
    if isinstance(t, Neg):
        return _eval(t.arg, v).neg()
    op = _BINARY[type(t)]
    return op(_eval(t.left, v), _eval(t.right, v))


def evaluate(t, v: Mapping) -> TruthValue:
    """Value of the closed term ``t``, of either signature, under ``v``."""
    return _eval(t, _normalise_valuation(v))


def eval_seq(t, v: Mapping) -> TruthValue:
    if isinstance(t, Cond):
        raise TypeError("eval_seq expects a sequential term, got %s" % t)
    return evaluate(t, v)


def eval_cond(t, v: Mapping) -> TruthValue:
    if not isinstance(t, (Const, Atom, Var, Cond)):
        raise TypeError("eval_cond expects a conditional term, got %s" % t)
    return evaluate(t, v)


class TruthTable(NamedTuple):
    atoms: Tuple[Atom, ...]
    rows: Tuple[Tuple[Tuple[TruthValue, ...], TruthValue], ...]

    def values(self):
        return tuple(value for _, value in self.rows)

    def to_tsv(self):
        lines = ["\t".join([a.name for a in self.atoms] + ["value"])]
        for assignment, value in self.rows:
            lines.append("\t".join(str(x) for x in assignment + (value,)))
        return "\n".join(lines) + "\n"

    def __str__(self):
        return self.to_tsv()


def truth_table(t, atoms: Optional[Sequence[Atom]] = None, two_valued=False) -> TruthTable:
    """
    Enumerate every valuation of ``atoms`` (default: the sorted alphabet of
    ``t``) in lexicographic T < F < U order and evaluate ``t`` under each.
    """
    if not is_closed(t):
        raise OpenTermError("Cannot tabulate open term %s" % t)
    if atoms is None:
        atoms = list(alphabet(t))
    atoms = tuple(atoms)
    missing = set(alphabet(t)) - set(atoms)
    if missing:
        raise ValuationError(
            "Atom list does not cover %s" % ", ".join(sorted(a.name for a in missing))
        )
    domain = TWO_VALUES if two_valued else VALUES
    rows = []
    for assignment in product(domain, repeat=len(atoms)):
        v = {a.name: value for a, value in zip(atoms, assignment)}
        rows.append((assignment, _eval(t, v)))
    return TruthTable(atoms, tuple(rows))
