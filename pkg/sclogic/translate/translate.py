"""
Maps between the sequential and the conditional signature.

``seq_to_cond`` sends a sequential term to the conditional term that
evaluates it, ``cond_to_seq`` goes the other way and ``desugar_full``
removes the full left-sequential connectives. Leaves are fixed by all three
maps and no map simplifies its result.
"""
from ..terms import (
    FALSE,
    TRUE,
    Atom,
    Binary,
    Cond,
    Const,
    FullAnd,
    FullOr,
    Neg,
    ScAnd,
    ScOr,
    Var,
)

LEAVES = (Const, Atom, Var)


def seq_to_cond(t):
    if isinstance(t, LEAVES):
        return t
    if isinstance(t, Neg):
        return Cond(FALSE, seq_to_cond(t.arg), TRUE)
    if isinstance(t, FullOr):
        return seq_to_cond(desugar_full(t))
    if not isinstance(t, Binary):
        raise TypeError("Not a sequential term: %s" % t)
    left = seq_to_cond(t.left)
    right = seq_to_cond(t.right)
    if isinstance(t, ScAnd):
        return Cond(right, left, FALSE)
    if isinstance(t, ScOr):
        return Cond(TRUE, left, right)
    # the right operand is evaluated on both branches
    return Cond(right, left, Cond(FALSE, right, FALSE))


def cond_to_seq(t):
    if isinstance(t, LEAVES):
        return t
    if not isinstance(t, Cond):
        raise TypeError("Not a conditional term: %s" % t)
    body = cond_to_seq(t.body)
    test = cond_to_seq(t.test)
    orelse = cond_to_seq(t.orelse)
    return ScOr(ScAnd(test, body), ScAnd(Neg(test), orelse))


def desugar_full(t):
    """Replace ``x &* y`` by ``(x || (y && F)) && y`` and ``x |* y`` by
    ``!((!x) &* (!y))``, bottom-up."""
    if isinstance(t, LEAVES):
        return t
    if isinstance(t, Neg):
        return Neg(desugar_full(t.arg))
    if isinstance(t, Cond):
        return Cond(desugar_full(t.body), desugar_full(t.test), desugar_full(t.orelse))
    left = desugar_full(t.left)
    right = desugar_full(t.right)
    if isinstance(t, FullAnd):
        return _full_and(left, right)
    if isinstance(t, FullOr):
        return Neg(_full_and(Neg(left), Neg(right)))
    return type(t)(left, right)


def _full_and(x, y):
    return ScAnd(ScOr(x, ScAnd(y, FALSE)), y)
