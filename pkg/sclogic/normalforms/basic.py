"""
Basic forms and mem-basic forms.

``bf`` rewrites a closed conditional term into a tree with atoms at the
internal nodes and constants at the leaves. ``mbf`` additionally removes
every atom that repeats on a root-to-leaf path by committing to the branch
already taken.
"""
from ..sclogic_error import OpenTermError
from ..terms import FALSE, TRUE, Atom, Cond, Const, Var


def subst_tf(p, q, r):
    """``p[T -> q, F -> r]``: replace the T leaves of p by q and its F leaves by r."""
    if isinstance(p, Cond):
        return Cond(subst_tf(p.body, q, r), p.test, subst_tf(p.orelse, q, r))
    if p == TRUE:
        return q
    if p == FALSE:
        return r
    return p


def bf(t):
    if isinstance(t, Const):
        return t
    if isinstance(t, Atom):
        return Cond(TRUE, t, FALSE)
    if isinstance(t, Cond):
        return subst_tf(bf(t.test), bf(t.body), bf(t.orelse))
    if isinstance(t, Var):
        raise OpenTermError("Cannot normalise open term: variable ?%s" % t.name)
    raise TypeError("bf expects a conditional term, got %s" % type(t).__name__)


def left_reduce(a, p):
    """Commit every test on atom ``a`` in ``p`` to its then-branch."""
    if not isinstance(p, Cond):
        return p
    if p.test == a:
        return left_reduce(a, p.body)
    return Cond(left_reduce(a, p.body), p.test, left_reduce(a, p.orelse))


def right_reduce(a, p):
    """Commit every test on atom ``a`` in ``p`` to its else-branch."""
    if not isinstance(p, Cond):
        return p
    if p.test == a:
        return right_reduce(a, p.orelse)
    return Cond(right_reduce(a, p.body), p.test, right_reduce(a, p.orelse))


def mf(p):
    if not isinstance(p, Cond):
        return p
    a = p.test
    return Cond(mf(left_reduce(a, p.body)), a, mf(right_reduce(a, p.orelse)))


def mbf(t):
    return mf(bf(t))
