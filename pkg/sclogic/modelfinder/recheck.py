"""
Exhaustive checks of counter-models, independent of the search code: every
assignment of the variables is evaluated on the algebra's tables directly.
"""
from itertools import product

from ..terms import is_conditional, variables
from ..translate import cond_to_seq


def _sides(e):
    if is_conditional(e.lhs) or is_conditional(e.rhs):
        return cond_to_seq(e.lhs), cond_to_seq(e.rhs)
    return e.lhs, e.rhs


def _names(lhs, rhs):
    return tuple(dict.fromkeys(v.name for v in variables(lhs) + variables(rhs)))


def violations(algebra, e):
    """Every assignment, as a name to element mapping, under which ``e`` fails."""
    lhs, rhs = _sides(e)
    names = _names(lhs, rhs)
    for values in product(range(algebra.size), repeat=len(names)):
        env = dict(zip(names, values))
        if algebra.evaluate(lhs, env) != algebra.evaluate(rhs, env):
            yield env


def satisfies(algebra, e):
    return next(violations(algebra, e), None) is None


def refutes(algebra, e, witness):
    lhs, rhs = _sides(e)
    return algebra.evaluate(lhs, witness) != algebra.evaluate(rhs, witness)


def recheck(counter_example, axioms, goal=None):
    """True when every axiom holds in the algebra and the witness refutes the goal."""
    goal = goal if goal is not None else counter_example.goal
    algebra = counter_example.algebra
    if not all(satisfies(algebra, e) for e in axioms):
        return False
    return refutes(algebra, goal, counter_example.witness)
