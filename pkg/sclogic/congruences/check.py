import logging

from ..normalforms import LEXICOGRAPHIC
from ..terms import close_variables
from ..translate import cond_to_seq
from .congruences import congruence
from .registry import get_axiom_set
from .report import Verdict, VerifyReport

logger = logging.getLogger(__name__)


def normal_form(t, c, order=LEXICOGRAPHIC):
    """Normal form of the closed term ``t`` under congruence ``c``.

    Sequential terms are translated to conditional ones first. The order only
    matters for the conditional congruence.
    """
    return congruence(c).normal_form(t, order)


def normal_form_seq(t, c, order=LEXICOGRAPHIC):
    """The normal form of ``t`` read back into the sequential signature."""
    return cond_to_seq(normal_form(t, c, order))


def equiv(s, t, c, order=LEXICOGRAPHIC):
    return congruence(c).equiv(s, t, order)


def close_equation(e):
    """Both sides of ``e`` with every variable replaced by the same fresh atom."""
    taken = e.atoms()
    lhs, mapping = close_variables(e.lhs, reserved=taken)
    rhs, _ = close_variables(e.rhs, reserved=taken, mapping=mapping)
    return lhs, rhs


def verdict(e, c, order=LEXICOGRAPHIC):
    c = congruence(c)
    lhs, rhs = close_equation(e)
    v = Verdict(e, c, c.normal_form(lhs, order), c.normal_form(rhs, order))
    logger.debug("%s under %s: %s", e.name, c.get_name(), "holds" if v.holds() else "fails")
    return v


def check_equation(e, c, order=LEXICOGRAPHIC):
    """
    Does the open equation ``e`` hold under ``c``?

    Variables are closed with fresh atoms shared by both sides; the basic-form
    models are free, so the closed instance decides the open equation.
    """
    return verdict(e, c, order).holds()


def verify_axiom_set(axioms, c, order=LEXICOGRAPHIC):
    """Check every axiom of a set (an `AxiomSet` or a registered name)."""
    if isinstance(axioms, str):
        axioms = get_axiom_set(axioms)
    c = congruence(c)
    report = VerifyReport(axioms, c, [verdict(e, c, order) for e in axioms])
    logger.info("'%s' under %s: %d of %d hold", axioms.name, c.get_name(),
                len(report.verdicts) - len(report.failures()), len(report.verdicts))
    return report

