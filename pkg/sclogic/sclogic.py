#!/usr/bin/env python
from .normalforms import LEXICOGRAPHIC
from .sclogic_error import VerificationError


def make_term(text, sig="auto"):
    from .syntax import parse_term

    return parse_term(text, sig)


def make_axioms(path=None, parser="pyyaml", content=None, name=None):
    # Import here so setup.py can read the version without the dependencies.
    from .congruences import load_axiom_set

    axioms = load_axiom_set(path, parser, content, name)
    if not len(axioms):
        raise ValueError("{} holds no axioms!".format(path or "content"))
    return axioms


def verify(axiom_set, congruence, order=None, _raise_error=False):
    from .congruences import verify_axiom_set

    report = verify_axiom_set(axiom_set, congruence, order or LEXICOGRAPHIC)
    if _raise_error and not report.holds():
        raise VerificationError(report)
    return report
