from ..terms import UNDEFINED, Atom, Cond, Const, three_valued
from .clforms import shared_atoms
from .order import LEXICOGRAPHIC, THREE, TWO

KINDS = ("basic", "mem", "cl", "clu")


def is_basic_form(t):
    if isinstance(t, Const):
        return True
    if isinstance(t, Cond):
        return isinstance(t.test, Atom) and is_basic_form(t.body) and is_basic_form(t.orelse)
    return False


def is_mem_basic_form(t, _seen=frozenset()):
    if isinstance(t, Const):
        return True
    if isinstance(t, Cond):
        a = t.test
        if not isinstance(a, Atom) or a in _seen:
            return False
        seen = _seen | {a}
        return is_mem_basic_form(t.body, seen) and is_mem_basic_form(t.orelse, seen)
    return False


def _peel(t, sigma):
    """Subtrees below the top ``len(sigma)`` levels, or None if those levels do
    not test ``sigma`` in order."""
    if not sigma:
        return [t]
    if not isinstance(t, Cond) or t.test != sigma[0]:
        return None
    left = _peel(t.body, sigma[1:])
    right = _peel(t.orelse, sigma[1:])
    if left is None or right is None:
        return None
    return left + right


def _is_cl(t, order, mode):
    if not isinstance(t, Cond):
        return True
    sigma = order.sort(shared_atoms(t, mode))
    parts = _peel(t, sigma)
    if parts is None:
        return False
    if mode == THREE and all(p == UNDEFINED for p in parts):
        return False
    return all(_is_cl(p, order, mode) for p in parts)


def validate_form(kind, t, order=LEXICOGRAPHIC):
    """
    Does ``t`` satisfy the named form?

    ``basic``: atoms at internal nodes, constants at the leaves.
    ``mem``: basic, and no atom repeats on a path.
    ``cl``: U-free mem-basic form built as F_sigma over its shared alphabet
    in ``order``, recursively.
    ``clu``: the three-valued counterpart of ``cl``; a block whose parts are
    all U is rejected.
    """
    if kind not in KINDS:
        raise NameError('Form "%s" is not supported, use one of: %s' % (kind, ", ".join(KINDS)))
    if kind == "basic":
        return is_basic_form(t)
    if not is_mem_basic_form(t):
        return False
    if kind == "mem":
        return True
    if kind == "cl":
        return not three_valued(t) and _is_cl(t, order or LEXICOGRAPHIC, TWO)
    return _is_cl(t, order or LEXICOGRAPHIC, THREE)
