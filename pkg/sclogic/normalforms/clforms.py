"""
CL-basic forms: canonical representatives for conditional valuation congruence.

A mem-basic form P is brought into shape ``F_sigma(P_0, ..., P_{2^n-1})``
where sigma lists the shared alphabet of P in the chosen atom order. The top
n levels of the tree then test exactly the atoms of sigma, in order, and the
parts below are normalised the same way. In the three-valued variant a
subtree whose parts all normalise to U collapses to U.
"""
import logging

from ..sclogic_error import FormError, OpenTermError, ValuednessError
from ..terms import UNDEFINED, Cond, alphabet, is_closed, three_valued
from .basic import left_reduce, mbf, right_reduce
from .order import LEXICOGRAPHIC, THREE, TWO, check_mode

logger = logging.getLogger(__name__)


def _shared2(p):
    if isinstance(p, Cond):
        return frozenset([p.test]) | (_shared2(p.body) & _shared2(p.orelse))
    return frozenset()


def _shared3(p, atoms):
    # U agrees with every atom still available on its path
    if p == UNDEFINED:
        return atoms
    if isinstance(p, Cond):
        rest = atoms - {p.test}
        return frozenset([p.test]) | (_shared3(p.body, rest) & _shared3(p.orelse, rest))
    return frozenset()


def shared_atoms(p, mode):
    if mode == TWO:
        return _shared2(p)
    return _shared3(p, frozenset(alphabet(p)))


def shared_alphabet(p, mode=TWO):
    """Atoms tested on every path through the mem-basic form ``p``."""
    from .validate import is_mem_basic_form

    check_mode(mode)
    if not is_mem_basic_form(p):
        raise FormError("Shared alphabet needs a mem-basic form, got %s" % p)
    if mode == TWO and three_valued(p):
        raise ValuednessError("U occurs in %s, use the three-valued shared alphabet" % p)
    return shared_atoms(p, mode)


def split(p, sigma):
    """Parts of ``p`` along ``sigma``: left reduction for bit 0, first atom most significant."""
    if not sigma:
        return [p]
    a, rest = sigma[0], sigma[1:]
    return split(left_reduce(a, p), rest) + split(right_reduce(a, p), rest)


def f_sigma(sigma, parts):
    """Reassemble ``parts`` under the complete tree that tests ``sigma`` level by level."""
    if len(parts) != 2 ** len(sigma):
        raise ValueError("%d atoms need %d parts, got %d" % (len(sigma), 2 ** len(sigma), len(parts)))
    if not sigma:
        return parts[0]
    half = len(parts) // 2
    return Cond(f_sigma(sigma[1:], parts[:half]), sigma[0], f_sigma(sigma[1:], parts[half:]))


def f_sigma_decompose(p, order=LEXICOGRAPHIC, mode=TWO):
    sigma = order.sort(shared_alphabet(p, mode))
    return sigma, split(p, sigma)


def _normalise(p, order, mode):
    if not isinstance(p, Cond):
        return p
    sigma = order.sort(shared_atoms(p, mode))
    parts = [_normalise(q, order, mode) for q in split(p, sigma)]
    if mode == THREE and all(q == UNDEFINED for q in parts):
        return UNDEFINED
    return f_sigma(sigma, parts)


def cl_basic_form(t, order=LEXICOGRAPHIC, mode=TWO):
    """The unique CL-basic form (CLU-basic form in mode three) of the closed term ``t``."""
    check_mode(mode)
    if not is_closed(t):
        raise OpenTermError("Cannot normalise open term %s" % t)
    if mode == TWO and three_valued(t):
        raise ValuednessError("U occurs in %s, use mode three" % t)
    p = _normalise(mbf(t), order or LEXICOGRAPHIC, mode)
    logger.debug("cl basic form under %r: %s", order, p)
    return p
