from ..normalforms import THREE, TWO, bf, cl_basic_form, mbf
from ..normalforms.order import check_mode
from ..sclogic_error import OpenTermError, ValuednessError
from ..terms import is_closed, is_sequential, three_valued
from ..translate import seq_to_cond


class Congruence(object):
    """
    Base class for the valuation congruences.

    A congruence decides equality of closed terms by comparing their normal
    forms. Two-valued congruences reject terms that contain U.
    """

    tag = None

    def __init__(self, three=False):
        self.three = bool(three)

    @property
    def mode(self):
        return THREE if self.three else TWO

    def _normalise(self, p, order):
        """Congruences must implement this. ``p`` is closed and conditional."""
        raise NotImplementedError("You need to override this function")

    def normal_form(self, t, order=None):
        if not is_closed(t):
            raise OpenTermError("Cannot normalise open term %s" % t)
        if not self.three and three_valued(t):
            raise ValuednessError("U occurs in %s, %s is two-valued" % (t, self.get_name()))
        if is_sequential(t):
            t = seq_to_cond(t)
        return self._normalise(t, order)

    def equiv(self, s, t, order=None):
        return self.normal_form(s, order) == self.normal_form(t, order)

    def get_name(self):
        return "%s,%s" % (self.tag, self.mode)

    def __repr__(self):
        return "%s(three=%s)" % (self.__class__.__name__, self.three)

    def __eq__(self, other):
        return isinstance(other, self.__class__) and self.three == other.three

    def __hash__(self):
        return hash((self.tag, self.three))


class Free(Congruence):
    """Free valuation congruence: equal basic forms."""

    tag = "free"

    def _normalise(self, p, order):
        return bf(p)


class Memorising(Congruence):
    """Memorising valuation congruence: equal mem-basic forms."""

    tag = "mem"

    def _normalise(self, p, order):
        return mbf(p)


class Conditional(Congruence):
    """Conditional valuation congruence: equal CL-basic forms under one atom order."""

    tag = "cl"

    def _normalise(self, p, order):
        return cl_basic_form(p, order, self.mode)


DefaultCongruences = {}

for c in (Free, Memorising, Conditional):
    DefaultCongruences[c.tag] = c
    DefaultCongruences[c.__name__] = c


def congruence(tag, three=False):
    """The congruence named ``tag`` (``free``, ``mem`` or ``cl``).

    A congruence or a ``(tag, mode)`` pair such as ``("cl", "three")`` is
    accepted too.
    """
    if isinstance(tag, Congruence):
        return tag
    if isinstance(tag, tuple):
        tag, mode = tag
        three = check_mode(mode) == THREE
    try:
        cls = DefaultCongruences[tag]
    except KeyError:
        raise NameError('Congruence "%s" is not supported, use one of: free, mem, cl' % (tag,))
    return cls(three)
