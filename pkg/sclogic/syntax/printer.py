from ..terms import Atom, Binary, Cond, Const, FullAnd, Neg, ScAnd, Var

# binding strength, loosest first
_OR, _AND, _UNARY, _LEAF = range(4)


def _leaf(t):
    if isinstance(t, Const):
        return t.value
    if isinstance(t, Atom):
        return t.name
    if isinstance(t, Var):
        return "?" + t.name
    raise TypeError("Not a term: %r" % (t,))


def _cond(t, nested):
    if not isinstance(t, Cond):
        return _text(t)
    s = "%s <| %s |> %s" % (_cond(t.body, True), _cond(t.test, True), _cond(t.orelse, True))
    return "(%s)" % s if nested else s


def _seq(t):
    """Text of ``t`` and how tightly it binds."""
    if isinstance(t, Neg):
        arg, strength = _seq(t.arg)
        if strength < _UNARY:
            arg = "(%s)" % arg
        return "!" + arg, _UNARY
    if isinstance(t, Binary):
        strength = _AND if isinstance(t, (ScAnd, FullAnd)) else _OR
        left, ls = _seq(t.left)
        right, rs = _seq(t.right)
        if ls < strength:
            left = "(%s)" % left
        if rs <= strength:
            right = "(%s)" % right
        return "%s %s %s" % (left, t.symbol, right), strength
    if isinstance(t, Cond):
        return _cond(t, True), _LEAF
    return _leaf(t), _LEAF


def _text(t):
    if isinstance(t, Cond):
        return _cond(t, False)
    return _seq(t)[0]


def to_text(t):
    """Canonical text of ``t`` with no redundant parentheses."""
    return _text(t)
