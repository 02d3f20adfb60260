"""
Recursive descent parsers for both signatures.

Conditional terms::

    term    := primary | primary '<|' primary '|>' primary
    primary := 'T' | 'F' | 'U' | atom | '?' var | '(' term ')'

Sequential terms, loosest first, all binary operators left-associative::

    or      := and (('||' | '|*') and)*
    and     := unary (('&&' | '&*') unary)*
    unary   := '!' unary | primary
    primary := 'T' | 'F' | 'U' | atom | '?' var | '(' or ')'
"""
from ..sclogic_error import TermSyntaxError
from ..terms import Atom, Cond, Const, FullAnd, FullOr, Neg, ScAnd, ScOr, Var
from .lexer import EOF, describe, tokenize

SIGNATURES = ("auto", "seq", "cond")

_OR_OPS = {"||": ScOr, "|*": FullOr}
_AND_OPS = {"&&": ScAnd, "&*": FullAnd}


class _Parser(object):
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        if token.kind != EOF:
            self.pos += 1
        return token

    def fail(self, expected):
        token = self.peek()
        raise TermSyntaxError(self.text, token.offset, expected, describe(token))

    def expect(self, kind, expected=None):
        if self.peek().kind != kind:
            self.fail(expected or ("'%s'" % kind if kind != EOF else EOF))
        return self.advance()

    def leaf(self, inner):
        token = self.peek()
        if token.kind == "const":
            self.advance()
            return Const(token.text)
        if token.kind == "atom":
            self.advance()
            return Atom(token.text)
        if token.kind == "var":
            self.advance()
            return Var(token.text[1:])
        if token.kind == "(":
            self.advance()
            t = inner()
            self.expect(")")
            return t
        self.fail("a term")

    # conditional signature

    def cond(self):
        first = self.leaf(self.cond)
        if self.peek().kind != "<|":
            return first
        self.advance()
        test = self.leaf(self.cond)
        self.expect("|>")
        orelse = self.leaf(self.cond)
        if self.peek().kind == "<|":
            self.fail("')' or end of term (nested conditionals need parentheses)")
        return Cond(first, test, orelse)

    # sequential signature

    def disjunction(self):
        t = self.conjunction()
        while self.peek().kind in _OR_OPS:
            op = _OR_OPS[self.advance().kind]
            t = op(t, self.conjunction())
        return t

    def conjunction(self):
        t = self.unary()
        while self.peek().kind in _AND_OPS:
            op = _AND_OPS[self.advance().kind]
            t = op(t, self.unary())
        return t

    def unary(self):
        if self.peek().kind == "!":
            self.advance()
            return Neg(self.unary())
        return self.leaf(self.disjunction)

    def entry(self, sig):
        return self.cond if sig == "cond" else self.disjunction


def sniff(text):
    """Signature of a term text: conditional iff it uses the ternary."""
    return "cond" if "<|" in text else "seq"


def _resolve(text, sig):
    if sig not in SIGNATURES:
        raise NameError('Signature "%s" is not supported, use one of: %s' % (sig, ", ".join(SIGNATURES)))
    return sniff(text) if sig == "auto" else sig


def parse_cond(text):
    p = _Parser(text)
    t = p.cond()
    p.expect(EOF)
    return t


def parse_seq(text):
    p = _Parser(text)
    t = p.disjunction()
    p.expect(EOF)
    return t


def parse_term(text, sig="auto"):
    sig = _resolve(text, sig)
    return parse_cond(text) if sig == "cond" else parse_seq(text)


def parse_equation(text, sig="auto"):
    """``LHS = RHS`` in one signature. Returns the pair of sides."""
    p = _Parser(text)
    term = p.entry(_resolve(text, sig))
    lhs = term()
    p.expect("=", "'='")
    rhs = term()
    p.expect(EOF)
    return lhs, rhs
