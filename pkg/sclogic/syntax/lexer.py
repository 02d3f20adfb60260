import re
from collections import namedtuple

from ..sclogic_error import TermSyntaxError

Token = namedtuple("Token", ["kind", "text", "offset"])

EOF = "end of input"

_TOKENS = re.compile(
    r"""
    (?P<space>\s+)
  | (?P<op><\||\|>|&&|\|\||&\*|\|\*|!|\(|\)|=)
  | (?P<const>[TFU])(?![A-Za-z0-9_])
  | (?P<var>\?[a-z][a-z0-9_]*)
  | (?P<atom>[a-z][a-z0-9_]*)
    """,
    re.VERBOSE,
)


def byte_offset(text, index):
    return len(text[:index].encode("utf-8"))


def describe(token):
    if token.kind == EOF:
        return EOF
    return "'%s'" % token.text


def tokenize(text):
    """Split ``text`` into tokens. Operators are their own kind, so the kind of
    ``&&`` is ``"&&"``; leaves are ``const``, ``var`` and ``atom``."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKENS.match(text, pos)
        if m is None:
            raise TermSyntaxError(text, byte_offset(text, pos), "a term", "'%s'" % text[pos])
        kind = m.lastgroup
        if kind != "space":
            if kind == "op":
                kind = m.group()
            tokens.append(Token(kind, m.group(), byte_offset(text, pos)))
        pos = m.end()
    tokens.append(Token(EOF, "", byte_offset(text, len(text))))
    return tokens
