import pytest

from .. import parse_cond, parse_equation, parse_seq, parse_term, sniff, to_text
from ...sclogic_error import TermSyntaxError
from ...terms import FALSE, TRUE, UNDEFINED, Atom, Cond, FullAnd, FullOr, Neg, ScAnd, ScOr, Var

a, b, c = Atom("a"), Atom("b"), Atom("c")


def test_constants_and_leaves():
    assert parse_seq("T") == TRUE
    assert parse_seq("F") == FALSE
    assert parse_cond("U") == UNDEFINED
    assert parse_seq("x_1") == Atom("x_1")
    assert parse_seq("?x") == Var("x")


@pytest.mark.parametrize(
    "text, expected",
    [
        ("a && b || c", ScOr(ScAnd(a, b), c)),
        ("a || b && c", ScOr(a, ScAnd(b, c))),
        ("a && b && c", ScAnd(ScAnd(a, b), c)),
        ("a && (b && c)", ScAnd(a, ScAnd(b, c))),
        ("!a && b", ScAnd(Neg(a), b)),
        ("!!a", Neg(Neg(a))),
        ("a &* b |* c", FullOr(FullAnd(a, b), c)),
        ("a |* b && c", FullOr(a, ScAnd(b, c))),
        ("!(a || b)", Neg(ScOr(a, b))),
    ],
)
def test_seq_precedence(text, expected):
    assert parse_seq(text) == expected


def test_cond():
    assert parse_cond("a <| b |> c") == Cond(a, b, c)
    assert parse_cond("(T <| a |> F) <| b |> (F <| c |> U)") == Cond(
        Cond(TRUE, a, FALSE), b, Cond(FALSE, c, UNDEFINED)
    )
    assert parse_cond("a <| (b <| c |> T) |> F") == Cond(a, Cond(b, c, TRUE), FALSE)


def test_cond_is_not_associative():
    with pytest.raises(TermSyntaxError) as e:
        parse_cond("a <| b |> c <| d |> e")
    assert e.value.offset == 12
    assert "nested conditionals need parentheses" in e.value.message


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("a &&", 4),
        ("(a && b", 7),
        ("a ? b", 2),
        ("Tx", 0),
        ("a && é", 5),
        ("é && a", 0),
        ("a b", 2),
    ],
)
def test_syntax_errors(text, offset):
    with pytest.raises(TermSyntaxError) as e:
        parse_seq(text)
    assert e.value.offset == offset
    assert e.value.message.startswith("expected ")


def test_offset_counts_bytes():
    with pytest.raises(TermSyntaxError) as e:
        parse_seq("a\u00a0&& #")
    assert e.value.offset == 6


def test_error_is_a_syntax_error():
    with pytest.raises(SyntaxError):
        parse_seq("&& a")


def test_sniff():
    assert sniff("a <| b |> c") == "cond"
    assert sniff("a && b") == "seq"
    assert sniff("a") == "seq"


def test_parse_term_signatures():
    assert parse_term("T <| a |> F") == Cond(TRUE, a, FALSE)
    assert parse_term("a && b") == ScAnd(a, b)
    with pytest.raises(TermSyntaxError):
        parse_term("a && b", "cond")
    with pytest.raises(TermSyntaxError):
        parse_term("T <| a |> F", "seq")
    with pytest.raises(NameError):
        parse_term("a", "bogus")


def test_parse_equation():
    lhs, rhs = parse_equation("?x && ?y = ?y && ?x")
    assert lhs == ScAnd(Var("x"), Var("y"))
    assert rhs == ScAnd(Var("y"), Var("x"))
    lhs, rhs = parse_equation("?x <| T |> ?y = ?x")
    assert lhs == Cond(Var("x"), TRUE, Var("y"))
    assert rhs == Var("x")


@pytest.mark.parametrize("text", ["a = ", "= a", "a = b = c", "a"])
def test_bad_equations(text):
    with pytest.raises(TermSyntaxError):
        parse_equation(text)


@pytest.mark.parametrize(
    "text",
    [
        "a && b || c",
        "a && (b && c)",
        "(a || b) && c",
        "!(a && b)",
        "!!a",
        "a &* (b |* !c)",
        "?x && U || U",
        "(T <| a |> F) <| b |> (F <| c |> U)",
        "a <| (b <| c |> T) |> F",
    ],
)
def test_canonical_text(text):
    assert to_text(parse_term(text)) == text


def test_printer_drops_redundant_parentheses():
    assert to_text(parse_seq("((a && b)) || (c)")) == "a && b || c"
    assert to_text(parse_cond("((T <| a |> F))")) == "T <| a |> F"
    assert str(ScOr(ScAnd(a, TRUE), ScAnd(Neg(a), FALSE))) == "a && T || !a && F"
