import pytest
from hypothesis import given

from .. import cond_to_seq, desugar_full, seq_to_cond
from ...congruences import equiv
from ...semantics import evaluate
from ...syntax import parse_cond, parse_seq
from ...terms import FALSE, TRUE, UNDEFINED, Atom, Var, is_conditional, is_sequential
from ...tests import strategies


@pytest.mark.parametrize("leaf", [TRUE, FALSE, UNDEFINED, Atom("a"), Var("x")])
def test_leaves_are_fixed(leaf):
    assert seq_to_cond(leaf) == leaf
    assert cond_to_seq(leaf) == leaf
    assert desugar_full(leaf) == leaf


@pytest.mark.parametrize(
    "seq, cond",
    [
        ("!a", "F <| a |> T"),
        ("a && b", "b <| a |> F"),
        ("a || b", "T <| a |> b"),
        ("a &* b", "b <| a |> (F <| b |> F)"),
        ("!?x", "F <| ?x |> T"),
        ("?x && ?y", "?y <| ?x |> F"),
        ("?x || ?y", "T <| ?x |> ?y"),
    ],
)
def test_seq_to_cond(seq, cond):
    assert seq_to_cond(parse_seq(seq)) == parse_cond(cond)


def test_seq_to_cond_nests():
    assert seq_to_cond(parse_seq("!(a && b)")) == parse_cond("F <| (b <| a |> F) |> T")


def test_full_or_goes_through_desugaring():
    t = parse_seq("a |* b")
    assert seq_to_cond(t) == seq_to_cond(desugar_full(t))


def test_cond_to_seq():
    assert cond_to_seq(parse_cond("b <| a |> F")) == parse_seq("(a && b) || (!a && F)")


@pytest.mark.parametrize(
    "text, expected",
    [
        ("a &* b", "(a || (b && F)) && b"),
        ("a |* b", "!((!a || (!b && F)) && !b)"),
        ("!(a &* b)", "!((a || (b && F)) && b)"),
        ("a && b", "a && b"),
    ],
)
def test_desugar_full(text, expected):
    assert desugar_full(parse_seq(text)) == parse_seq(expected)


def test_translations_reject_the_other_signature():
    with pytest.raises(TypeError):
        seq_to_cond(parse_cond("T <| a |> F"))
    with pytest.raises(TypeError):
        cond_to_seq(parse_seq("a && b"))


@given(strategies.seq_terms())
def test_seq_to_cond_leaves_conditional_terms(t):
    assert not is_sequential(seq_to_cond(t))


@given(strategies.cond_terms())
def test_cond_to_seq_leaves_sequential_terms(t):
    assert not is_conditional(cond_to_seq(t))


@given(strategies.seq_terms(), strategies.valuations())
def test_seq_to_cond_preserves_values(t, v):
    assert evaluate(seq_to_cond(t), v) == evaluate(t, v)


@given(strategies.cond_terms(), strategies.valuations())
def test_cond_to_seq_preserves_values(t, v):
    assert evaluate(cond_to_seq(t), v) == evaluate(t, v)


@given(strategies.cond_terms())
def test_round_trip_is_memorising_equivalent(t):
    assert equiv(seq_to_cond(cond_to_seq(t)), t, ("mem", "three"))


@given(strategies.seq_terms())
def test_desugaring_is_conditionally_equivalent(t):
    assert equiv(seq_to_cond(desugar_full(t)), seq_to_cond(t), ("cl", "three"))
