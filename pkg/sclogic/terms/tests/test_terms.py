import pytest

from .. import (
    FALSE,
    TRUE,
    UNDEFINED,
    Atom,
    Cond,
    Const,
    ScAnd,
    Var,
    alphabet,
    close_variables,
    depth,
    dual,
    fresh_atoms,
    is_closed,
    is_conditional,
    is_sequential,
    iter_nodes,
    substitute,
    three_valued,
    variables,
)
from ...syntax import parse_cond, parse_seq

a, b, c = Atom("a"), Atom("b"), Atom("c")


@pytest.mark.parametrize("value", ["X", "t", "", "TF"])
def test_bad_constant(value):
    with pytest.raises(ValueError):
        Const(value)


@pytest.mark.parametrize("name", ["A", "1a", "a-b", "", "?x"])
def test_bad_names(name):
    with pytest.raises(ValueError):
        Atom(name)
    with pytest.raises(ValueError):
        Var(name)


def test_atoms_are_interned():
    assert Atom("p" + "q").name is Atom("pq").name


def test_structural_equality():
    assert Cond(TRUE, a, FALSE) == Cond(Const("T"), Atom("a"), Const("F"))
    assert hash(ScAnd(a, b)) == hash(ScAnd(a, b))
    assert ScAnd(a, b) != ScAnd(b, a)


def test_iter_nodes_preorder():
    t = Cond(TRUE, a, Cond(FALSE, b, UNDEFINED))
    assert list(iter_nodes(t)) == [t, TRUE, a, t.orelse, FALSE, b, UNDEFINED]


def test_alphabet():
    assert alphabet(parse_seq("a && (b || a)")) == (a, b)
    assert alphabet(parse_seq("b && (a || b)")) == (a, b)
    assert alphabet(TRUE) == ()


def test_variables_first_occurrence():
    assert variables(parse_seq("?y && ?x && ?y")) == (Var("y"), Var("x"))


def test_predicates():
    t = parse_seq("!a && U")
    assert is_closed(t)
    assert three_valued(t)
    assert is_sequential(t)
    assert not is_conditional(t)
    assert not is_closed(parse_cond("?x <| a |> F"))
    assert not three_valued(parse_cond("T <| a |> F"))
    # leaves belong to both signatures
    assert not is_sequential(a) and not is_conditional(a)


def test_depth():
    assert depth(TRUE) == 0
    assert depth(parse_cond("T <| a |> F")) == 1
    assert depth(parse_cond("(T <| a |> F) <| b |> F")) == 2


def test_dual():
    t = parse_cond("T <| a |> (F <| b |> U)")
    assert dual(t) == parse_cond("(U <| b |> T) <| a |> F")
    assert dual(dual(t)) == t


def test_dual_rejects_sequential_terms():
    with pytest.raises(TypeError):
        dual(parse_seq("!a"))


def test_substitute():
    t = parse_seq("?x && (?y || ?x)")
    assert substitute(t, {Var("x"): a}) == parse_seq("a && (?y || a)")


def test_fresh_atoms():
    fresh = fresh_atoms([Atom("v1"), Atom("v3")])
    assert [next(fresh).name for _ in range(3)] == ["v2", "v4", "v5"]


def test_close_variables_skips_taken_names():
    t, mapping = close_variables(parse_seq("?x && v1 || ?y"))
    assert t == parse_seq("v2 && v1 || v3")
    assert mapping == {Var("x"): Atom("v2"), Var("y"): Atom("v3")}


def test_close_variables_shares_mapping():
    lhs, mapping = close_variables(parse_seq("?x"))
    rhs, mapping = close_variables(parse_seq("?y && ?x"), mapping=mapping)
    assert lhs == Atom("v1")
    assert rhs == parse_seq("v2 && v1")
    assert is_closed(rhs)
