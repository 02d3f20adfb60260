import pytest
from hypothesis import given

from .. import (
    Conditional,
    Free,
    Memorising,
    check_equation,
    congruence,
    equiv,
    normal_form,
    normal_form_seq,
)
from ..equations import Equation
from ...normalforms import AtomOrder, validate_form
from ...sclogic_error import OpenTermError, ValuednessError
from ...syntax import parse_cond, parse_seq, parse_term
from ...terms import dual
from ...tests import strategies

CONGRUENCES = ["free", "mem", "cl"]


def test_congruence_lookup():
    assert congruence("cl") == Conditional(False)
    assert congruence("Memorising", True) == Memorising(True)
    assert congruence(("free", "three")) == Free(True)
    c = congruence("cl", True)
    assert congruence(c) is c
    assert c.get_name() == "cl,three"
    assert c.mode == "three"
    assert repr(congruence("mem")) == "Memorising(three=False)"
    assert len({congruence("cl"), congruence(("cl", "two"))}) == 1


def test_unknown_congruence():
    with pytest.raises(NameError):
        congruence("static")
    with pytest.raises(NameError):
        congruence(("cl", "four"))


@pytest.mark.parametrize(
    "c, text, expected",
    [
        ("free", "a && a", "(T <| a |> F) <| a |> F"),
        ("mem", "a && a", "T <| a |> F"),
        ("cl", "a && a", "T <| a |> F"),
        ("free", "!(!a && !b)", "T <| a |> (T <| b |> F)"),
        ("mem", "a && b", "(T <| b |> F) <| a |> F"),
        ("free", "T <| (T <| a |> F) |> F", "T <| a |> F"),
    ],
)
def test_normal_forms(c, text, expected):
    assert normal_form(parse_term(text), c) == parse_cond(expected)


def test_normal_form_seq():
    assert normal_form_seq(parse_seq("a && a"), "mem") == parse_seq("a && T || !a && F")


def test_normal_form_errors():
    with pytest.raises(OpenTermError):
        normal_form(parse_seq("?x && a"), "mem")
    with pytest.raises(ValuednessError):
        normal_form(parse_seq("a && U"), "cl")
    assert normal_form(parse_seq("a && U"), ("cl", "three")) == parse_cond("U <| a |> F")


@pytest.mark.parametrize(
    "s, t, c, expected",
    [
        ("a &* b", "b &* a", "cl", True),
        ("a &* b", "b &* a", "mem", False),
        ("a && b", "b && a", "cl", False),
        ("a && a", "a", "mem", True),
        ("a && a", "a", "free", False),
        ("!!a", "a", "free", True),
        ("(a && U) || U", "U", ("cl", "three"), True),
        ("(a && U) || U", "U", ("mem", "three"), False),
    ],
)
def test_equiv(s, t, c, expected):
    assert equiv(parse_seq(s), parse_seq(t), c) is expected


@pytest.mark.parametrize(
    "text, c, expected",
    [
        ("?x && ?x = ?x", "free", False),
        ("?x && ?x = ?x", "mem", True),
        ("!!?x = ?x", "free", True),
        ("?x &* ?y = (?x && ?y) || (?y && ?x)", "mem", True),
        ("(?x && !?x) || ?x = ?x", "mem", True),
        ("(?x || !?x) && ?x = ?x", "mem", True),
        ("(?x && U) || U = U", ("cl", "three"), True),
        ("(?x && U) || U = U", ("mem", "three"), False),
        ("?x &* ?y = ?y &* ?x", "cl", True),
        ("?x &* ?y = ?y &* ?x", "mem", False),
        ("?x && F = F", "cl", False),
        ("?x && !?x = ?y && !?y", "cl", False),
        ("(?x && !?x) || (?y && !?y) = (?y && !?y) || (?x && !?x)", "cl", True),
        ("?x <| U |> ?y = U", ("free", "three"), True),
    ],
)
def test_check_equation(text, c, expected):
    assert check_equation(Equation.parse(text), c) is expected


def test_check_equation_ignores_atom_order():
    e = Equation.parse("?x &* ?y = ?y &* ?x")
    for order in ["", "v2,v1", "v1,v2"]:
        assert check_equation(e, "cl", AtomOrder.parse(order))


def test_equation_atoms_are_kept_apart_from_fresh_names():
    # v1 is taken by the equation, so ?x is closed with v2
    assert not check_equation(Equation.parse("?x && v1 = v1 && ?x"), "mem")
    assert check_equation(Equation.parse("?x && v1 = ?x && v1"), "free")


@given(strategies.cond_terms(), strategies.orders())
def test_terms_are_congruent_to_their_normal_forms(t, order):
    for tag in CONGRUENCES:
        c = congruence(tag, True)
        assert c.equiv(t, c.normal_form(t, order), order)


@given(strategies.cond_terms(), strategies.orders(), strategies.orders())
def test_verdicts_do_not_depend_on_the_atom_order(t, first, second):
    c = congruence("cl", True)
    assert c.equiv(t, c.normal_form(t, first), second)


@given(strategies.cond_terms(), strategies.orders())
def test_normal_forms_commute_with_duality(t, order):
    for tag in CONGRUENCES:
        c = congruence(tag, True)
        assert c.normal_form(dual(t), order) == dual(c.normal_form(t, order))


@given(strategies.cond_terms(), strategies.cond_terms())
def test_congruences_refine_each_other(s, t):
    free, mem, cl = (congruence(tag, True) for tag in CONGRUENCES)
    if free.equiv(s, t):
        assert mem.equiv(s, t)
    if mem.equiv(s, t):
        assert cl.equiv(s, t)


@given(strategies.seq_terms(three=False), strategies.orders())
def test_normal_forms_are_canonical(t, order):
    c = congruence("cl")
    form = c.normal_form(t, order)
    assert validate_form("cl", form, order)
    assert c.normal_form(form, order) == form
