from itertools import count
from typing import Dict, Iterable, Iterator, Optional, Tuple

from .terms import (
    FALSE,
    SEQ_NODES,
    TRUE,
    Atom,
    Binary,
    Cond,
    Const,
    Neg,
    Term,
    Var,
)

AtomSet = Tuple[Atom, ...]


def iter_nodes(t: Term) -> Iterator[Term]:
    """Preorder walk over every node of ``t``."""
    stack = [t]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children))


def alphabet(t: Term) -> AtomSet:
    """Distinct atoms of ``t``, sorted by name."""
    return tuple(sorted({node for node in iter_nodes(t) if isinstance(node, Atom)}, key=lambda a: a.name))


def variables(t: Term) -> Tuple[Var, ...]:
    """Distinct variables of ``t`` in order of first occurrence."""
    seen = {}
    for node in iter_nodes(t):
        if isinstance(node, Var):
            seen.setdefault(node, None)
    return tuple(seen)


def is_closed(t: Term) -> bool:
    return not any(isinstance(node, Var) for node in iter_nodes(t))


def three_valued(t: Term) -> bool:
    return any(isinstance(node, Const) and node.value == "U" for node in iter_nodes(t))


def is_sequential(t: Term) -> bool:
    return any(isinstance(node, SEQ_NODES) for node in iter_nodes(t))


def is_conditional(t: Term) -> bool:
    return any(isinstance(node, Cond) for node in iter_nodes(t))


def depth(t: Term) -> int:
    """Leaves have depth 0. On a basic form ``P <| a |> Q`` this is
    ``1 + max(depth(P), depth(Q))``."""
    if t.children:
        return 1 + max(depth(c) for c in t.children)
    return 0


def dual(t: Term) -> Term:
    """T and F swap, U, atoms and variables stay, and the branches of every
    conditional swap."""
    if isinstance(t, Const):
        if t == TRUE:
            return FALSE
        if t == FALSE:
            return TRUE
        return t
    if isinstance(t, (Atom, Var)):
        return t
    if isinstance(t, Cond):
        return Cond(dual(t.orelse), dual(t.test), dual(t.body))
    raise TypeError("dual is defined on conditional terms, got %s" % type(t).__name__)


def substitute(t: Term, mapping: Dict[Var, Term]) -> Term:
    if isinstance(t, Var):
        return mapping.get(t, t)
    if isinstance(t, Cond):
        return Cond(substitute(t.body, mapping), substitute(t.test, mapping), substitute(t.orelse, mapping))
    if isinstance(t, Neg):
        return Neg(substitute(t.arg, mapping))
    if isinstance(t, Binary):
        return type(t)(substitute(t.left, mapping), substitute(t.right, mapping))
    return t


def fresh_atoms(taken: Iterable[Atom], prefix="v") -> Iterator[Atom]:
    """``v1, v2, ...`` skipping every name in ``taken``."""
    names = {a.name for a in taken}
    for i in count(1):
        name = "%s%d" % (prefix, i)
        if name not in names:
            yield Atom(name)


def close_variables(
    t: Term,
    reserved: Iterable[Atom] = (),
    mapping: Optional[Dict[Var, Atom]] = None,
) -> Tuple[Term, Dict[Var, Atom]]:
    """
    Replace each variable of ``t`` by a fresh atom.

    Variables get ``v1, v2, ...`` in first-occurrence order, skipping names
    that are reserved, occur in ``t``, or were handed out already. Passing the
    mapping returned for one side of an equation closes the other side
    consistently.
    """
    mapping = dict(mapping or {})
    taken = set(reserved) | set(alphabet(t)) | set(mapping.values())
    fresh = fresh_atoms(taken)
    for var in variables(t):
        if var not in mapping:
            mapping[var] = next(fresh)
    return substitute(t, mapping), mapping
