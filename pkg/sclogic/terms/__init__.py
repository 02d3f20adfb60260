from .terms import (
    CONSTANTS,
    FALSE,
    TRUE,
    UNDEFINED,
    Atom,
    Binary,
    Cond,
    CondTerm,
    Const,
    FullAnd,
    FullOr,
    Neg,
    ScAnd,
    ScOr,
    SeqTerm,
    Term,
    Var,
)
from .operations import (
    AtomSet,
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
