from .config import SearchConfig
from .algebra import CounterExample, FiniteAlgebra
from .search import find_model, prepare
from .recheck import recheck, refutes, satisfies, violations
from .independence import (
    INCONCLUSIVE,
    INDEPENDENT,
    NO_MODEL,
    AxiomResult,
    IndependenceReport,
    check_axiom,
    independence_report,
    load_sizes,
    record_sizes,
)
