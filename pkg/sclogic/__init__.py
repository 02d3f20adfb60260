from .sclogic import make_term, make_axioms, verify
from .sclogic_testcase import SclogicTestCase
from .sclogic_error import (
    AxiomSetError,
    FormError,
    OpenTermError,
    SclogicError,
    SearchExhausted,
    TermSyntaxError,
    ValuationError,
    ValuednessError,
    VerificationError,
)
from .congruences import (
    AxiomSet,
    Equation,
    axiom_set_names,
    check_equation,
    congruence,
    equiv,
    get_axiom_set,
    normal_form,
    normal_form_seq,
    verify_axiom_set,
)
from .normalforms import AtomOrder, cl_basic_form, validate_form
from .semantics import TruthValue, eval_cond, eval_seq, truth_table
from .syntax import parse_equation, parse_term, to_text
from .translate import cond_to_seq, desugar_full, seq_to_cond
from .modelfinder import SearchConfig, find_model, independence_report
from .version import __version__
