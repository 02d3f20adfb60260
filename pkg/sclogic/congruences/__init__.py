from .congruences import Conditional, Congruence, DefaultCongruences, Free, Memorising, congruence
from .equations import AxiomSet, Equation
from .report import Verdict, VerifyReport
from .registry import axiom_set_names, dump_axiom_set, get_axiom_set, load_axiom_set, make_axiom_set
from .check import check_equation, close_equation, equiv, normal_form, normal_form_seq, verdict, verify_axiom_set
