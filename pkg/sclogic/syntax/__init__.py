from .parser import SIGNATURES, parse_cond, parse_equation, parse_seq, parse_term, sniff
from .printer import to_text
from .dot import dump, to_dot, to_pydot
