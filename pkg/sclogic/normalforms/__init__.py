from .order import LEXICOGRAPHIC, MODES, THREE, TWO, AtomOrder
from .basic import bf, left_reduce, mbf, mf, right_reduce, subst_tf
from .clforms import cl_basic_form, f_sigma, f_sigma_decompose, shared_alphabet, split
from .validate import is_basic_form, is_mem_basic_form, validate_form
