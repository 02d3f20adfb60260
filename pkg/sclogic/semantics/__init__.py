from .truthvalues import TWO_VALUES, VALUES, TruthValue
from .evaluate import TruthTable, eval_cond, eval_seq, evaluate, truth_table
