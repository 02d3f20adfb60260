from .translate import cond_to_seq, desugar_full, seq_to_cond
