"""
The built-in axiom sets.

Each set is a YAML file in ``axioms/`` named after the set, mapping axiom
names to equation texts. User files in the same format are read with
`make_axiom_set`.
"""
import os
from functools import lru_cache

from ..readers import read_axioms
from ..sclogic_error import AxiomSetError, TermSyntaxError
from .equations import AxiomSet, Equation

AXIOM_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "axioms")


def axiom_set_names():
    return tuple(sorted(f[: -len(".yaml")] for f in os.listdir(AXIOM_DIR) if f.endswith(".yaml")))


def make_axiom_set(name, mapping):
    equations = []
    for axiom, text in mapping.items():
        try:
            equations.append(Equation.parse(text, axiom))
        except TermSyntaxError as e:
            raise AxiomSetError('Axiom "%s" of "%s": %s' % (axiom, name, e.message)) from e
    return AxiomSet(name, tuple(equations))


@lru_cache(maxsize=None)
def get_axiom_set(name):
    if name not in axiom_set_names():
        raise AxiomSetError('Unknown axiom set "%s", use one of: %s' % (name, ", ".join(axiom_set_names())))
    path = os.path.join(AXIOM_DIR, name + ".yaml")
    return make_axiom_set(name, read_axioms(path))


def load_axiom_set(path, parser="pyyaml", content=None, name=None):
    """An axiom set from a user file, named after the file stem unless ``name`` is given."""
    if name is None:
        name = os.path.splitext(os.path.basename(path))[0] if path else "axioms"
    return make_axiom_set(name, read_axioms(path, parser, content))


def dump_axiom_set(axiom_set):
    import yaml

    return yaml.safe_dump(axiom_set.to_mapping(), sort_keys=False, default_flow_style=False, width=1000)
