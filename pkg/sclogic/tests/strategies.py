from hypothesis import strategies as st

from sclogic.normalforms import AtomOrder, mbf
from sclogic.terms import FALSE, TRUE, UNDEFINED, Atom, Cond, FullAnd, FullOr, Neg, ScAnd, ScOr

ATOM_NAMES = ("a", "b", "c", "d", "e")


def atoms():
    return st.sampled_from(ATOM_NAMES).map(Atom)


def constants(three=True):
    return st.sampled_from([TRUE, FALSE, UNDEFINED] if three else [TRUE, FALSE])


def cond_terms(three=True, max_leaves=10):
    leaves = st.one_of(constants(three), atoms())
    return st.recursive(
        leaves,
        lambda children: st.builds(Cond, children, children, children),
        max_leaves=max_leaves,
    )


def seq_terms(three=True, full=True, max_leaves=8):
    def extend(children):
        nodes = [
            st.builds(Neg, children),
            st.builds(ScAnd, children, children),
            st.builds(ScOr, children, children),
        ]
        if full:
            nodes += [st.builds(FullAnd, children, children), st.builds(FullOr, children, children)]
        return st.one_of(nodes)

    return st.recursive(st.one_of(constants(three), atoms()), extend, max_leaves=max_leaves)


def terms(three=True):
    return st.one_of(cond_terms(three), seq_terms(three))


def basic_forms(three=True, max_leaves=10):
    return st.recursive(
        constants(three),
        lambda children: st.builds(Cond, children, atoms(), children),
        max_leaves=max_leaves,
    )


def mem_basic_forms(three=True):
    return cond_terms(three).map(mbf)


def orders():
    return st.permutations(ATOM_NAMES).map(AtomOrder)


def valuations(three=True):
    values = ["T", "F", "U"] if three else ["T", "F"]
    return st.fixed_dictionaries({name: st.sampled_from(values) for name in ATOM_NAMES})
