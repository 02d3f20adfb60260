from dataclasses import dataclass
from typing import Tuple

from ..sclogic_error import AxiomSetError
from ..syntax import parse_equation, to_text
from ..terms import Const, Term, alphabet, is_conditional, is_sequential, iter_nodes


@dataclass(frozen=True)
class Equation:
    """A named open equation ``lhs = rhs`` in one signature."""

    name: str
    lhs: Term
    rhs: Term

    def __post_init__(self):
        conditional = is_conditional(self.lhs) or is_conditional(self.rhs)
        sequential = is_sequential(self.lhs) or is_sequential(self.rhs)
        if conditional and sequential:
            raise AxiomSetError('Equation "%s" mixes the conditional and the sequential signature' % self.name)

    @classmethod
    def parse(cls, text, name="goal", sig="auto"):
        lhs, rhs = parse_equation(text, sig)
        return cls(name, lhs, rhs)

    @property
    def signature(self):
        if is_conditional(self.lhs) or is_conditional(self.rhs):
            return "cond"
        return "seq"

    @property
    def text(self):
        return "%s = %s" % (to_text(self.lhs), to_text(self.rhs))

    def constants(self):
        """Constant names used on either side, in T, F, U order."""
        found = {c.value for side in (self.lhs, self.rhs) for c in _consts(side)}
        return tuple(c for c in "TFU" if c in found)

    def atoms(self):
        return frozenset(alphabet(self.lhs) + alphabet(self.rhs))

    def __str__(self):
        return "%s: %s" % (self.name, self.text)


def _consts(t):
    return [node for node in iter_nodes(t) if isinstance(node, Const)]


@dataclass(frozen=True)
class AxiomSet:
    name: str
    equations: Tuple[Equation, ...]

    def __post_init__(self):
        object.__setattr__(self, "equations", tuple(self.equations))
        names = [e.name for e in self.equations]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise AxiomSetError('Axiom set "%s" repeats %s' % (self.name, ", ".join(duplicates)))
        has_cond = any(is_conditional(e.lhs) or is_conditional(e.rhs) for e in self.equations)
        has_seq = any(is_sequential(e.lhs) or is_sequential(e.rhs) for e in self.equations)
        if has_cond and has_seq:
            raise AxiomSetError('Axiom set "%s" mixes the conditional and the sequential signature' % self.name)

    @property
    def signature(self):
        if any(e.signature == "cond" for e in self.equations):
            return "cond"
        return "seq"

    @property
    def names(self):
        return tuple(e.name for e in self.equations)

    def __getitem__(self, name):
        for e in self.equations:
            if e.name == name:
                return e
        raise AxiomSetError('Axiom set "%s" has no axiom "%s", it has: %s' % (self.name, name, ", ".join(self.names)))

    def __iter__(self):
        return iter(self.equations)

    def __len__(self):
        return len(self.equations)

    def without(self, name):
        """The set minus the axiom ``name``."""
        self[name]
        rest = tuple(e for e in self.equations if e.name != name)
        return AxiomSet("%s-%s" % (self.name, name), rest)

    def constants(self):
        found = {c for e in self.equations for c in e.constants()}
        return tuple(c for c in "TFU" if c in found)

    def to_mapping(self):
        return {e.name: e.text for e in self.equations}
