from ..terms import Atom

TWO = "two"
THREE = "three"
MODES = (TWO, THREE)


def check_mode(mode):
    if mode not in MODES:
        raise NameError('Mode "%s" is not supported, use "two" or "three"' % (mode,))
    return mode


class AtomOrder(object):
    """
    A strict total order on atoms.

    Listed atoms come first, in the order given. Every other atom sorts after
    them, lexicographically by name, so the order covers fresh atoms too.
    An empty order is plain lexicographic order.
    """

    def __init__(self, atoms=()):
        atoms = tuple(a if isinstance(a, Atom) else Atom(a) for a in atoms)
        if len(set(atoms)) != len(atoms):
            raise ValueError("Atom order lists an atom twice: %s" % ",".join(a.name for a in atoms))
        self.atoms = atoms
        self._rank = {a: i for i, a in enumerate(atoms)}

    @classmethod
    def parse(cls, text):
        """``"a,b,c"``; blank text gives the lexicographic order."""
        if text is None:
            return cls()
        return cls(name.strip() for name in text.split(",") if name.strip())

    def key(self, atom):
        rank = self._rank.get(atom)
        if rank is None:
            return (1, 0, atom.name)
        return (0, rank, "")

    def sort(self, atoms):
        return tuple(sorted(atoms, key=self.key))

    def less(self, a, b):
        return self.key(a) < self.key(b)

    def __eq__(self, other):
        return isinstance(other, AtomOrder) and self.atoms == other.atoms

    def __hash__(self):
        return hash(self.atoms)

    def __repr__(self):
        return "AtomOrder(%s)" % ",".join(a.name for a in self.atoms)


LEXICOGRAPHIC = AtomOrder()
