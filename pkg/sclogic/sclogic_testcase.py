import glob
import itertools
import os
from unittest import TestCase

import sclogic


class SclogicTestCase(TestCase):
    """TestCase for checking axiom files in your own tests.
    `axioms`: String or list of axiom files to verify. Accepts globs and registered set names.
    `congruence`: free, mem or cl. Default is cl.
    `three`: Check with U allowed. Default is False.
    `base_dir`: String path to prepend to all file paths. This is optional.
    """

    axioms = None
    congruence = "cl"
    three = False
    base_dir = None

    def verify(self, order=None):
        axioms = self.axioms
        base_dir = self.base_dir

        if axioms is None:
            return

        if not isinstance(axioms, list):
            axioms = [axioms]

        registered = set(sclogic.axiom_set_names())
        names = [a for a in axioms if a in registered]
        paths = [a for a in axioms if a not in registered]

        if base_dir is not None:
            paths = [os.path.join(base_dir, p) for p in paths]

        # Run paths through glob and flatten list
        paths = sorted(set(itertools.chain(*map(glob.glob, paths))))

        sets = [sclogic.get_axiom_set(n) for n in names] + [sclogic.make_axioms(p) for p in paths]
        congruence = sclogic.congruence(self.congruence, self.three)
        for axiom_set in sets:
            report = sclogic.verify(axiom_set, congruence, order)
            if not report.holds():
                raise ValueError(report)
        return True
