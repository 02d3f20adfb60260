class Verdict(object):
    """Outcome of checking one equation: the normal forms of its closed sides."""

    def __init__(self, equation, congruence, lhs_form, rhs_form):
        self.equation = equation
        self.congruence = congruence
        self.lhs_form = lhs_form
        self.rhs_form = rhs_form

    def holds(self):
        return self.lhs_form == self.rhs_form

    def __str__(self):
        if self.holds():
            return "%s holds" % self.equation
        return "%s fails: %s != %s" % (self.equation, self.lhs_form, self.rhs_form)


class VerifyReport(object):
    def __init__(self, axiom_set, congruence, verdicts):
        self.axiom_set = axiom_set
        self.congruence = congruence
        self.verdicts = list(verdicts)

    def holds(self):
        return all(v.holds() for v in self.verdicts)

    def failures(self):
        return [v for v in self.verdicts if not v.holds()]

    def __str__(self):
        head = "'%s' under %s" % (self.axiom_set.name, self.congruence.get_name())
        if self.holds():
            head += ": all %d axioms hold" % len(self.verdicts)
        else:
            head += ": %d of %d axioms fail" % (len(self.failures()), len(self.verdicts))
        for v in self.verdicts:
            head += "\n\t" + str(v)
        return head
