class SclogicError(ValueError):
    """Root of every error raised for bad terms, sets or searches."""

    def __init__(self, message):
        super(SclogicError, self).__init__(message)
        self.message = self.args[0]


class OpenTermError(SclogicError):
    pass


class ValuednessError(SclogicError):
    pass


class FormError(SclogicError):
    pass


class ValuationError(SclogicError):
    pass


class AxiomSetError(SclogicError):
    pass


class SearchExhausted(SclogicError):
    """The model finder ran out of budget or time before it could answer.

    `completed` lists the sizes that were searched exhaustively, `stopped_at`
    the size at which the search gave up.
    """

    def __init__(self, message, completed=(), stopped_at=None):
        super(SearchExhausted, self).__init__(message)
        self.completed = tuple(completed)
        self.stopped_at = stopped_at


class VerificationError(SclogicError):
    def __init__(self, report):
        super(VerificationError, self).__init__(
            "\n".join(str(v) for v in report.verdicts if not v.holds())
        )
        self.report = report


class TermSyntaxError(SyntaxError):
    """Malformed term text. `offset` counts bytes from the start of the input."""

    def __init__(self, text, offset, expected, found):
        self.expected = expected
        self.found = found
        message = "expected %s at offset %d, found %s" % (expected, offset, found)
        super(TermSyntaxError, self).__init__(message)
        self.text = text
        self.offset = offset
        self.message = message

    def __str__(self):
        return self.message
