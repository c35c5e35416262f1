class LawvereError(Exception):
    """Base class for every error raised by the lawvere package"""


class InputError(LawvereError, ValueError):
    """Malformed or ill-typed input.

    `field` names the offending input (e.g. a matrix file key) and
    `position` is a character offset into textual input when known.
    """

    def __init__(self, message, field=None, position=None):
        self.field = field
        self.position = position
        super().__init__(message)

    def __str__(self):
        msg = super().__str__()
        if self.field is not None:
            msg = f"{self.field}: {msg}"
        if self.position is not None:
            msg = f"{msg} (at position {self.position})"
        return msg


class NotApplicable(LawvereError):
    """The hypothesis of the theorem being applied does not hold"""
