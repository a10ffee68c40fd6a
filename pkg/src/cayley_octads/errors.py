"""Exception types shared across the package.

Every exception carries a short machine-readable ``code`` which the command
line front end reports alongside the message.
"""


class OctadError(Exception):
    code = "error"


class BadInput(OctadError, ValueError):
    code = "bad_input"


class NoIsometry(OctadError):
    code = "no_isometry"


class NotInduced(OctadError):
    code = "not_induced"


class EnumerationLimitExceeded(OctadError):
    code = "enumeration_limit"


class MoveNotAllowed(OctadError):
    code = "move_not_allowed"


class DegenerateInput(OctadError):
    code = "degenerate_input"


class NotZeroDimensional(OctadError):
    code = "not_zero_dimensional"


class MultiplePoint(OctadError):
    code = "multiple_point"


class NotOnBase(OctadError):
    code = "not_on_base"


class Degenerate(OctadError):
    code = "degenerate"


class NotSkew(OctadError):
    code = "not_skew"


class NotSimple(OctadError):
    code = "not_simple"


class NotRegular(OctadError):
    code = "not_regular"


class Inconsistent(OctadError):
    code = "inconsistent"
