"""Exception hierarchy shared by every module."""


class SlcsError(Exception):
    pass


class InvalidSimplex(SlcsError, ValueError):
    pass


class BadIndex(SlcsError, IndexError):
    pass


class NoSuchElement(SlcsError, KeyError):
    pass


class NoSuchSimplex(SlcsError, KeyError):
    pass


class ValidationFailed(SlcsError, ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        shown = "; ".join(str(v) for v in self.violations[:5])
        more = "" if len(self.violations) <= 5 else f" (+{len(self.violations) - 5} more)"
        super().__init__(f"validation failed: {shown}{more}")


class PointOutsidePolyhedron(SlcsError, ValueError):
    pass


class PathKindError(SlcsError, ValueError):
    pass


class SeqMismatch(SlcsError, ValueError):
    pass


class ReflexivityRequired(SlcsError, ValueError):
    pass


class ParseError(SlcsError, ValueError):
    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__(f"{message} at line {line}, column {column}")


class OracleBoundExceeded(SlcsError, ValueError):
    pass


class NotEtaFragment(SlcsError, ValueError):
    pass


class InternalError(SlcsError, RuntimeError):
    pass


class LabelClash(SlcsError, ValueError):
    pass


class UniverseMismatch(SlcsError, ValueError):
    pass


class ChiSynthesisFailed(SlcsError, RuntimeError):
    pass


class SchemaError(SlcsError, ValueError):
    def __init__(self, message, path="$"):
        self.path = path
        super().__init__(f"{path}: {message}")


class RefError(SlcsError, ValueError):
    def __init__(self, message, path="$"):
        self.path = path
        super().__init__(f"{path}: {message}")


class BadParameter(SlcsError, ValueError):
    pass
