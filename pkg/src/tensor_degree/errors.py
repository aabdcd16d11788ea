"""Exception types shared across the package."""


class GroupError(Exception):
    """Base class for every error raised by this package."""


class NotAGroup(GroupError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class NotNormal(GroupError):
    pass


class UnknownGroup(GroupError):
    def __init__(self, expr: str):
        super().__init__(f"unknown group expression {expr!r}")
        self.expr = expr


class CosetLimitExceeded(GroupError):
    def __init__(self, max_cosets: int):
        super().__init__(f"coset enumeration needs more than {max_cosets} live cosets")
        self.max_cosets = max_cosets


class IncompatibleActions(GroupError):
    pass


class InternalCheckFailed(GroupError):
    """A theorem-backed invariant failed; this always indicates a bug."""

    def __init__(self, name: str, detail: str = ""):
        msg = name if not detail else f"{name}: {detail}"
        super().__init__(msg)
        self.name = name


class ElementOutOfRange(GroupError):
    pass


class ParseError(GroupError):
    def __init__(self, line: int, reason: str, path: str | None = None):
        where = f"{path}:{line}" if path else f"line {line}"
        super().__init__(f"{where}: {reason}")
        self.line = line
        self.reason = reason
        self.path = path
