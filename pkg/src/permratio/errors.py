"""Exception hierarchy shared by every module."""


class PermRatioError(Exception):
    """Base class for all library errors."""


class NonRational(PermRatioError, ValueError):
    pass


class ParseError(PermRatioError, ValueError):
    pass


class InvalidEdge(PermRatioError, ValueError):
    pass


class NotATree(PermRatioError, ValueError):
    pass


class Disconnected(PermRatioError, ValueError):
    pass


class ZeroDegree(PermRatioError, ValueError):
    pass


class TooLarge(PermRatioError):
    """Raised when a computation exceeds its configured order cap."""


class NotPendant(PermRatioError, ValueError):
    pass


class NoSuchEdge(PermRatioError, ValueError):
    pass


class InvalidSpec(PermRatioError, ValueError):
    pass


class DegreeMismatch(PermRatioError, ValueError):
    pass


class NotAPath(PermRatioError, ValueError):
    pass


class NotDiametral(PermRatioError, ValueError):
    pass
