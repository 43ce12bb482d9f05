"""Exception hierarchy shared by every module."""


class CubicPCFError(Exception):
    """Base class for all library errors."""


class DegreeError(CubicPCFError, ValueError):
    pass


class ZeroPolyError(CubicPCFError, ValueError):
    pass


class SquarefreeError(CubicPCFError, ValueError):
    pass


class BracketError(CubicPCFError, ValueError):
    """The interval does not bracket a sign change of the polynomial."""


class RationalElementError(CubicPCFError, ValueError):
    pass


class RatioUndefinedError(CubicPCFError, ValueError):
    pass


class ReducibleError(CubicPCFError, ValueError):
    pass


class DivergenceError(CubicPCFError, ValueError):
    pass


class PoleError(CubicPCFError, ZeroDivisionError):
    pass


class PrecisionError(CubicPCFError, ArithmeticError):
    pass


class SelectorError(CubicPCFError, ValueError):
    pass
