"""Exception hierarchy shared by every layer of the engine."""


class OrzechError(Exception):
    pass


class RingMismatch(OrzechError):
    pass


class NotAUnit(OrzechError):
    pass


class DimensionMismatch(OrzechError):
    pass


class NotSquare(DimensionMismatch):
    pass


class UnsupportedRing(OrzechError):
    pass


class IllDefinedHom(OrzechError):
    pass


class NotSurjective(OrzechError):
    """Some target element has no preimage; ``index`` names it (0-based)."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class ChainFailure(OrzechError):
    def __init__(self, u, j):
        super().__init__(f"invariance chain broken at u={u}, generator {j}")
        self.u = u
        self.j = j


class InternalContradiction(OrzechError):
    """A step that cannot fail for valid input failed anyway."""


class NotInKernel(OrzechError):
    pass


class NotEndomorphism(OrzechError):
    pass


class ParseError(OrzechError):
    pass
