"""Exception types shared across the package."""


class PicardLpolyError(Exception):
    """Base class for all package-specific failures."""


class CapacityError(PicardLpolyError):
    """A computation would exceed a configured size or memory bound."""


class WeilBoundError(PicardLpolyError):
    """A centered lift violates the Weil bound; upstream data is corrupt."""


class ZetaMatchError(PicardLpolyError):
    """No sixth root of unity matches the ratio equation."""


class NonRealProductError(PicardLpolyError):
    """The conjugate product kept a nonzero omega component."""


class CrtRangeError(PicardLpolyError):
    """No CRT representative lands in the admissible interval."""


class PolyDivisionError(PicardLpolyError):
    """An exact polynomial division left a nonzero remainder."""


class SquarefreeError(PicardLpolyError):
    """A polynomial required to be squarefree has a repeated factor."""


class OracleError(PicardLpolyError):
    """The point-counting oracle cannot produce a trustworthy answer."""
