"""
Exception hierarchy for semirep.

Input problems subclass ValueError so callers that only know the standard
library still catch them; bug-level disagreements derive from
InternalInconsistency and must abort a run.
"""

from typing import Any, Optional


class SemirepError(Exception):
    """Base class for every error raised by semirep."""


class InputError(SemirepError, ValueError):
    """Malformed or unsuitable input."""


class NonAssociative(InputError):
    def __init__(self, s: int, t: int, u: int):
        self.witness = (s, t, u)
        super().__init__(f"table is not associative: ({s}*{t})*{u} != {s}*({t}*{u})")


class IndexOutOfRange(InputError):
    pass


class SizeLimitExceeded(InputError):
    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"closure exceeded the limit of {limit} elements")


class NotIdempotent(InputError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} is not idempotent")


class NotRegular(InputError):
    def __init__(self, jclass_id: int):
        self.jclass_id = jclass_id
        super().__init__(f"J-class {jclass_id} is not regular")


class DimensionMismatch(InputError):
    pass


class FieldMismatch(InputError):
    pass


class NotABand(InputError):
    pass


class NotInDA(InputError):
    pass


class ZeroAction(InputError):
    """Every element acts as zero; such modules are not simple."""


class FieldSpecError(InputError):
    pass


class NotInvariant(SemirepError, ValueError):
    def __init__(self, label: Any, message: Optional[str] = None):
        self.label = label
        super().__init__(message or f"subspace is not invariant under element {label}")


class NoApex(SemirepError):
    pass


class ChopFailure(SemirepError):
    pass


class VerificationFailure(SemirepError):
    def __init__(self, check: str, detail: str = ""):
        self.check = check
        self.detail = detail
        super().__init__(f"{check} failed" + (f": {detail}" if detail else ""))


class InternalInconsistency(SemirepError):
    pass


class CrossCheckMismatch(InternalInconsistency):
    pass


class FactorizationFailure(InternalInconsistency):
    pass
