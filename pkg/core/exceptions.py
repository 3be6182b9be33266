"""
Error types for bourbakikit

Every precondition failure raised by the library is a BourbakiKitError.
Verification outcomes are never raised; they come back as certificates
and reports.
"""

from typing import Any, Dict, Optional


class BourbakiKitError(Exception):
    """Base error with a human message and a machine code"""

    code = "BOURBAKIKIT_ERROR"

    def __init__(self, message: str, code: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        if code is not None:
            self.code = code
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        payload = {"error_code": self.code, "message": self.message}
        if self.details:
            payload["details"] = self.details
        return payload


class DimensionMismatchError(BourbakiKitError):
    code = "DIMENSION_MISMATCH"


class NotDivisibleError(BourbakiKitError):
    code = "NOT_DIVISIBLE"

    def __init__(self, message: str = "not divisible", **kwargs):
        super().__init__(message, **kwargs)


class EmptyGeneratorListError(BourbakiKitError):
    code = "EMPTY_GENERATOR_LIST"

    def __init__(self, message: str = "empty generator list", **kwargs):
        super().__init__(message, **kwargs)


class ShapeError(BourbakiKitError):
    code = "SHAPE_ERROR"


class RangeError(BourbakiKitError):
    code = "OUT_OF_RANGE"


class RankDeficiencyError(BourbakiKitError):
    code = "RANK_DEFICIENT"

    def __init__(self, message: str = "no full-rank submatrix", **kwargs):
        super().__init__(message, **kwargs)


class InvalidLabelError(BourbakiKitError):
    code = "INVALID_LABEL"


class NonMonomialError(BourbakiKitError):
    code = "NON_MONOMIAL"


class InputFormatError(BourbakiKitError):
    """Malformed input document; the message names where it broke"""

    code = "INPUT_FORMAT"

    def __init__(self, message: str, position: Optional[str] = None, **kwargs):
        if position:
            message = f"{message} (at {position})"
        super().__init__(message, **kwargs)
        self.position = position
