from fractions import Fraction
from typing import Optional, Sequence


class AlgebraError(Exception):
    """Base error; carries what the CLI needs to render a machine-readable object."""

    code = "algebra_error"
    exit_code = 2

    def __init__(self, message: str, location: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.location = location

    def to_payload(self) -> dict:
        return {
            "error": {
                "code": self.code,
                "message": self.message,
                "location": self.location,
            }
        }


class InputError(AlgebraError):
    code = "input_error"


class NotInFamilyError(InputError):
    code = "not_in_family"

    def __init__(self, message: str, entry: tuple):
        i, j, k, _, _ = entry
        super().__init__(message, location=f"bracket[{i},{j}].e{k}")
        # (i, j, k, expected, found)
        self.entry = entry


class CheckFailedError(AlgebraError):
    code = "check_failed"
    exit_code = 1


class ErrorHandler:
    """Centralized validation helpers shared by the algebra modules"""

    @staticmethod
    def validate_dimension(n: int, cap: int, name: str = "dimension", minimum: int = 1) -> None:
        """Validate that a dimension lies in minimum..cap"""
        if not isinstance(n, int) or isinstance(n, bool) or n < minimum or n > cap:
            raise InputError(
                f"Invalid {name} {n!r}. {name.capitalize()} must be an integer between {minimum} and {cap}.",
                location=name,
            )

    @staticmethod
    def validate_index(index: int, dim: int, location: str) -> None:
        """Validate a 1-based basis index"""
        if not isinstance(index, int) or isinstance(index, bool) or not 1 <= index <= dim:
            raise InputError(
                f"Basis index {index!r} is out of range. Indices run from 1 to {dim}.",
                location=location,
            )

    @staticmethod
    def validate_vector_length(vector: Sequence, dim: int, name: str = "vector") -> None:
        if len(vector) != dim:
            raise InputError(
                f"{name.capitalize()} has length {len(vector)} but the algebra has dimension {dim}.",
                location=name,
            )

    @staticmethod
    def validation_error(message: str, location: Optional[str] = None) -> InputError:
        """Generate a standardized input error"""
        return InputError(message, location=location)

    @staticmethod
    def singular_matrix_error(name: str = "matrix") -> InputError:
        return InputError(ErrorMessages.SINGULAR_MATRIX, location=name)

    @staticmethod
    def not_in_family_error(i: int, j: int, k: int, expected: Fraction, found: Fraction) -> NotInFamilyError:
        """Generate the error raised when a bracket is not a TP bracket"""
        return NotInFamilyError(
            f"Bracket is not in the TP family: [e{i},e{j}] has coefficient {found} at e{k}, expected {expected}.",
            entry=(i, j, k, expected, found),
        )

    @staticmethod
    def check_failed(expectation: str, failed: Sequence[str]) -> CheckFailedError:
        return CheckFailedError(
            f"Requested {expectation} structure does not hold. Failed identities: {', '.join(failed)}.",
            location="checks",
        )


# Common error messages
class ErrorMessages:
    """Standardized error messages for consistency"""

    SINGULAR_MATRIX = "Change-of-basis matrix is singular over the rationals."
    NOT_SQUARE = "Matrix must be square with size equal to the algebra dimension."
    A1_ZERO = "Automorphism parameter A1 must be nonzero."
    ALPHA1_PRESENT = "Classified data must not carry an alpha1 slot."
    ALL_ZERO = "Parameter vector is identically zero; there is nothing to reduce."
    DIM_MISMATCH = "Both parameter vectors must have the same dimension."
    BAD_RATIONAL = "Rational values must look like 7, -3 or 4/6."
    ALPHA_LENGTH = "Alpha must list one value for each index 2..n, in order."
