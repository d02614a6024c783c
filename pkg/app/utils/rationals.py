import re
from fractions import Fraction
from typing import Optional, Union
from .errors import ErrorHandler, ErrorMessages

RATIONAL_PATTERN = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?")

ScalarLike = Union[int, Fraction, str]


def parse_rational(text: str, location: Optional[str] = None) -> Fraction:
    """Parse `-?digits(/digits)?` exactly; anything else is an input error."""
    if not isinstance(text, str) or not RATIONAL_PATTERN.fullmatch(text.strip()):
        raise ErrorHandler.validation_error(f"{ErrorMessages.BAD_RATIONAL} Got {text!r}.", location)
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_scalar(value: ScalarLike, location: Optional[str] = None) -> Fraction:
    if isinstance(value, bool):
        raise ErrorHandler.validation_error(f"{ErrorMessages.BAD_RATIONAL} Got {value!r}.", location)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return parse_rational(value, location)


def parse_rational_list(text: str, location: str) -> list:
    """Comma list of rationals, as used by --alpha."""
    if not text.strip():
        return []
    return [parse_rational(item, f"{location}[{position}]") for position, item in enumerate(text.split(","))]
