from fractions import Fraction
from typing import Annotated, Union

from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer


def parse_rational(value: Union[Fraction, int, str]) -> Fraction:
    """Accept Fractions, ints and "p/q" strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        numerator, _, denominator = value.strip().partition("/")
        return Fraction(int(numerator), int(denominator or 1))
    raise ValueError(f"not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Always "p/q", including integers ("5/1")."""
    return f"{value.numerator}/{value.denominator}"


Rational = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
]


class BaseSchema(BaseModel):
    """Base schema for every serialized record."""

    model_config = ConfigDict(from_attributes=True, arbitrary_types_allowed=True)
