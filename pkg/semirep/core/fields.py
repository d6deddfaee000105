"""
Exact coefficient fields.

Scalars are plain Python objects tagged by the Field that owns them:
residues are ``int`` values in ``[0, p)`` for a prime field, rationals are
``fractions.Fraction`` in lowest terms. Arrays of scalars are numpy arrays
of dtype ``object`` so arithmetic stays exact.
"""

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Tuple, Union

import numpy as np
import sympy

from semirep.core.errors import FieldSpecError

Scalar = Union[int, Fraction]

_FIELD_PATTERN = re.compile(r"^Fp:(\d+)$")


class Field(ABC):
    """Common interface of the prime fields and the rationals."""

    name: str
    characteristic: int

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    @property
    def order(self) -> Optional[int]:
        return self.characteristic if self.is_finite else None

    @property
    def zero(self) -> Scalar:
        return self.coerce(0)

    @property
    def one(self) -> Scalar:
        return self.coerce(1)

    @abstractmethod
    def coerce(self, value: Any) -> Scalar:
        """Map an int, Fraction or numeric string into the field."""

    @abstractmethod
    def inverse(self, value: Scalar) -> Scalar:
        """Multiplicative inverse; raises ZeroDivisionError on zero."""

    @abstractmethod
    def normalize(self, array: np.ndarray) -> np.ndarray:
        """Bring every entry of an object array back to canonical form."""

    @abstractmethod
    def random_array(self, rng: np.random.Generator, shape: Tuple[int, ...]) -> np.ndarray:
        """Random entries (uniform residues, or small integers for Q)."""

    @abstractmethod
    def to_json(self, value: Scalar) -> Union[int, str]:
        """Exact serialization of one scalar."""

    def array(self, data: Any) -> np.ndarray:
        raw = np.array(data, dtype=object)
        if raw.size == 0:
            return raw
        return self.normalize(np.vectorize(self.coerce, otypes=[object])(raw))

    def zeros(self, shape: Tuple[int, ...]) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(self.zero)
        return out

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class PrimeField(Field):
    """The field F_p of residues modulo a prime p."""

    p: int

    def __post_init__(self):
        if self.p < 2 or not sympy.isprime(self.p):
            raise FieldSpecError(f"{self.p} is not a prime")

    @property
    def name(self) -> str:
        return f"Fp:{self.p}"

    @property
    def characteristic(self) -> int:
        return self.p

    def coerce(self, value: Any) -> int:
        if isinstance(value, Fraction):
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        return int(value) % self.p

    def inverse(self, value: Scalar) -> int:
        value = int(value) % self.p
        if value == 0:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return pow(value, -1, self.p)

    def normalize(self, array: np.ndarray) -> np.ndarray:
        return np.mod(array, self.p)

    def random_array(self, rng: np.random.Generator, shape: Tuple[int, ...]) -> np.ndarray:
        values = rng.integers(0, self.p, size=shape)
        return self.array(values.tolist())

    def to_json(self, value: Scalar) -> int:
        return int(value) % self.p


@dataclass(frozen=True)
class RationalField(Field):
    """The rationals, with arbitrary-precision numerators and denominators."""

    random_bound = 3

    @property
    def name(self) -> str:
        return "Q"

    @property
    def characteristic(self) -> int:
        return 0

    def coerce(self, value: Any) -> Fraction:
        return Fraction(value)

    def inverse(self, value: Scalar) -> Fraction:
        value = Fraction(value)
        if value == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / value

    def normalize(self, array: np.ndarray) -> np.ndarray:
        return array

    def random_array(self, rng: np.random.Generator, shape: Tuple[int, ...]) -> np.ndarray:
        values = rng.integers(-self.random_bound, self.random_bound + 1, size=shape)
        return self.array(values.tolist())

    def to_json(self, value: Scalar) -> str:
        value = Fraction(value)
        return f"{value.numerator}/{value.denominator}"


def parse_field(spec: str) -> Field:
    """Parse ``Q`` or ``Fp:<prime>``."""
    spec = spec.strip()
    if spec == "Q":
        return RationalField()
    match = _FIELD_PATTERN.match(spec)
    if not match:
        raise FieldSpecError(f"field must be 'Q' or 'Fp:<prime>', got {spec!r}")
    return PrimeField(int(match.group(1)))
