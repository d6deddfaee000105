"""Input document schemas: a semigroup given by Cayley table or by transformations."""
import json
from typing import Annotated, List, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError, model_validator

from semirep.core.errors import InputError
from semirep.core.semigroup import DEFAULT_CLOSURE_LIMIT, Semigroup, from_cayley_table, from_transformations


class CayleyDocument(BaseModel):
    """A multiplication table over the indices 0..n-1."""

    model_config = ConfigDict(extra="forbid")

    type: Literal["cayley"]
    table: List[List[int]] = Field(
        ..., min_length=1, description="table[s][t] is the index of s*t"
    )

    @model_validator(mode="after")
    def _square(self) -> "CayleyDocument":
        n = len(self.table)
        for i, row in enumerate(self.table):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
        return self

    def build(self, closure_limit: int = DEFAULT_CLOSURE_LIMIT) -> Semigroup:
        return from_cayley_table(self.table)


class TransformationDocument(BaseModel):
    """Generators of a transformation semigroup on {0..degree-1}."""

    model_config = ConfigDict(extra="forbid")

    type: Literal["transformations"]
    degree: int = Field(..., ge=1)
    generators: List[List[int]] = Field(
        ..., min_length=1, description="Each generator lists the images of 0..degree-1"
    )

    def build(self, closure_limit: int = DEFAULT_CLOSURE_LIMIT) -> Semigroup:
        return from_transformations(self.generators, self.degree, limit=closure_limit)


SemigroupDocument = Annotated[
    Union[CayleyDocument, TransformationDocument], Field(discriminator="type")
]

_adapter = TypeAdapter(SemigroupDocument)


def _describe(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        location = ".".join(str(x) for x in item["loc"]) or "<document>"
        parts.append(f"{location}: {item['msg']}")
    return "; ".join(parts)


def load_document(text: str) -> Union[CayleyDocument, TransformationDocument]:
    """Parse and validate one JSON document; errors name the line or field."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from e
    try:
        return _adapter.validate_python(raw)
    except ValidationError as e:
        raise InputError(f"invalid semigroup document: {_describe(e)}") from e


def load_semigroup(text: str, closure_limit: int = DEFAULT_CLOSURE_LIMIT) -> Semigroup:
    return load_document(text).build(closure_limit)
