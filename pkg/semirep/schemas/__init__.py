"""Schemas for semirep - pydantic models for input documents and reports."""
from semirep.schemas.document import CayleyDocument, TransformationDocument, load_document, load_semigroup
from semirep.schemas.report import ChopReport, GreenReport, IrrepsReport, MonomialReport, VerifyReport

__all__ = [
    "CayleyDocument",
    "TransformationDocument",
    "load_document",
    "load_semigroup",
    "ChopReport",
    "GreenReport",
    "IrrepsReport",
    "MonomialReport",
    "VerifyReport",
]
