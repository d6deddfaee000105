"""Engine layer: fields, exact matrices, semigroups, Green's relations and modules."""

from semirep.core.fields import Field, PrimeField, RationalField, parse_field
from semirep.core.green import GreenStructure, JClassData, MaxSubgroup, green_structure, jclass_data
from semirep.core.matrix import Matrix
from semirep.core.modules import GModule, SModule
from semirep.core.semigroup import Semigroup, from_cayley_table, from_transformations

__all__ = [
    "Field",
    "PrimeField",
    "RationalField",
    "parse_field",
    "GreenStructure",
    "JClassData",
    "MaxSubgroup",
    "green_structure",
    "jclass_data",
    "Matrix",
    "GModule",
    "SModule",
    "Semigroup",
    "from_cayley_table",
    "from_transformations",
]
