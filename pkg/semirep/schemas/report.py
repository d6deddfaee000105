"""Output report schemas. Field order is declaration order, so JSON output is stable."""
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field

from semirep.components.chop import CompositionFactor
from semirep.components.construct import SimpleReport
from semirep.components.schutzenberger import MonomialRep
from semirep.core.fields import Field as CoefficientField
from semirep.core.green import GreenStructure, JClassData
from semirep.core.modules import Module
from semirep.core.semigroup import Semigroup

Entry = Union[int, str]
MatrixJSON = List[List[Entry]]


def module_actions(module: Module) -> Dict[str, MatrixJSON]:
    return {str(s): module.actions[s].to_json() for s in module.elements}


class JClassEntry(BaseModel):
    id: int
    elements: List[int]
    labels: List[str]
    regular: bool
    idempotents: List[int]
    r_classes: int
    l_classes: int
    h_class_size: int


class RegularClassEntry(BaseModel):
    jclass: int
    idempotent: int
    group_order: int
    group_elements: List[int]
    n: int = Field(..., description="number of L-classes in J")
    m: int = Field(..., description="number of R-classes in J")
    r_transversal: List[int]
    l_transversal: List[int]
    sandwich: MatrixJSON = Field(..., description="C[b][a] = r_a*l_b as a group element, or '0'")

    @classmethod
    def from_jclass(cls, jd: JClassData) -> "RegularClassEntry":
        return cls(
            jclass=jd.jclass_id,
            idempotent=jd.idempotent,
            group_order=jd.group.order,
            group_elements=list(jd.group.elements),
            n=jd.n,
            m=jd.m,
            r_transversal=list(jd.r_transversal),
            l_transversal=list(jd.l_transversal),
            sandwich=[["0" if x is None else x for x in row] for row in jd.sandwich],
        )


class GreenReport(BaseModel):
    """Everything ``semirep analyze`` prints."""

    size: int
    idempotents: List[int]
    j_classes: List[JClassEntry]
    j_order: List[List[int]] = Field(..., description="covering pairs [lower, upper]")
    regular_classes: List[RegularClassEntry]
    dot: Optional[str] = None

    @classmethod
    def build(
        cls, semigroup: Semigroup, green: GreenStructure,
        jclasses: Dict[int, JClassData], dot: Optional[str] = None,
    ) -> "GreenReport":
        entries = []
        for j, members in enumerate(green.j_classes):
            mset = set(members)
            h_sizes = {len(h) for h in green.h_classes if h[0] in mset}
            entries.append(
                JClassEntry(
                    id=j,
                    elements=list(members),
                    labels=[semigroup.label(s) for s in members],
                    regular=green.regular[j],
                    idempotents=[e for e in green.idempotents if e in mset],
                    r_classes=len(green.classes_within(green.r_classes, j)),
                    l_classes=len(green.classes_within(green.l_classes, j)),
                    h_class_size=min(h_sizes),
                )
            )
        return cls(
            size=semigroup.size,
            idempotents=list(green.idempotents),
            j_classes=entries,
            j_order=[list(edge) for edge in green.j_order_edges()],
            regular_classes=[RegularClassEntry.from_jclass(jclasses[j]) for j in sorted(jclasses)],
            dot=dot,
        )


class MonomialReport(BaseModel):
    """A Schützenberger representation, entries as group elements or '0'."""

    jclass: int
    side: str
    size: int
    idempotent: int
    transversal: List[int]
    matrices: Dict[str, MatrixJSON]

    @classmethod
    def build(cls, rep: MonomialRep, jd: JClassData) -> "MonomialReport":
        transversal = jd.r_transversal if rep.side == "right" else jd.l_transversal
        return cls(
            jclass=rep.jclass_id,
            side=rep.side,
            size=rep.size,
            idempotent=jd.idempotent,
            transversal=list(transversal),
            matrices=rep.to_json(),
        )


class SimpleEntry(BaseModel):
    apex: int
    idempotent: int
    group_dim: int
    dim: int
    induced_dim: int
    radical_dim: int
    coinduced_dim: int
    minimal_dim: int
    iso_check: bool
    simplicity: str
    annihilator: List[int]
    group_actions: Dict[str, MatrixJSON]
    actions: Dict[str, MatrixJSON]

    @classmethod
    def from_report(cls, report: SimpleReport) -> "SimpleEntry":
        return cls(
            apex=report.jclass_id,
            idempotent=report.idempotent,
            group_dim=report.group_module.dim,
            dim=report.simple_dim,
            induced_dim=report.induced_dim,
            radical_dim=report.radical_dim,
            coinduced_dim=report.coinduced_dim,
            minimal_dim=report.minimal_dim,
            iso_check=report.iso_check,
            simplicity=report.simplicity.verdict.value,
            annihilator=list(report.simple.annihilator()),
            group_actions=module_actions(report.group_module),
            actions=module_actions(report.simple),
        )


class IrrepsReport(BaseModel):
    """Everything ``semirep irreps`` prints."""

    field: str
    count: int
    counts_by_jclass: Dict[str, int]
    dimensions: List[int]
    simples: List[SimpleEntry]

    @classmethod
    def build(
        cls, field: CoefficientField, reports: List[SimpleReport], counts: Dict[int, int]
    ) -> "IrrepsReport":
        return cls(
            field=field.name,
            count=len(reports),
            counts_by_jclass={str(j): k for j, k in sorted(counts.items())},
            dimensions=[r.simple_dim for r in reports],
            simples=[SimpleEntry.from_report(r) for r in reports],
        )


class FactorEntry(BaseModel):
    dim: int
    multiplicity: int
    apex: Optional[int]
    zero_action: bool
    simplicity: str
    certificate: str


class ChopReport(BaseModel):
    """Composition factors of the regular module of KS."""

    field: str
    module_dim: int
    distinct: int = Field(..., description="distinct factors with nonzero action")
    factors: List[FactorEntry]

    @classmethod
    def build(
        cls, field: CoefficientField, module_dim: int,
        factors: List[CompositionFactor], apexes: List[Optional[int]],
    ) -> "ChopReport":
        return cls(
            field=field.name,
            module_dim=module_dim,
            distinct=sum(1 for f in factors if not f.zero_action),
            factors=[
                FactorEntry(
                    dim=f.dim,
                    multiplicity=f.multiplicity,
                    apex=apex,
                    zero_action=f.zero_action,
                    simplicity=f.simplicity.verdict.value,
                    certificate=f.simplicity.method,
                )
                for f, apex in zip(factors, apexes)
            ],
        )


class CheckEntry(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerifyReport(BaseModel):
    field: str
    seed: int
    passed: bool
    checks: List[CheckEntry]
