"""
Classification of the simple KS-modules of a finite semigroup.

Every regular J-class J contributes one simple module per simple module of
its maximal subgroup; the pairs (J, V) are independent and are processed
on a thread pool.
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import numpy as np

from semirep.components.chop import CompositionFactor, ModuleChopper, irreducibles, regular_smodule
from semirep.components.construct import (
    SimpleReport,
    apex_of,
    construct_simple,
    restriction,
    simple_from_induced,
    transport_group_module,
)
from semirep.components.schutzenberger import MonomialRep, left_schutzenberger, right_schutzenberger
from semirep.config.run_config import RunConfig
from semirep.core.errors import InternalInconsistency, VerificationFailure
from semirep.core.fields import Field, parse_field
from semirep.core.green import (
    GreenStructure,
    JClassData,
    green_structure,
    idempotents_isomorphic,
    jclass_data,
)
from semirep.core.modules import GModule, hom_dimension, isomorphic_simples
from semirep.core.semigroup import Semigroup
from semirep.utils.logger import RunLogger

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndependenceResult:
    jclass_id: int
    first: int
    second: int
    passed: bool
    detail: str = ""


@dataclass(frozen=True, eq=False)
class OracleMatch:
    factor: CompositionFactor
    apex: Optional[int]
    matched: Optional[int]


class RepresentationClassifier:
    """Builds and cross-checks all simple modules of one semigroup over one field."""

    def __init__(
        self,
        semigroup: Semigroup,
        field: Optional[Field] = None,
        config: Optional[RunConfig] = None,
        run_logger: Optional[RunLogger] = None,
    ):
        self.config = config or RunConfig()
        self.semigroup = semigroup
        self.field = field or parse_field(self.config.field)
        self.logger = run_logger or RunLogger("semirep.classifier", self.config.logging_level)
        self.chopper = ModuleChopper(
            exhaustive_cap=self.config.exhaustive_cap,
            max_attempts=self.config.chop_max_attempts,
            run_logger=self.logger,
            sample_vectors=self.config.sample_vectors,
        )
        self._group_irreducibles: Dict[int, List[GModule]] = {}

    # ------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------

    @cached_property
    def green(self) -> GreenStructure:
        green = green_structure(self.semigroup)
        self.logger.log_green_summary(
            self.semigroup.size, len(green.j_classes),
            len(green.regular_classes), len(green.idempotents),
        )
        return green

    @cached_property
    def jclass_data(self) -> Dict[int, JClassData]:
        data = {}
        for j in self.green.regular_classes:
            jd = jclass_data(self.semigroup, self.green, j)
            self.logger.log_jclass(j, jd.idempotent, jd.group.order, jd.n, jd.m)
            data[j] = jd
        return data

    @cached_property
    def schutzenberger_reps(self) -> Dict[int, Tuple[MonomialRep, MonomialRep]]:
        return {
            j: (right_schutzenberger(self.semigroup, jd), left_schutzenberger(self.semigroup, jd))
            for j, jd in self.jclass_data.items()
        }

    def seed_sequence(self, *key: int) -> np.random.SeedSequence:
        return np.random.SeedSequence(self.config.seed, spawn_key=key)

    def group_irreducibles(self, jclass_id: int) -> List[GModule]:
        if jclass_id not in self._group_irreducibles:
            jd = self.jclass_data[jclass_id]
            self._group_irreducibles[jclass_id] = irreducibles(
                jd.group, self.field, self.chopper, self.seed_sequence(jclass_id)
            )
        return self._group_irreducibles[jclass_id]

    # ------------------------------------------------------------------
    # Classification
    # ------------------------------------------------------------------

    def build_simple(self, jclass_id: int, index: int) -> SimpleReport:
        jd = self.jclass_data[jclass_id]
        rho, lam = self.schutzenberger_reps[jclass_id]
        V = self.group_irreducibles(jclass_id)[index]
        rng = np.random.default_rng(self.seed_sequence(jclass_id, index + 1))
        report = construct_simple(
            self.semigroup, V, jd, rho, lam, self.green, self.config.exhaustive_cap, rng,
            samples=self.config.sample_vectors,
        )
        if not report.iso_check:
            raise VerificationFailure(
                "induced_vs_coinduced", f"J{jclass_id}, V#{index}: the two simples differ"
            )
        self.logger.log_simple(jclass_id, V.dim, report.simple_dim)
        if not report.simplicity.certified:
            self.logger.warning(
                f"J{jclass_id}, V#{index}: simplicity of the dim {report.simple_dim} module "
                f"rests on {report.simplicity.samples} sampled vectors"
            )
        return report

    def all_irreducibles(self) -> List[SimpleReport]:
        """One SimpleReport per (J, V), ordered by J then by V."""
        # group simples and Schützenberger reps are computed up front so the
        # workers only read shared state
        reps = self.schutzenberger_reps
        tasks = []
        for j in reps:
            tasks.extend((j, k) for k in range(len(self.group_irreducibles(j))))

        results: Dict[Tuple[int, int], SimpleReport] = {}
        with ThreadPoolExecutor(max_workers=self.config.max_workers) as executor:
            future_to_task = {executor.submit(self.build_simple, j, k): (j, k) for j, k in tasks}
            for future in as_completed(future_to_task):
                results[future_to_task[future]] = future.result()
        reports = [results[t] for t in tasks]
        self.check_pairwise_non_isomorphic(reports)
        return reports

    def check_pairwise_non_isomorphic(self, reports: List[SimpleReport]):
        for a in range(len(reports)):
            for b in range(a + 1, len(reports)):
                if isomorphic_simples(reports[a].simple, reports[b].simple):
                    raise VerificationFailure(
                        "pairwise_non_isomorphic",
                        f"simples #{a} (J{reports[a].jclass_id}) and #{b} "
                        f"(J{reports[b].jclass_id}) are isomorphic",
                    )

    def count_by_jclass(self) -> Dict[int, int]:
        return {j: len(self.group_irreducibles(j)) for j in self.green.regular_classes}

    # ------------------------------------------------------------------
    # Transversal independence
    # ------------------------------------------------------------------

    def transversal_independence_check(self, jclass_id: int) -> IndependenceResult:
        """Rebuild the simples at J from the maximum-index idempotent and compare."""
        green = self.green
        jset = set(green.j_classes[jclass_id])
        idempotents = [e for e in green.idempotents if e in jset]
        e = self.jclass_data[jclass_id].idempotent
        if len(idempotents) < 2:
            return IndependenceResult(jclass_id, e, e, True, "single idempotent")
        f = max(idempotents)
        witness = idempotents_isomorphic(self.semigroup, e, f)
        if witness is None:
            raise InternalInconsistency(f"idempotents {e} and {f} of J{jclass_id} are not isomorphic")
        x, x_prime = witness

        jd_f = jclass_data(self.semigroup, green, jclass_id, idempotent=f)
        rho_f = right_schutzenberger(self.semigroup, jd_f)
        jd_e = self.jclass_data[jclass_id]
        rho_e, _ = self.schutzenberger_reps[jclass_id]
        for k, V in enumerate(self.group_irreducibles(jclass_id)):
            rng = np.random.default_rng(self.seed_sequence(jclass_id, k + 1))
            at_e, _, _, _ = simple_from_induced(
                self.semigroup, V, jd_e, rho_e, green, self.config.exhaustive_cap, rng,
                samples=self.config.sample_vectors,
            )
            V_f = transport_group_module(V, jd_f.group, x, x_prime, self.semigroup)
            at_f, _, _, _ = simple_from_induced(
                self.semigroup, V_f, jd_f, rho_f, green, self.config.exhaustive_cap, rng,
                samples=self.config.sample_vectors,
            )
            if at_e.dim != at_f.dim or hom_dimension(at_e, at_f) == 0:
                return IndependenceResult(
                    jclass_id, e, f, False, f"V#{k}: simples from e={e} and f={f} differ"
                )
        return IndependenceResult(jclass_id, e, f, True)

    # ------------------------------------------------------------------
    # Whole-algebra oracle
    # ------------------------------------------------------------------

    def chop_oracle(self) -> List[CompositionFactor]:
        """Composition factors of the regular KS-module."""
        key = len(self.green.j_classes)
        return self.chopper.chop(regular_smodule(self.semigroup, self.field), self.seed_sequence(key))

    def match_oracle(
        self, factors: List[CompositionFactor], reports: List[SimpleReport]
    ) -> List[OracleMatch]:
        """Pair each non-zero factor with the pipeline simple at (apex, F·e)."""
        matches = []
        for factor in factors:
            if factor.zero_action:
                matches.append(OracleMatch(factor, None, None))
                continue
            apex = apex_of(factor.module, self.green)
            jd = self.jclass_data[apex]
            restricted = restriction(factor.module, jd.group)
            matched = None
            for i, report in enumerate(reports):
                if report.jclass_id != apex:
                    continue
                if isomorphic_simples(restricted, report.group_module) and isomorphic_simples(
                    factor.module, report.simple
                ):
                    matched = i
                    break
            matches.append(OracleMatch(factor, apex, matched))
        return matches
