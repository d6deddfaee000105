"""
The invariant suite behind ``semirep verify``.

Each check records a CheckResult instead of raising, so one run reports
every invariant. Internal inconsistencies are recorded too and flagged
separately; they map to a different exit code.
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional

import networkx as nx
import numpy as np

from semirep.components.bands import complement_closed_check, da_irreducibles, is_band, is_in_DA
from semirep.components.chop import CompositionFactor
from semirep.components.construct import SimpleReport, apex_of, coinduce, induce, minimal_L, radical_N
from semirep.components.schutzenberger import is_monomial, multiplicativity_failure
from semirep.core.errors import InternalInconsistency, SemirepError
from semirep.core.green import ideal_I_J, idempotents_isomorphic
from semirep.core.matrix import Matrix
from semirep.core.modules import (
    check_multiplicativity,
    direct_sum,
    hom_dimension,
    isomorphic_simples,
    spin,
)
from semirep.core.semigroup import check_associativity
from semirep.pipeline.classifier import RepresentationClassifier

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    internal: bool = False


class InvariantSuite:
    """Runs every cross-check for one semigroup and field."""

    def __init__(self, classifier: RepresentationClassifier):
        self.classifier = classifier
        self.semigroup = classifier.semigroup
        self.field = classifier.field
        self.logger = classifier.logger
        self.results: List[CheckResult] = []
        self._reports: Optional[List[SimpleReport]] = None
        self._factors: Optional[List[CompositionFactor]] = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def internal_failure(self) -> bool:
        return any(r.internal for r in self.results)

    def _record(self, name: str, check: Callable[[], Optional[str]]):
        """Run a check; it returns None on success or a failure detail."""
        try:
            detail = check()
            result = CheckResult(name, detail is None, detail or "")
        except InternalInconsistency as e:
            result = CheckResult(name, False, str(e), internal=True)
        except SemirepError as e:
            result = CheckResult(name, False, str(e))
        self.logger.log_check(result.name, result.passed, result.detail)
        self.results.append(result)

    def reports(self) -> List[SimpleReport]:
        if self._reports is None:
            self._reports = self.classifier.all_irreducibles()
        return self._reports

    def factors(self) -> List[CompositionFactor]:
        if self._factors is None:
            self._factors = self.classifier.chop_oracle()
        return self._factors

    def run(self) -> List[CheckResult]:
        with self.logger.log_timing_context("invariant suite", f"field {self.field}"):
            self._record("semigroup.associativity", self.check_associativity)
            self._record("green.partitions", self.check_partitions)
            self._record("green.j_order_reachability", self.check_j_order_reachability)
            self._record("green.idempotent_witnesses", self.check_idempotent_witnesses)
            self._record("schutzenberger.monomial_multiplicative", self.check_schutzenberger)
            self._record("construct.all_irreducibles", self.check_construction)
            self._record("construct.dimensions", self.check_dimensions)
            self._record("construct.simple_and_apex", self.check_simple_and_apex)
            self._record("construct.multiplicative", self.check_multiplicative)
            self._record("construct.induced_vs_coinduced", self.check_induced_vs_coinduced)
            self._record("construct.radical_annihilated_by_e", self.check_radical_annihilation)
            self._record("construct.coinduced_minimal_submodule", self.check_minimal_containment)
            self._record("construct.induce_additive", self.check_induce_additive)
            self._record("construct.transversal_independence", self.check_transversal_independence)
            self._record("counting.group_simples", self.check_counting)
            if self.field.is_finite:
                self._record("counting.chop_oracle", self.check_oracle_count)
                self._record("oracle.round_trip", self.check_oracle_round_trip)
            if is_in_DA(self.semigroup, self.classifier.green):
                self._record("bands.closed_form", self.check_closed_form)
        return self.results

    # ------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------

    def check_associativity(self) -> Optional[str]:
        check_associativity(self.semigroup.table)
        return None

    def check_partitions(self) -> Optional[str]:
        green = self.classifier.green
        n = self.semigroup.size
        for name, part in (("R", green.r_classes), ("L", green.l_classes), ("J", green.j_classes), ("H", green.h_classes)):
            if sorted(s for c in part for s in c) != list(range(n)):
                return f"{name}-classes do not partition S"
        for part in (green.r_classes, green.l_classes, green.h_classes):
            for cls in part:
                if len({green.jclass_of(s) for s in cls}) != 1:
                    return f"class {cls} straddles J-classes"
        return None

    def check_j_order_reachability(self) -> Optional[str]:
        """Paths in the reduced J-order match principal ideal containment."""
        green = self.classifier.green
        n = self.semigroup.size
        labels = np.array([green.jclass_of(s) for s in range(n)])
        mutual = green.ideals & green.ideals.T
        if not np.array_equal(mutual, labels[:, None] == labels[None, :]):
            return "J-classes disagree with equality of principal ideals"
        if not nx.is_directed_acyclic_graph(green.j_order):
            return "J-order has a cycle"
        reps = [cls[0] for cls in green.j_classes]
        for a, ra in enumerate(reps):
            for b, rb in enumerate(reps):
                if a != b and nx.has_path(green.j_order, a, b) != green.leq_j(ra, rb):
                    return f"J{a} <= J{b} is {green.leq_j(ra, rb)} but reachability says otherwise"
        return None

    def check_idempotent_witnesses(self) -> Optional[str]:
        green = self.classifier.green
        for e in green.idempotents:
            for f in green.idempotents:
                same = green.jclass_of(e) == green.jclass_of(f)
                found = idempotents_isomorphic(self.semigroup, e, f) is not None
                if same != found:
                    return f"idempotents {e}, {f}: same J-class {same}, witness {found}"
        return None

    def check_schutzenberger(self) -> Optional[str]:
        for j, reps in self.classifier.schutzenberger_reps.items():
            ideal = self.classifier.jclass_data[j].ideal
            for rep in reps:
                if not is_monomial(rep):
                    return f"J{j}: {rep.side} rep is not monomial"
                bad = multiplicativity_failure(self.semigroup, rep)
                if bad is not None:
                    return f"J{j}: {rep.side} rep not multiplicative at {bad}"
                if any(not rep.is_zero(s) for s in ideal):
                    return f"J{j}: I_J acts nonzero in the {rep.side} rep"
        return None

    # ------------------------------------------------------------------
    # Constructions
    # ------------------------------------------------------------------

    def check_construction(self) -> Optional[str]:
        self.reports()
        return None

    def check_dimensions(self) -> Optional[str]:
        for r in self.reports():
            if not (r.induced_dim - r.radical_dim == r.simple_dim == r.minimal_dim):
                return (
                    f"J{r.jclass_id}: induced {r.induced_dim} - radical {r.radical_dim} "
                    f"vs simple {r.simple_dim} vs minimal {r.minimal_dim}"
                )
        return None

    def check_simple_and_apex(self) -> Optional[str]:
        green = self.classifier.green
        for r in self.reports():
            if not r.simplicity.is_simple:
                return f"J{r.jclass_id}: simple module is not simple"
            if apex_of(r.simple, green) != r.jclass_id:
                return f"J{r.jclass_id}: apex mismatch"
            if set(r.simple.annihilator()) != set(ideal_I_J(self.semigroup, green, r.jclass_id)):
                return f"J{r.jclass_id}: Ann M != I_J"
        return None

    def check_multiplicative(self) -> Optional[str]:
        for r in self.reports():
            for module in (r.group_module, r.simple, r.coinduced_simple):
                bad = check_multiplicativity(module)
                if bad is not None:
                    return f"J{r.jclass_id}: action not multiplicative at {bad}"
            if hom_dimension(r.simple, r.simple) < 1:
                return f"J{r.jclass_id}: End(M) is zero"
        return None

    def check_induced_vs_coinduced(self) -> Optional[str]:
        for r in self.reports():
            if not r.iso_check:
                return f"J{r.jclass_id}: Ind(V)/N and the minimal submodule of Coind(V) differ"
        return None

    def check_radical_annihilation(self) -> Optional[str]:
        """Every w in N satisfies w·action(s)·action(e) = 0 for all s."""
        for r in self.reports():
            jd = self.classifier.jclass_data[r.jclass_id]
            rho, _ = self.classifier.schutzenberger_reps[r.jclass_id]
            induced = induce(self.semigroup, r.group_module, jd, rho)
            radical = radical_N(induced, r.group_module, jd)
            if radical.rows == 0:
                continue
            e_action = induced.actions[jd.idempotent]
            for s, a in induced.actions.items():
                if not (radical @ a @ e_action).is_zero():
                    return f"J{r.jclass_id}: N·{s}·e != 0"
        return None

    def check_minimal_containment(self) -> Optional[str]:
        """Spinning nonzero vectors of Coind(V) always reaches the minimal submodule."""
        rng = np.random.default_rng(self.classifier.seed_sequence(len(self.classifier.green.j_classes), 1))
        for r in self.reports():
            jd = self.classifier.jclass_data[r.jclass_id]
            _, lam = self.classifier.schutzenberger_reps[r.jclass_id]
            full = coinduce(self.semigroup, r.group_module, jd, lam)
            minimal = minimal_L(full, r.group_module, jd)
            d = full.dim
            vectors = [Matrix.identity(self.field, d).row(i) for i in range(d)]
            samples = self.field.random_array(rng, (self.classifier.config.sample_vectors, d))
            vectors.extend(Matrix(self.field, row.reshape(1, d)) for row in samples)
            for v in vectors:
                if v.is_zero():
                    continue
                if not spin(full, v).contains_rows(minimal):
                    return f"J{r.jclass_id}: a cyclic submodule misses the minimal submodule"
        return None

    def check_induce_additive(self) -> Optional[str]:
        for r in self.reports():
            jd = self.classifier.jclass_data[r.jclass_id]
            rho, _ = self.classifier.schutzenberger_reps[r.jclass_id]
            V = r.group_module
            doubled = direct_sum(V, V)
            induced = induce(self.semigroup, doubled, jd, rho)
            radical = radical_N(induced, doubled, jd)
            if induced.dim != 2 * r.induced_dim or radical.rows != 2 * r.radical_dim:
                return f"J{r.jclass_id}: Ind(V+V) has dims {induced.dim}/{radical.rows}"
        return None

    def check_transversal_independence(self) -> Optional[str]:
        for j in self.classifier.green.regular_classes:
            result = self.classifier.transversal_independence_check(j)
            if not result.passed:
                return result.detail
        return None

    # ------------------------------------------------------------------
    # Counting and the oracle
    # ------------------------------------------------------------------

    def check_counting(self) -> Optional[str]:
        expected = sum(self.classifier.count_by_jclass().values())
        if len(self.reports()) != expected:
            return f"{len(self.reports())} simples, group simples sum to {expected}"
        return None

    def check_oracle_count(self) -> Optional[str]:
        distinct = [f for f in self.factors() if not f.zero_action]
        if len(distinct) != len(self.reports()):
            return f"chop oracle found {len(distinct)} simples, pipeline {len(self.reports())}"
        return None

    def check_oracle_round_trip(self) -> Optional[str]:
        matches = self.classifier.match_oracle(self.factors(), self.reports())
        for k, m in enumerate(matches):
            if m.factor.zero_action:
                continue
            if m.matched is None:
                return f"oracle factor #{k} (apex J{m.apex}) matches no pipeline simple"
        return None

    def check_closed_form(self) -> Optional[str]:
        green = self.classifier.green
        if is_band(self.semigroup):
            for j in range(len(green.j_classes)):
                if not green.regular[j]:
                    return f"band J-class {j} is not regular"
                if not complement_closed_check(self.semigroup, j, green):
                    return f"complement of I_J for J{j} is not closed"
        closed = da_irreducibles(self.semigroup, self.field, green)
        reports = self.reports()
        if len(closed) != len(reports):
            return f"{len(closed)} closed-form reps, {len(reports)} pipeline simples"
        for j, rep in closed:
            twins = [r for r in reports if r.jclass_id == j]
            if len(twins) != 1 or twins[0].simple_dim != 1:
                return f"J{j}: closed form has no degree-one twin"
            if set(twins[0].simple.annihilator()) != set(rep.annihilator()):
                return f"J{j}: kernels differ"
            if not isomorphic_simples(twins[0].simple, rep):
                return f"J{j}: closed form not isomorphic to pipeline simple"
        return None
