"""
Composition factors by recursive chopping.

A proper submodule is searched for in a fixed order: standard basis
vectors, the Burnside certificate, kernels of the singular elements
action(s) - c·I for c in {0, 1, -1}, kernels of seeded random algebra
elements (with the dual-kernel irreducibility certificate), and finally
spinning every projective point when the field is small enough. A leaf
that none of these split or certify, over Q or a field too large to
enumerate, is spun from sampled vectors: a proper span splits it,
otherwise it is kept as probably simple.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

import numpy as np

from semirep.core.errors import ChopFailure
from semirep.core.fields import Field
from semirep.core.green import MaxSubgroup
from semirep.core.matrix import Matrix
from semirep.core.modules import (
    DEFAULT_EXHAUSTIVE_CAP,
    DEFAULT_SAMPLE_VECTORS,
    GModule,
    Module,
    SimplicityResult,
    SimplicityVerdict,
    SModule,
    algebra_dimension,
    exhaustive_feasible,
    is_simple,
    isomorphic_simples,
    projective_points,
    quotient_module,
    spin,
    submodule,
)
from semirep.core.semigroup import Semigroup
from semirep.utils.logger import RunLogger

logger = logging.getLogger(__name__)

KERNEL_ENUMERATION_CAP = 4096
SINGULAR_SHIFTS = (0, 1, -1)

Seed = Union[int, np.random.SeedSequence]


def regular_module(group: MaxSubgroup, field: Field) -> GModule:
    """KG with basis indexed by group elements; g maps h to hg."""
    size = group.order
    actions = {}
    for g in group.elements:
        targets = [group.position(group.multiply(h, g)) for h in group.elements]
        out = field.zeros((size, size))
        out[np.arange(size), targets] = field.one
        actions[g] = Matrix(field, out)
    return GModule(field=field, dim=size, actions=actions, group=group)


def regular_smodule(semigroup: Semigroup, field: Field) -> SModule:
    """KS with basis indexed by elements; t maps s to st."""
    n = semigroup.size
    actions = {}
    for t in range(n):
        out = field.zeros((n, n))
        out[np.arange(n), semigroup.table[:, t]] = field.one
        actions[t] = Matrix(field, out)
    return SModule(field=field, dim=n, actions=actions, semigroup=semigroup)


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one submodule search: a proper submodule, or a verdict.

    ``simplicity`` is set exactly when ``basis`` is None.
    """

    basis: Optional[Matrix]
    method: str
    simplicity: Optional[SimplicityResult] = None

    @classmethod
    def split(cls, basis: Matrix, method: str) -> "SearchOutcome":
        return cls(basis, method)

    @classmethod
    def simple(cls, method: str) -> "SearchOutcome":
        return cls(None, method, SimplicityResult(SimplicityVerdict.SIMPLE, method))


@dataclass(frozen=True, eq=False)
class CompositionFactor:
    module: Module
    multiplicity: int
    simplicity: SimplicityResult

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def zero_action(self) -> bool:
        return self.module.is_zero_action()


class ModuleChopper:
    """Chops modules into composition factors over a fixed search budget."""

    def __init__(
        self,
        exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP,
        max_attempts: int = 64,
        run_logger: Optional[RunLogger] = None,
        sample_vectors: int = DEFAULT_SAMPLE_VECTORS,
    ):
        self.exhaustive_cap = exhaustive_cap
        self.max_attempts = max_attempts
        self.run_logger = run_logger
        self.sample_vectors = sample_vectors

    def chop(self, module: Module, seed: Seed = 0) -> List[CompositionFactor]:
        """Composition factors up to isomorphism, in order of first appearance."""
        seq = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
        leaves: List[tuple] = []
        self._chop(module, seq, leaves)

        factors: List[List] = []
        for leaf, verdict in leaves:
            for entry in factors:
                if isomorphic_simples(entry[0], leaf):
                    entry[1] += 1
                    break
            else:
                factors.append([leaf, 1, verdict])
        accounted = sum(f[0].dim * f[1] for f in factors)
        if accounted != module.dim:
            raise ChopFailure(f"factor dimensions sum to {accounted}, module has dim {module.dim}")
        logger.debug(
            "chopped dim %d into %d leaves, %d distinct", module.dim, len(leaves), len(factors)
        )
        return [CompositionFactor(m, k, v) for m, k, v in factors]

    def _chop(self, module: Module, seq: np.random.SeedSequence, leaves: list):
        if module.dim == 0:
            return
        rng = np.random.default_rng(seq)
        outcome = self.find_submodule(module, rng)
        if outcome.basis is None:
            if not outcome.simplicity.certified and self.run_logger is not None:
                self.run_logger.warning(f"dim {module.dim} leaf over {module.field} is only probably simple")
            leaves.append((module, outcome.simplicity))
            return
        if self.run_logger is not None:
            self.run_logger.log_chop_split(module.dim, outcome.basis.rows, outcome.method)
        sub, _ = submodule(module, outcome.basis)
        quo, _ = quotient_module(module, outcome.basis)
        sub_seq, quo_seq = seq.spawn(2)
        self._chop(sub, sub_seq, leaves)
        self._chop(quo, quo_seq, leaves)

    # ------------------------------------------------------------------
    # Submodule search
    # ------------------------------------------------------------------

    def find_submodule(self, module: Module, rng: np.random.Generator) -> SearchOutcome:
        field, d = module.field, module.dim
        if d <= 1:
            return SearchOutcome.simple("dimension")

        eye = Matrix.identity(field, d)
        found = self._first_proper(module, [eye.row(i) for i in range(d)])
        if found is not None:
            return SearchOutcome.split(found, "basis-vector")

        if algebra_dimension(module) == d * d:
            return SearchOutcome.simple("burnside")

        for candidate in self._singular_candidates(module, eye):
            outcome = self._try_element(module, candidate)
            if outcome is not None:
                return outcome

        elements = module.elements
        for _ in range(self.max_attempts):
            coeffs = field.random_array(rng, (len(elements) + 1,))
            total = eye.scale(coeffs[-1])
            for c, s in zip(coeffs, elements):
                if c != 0:
                    total = total + module.actions[s].scale(c)
            outcome = self._try_element(module, total)
            if outcome is not None:
                return outcome

        if exhaustive_feasible(field, d, self.exhaustive_cap):
            for v in projective_points(field, d):
                found = self._first_proper(module, [Matrix(field, v.reshape(1, d))])
                if found is not None:
                    return SearchOutcome.split(found, "exhaustive")
            return SearchOutcome.simple("exhaustive")
        return self._sampled(module, rng)

    def _sampled(self, module: Module, rng: np.random.Generator) -> SearchOutcome:
        result = is_simple(module, mode="sampled", samples=self.sample_vectors, rng=rng)
        if result.witness is not None:
            return SearchOutcome.split(result.witness, "sampled")
        return SearchOutcome(None, result.method, result)

    @staticmethod
    def _singular_candidates(module: Module, eye: Matrix):
        for s in module.elements:
            for shift in SINGULAR_SHIFTS:
                yield module.actions[s] - eye.scale(shift)

    @staticmethod
    def _first_proper(module: Module, vectors: Sequence[Matrix], dual: bool = False) -> Optional[Matrix]:
        for v in vectors:
            if v.is_zero():
                continue
            span = spin(module, v, dual=dual)
            if span.rows < module.dim:
                return span
        return None

    def _kernel_vectors(self, kernel: Matrix) -> tuple:
        """Vectors of the kernel to spin, and whether they cover it up to scalars."""
        field, k = kernel.field, kernel.rows
        if k == 1:
            return [kernel], True
        if field.is_finite and field.order ** k <= KERNEL_ENUMERATION_CAP:
            coords = (Matrix(field, c.reshape(1, k)) for c in projective_points(field, k))
            return [c @ kernel for c in coords], True
        return [kernel.row(i) for i in range(k)], False

    def _try_element(self, module: Module, element: Matrix) -> Optional[SearchOutcome]:
        """Spin kernel vectors of ``element`` in the module and in its dual.

        Returns a split, a simplicity certificate, or None when inconclusive.
        """
        d = module.dim
        kernel = element.nullspace()
        if kernel.rows == 0 or kernel.rows == d:
            return None
        vectors, complete = self._kernel_vectors(kernel)
        found = self._first_proper(module, vectors)
        if found is not None:
            return SearchOutcome.split(found, "kernel")

        dual_kernel = element.right_nullspace()
        dual_span = spin(module, dual_kernel.row(0), dual=True)
        if dual_span.rows < d:
            # annihilator of a proper dual submodule
            return SearchOutcome.split(dual_span.T.nullspace(), "dual-kernel")
        if complete:
            return SearchOutcome.simple("norton")
        return None


def irreducibles(
    group: MaxSubgroup, field: Field, chopper: Optional[ModuleChopper] = None, seed: Seed = 0
) -> List[GModule]:
    """Pairwise non-isomorphic simple KG-modules from the regular module."""
    chopper = chopper or ModuleChopper()
    factors = chopper.chop(regular_module(group, field), seed)
    return [f.module for f in factors if not f.zero_action]
