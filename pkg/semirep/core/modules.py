"""
Right modules over semigroups and their maximal subgroups.

A module stores one action matrix per acting element; vectors are rows and
``v @ action(s)`` is v·s. Everything here returns new modules, nothing is
mutated in place.
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass, replace
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from semirep.core.errors import DimensionMismatch, FieldMismatch, InputError, NotInvariant, ZeroAction
from semirep.core.fields import Field
from semirep.core.green import MaxSubgroup
from semirep.core.matrix import EchelonBasis, Matrix, kron, vstack
from semirep.core.semigroup import Semigroup

logger = logging.getLogger(__name__)

DEFAULT_EXHAUSTIVE_CAP = 2 ** 20
DEFAULT_SAMPLE_VECTORS = 64


@dataclass(frozen=True, eq=False)
class Module:
    field: Field
    dim: int
    actions: Dict[int, Matrix]

    def action(self, s: int) -> Matrix:
        return self.actions[s]

    @property
    def elements(self) -> Tuple[int, ...]:
        return tuple(sorted(self.actions))

    @property
    def generators(self) -> Tuple[int, ...]:
        raise NotImplementedError

    def multiply(self, s: int, t: int) -> int:
        raise NotImplementedError

    def generator_matrices(self) -> List[Matrix]:
        return [self.actions[s] for s in self.generators]

    def annihilator(self) -> Tuple[int, ...]:
        """Ann M: the elements acting as the zero matrix."""
        return tuple(s for s in self.elements if self.actions[s].is_zero())

    def is_zero_action(self) -> bool:
        return self.dim == 0 or len(self.annihilator()) == len(self.actions)

    def with_actions(self, dim: int, actions: Dict[int, Matrix]) -> "Module":
        return replace(self, dim=dim, actions=actions)

    def same_algebra(self, other: "Module") -> bool:
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class SModule(Module):
    """A right KS-module, one action matrix per semigroup element."""

    semigroup: Semigroup

    @property
    def generators(self) -> Tuple[int, ...]:
        return self.semigroup.generators

    def multiply(self, s: int, t: int) -> int:
        return self.semigroup.multiply(s, t)

    def same_algebra(self, other: Module) -> bool:
        return isinstance(other, SModule) and other.semigroup is self.semigroup


@dataclass(frozen=True, eq=False)
class GModule(Module):
    """A right KG-module for a maximal subgroup G, actions keyed by element index."""

    group: MaxSubgroup

    @property
    def generators(self) -> Tuple[int, ...]:
        return self.group.generators or (self.group.identity,)

    def multiply(self, s: int, t: int) -> int:
        return self.group.multiply(s, t)

    def same_algebra(self, other: Module) -> bool:
        return isinstance(other, GModule) and set(other.actions) == set(self.actions)


def check_multiplicativity(module: Module) -> Optional[Tuple[int, int]]:
    """First pair (s, t) with action(s)·action(t) != action(st), else None."""
    for s in module.elements:
        for t in module.elements:
            if module.actions[s] @ module.actions[t] != module.actions[module.multiply(s, t)]:
                return s, t
    if isinstance(module, GModule):
        identity = module.group.identity
        if module.actions[identity] != Matrix.identity(module.field, module.dim):
            return identity, identity
    return None


def _check_vectors(module: Module, vectors: Matrix):
    if vectors.cols != module.dim:
        raise DimensionMismatch(f"vectors of length {vectors.cols} for a module of dim {module.dim}")
    if vectors.field != module.field:
        raise FieldMismatch(f"{vectors.field} vs {module.field}")


def spin(module: Module, vectors: Matrix, dual: bool = False) -> Matrix:
    """RREF basis of the smallest invariant subspace containing ``vectors``.

    Args:
        module: Module whose generator actions are applied
        vectors: Row vectors of length dim M
        dual: Spin under the transposed actions, i.e. in the dual module

    Returns:
        RREF basis of the spun subspace

    Raises:
        DimensionMismatch: If the vectors have the wrong length
    """
    _check_vectors(module, vectors)
    matrices = [m.T if dual else m for m in module.generator_matrices()]
    return spin_matrices(module.field, module.dim, vectors, matrices)


def spin_matrices(field: Field, dim: int, vectors: Matrix, matrices: Sequence[Matrix]) -> Matrix:
    basis = EchelonBasis(field, dim)
    queue = deque()
    for i in range(vectors.rows):
        row = basis.add(vectors.entries[i])
        if row is not None:
            queue.append(row)
    gens = [m.entries for m in matrices]
    while queue and not basis.is_full:
        v = queue.popleft()
        for a in gens:
            row = basis.add(field.normalize(np.dot(v, a)))
            if row is not None:
                queue.append(row)
                if basis.is_full:
                    break
    return basis.matrix()


def invariance_witness(module: Module, basis: Matrix) -> Optional[int]:
    """An element s with basis·action(s) outside the span, else None."""
    if basis.rows == 0:
        return None
    span = basis.row_space()
    for s in module.elements:
        if not span.contains_rows(basis @ module.actions[s]):
            return s
    return None


def submodule(module: Module, basis: Matrix) -> Tuple[Module, Matrix]:
    """The invariant subspace spanned by ``basis`` as a module in its own right.

    Returns the submodule and its RREF basis (coordinates are taken there).
    """
    _check_vectors(module, basis)
    span = basis.row_space()
    witness = invariance_witness(module, span)
    if witness is not None:
        raise NotInvariant(witness)
    actions = {s: span.coordinates(span @ a) for s, a in module.actions.items()}
    return module.with_actions(span.rows, actions), span


def quotient_module(module: Module, basis: Matrix) -> Tuple[Module, Matrix]:
    """M / W and the projection matrix P (dim M x dim M/W).

    The quotient basis is the images of the standard vectors at the
    non-pivot columns of W's RREF; P kills W and is the identity on them.

    Args:
        module: The module M
        basis: Rows spanning a submodule W

    Returns:
        Tuple of the quotient module and P, with action_quot(s)·P = P·action(s)

    Raises:
        NotInvariant: With an element that moves W outside itself
    """
    _check_vectors(module, basis)
    span = basis.row_space()
    witness = invariance_witness(module, span)
    if witness is not None:
        raise NotInvariant(witness)
    _, pivots, _ = span.rref()
    free = [c for c in range(module.dim) if c not in pivots]
    identity = Matrix.identity(module.field, module.dim)
    projection = identity.take_cols(free)
    if pivots:
        projection = projection - identity.take_cols(pivots) @ span.take_cols(free)
    actions = {s: a.take_rows(free) @ projection for s, a in module.actions.items()}
    return module.with_actions(len(free), actions), projection


def hom_space(first: Module, second: Module) -> Matrix:
    """Basis of Hom(first, second).

    Args:
        first: Source module
        second: Target module over the same algebra and field

    Returns:
        Rows are row-major flattened d1 x d2 matrices X with
        action1(s)·X = X·action2(s) for every generator s
    """
    if first.field != second.field:
        raise FieldMismatch(f"{first.field} vs {second.field}")
    if not first.same_algebra(second):
        raise InputError("modules are over different algebras")
    d1, d2 = first.dim, second.dim
    field = first.field
    if d1 == 0 or d2 == 0:
        return Matrix.zeros(field, 0, d1 * d2)
    eye1 = Matrix.identity(field, d1)
    eye2 = Matrix.identity(field, d2)
    equations = [
        kron(first.actions[s], eye2) - kron(eye1, second.actions[s].T)
        for s in first.generators
    ]
    return vstack(equations, d1 * d2, field).right_nullspace()


def hom_dimension(first: Module, second: Module) -> int:
    return hom_space(first, second).rows


def isomorphic_simples(first: Module, second: Module) -> bool:
    """Isomorphism test valid between simple modules (Schur)."""
    return first.dim == second.dim and hom_dimension(first, second) > 0


def algebra_dimension(module: Module) -> int:
    """Dimension of the span of all action matrices together with the identity."""
    d = module.dim
    field = module.field
    rows = [Matrix(field, a.entries.reshape(1, d * d)) for a in module.actions.values()]
    rows.append(Matrix(field, Matrix.identity(field, d).entries.reshape(1, d * d)))
    return vstack(rows, d * d, field).rank()


class SimplicityVerdict(str, Enum):
    SIMPLE = "simple"
    PROBABLY_SIMPLE = "probably_simple"
    NOT_SIMPLE = "not_simple"


@dataclass(frozen=True)
class SimplicityResult:
    verdict: SimplicityVerdict
    method: str
    witness: Optional[Matrix] = None
    samples: int = 0

    @property
    def is_simple(self) -> bool:
        return self.verdict is not SimplicityVerdict.NOT_SIMPLE

    @property
    def certified(self) -> bool:
        return self.verdict is SimplicityVerdict.SIMPLE


def exhaustive_feasible(field: Field, dim: int, cap: int = DEFAULT_EXHAUSTIVE_CAP) -> bool:
    return field.is_finite and field.order ** dim <= cap


def projective_points(field: Field, dim: int) -> Iterator[np.ndarray]:
    """Every nonzero vector of F_p^dim up to scalars (leading coordinate 1)."""
    p = field.order
    for lead in range(dim):
        for tail in itertools.product(range(p), repeat=dim - lead - 1):
            v = field.zeros((dim,))
            v[lead] = field.one
            v[lead + 1 :] = tail
            yield v


def _proper(module: Module, vector: np.ndarray) -> Optional[Matrix]:
    span = spin(module, Matrix(module.field, vector.reshape(1, module.dim)))
    if 0 < span.rows < module.dim:
        return span
    return None


def is_simple(
    module: Module,
    mode: str = "auto",
    samples: int = DEFAULT_SAMPLE_VECTORS,
    rng: Optional[np.random.Generator] = None,
    exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP,
) -> SimplicityResult:
    """Decide whether a module has no proper nonzero submodules.

    ``exhaustive`` spins every projective point and needs a finite field
    with p^dim within the cap. ``sampled`` spins the standard basis plus
    ``samples`` random vectors. ``auto`` tries the dimension-one and
    Burnside certificates, then exhaustive, then sampled.

    Args:
        module: Module to test
        mode: One of auto, exhaustive or sampled
        samples: Random vectors spun in sampled mode
        rng: Generator for the sampled vectors (default: seeded with 0)
        exhaustive_cap: Largest p^dim enumerated

    Returns:
        SimplicityResult; a NOT_SIMPLE verdict carries the spun witness

    Raises:
        InputError: If exhaustive mode is infeasible or the mode is unknown
        ZeroAction: If every element acts as zero
    """
    if mode not in ("auto", "exhaustive", "sampled"):
        raise InputError(f"unknown simplicity mode {mode!r}")
    if module.dim == 0:
        raise DimensionMismatch("the zero module is not simple")
    if module.is_zero_action():
        raise ZeroAction("every element acts as zero")
    field, d = module.field, module.dim

    if mode == "exhaustive" and not exhaustive_feasible(field, d, exhaustive_cap):
        raise InputError(f"exhaustive check infeasible over {field} in dimension {d}")

    if mode == "auto":
        if d == 1:
            return SimplicityResult(SimplicityVerdict.SIMPLE, "dimension")
        if algebra_dimension(module) == d * d:
            return SimplicityResult(SimplicityVerdict.SIMPLE, "burnside")
        mode = "exhaustive" if exhaustive_feasible(field, d, exhaustive_cap) else "sampled"

    if mode == "exhaustive":
        for v in projective_points(field, d):
            witness = _proper(module, v)
            if witness is not None:
                return SimplicityResult(SimplicityVerdict.NOT_SIMPLE, "exhaustive", witness)
        return SimplicityResult(SimplicityVerdict.SIMPLE, "exhaustive")

    rng = rng if rng is not None else np.random.default_rng(0)
    eye = Matrix.identity(field, d)
    candidates = [eye.entries[i] for i in range(d)]
    candidates.extend(field.random_array(rng, (samples, d)))
    for v in candidates:
        if not np.any(v != 0):
            continue
        witness = _proper(module, v)
        if witness is not None:
            return SimplicityResult(SimplicityVerdict.NOT_SIMPLE, "sampled", witness, samples)
    return SimplicityResult(SimplicityVerdict.PROBABLY_SIMPLE, "sampled", samples=samples)


def direct_sum(first: Module, second: Module) -> Module:
    """M1 ⊕ M2 with block-diagonal actions."""
    if not first.same_algebra(second) or first.field != second.field:
        raise InputError("direct sum of modules over different algebras")
    field, d1, d2 = first.field, first.dim, second.dim
    actions = {}
    for s in first.elements:
        out = field.zeros((d1 + d2, d1 + d2))
        out[:d1, :d1] = first.actions[s].entries
        out[d1:, d1:] = second.actions[s].entries
        actions[s] = Matrix(field, out)
    return first.with_actions(d1 + d2, actions)
