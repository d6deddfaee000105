"""
Induced and coinduced modules of a regular J-class and the simple modules
they cut out.

For V a right KG-module of dimension r, Ind(V) lives on V^n and Coind(V)
on V^m, block coordinates ordered (transversal index, V coordinate). Both
the unique maximal submodule of Ind(V) and the unique minimal submodule
of Coind(V) are computed twice, once from the sandwich matrix and once
from their module-theoretic definition, and the two must agree.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from semirep.core.errors import (
    CrossCheckMismatch,
    InputError,
    NoApex,
    VerificationFailure,
    ZeroAction,
)
from semirep.core.green import GreenStructure, JClassData, MaxSubgroup, ideal_I_J
from semirep.core.matrix import Matrix, block_matrix, hstack
from semirep.core.modules import (
    DEFAULT_EXHAUSTIVE_CAP,
    DEFAULT_SAMPLE_VECTORS,
    GModule,
    SimplicityResult,
    SModule,
    hom_dimension,
    is_simple,
    quotient_module,
    spin,
    submodule,
)
from semirep.core.semigroup import Semigroup
from semirep.components.schutzenberger import MonomialRep

logger = logging.getLogger(__name__)


def _check_group_module(V: GModule, jd: JClassData):
    if V.group.identity != jd.idempotent:
        raise InputError(
            f"module is over G_{V.group.identity}, J-class data uses e={jd.idempotent}"
        )


def _monomial_action(semigroup: Semigroup, V: GModule, rep: MonomialRep) -> SModule:
    actions = {}
    for s in range(semigroup.size):
        blocks = [[None if g is None else V.actions[g] for g in row] for row in rep[s]]
        actions[s] = block_matrix(blocks, V.dim, V.field)
    return SModule(field=V.field, dim=V.dim * rep.size, actions=actions, semigroup=semigroup)


def induce(semigroup: Semigroup, V: GModule, jd: JClassData, rho: MonomialRep) -> SModule:
    """Ind(V) on V^n: block (i, j) of action(s) is φ(ρ(s)[i][j])."""
    _check_group_module(V, jd)
    return _monomial_action(semigroup, V, rho)


def coinduce(semigroup: Semigroup, V: GModule, jd: JClassData, lam: MonomialRep) -> SModule:
    """Coind(V) on V^m: block (i, j) of action(s) is φ(λ(s)[i][j])."""
    _check_group_module(V, jd)
    return _monomial_action(semigroup, V, lam)


def sandwich_block(V: GModule, jd: JClassData) -> Matrix:
    """The r·n x r·m matrix with block (a, b) = φ(C[b][a]), zero where C is 0."""
    blocks = [
        [None if jd.sandwich[b][a] is None else V.actions[jd.sandwich[b][a]] for b in range(jd.m)]
        for a in range(jd.n)
    ]
    r = V.dim
    out = V.field.zeros((r * jd.n, r * jd.m))
    for a, row in enumerate(blocks):
        for b, block in enumerate(row):
            if block is not None:
                out[a * r : (a + 1) * r, b * r : (b + 1) * r] = block.entries
    return Matrix(V.field, out)


def radical_N(induced: SModule, V: GModule, jd: JClassData) -> Matrix:
    """Basis of N = {w | w·action(l) = 0 for every l in L_e}.

    Args:
        induced: Ind(V) built from the same J-class data
        V: The group module
        jd: Data of the regular J-class

    Returns:
        RREF basis of N, the left null space of the sandwich block matrix

    Raises:
        CrossCheckMismatch: If the L_e-annihilator and the null space differ
    """
    annihilated = hstack(
        [induced.actions[l] for l in jd.col_space], induced.dim, induced.field
    ).nullspace()
    from_sandwich = sandwich_block(V, jd).nullspace()
    if not annihilated.same_row_space(from_sandwich):
        raise CrossCheckMismatch(
            f"J{jd.jclass_id}: L_e-annihilator has dim {annihilated.rank()}, "
            f"sandwich null space has dim {from_sandwich.rank()}"
        )
    return from_sandwich.row_space()


def minimal_L(coinduced: SModule, V: GModule, jd: JClassData) -> Matrix:
    """Basis of the unique minimal submodule Coind(V)·e·KS.

    Args:
        coinduced: Coind(V) built from the same J-class data
        V: The group module
        jd: Data of the regular J-class

    Returns:
        RREF basis of the row space of the sandwich block matrix

    Raises:
        CrossCheckMismatch: If spinning Coind(V)·e gives a different space
    """
    image = sandwich_block(V, jd).row_space()
    spun = spin(coinduced, coinduced.actions[jd.idempotent].row_space())
    if not image.same_row_space(spun):
        raise CrossCheckMismatch(
            f"J{jd.jclass_id}: sandwich image has dim {image.rows}, "
            f"spun M·e has dim {spun.rows}"
        )
    return image


def restriction(module: SModule, group: MaxSubgroup) -> GModule:
    """M·e as a module for the maximal subgroup at e."""
    e = group.identity
    basis = module.actions[e].row_space()
    actions = {g: basis.coordinates(basis @ module.actions[g]) for g in group.elements}
    return GModule(field=module.field, dim=basis.rows, actions=actions, group=group)


def apex_of(module: SModule, green: GreenStructure) -> int:
    """The regular J-class whose ideal I_J is exactly Ann M.

    Args:
        module: A KS-module
        green: Green structure of its semigroup

    Returns:
        Index of the apex J-class

    Raises:
        ZeroAction: If every element acts as zero
        NoApex: If no regular J-class, or more than one, matches Ann M
    """
    if module.is_zero_action():
        raise ZeroAction("module is annihilated by every element")
    annihilator = set(module.annihilator())
    matches = [
        j for j in green.regular_classes
        if set(ideal_I_J(module.semigroup, green, j)) == annihilator
    ]
    if len(matches) != 1:
        raise NoApex(
            f"Ann M = {sorted(annihilator)} matches regular J-classes {matches}"
        )
    return matches[0]


@dataclass(frozen=True, eq=False)
class SimpleReport:
    """One simple KS-module with apex J, built both ways."""

    jclass_id: int
    idempotent: int
    group_module: GModule
    induced_dim: int
    radical_dim: int
    simple: SModule
    coinduced_dim: int
    minimal_dim: int
    coinduced_simple: SModule
    iso_check: bool
    simplicity: SimplicityResult

    @property
    def simple_dim(self) -> int:
        return self.simple.dim


def _verify_simple(
    module: SModule, V: GModule, jd: JClassData, green: GreenStructure,
    label: str, exhaustive_cap: int, rng: Optional[np.random.Generator],
    samples: int = DEFAULT_SAMPLE_VECTORS,
) -> SimplicityResult:
    result = is_simple(module, samples=samples, rng=rng, exhaustive_cap=exhaustive_cap)
    if not result.is_simple:
        raise VerificationFailure(f"{label}.is_simple", f"J{jd.jclass_id}: proper submodule found")
    restricted = restriction(module, jd.group)
    if restricted.dim != V.dim or hom_dimension(restricted, V) == 0:
        raise VerificationFailure(f"{label}.restriction", f"J{jd.jclass_id}: M·e is not isomorphic to V")
    apex = apex_of(module, green)
    if apex != jd.jclass_id:
        raise VerificationFailure(f"{label}.apex", f"expected J{jd.jclass_id}, got J{apex}")
    return result


def simple_from_induced(
    semigroup: Semigroup, V: GModule, jd: JClassData, rho: MonomialRep, green: GreenStructure,
    exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP, rng: Optional[np.random.Generator] = None,
    samples: int = DEFAULT_SAMPLE_VECTORS,
) -> Tuple[SModule, SModule, Matrix, SimplicityResult]:
    """Ind(V)/N, verified simple with apex J and M·e ≅ V.

    Returns the simple, the induced module, the basis of N and the verdict.
    """
    induced = induce(semigroup, V, jd, rho)
    radical = radical_N(induced, V, jd)
    simple, _ = quotient_module(induced, radical)
    verdict = _verify_simple(simple, V, jd, green, "induced", exhaustive_cap, rng, samples)
    return simple, induced, radical, verdict


def simple_from_coinduced(
    semigroup: Semigroup, V: GModule, jd: JClassData, lam: MonomialRep, green: GreenStructure,
    exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP, rng: Optional[np.random.Generator] = None,
    samples: int = DEFAULT_SAMPLE_VECTORS,
) -> Tuple[SModule, SModule, Matrix]:
    """The minimal submodule of Coind(V), verified like the induced side."""
    coinduced = coinduce(semigroup, V, jd, lam)
    minimal = minimal_L(coinduced, V, jd)
    simple, _ = submodule(coinduced, minimal)
    _verify_simple(simple, V, jd, green, "coinduced", exhaustive_cap, rng, samples)
    return simple, coinduced, minimal


def construct_simple(
    semigroup: Semigroup, V: GModule, jd: JClassData, rho: MonomialRep, lam: MonomialRep,
    green: GreenStructure, exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP,
    rng: Optional[np.random.Generator] = None, samples: int = DEFAULT_SAMPLE_VECTORS,
) -> SimpleReport:
    """Build the simple module indexed by (J, V) from both sides and compare.

    Args:
        semigroup: The semigroup
        V: A simple module of the maximal subgroup at jd.idempotent
        jd: Data of the regular J-class
        rho: Right Schützenberger representation of the class
        lam: Left Schützenberger representation of the class
        green: Green structure of the semigroup
        exhaustive_cap: Largest p^dim for the exhaustive simplicity check
        rng: Generator for sampled simplicity checks
        samples: Random vectors spun when the check is sampled

    Returns:
        SimpleReport with both modules, their dimensions and the verdict

    Raises:
        VerificationFailure: If either module fails the simplicity, restriction
            or apex check
    """
    simple, induced, radical, verdict = simple_from_induced(
        semigroup, V, jd, rho, green, exhaustive_cap, rng, samples
    )
    co_simple, coinduced, minimal = simple_from_coinduced(
        semigroup, V, jd, lam, green, exhaustive_cap, rng, samples
    )
    iso = simple.dim == co_simple.dim and hom_dimension(simple, co_simple) > 0
    return SimpleReport(
        jclass_id=jd.jclass_id,
        idempotent=jd.idempotent,
        group_module=V,
        induced_dim=induced.dim,
        radical_dim=radical.rows,
        simple=simple,
        coinduced_dim=coinduced.dim,
        minimal_dim=minimal.rows,
        coinduced_simple=co_simple,
        iso_check=iso,
        simplicity=verdict,
    )


def transport_group_module(
    V: GModule, target: MaxSubgroup, x: int, x_prime: int, semigroup: Semigroup
) -> GModule:
    """Move V from G_e to G_f along x ∈ eSf, x' ∈ fSe with xx' = e, x'x = f.

    h ∈ G_f acts as x·h·x' ∈ G_e does on V.
    """
    actions: Dict[int, Matrix] = {
        h: V.actions[semigroup.product((x, h, x_prime))] for h in target.elements
    }
    return GModule(field=V.field, dim=V.dim, actions=actions, group=target)
