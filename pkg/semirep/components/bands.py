"""
Closed-form irreducibles for bands and for semigroups in DA.

Every regular J-class J contributes the degree-one representation that is
0 on I_J and 1 elsewhere.
"""

from typing import List, Optional, Tuple

import numpy as np

from semirep.core.errors import InternalInconsistency, NotABand, NotInDA
from semirep.core.fields import Field
from semirep.core.green import GreenStructure, green_structure, ideal_I_J, maximal_subgroup
from semirep.core.matrix import Matrix
from semirep.core.modules import SModule
from semirep.core.semigroup import Semigroup


def is_band(semigroup: Semigroup) -> bool:
    return len(semigroup.idempotents) == semigroup.size


def is_closed(semigroup: Semigroup, members) -> bool:
    members = np.asarray(sorted(members), dtype=np.int64)
    if members.size == 0:
        return True
    return bool(np.isin(semigroup.table[np.ix_(members, members)], members).all())


def complement_closed_check(
    semigroup: Semigroup, jclass_id: int, green: Optional[GreenStructure] = None
) -> bool:
    """Whether S minus I_J is a subsemigroup."""
    green = green or green_structure(semigroup)
    ideal = set(ideal_I_J(semigroup, green, jclass_id))
    return is_closed(semigroup, [s for s in range(semigroup.size) if s not in ideal])


def is_in_DA(semigroup: Semigroup, green: Optional[GreenStructure] = None) -> bool:
    """Trivial maximal subgroups and every regular J-class a subsemigroup."""
    green = green or green_structure(semigroup)
    for j in green.regular_classes:
        group = maximal_subgroup(semigroup, green.apex_transversal[j], green)
        if group.order != 1 or not is_closed(semigroup, green.j_classes[j]):
            return False
    return True


def degree_one_rep(
    semigroup: Semigroup, field: Field, ideal
) -> SModule:
    ideal = set(ideal)
    actions = {
        s: Matrix.from_rows(field, [[0 if s in ideal else 1]]) for s in range(semigroup.size)
    }
    return SModule(field=field, dim=1, actions=actions, semigroup=semigroup)


def _closed_form(
    semigroup: Semigroup, field: Field, green: GreenStructure
) -> List[Tuple[int, SModule]]:
    reps = []
    for j in green.regular_classes:
        if not complement_closed_check(semigroup, j, green):
            raise InternalInconsistency(f"complement of I_J for J{j} is not closed")
        reps.append((j, degree_one_rep(semigroup, field, ideal_I_J(semigroup, green, j))))
    return reps


def band_irreducibles(
    semigroup: Semigroup, field: Field, green: Optional[GreenStructure] = None
) -> List[Tuple[int, SModule]]:
    if not is_band(semigroup):
        raise NotABand("some element is not idempotent")
    return _closed_form(semigroup, field, green or green_structure(semigroup))


def da_irreducibles(
    semigroup: Semigroup, field: Field, green: Optional[GreenStructure] = None
) -> List[Tuple[int, SModule]]:
    green = green or green_structure(semigroup)
    if not is_in_DA(semigroup, green):
        raise NotInDA("a maximal subgroup is nontrivial or a regular J-class is not closed")
    return _closed_form(semigroup, field, green)
