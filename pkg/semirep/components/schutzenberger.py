"""
Right and left Schützenberger representations of a regular J-class.

Entries are maximal-subgroup elements (semigroup indices) or None for zero.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from semirep.core.errors import InputError, InternalInconsistency
from semirep.core.green import JClassData
from semirep.core.semigroup import Semigroup

logger = logging.getLogger(__name__)

MonomialMatrix = Tuple[Tuple[Optional[int], ...], ...]

RIGHT = "right"
LEFT = "left"


@dataclass(frozen=True, eq=False)
class MonomialRep:
    """One monomial matrix over G ∪ {0} per semigroup element."""

    jclass_id: int
    side: str
    size: int
    matrices: Dict[int, MonomialMatrix]

    def __getitem__(self, s: int) -> MonomialMatrix:
        return self.matrices[s]

    def is_zero(self, s: int) -> bool:
        return all(x is None for row in self.matrices[s] for x in row)

    def to_json(self) -> Dict[str, List[List]]:
        return {
            str(s): [["0" if x is None else x for x in row] for row in mat]
            for s, mat in sorted(self.matrices.items())
        }


def right_schutzenberger(semigroup: Semigroup, jd: JClassData) -> MonomialRep:
    """ρ(s)[a][a'] = g when t_a·s = g·t_a', zero row when t_a·s leaves R_e."""
    table = semigroup.table
    n = jd.n
    matrices = {}
    for s in range(semigroup.size):
        rows = []
        for t in jd.r_transversal:
            row: List[Optional[int]] = [None] * n
            factor = jd.r_factor.get(int(table[t, s]))
            if factor is not None:
                g, k = factor
                row[k] = g
            rows.append(tuple(row))
        matrices[s] = tuple(rows)
    rep = MonomialRep(jd.jclass_id, RIGHT, n, matrices)
    _verify(semigroup, jd, rep)
    return rep


def left_schutzenberger(semigroup: Semigroup, jd: JClassData) -> MonomialRep:
    """λ(s)[c][b] = g when s·l_b = l_c·g, zero column when s·l_b leaves L_e."""
    table = semigroup.table
    m = jd.m
    matrices = {}
    for s in range(semigroup.size):
        cols: List[List[Optional[int]]] = [[None] * m for _ in range(m)]
        for b, l in enumerate(jd.l_transversal):
            factor = jd.l_factor.get(int(table[s, l]))
            if factor is not None:
                g, c = factor
                cols[c][b] = g
        matrices[s] = tuple(tuple(row) for row in cols)
    rep = MonomialRep(jd.jclass_id, LEFT, m, matrices)
    _verify(semigroup, jd, rep)
    return rep


def schutzenberger(semigroup: Semigroup, jd: JClassData, side: str) -> MonomialRep:
    if side == RIGHT:
        return right_schutzenberger(semigroup, jd)
    if side == LEFT:
        return left_schutzenberger(semigroup, jd)
    raise InputError(f"side must be 'right' or 'left', got {side!r}")


def monomial_product(
    semigroup: Semigroup, first: MonomialMatrix, second: MonomialMatrix
) -> Optional[MonomialMatrix]:
    """Product in M_n(KG); None when an entry is a sum of two or more terms."""
    size = len(first)
    out: List[List[Optional[int]]] = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            g = first[i][j]
            if g is None:
                continue
            for k in range(size):
                h = second[j][k]
                if h is None:
                    continue
                if out[i][k] is not None:
                    return None
                out[i][k] = semigroup.multiply(g, h)
    return tuple(tuple(row) for row in out)


def is_monomial(rep: MonomialRep) -> bool:
    """Row-monomial for the right side, column-monomial for the left."""
    for mat in rep.matrices.values():
        lines = mat if rep.side == RIGHT else zip(*mat)
        if any(sum(x is not None for x in line) > 1 for line in lines):
            return False
    return True


def multiplicativity_failure(semigroup: Semigroup, rep: MonomialRep) -> Optional[Tuple[int, int]]:
    for s in range(semigroup.size):
        for t in range(semigroup.size):
            if monomial_product(semigroup, rep[s], rep[t]) != rep[semigroup.multiply(s, t)]:
                return s, t
    return None


def _verify(semigroup: Semigroup, jd: JClassData, rep: MonomialRep):
    if not is_monomial(rep):
        raise InternalInconsistency(f"{rep.side} Schützenberger rep of J{jd.jclass_id} is not monomial")
    bad = multiplicativity_failure(semigroup, rep)
    if bad is not None:
        raise InternalInconsistency(
            f"{rep.side} Schützenberger rep of J{jd.jclass_id} fails at s={bad[0]}, t={bad[1]}"
        )
    alive = [s for s in jd.ideal if not rep.is_zero(s)]
    if alive:
        raise InternalInconsistency(f"elements {alive} of I_J act nonzero on J{jd.jclass_id}")
    logger.debug("%s Schützenberger rep of J%d verified (size %d)", rep.side, jd.jclass_id, rep.size)
