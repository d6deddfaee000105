"""
Green's relations, regular J-classes and the per-class data used by the
representation constructions.

Principal ideals are computed with an adjoined identity only implicitly
(every element belongs to its own principal ideals), so the input
semigroup is never modified.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from semirep.core.errors import FactorizationFailure, InternalInconsistency, NotIdempotent, NotRegular
from semirep.core.semigroup import Semigroup
from semirep.utils.logger import log_function_call

logger = logging.getLogger(__name__)

Partition = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class GreenStructure:
    """R/L/J/H partitions, the J-order and regularity data of a semigroup.

    ``right_ideals[s, x]`` is True iff x lies in sS^1, ``left_ideals[s, x]``
    iff x lies in S^1s and ``ideals[s, x]`` iff x lies in S^1sS^1.
    J-class ids are positions in ``j_classes``, ordered by minimum element.
    """

    semigroup: Semigroup
    right_ideals: np.ndarray
    left_ideals: np.ndarray
    ideals: np.ndarray
    r_classes: Partition
    l_classes: Partition
    j_classes: Partition
    h_classes: Partition
    j_order: nx.DiGraph
    regular: Tuple[bool, ...]
    idempotents: Tuple[int, ...]
    apex_transversal: Dict[int, int]

    @property
    def regular_classes(self) -> Tuple[int, ...]:
        return tuple(j for j, flag in enumerate(self.regular) if flag)

    def jclass_of(self, s: int) -> int:
        return self._jclass_index[s]

    @cached_property
    def _jclass_index(self) -> Dict[int, int]:
        return {s: j for j, cls in enumerate(self.j_classes) for s in cls}

    def leq_j(self, s: int, t: int) -> bool:
        """s <=_J t, i.e. S^1 s S^1 is contained in S^1 t S^1."""
        return bool(self.ideals[t, s])

    def j_order_edges(self) -> List[Tuple[int, int]]:
        """Covering pairs (lower, upper), sorted."""
        return sorted(self.j_order.edges())

    def classes_within(self, partition: Partition, jclass_id: int) -> Partition:
        members = set(self.j_classes[jclass_id])
        return tuple(c for c in partition if c[0] in members)


def _mutual_classes(membership: np.ndarray) -> Partition:
    mutual = membership & membership.T
    n = membership.shape[0]
    assigned = np.zeros(n, dtype=bool)
    classes = []
    for s in range(n):
        if assigned[s]:
            continue
        cls = np.nonzero(mutual[s])[0]
        assigned[cls] = True
        classes.append(tuple(int(x) for x in cls))
    return tuple(classes)


def principal_ideals(semigroup: Semigroup) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    table = semigroup.table
    n = semigroup.size
    eye = np.eye(n, dtype=bool)
    right = eye.copy()
    left = eye.copy()
    both = eye.copy()
    for s in range(n):
        right[s, table[s, :]] = True
        left[s, table[:, s]] = True
        both[s, table[s, :]] = True
        both[s, table[:, s]] = True
        both[s, table[table[:, s], :].ravel()] = True
    return right, left, both


@log_function_call()
def green_structure(semigroup: Semigroup) -> GreenStructure:
    """Compute all of Green's relations from principal ideal inclusion.

    Regularity of each J-class is decided twice, by looking for an
    idempotent and by testing whether J meets J·J.

    Args:
        semigroup: The semigroup to analyse

    Returns:
        GreenStructure with the R, L, J and H partitions, the reduced J-order
        and a chosen idempotent for every regular J-class

    Raises:
        InternalInconsistency: If the two regularity tests disagree
    """
    table = semigroup.table
    right, left, both = principal_ideals(semigroup)
    r_classes = _mutual_classes(right)
    l_classes = _mutual_classes(left)
    j_classes = _mutual_classes(both)

    l_of = {s: k for k, cls in enumerate(l_classes) for s in cls}
    h_buckets: Dict[Tuple[int, int], List[int]] = {}
    for r_id, cls in enumerate(r_classes):
        for s in cls:
            h_buckets.setdefault((r_id, l_of[s]), []).append(s)
    h_classes = tuple(sorted(tuple(sorted(v)) for v in h_buckets.values()))

    order = nx.DiGraph()
    order.add_nodes_from(range(len(j_classes)))
    reps = [cls[0] for cls in j_classes]
    for a, ra in enumerate(reps):
        for b, rb in enumerate(reps):
            if a != b and both[rb, ra]:
                order.add_edge(a, b)
    j_order = nx.transitive_reduction(order)
    j_order.add_nodes_from(range(len(j_classes)))

    idempotents = semigroup.idempotents
    idem_set = set(idempotents)
    regular = []
    transversal: Dict[int, int] = {}
    for j, cls in enumerate(j_classes):
        has_idempotent = any(s in idem_set for s in cls)
        members = np.array(cls)
        square_meets = bool(np.isin(table[np.ix_(members, members)], members).any())
        if has_idempotent != square_meets:
            raise InternalInconsistency(
                f"J-class {j}: idempotent test says {has_idempotent}, J^2 test says {square_meets}"
            )
        regular.append(has_idempotent)
        if has_idempotent:
            transversal[j] = min(s for s in cls if s in idem_set)

    logger.debug(
        "green structure: %d J-classes (%d regular), %d R, %d L, %d H",
        len(j_classes), len(transversal), len(r_classes), len(l_classes), len(h_classes),
    )
    return GreenStructure(
        semigroup=semigroup,
        right_ideals=right,
        left_ideals=left,
        ideals=both,
        r_classes=r_classes,
        l_classes=l_classes,
        j_classes=j_classes,
        h_classes=h_classes,
        j_order=j_order,
        regular=tuple(regular),
        idempotents=idempotents,
        apex_transversal=transversal,
    )


def jorder_dot(green: GreenStructure) -> str:
    """DOT text for the J-order, upper classes drawn above lower ones."""
    lines = ["digraph jorder {", "  rankdir=BT;"]
    for j, cls in enumerate(green.j_classes):
        shape = "box" if green.regular[j] else "ellipse"
        members = " ".join(green.semigroup.label(s) for s in cls)
        lines.append(f'  J{j} [shape={shape}, label="J{j}: {members}"];')
    for lower, upper in green.j_order_edges():
        lines.append(f"  J{lower} -> J{upper};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def ideal_I_J(semigroup: Semigroup, green: GreenStructure, jclass_id: int) -> Tuple[int, ...]:
    """I_J: elements s whose principal ideal does not contain J."""
    rep = green.j_classes[jclass_id][0]
    members = np.nonzero(~green.ideals[:, rep])[0]
    ideal = tuple(int(s) for s in members)
    if ideal:
        mask = np.zeros(semigroup.size, dtype=bool)
        mask[list(ideal)] = True
        if not (mask[semigroup.table[list(ideal), :]].all() and mask[semigroup.table[:, list(ideal)]].all()):
            raise InternalInconsistency(f"I_J for J-class {jclass_id} is not an ideal")
    return ideal


@dataclass(frozen=True, eq=False)
class MaxSubgroup:
    """The maximal subgroup G_e = eSe ∩ J_e, with multiplication from S."""

    semigroup: Semigroup
    jclass_id: int
    identity: int
    elements: Tuple[int, ...]
    inverse: Dict[int, int]
    generators: Tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def multiply(self, g: int, h: int) -> int:
        return self.semigroup.multiply(g, h)

    def position(self, g: int) -> int:
        return self._positions[g]

    @cached_property
    def _positions(self) -> Dict[int, int]:
        return {g: i for i, g in enumerate(self.elements)}

    def __contains__(self, g: int) -> bool:
        return g in self._positions


def _group_generators(semigroup: Semigroup, identity: int, elements: Sequence[int]) -> Tuple[int, ...]:
    gens: List[int] = []
    reached = {identity}
    for g in elements:
        if g in reached:
            continue
        gens.append(g)
        frontier = list(reached)
        reached.add(g)
        frontier.append(g)
        while frontier:
            x = frontier.pop()
            for y in gens:
                z = semigroup.multiply(x, y)
                if z not in reached:
                    reached.add(z)
                    frontier.append(z)
    return tuple(gens)


def maximal_subgroup(
    semigroup: Semigroup, e: int, green: Optional[GreenStructure] = None
) -> MaxSubgroup:
    """G_e computed as eSe ∩ J_e, with verified closure and inverses."""
    if not semigroup.is_idempotent(e):
        raise NotIdempotent(e)
    green = green or green_structure(semigroup)
    j = green.jclass_of(e)
    jset = set(green.j_classes[j])
    table = semigroup.table
    local = set(int(x) for x in table[table[e, :], e])  # e s e for all s
    elements = tuple(sorted(local & jset))

    members = set(elements)
    inverse: Dict[int, int] = {}
    for g in elements:
        if semigroup.multiply(e, g) != g or semigroup.multiply(g, e) != g:
            raise InternalInconsistency(f"{e} is not an identity for {g}")
        for h in elements:
            if semigroup.multiply(g, h) not in members:
                raise InternalInconsistency(f"G_{e} not closed: {g}*{h}")
            if semigroup.multiply(g, h) == e and semigroup.multiply(h, g) == e:
                inverse[g] = h
        if g not in inverse:
            raise InternalInconsistency(f"{g} has no inverse in G_{e}")
    return MaxSubgroup(
        semigroup=semigroup,
        jclass_id=j,
        identity=e,
        elements=elements,
        inverse=inverse,
        generators=_group_generators(semigroup, e, elements),
    )


def idempotents_isomorphic(
    semigroup: Semigroup, e: int, f: int
) -> Optional[Tuple[int, int]]:
    """Search eSf x fSe for x, x' with x x' = e and x' x = f.

    Args:
        semigroup: The semigroup
        e: First idempotent
        f: Second idempotent

    Returns:
        The pair (x, x'), or None when e and f lie in different J-classes
    """
    for idem in (e, f):
        if not semigroup.is_idempotent(idem):
            raise NotIdempotent(idem)
    table = semigroup.table
    e_s_f = sorted(set(int(x) for x in table[table[e, :], f]))
    f_s_e = sorted(set(int(x) for x in table[table[f, :], e]))
    for x in e_s_f:
        for y in f_s_e:
            if table[x, y] == e and table[y, x] == f:
                return x, y
    return None


@dataclass(frozen=True, eq=False)
class JClassData:
    """Everything the constructions need about one regular J-class.

    ``r_transversal`` represents the left G-orbits of R_e (one per L-class),
    ``l_transversal`` the right G-orbits of L_e (one per R-class).
    ``sandwich[b][a]`` is r_a * l_b when that product lies in J (then in G),
    else None.
    """

    jclass_id: int
    idempotent: int
    group: MaxSubgroup
    row_space: Tuple[int, ...]
    col_space: Tuple[int, ...]
    r_transversal: Tuple[int, ...]
    l_transversal: Tuple[int, ...]
    r_factor: Dict[int, Tuple[int, int]]
    l_factor: Dict[int, Tuple[int, int]]
    sandwich: Tuple[Tuple[Optional[int], ...], ...]
    ideal: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.r_transversal)

    @property
    def m(self) -> int:
        return len(self.l_transversal)


def _orbits(
    space: Sequence[int], group: MaxSubgroup, act, idempotent: int
) -> Tuple[Tuple[int, ...], Dict[int, Tuple[int, int]]]:
    """Free orbits of G on ``space``; factor map element -> (g, orbit index)."""
    remaining = sorted(space)
    assigned: Dict[int, Tuple[int, int]] = {}
    reps: List[int] = []
    for x in remaining:
        if x in assigned:
            continue
        orbit = [act(g, x) for g in group.elements]
        if len(set(orbit)) != group.order:
            raise InternalInconsistency(f"G action on the orbit of {x} is not free")
        rep = idempotent if idempotent in orbit else min(orbit)
        k = len(reps)
        reps.append(rep)
        for g in group.elements:
            y = act(g, rep)
            if y in assigned:
                raise FactorizationFailure(f"{y} factors twice")
            assigned[y] = (g, k)
    missing = set(space) - set(assigned)
    if missing:
        raise FactorizationFailure(f"elements outside every orbit: {sorted(missing)}")
    return tuple(reps), assigned


def jclass_data(
    semigroup: Semigroup,
    green: GreenStructure,
    jclass_id: int,
    idempotent: Optional[int] = None,
) -> JClassData:
    """Populate JClassData for a regular J-class.

    Args:
        semigroup: The semigroup
        green: Its Green structure
        jclass_id: Index of a regular J-class
        idempotent: Idempotent of the class to build around (default: e_J)

    Returns:
        JClassData with the maximal subgroup, both transversals, the unique
        factorizations, the sandwich matrix and I_J

    Raises:
        NotRegular: If the class has no idempotent
        NotIdempotent: If ``idempotent`` is not an idempotent
    """
    if not green.regular[jclass_id]:
        raise NotRegular(jclass_id)
    e = green.apex_transversal[jclass_id] if idempotent is None else idempotent
    if not semigroup.is_idempotent(e):
        raise NotIdempotent(e)
    table = semigroup.table
    jset = set(green.j_classes[jclass_id])
    if e not in jset:
        raise NotRegular(jclass_id)
    group = maximal_subgroup(semigroup, e, green)
    row_space = tuple(sorted(set(int(x) for x in table[e, :]) & jset))
    col_space = tuple(sorted(set(int(x) for x in table[:, e]) & jset))

    r_reps, r_factor = _orbits(row_space, group, lambda g, x: int(table[g, x]), e)
    l_reps, l_factor = _orbits(col_space, group, lambda g, x: int(table[x, g]), e)

    n_l = len(green.classes_within(green.l_classes, jclass_id))
    n_r = len(green.classes_within(green.r_classes, jclass_id))
    if len(r_reps) != n_l or len(l_reps) != n_r:
        raise InternalInconsistency(
            f"J-class {jclass_id}: {len(r_reps)} R-orbits vs {n_l} L-classes, "
            f"{len(l_reps)} L-orbits vs {n_r} R-classes"
        )

    members = set(group.elements)
    sandwich = []
    for l_b in l_reps:
        row = []
        for r_a in r_reps:
            x = int(table[r_a, l_b])
            if x in jset:
                if x not in members:
                    raise InternalInconsistency(f"sandwich product {r_a}*{l_b} in J but not in G")
                row.append(x)
            else:
                row.append(None)
        sandwich.append(tuple(row))

    return JClassData(
        jclass_id=jclass_id,
        idempotent=e,
        group=group,
        row_space=row_space,
        col_space=col_space,
        r_transversal=r_reps,
        l_transversal=l_reps,
        r_factor=r_factor,
        l_factor=l_factor,
        sandwich=tuple(sandwich),
        ideal=ideal_I_J(semigroup, green, jclass_id),
    )
