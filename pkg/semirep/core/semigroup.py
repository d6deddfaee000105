"""
Finite semigroups as index-based Cayley tables.

Elements are the integers 0..n-1 and ``table[s, t]`` is the index of s*t.
Transformation semigroups compose left to right: (s*t)(i) = t(s(i)).
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from semirep.core.errors import IndexOutOfRange, InputError, NonAssociative, SizeLimitExceeded
from semirep.utils.logger import log_function_call

logger = logging.getLogger(__name__)

DEFAULT_CLOSURE_LIMIT = 100000

Transformation = Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Semigroup:
    """A validated finite semigroup."""

    table: np.ndarray
    given_generators: Optional[Tuple[int, ...]] = None
    transformations: Optional[Tuple[Transformation, ...]] = None

    def __post_init__(self):
        self.table.flags.writeable = False

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.size

    def multiply(self, s: int, t: int) -> int:
        return int(self.table[s, t])

    def product(self, elements: Sequence[int]) -> int:
        it = iter(elements)
        acc = next(it)
        for x in it:
            acc = int(self.table[acc, x])
        return acc

    def is_idempotent(self, s: int) -> bool:
        return int(self.table[s, s]) == s

    @cached_property
    def idempotents(self) -> Tuple[int, ...]:
        diag = np.diagonal(self.table)
        return tuple(int(s) for s in np.nonzero(diag == np.arange(self.size))[0])

    def identity(self) -> Optional[int]:
        """Index of a two-sided identity, if there is one."""
        ar = np.arange(self.size)
        for e in self.idempotents:
            if np.array_equal(self.table[e, :], ar) and np.array_equal(self.table[:, e], ar):
                return e
        return None

    def is_monoid(self) -> bool:
        return self.identity() is not None

    @cached_property
    def generators(self) -> Tuple[int, ...]:
        """Generating set: the given one, else a greedy one in index order."""
        if self.given_generators:
            return self.given_generators
        gens: List[int] = []
        reached = np.zeros(self.size, dtype=bool)
        for s in range(self.size):
            if reached[s]:
                continue
            gens.append(s)
            reached = self._close(reached | (np.arange(self.size) == s))
        return tuple(gens)

    def _close(self, members: np.ndarray) -> np.ndarray:
        while True:
            idx = np.nonzero(members)[0]
            grown = members.copy()
            grown[self.table[np.ix_(idx, idx)].ravel()] = True
            if np.array_equal(grown, members):
                return members
            members = grown

    def label(self, s: int) -> str:
        if self.transformations is not None:
            return "[" + ",".join(str(x) for x in self.transformations[s]) + "]"
        return str(s)

    def index_of_transformation(self, image: Sequence[int]) -> int:
        if self.transformations is None:
            raise InputError("semigroup was not built from transformations")
        return self._transformation_index[tuple(image)]

    @cached_property
    def _transformation_index(self) -> Dict[Transformation, int]:
        return {t: i for i, t in enumerate(self.transformations or ())}


def check_associativity(table: np.ndarray) -> None:
    """Exhaustive associativity check, one left factor at a time."""
    n = table.shape[0]
    for s in range(n):
        left = table[table[s, :], :]          # (s*t)*u indexed [t, u]
        right = table[s, table]               # s*(t*u) indexed [t, u]
        bad = np.argwhere(left != right)
        if bad.size:
            t, u = (int(x) for x in bad[0])
            raise NonAssociative(s, t, u)


def from_cayley_table(table: Sequence[Sequence[int]]) -> Semigroup:
    """Validate a multiplication table and wrap it as a Semigroup.

    Args:
        table: Square table with table[s][t] the index of s*t

    Returns:
        The validated Semigroup

    Raises:
        IndexOutOfRange: If an entry is not an index in [0, n)
        NonAssociative: With the first failing triple (s, t, u)
    """
    rows = [list(r) for r in table]
    n = len(rows)
    if n == 0:
        raise InputError("a semigroup needs at least one element")
    if any(len(r) != n for r in rows):
        raise InputError("Cayley table must be square")
    # range is checked on Python ints so oversized entries never reach int64
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)) or not 0 <= x < n:
                raise IndexOutOfRange(f"table[{i}][{j}] = {x!r} outside [0, {n})")
    arr = np.array(rows, dtype=np.int64)
    check_associativity(arr)
    return Semigroup(arr)


@log_function_call()
def from_transformations(
    generators: Sequence[Sequence[int]], degree: Optional[int] = None,
    limit: int = DEFAULT_CLOSURE_LIMIT,
) -> Semigroup:
    """Close a list of maps on {0..d-1} under composition.

    Elements are numbered breadth-first: the generators in the given order
    (duplicates dropped), then right multiples by generators as discovered.

    Args:
        generators: Each generator lists the images of 0..d-1
        degree: Number of points d (default: length of the first generator)
        limit: Largest closure accepted

    Returns:
        Semigroup carrying its transformations and generator indices

    Raises:
        SizeLimitExceeded: If the closure grows past ``limit``
    """
    if not generators:
        raise InputError("generator list must be non-empty")
    gens = [tuple(int(x) for x in g) for g in generators]
    degree = degree if degree is not None else len(gens[0])
    if degree < 1:
        raise InputError("degree must be at least 1")
    for k, g in enumerate(gens):
        if len(g) != degree:
            raise InputError(f"generator {k} has {len(g)} images, expected {degree}")
        if any(x < 0 or x >= degree for x in g):
            raise IndexOutOfRange(f"generator {k} maps outside [0, {degree})")

    index: Dict[Transformation, int] = {}
    elements: List[Transformation] = []
    for g in gens:
        if g not in index:
            index[g] = len(elements)
            elements.append(g)
    gen_idx = tuple(index[g] for g in dict.fromkeys(gens))

    head = 0
    while head < len(elements):
        x = elements[head]
        head += 1
        for g in gens:
            y = tuple(g[i] for i in x)
            if y not in index:
                if len(elements) >= limit:
                    raise SizeLimitExceeded(limit)
                index[y] = len(elements)
                elements.append(y)

    maps = np.array(elements, dtype=np.int64)
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for t in range(n):
        composed = maps[t][maps]            # row s: t applied after s
        for s in range(n):
            table[s, t] = index[tuple(composed[s].tolist())]
    logger.debug("closed %d generators of degree %d into %d elements", len(gens), degree, n)
    check_associativity(table)
    return Semigroup(table, given_generators=gen_idx, transformations=tuple(elements))


def adjoin_identity(semigroup: Semigroup) -> Semigroup:
    """S^1: a copy of S with a new identity element at index n."""
    n = semigroup.size
    table = np.empty((n + 1, n + 1), dtype=np.int64)
    table[:n, :n] = semigroup.table
    table[n, :] = np.arange(n + 1)
    table[:, n] = np.arange(n + 1)
    gens = None
    if semigroup.given_generators is not None:
        gens = semigroup.given_generators + (n,)
    return Semigroup(table, given_generators=gens)
