import numpy as np
import pytest

from semirep.core.errors import IndexOutOfRange, InputError, NonAssociative, SizeLimitExceeded
from semirep.core.semigroup import (
    adjoin_identity,
    check_associativity,
    from_cayley_table,
    from_transformations,
)


def test_cayley_roundtrip():
    S = from_cayley_table([[0, 0], [0, 1]])
    assert S.size == 2
    assert S.multiply(1, 0) == 0
    assert S.idempotents == (0, 1)
    assert S.identity() == 1


def test_non_associative_witness():
    with pytest.raises(NonAssociative) as info:
        from_cayley_table([[1, 0], [0, 0]])
    s, t, u = info.value.witness
    table = np.array([[1, 0], [0, 0]])
    assert table[table[s, t], u] != table[s, table[t, u]]


def test_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        from_cayley_table([[0, 2], [1, 1]])


@pytest.mark.parametrize("entry", [10 ** 30, -(10 ** 30), -1, 1.5, True])
def test_entries_outside_int64_are_rejected(entry):
    with pytest.raises(IndexOutOfRange, match=r"table\[0\]\[0\]"):
        from_cayley_table([[entry]])


def test_ragged_table():
    with pytest.raises(InputError):
        from_cayley_table([[0, 0], [0]])


def test_table_is_read_only():
    S = from_cayley_table([[0]])
    with pytest.raises(ValueError):
        S.table[0, 0] = 0


@pytest.mark.parametrize(
    "generators, size",
    [
        ([[1, 0], [0, 0]], 4),
        ([[1, 0, 2], [1, 2, 0]], 6),
        ([[1, 0, 2], [1, 2, 0], [0, 0, 2]], 27),
        ([[1, 0, 2], [1, 2, 0], [0, 0, 0]], 9),
    ],
)
def test_transformation_closure_sizes(generators, size):
    S = from_transformations(generators)
    assert S.size == size
    check_associativity(S.table)


def test_transformation_composition_order():
    # (s*t)(i) = t(s(i))
    S = from_transformations([[1, 0], [0, 0]])
    swap = S.index_of_transformation([1, 0])
    c0 = S.index_of_transformation([0, 0])
    assert S.transformations[S.multiply(c0, swap)] == (1, 1)
    assert S.transformations[S.multiply(swap, c0)] == (0, 0)


def test_t3_idempotent_count(corpus):
    assert len(corpus("full_transformation3").idempotents) == 10


def test_transformation_labels(T2):
    assert [T2.label(s) for s in range(4)] == ["[1,0]", "[0,0]", "[0,1]", "[1,1]"]
    assert T2.generators == (0, 1)


def test_closure_limit():
    with pytest.raises(SizeLimitExceeded):
        from_transformations([[1, 0, 2], [1, 2, 0], [0, 0, 2]], limit=10)


@pytest.mark.parametrize(
    "generators, degree",
    [([], 2), ([[0, 1]], 3), ([[0, 5]], 2)],
)
def test_bad_generators(generators, degree):
    with pytest.raises(InputError):
        from_transformations(generators, degree)


def test_adjoin_identity(corpus):
    S = corpus("left_zero")
    assert S.identity() is None
    M = adjoin_identity(S)
    assert M.size == 3
    assert M.identity() == 2
    assert M.is_monoid()
    assert np.array_equal(M.table[:2, :2], S.table)
    check_associativity(M.table)


def test_greedy_generators(corpus):
    S = corpus("rectangular_band_2x2")
    gens = S.generators
    reached = set(gens)
    while True:
        grown = reached | {S.multiply(a, b) for a in reached for b in reached}
        if grown == reached:
            break
        reached = grown
    assert reached == set(range(S.size))
