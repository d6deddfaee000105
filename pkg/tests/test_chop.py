import numpy as np
import pytest

from semirep.components.chop import ModuleChopper, irreducibles, regular_module, regular_smodule
from semirep.core.fields import PrimeField, parse_field
from semirep.core.green import maximal_subgroup
from semirep.core.modules import SimplicityVerdict, check_multiplicativity, is_simple


def _group(corpus, name):
    S = corpus(name)
    return maximal_subgroup(S, S.identity())


@pytest.mark.parametrize(
    "name, field, dims",
    [
        ("cyclic2", "Q", [1, 1]),
        ("cyclic2", "Fp:2", [1]),
        ("cyclic2", "Fp:3", [1, 1]),
        ("cyclic3", "Q", [1, 2]),
        ("cyclic3", "Fp:2", [1, 2]),
        ("cyclic3", "Fp:3", [1]),
        ("cyclic3", "Fp:7", [1, 1, 1]),
        ("symmetric3", "Q", [1, 1, 2]),
        ("symmetric3", "Fp:2", [1, 2]),
        ("symmetric3", "Fp:3", [1, 1]),
        ("symmetric3", "Fp:5", [1, 1, 2]),
    ],
)
def test_group_irreducibles(corpus, name, field, dims):
    simples = irreducibles(_group(corpus, name), parse_field(field))
    assert sorted(m.dim for m in simples) == dims
    for m in simples:
        assert check_multiplicativity(m) is None


def test_multiplicities_in_characteristic_two(corpus, F2):
    factors = ModuleChopper().chop(regular_module(_group(corpus, "cyclic2"), F2))
    assert len(factors) == 1
    assert factors[0].multiplicity == 2
    assert factors[0].simplicity.certified


def test_regular_module_accounting(corpus, Q):
    factors = ModuleChopper().chop(regular_module(_group(corpus, "symmetric3"), Q))
    # each simple appears with multiplicity equal to its dimension
    assert sorted((f.dim, f.multiplicity) for f in factors) == [(1, 1), (1, 1), (2, 2)]


def test_factors_are_simple(corpus):
    F5 = PrimeField(5)
    for factor in ModuleChopper().chop(regular_module(_group(corpus, "symmetric3"), F5)):
        assert is_simple(factor.module, mode="exhaustive").certified


def test_same_seed_same_factors(corpus, F3):
    group = _group(corpus, "symmetric3")
    chopper = ModuleChopper()
    first = chopper.chop(regular_module(group, F3), np.random.SeedSequence(11))
    second = chopper.chop(regular_module(group, F3), np.random.SeedSequence(11))
    assert [f.dim for f in first] == [f.dim for f in second]
    for a, b in zip(first, second):
        assert all(a.module.actions[g] == b.module.actions[g] for g in group.elements)


def test_regular_smodule_nilpotent(corpus, F2):
    # KS for {1, x, 0}: both degree-one simples, the one killing x twice
    factors = ModuleChopper().chop(regular_smodule(corpus("nilpotent_monoid"), F2))
    assert sum(f.dim * f.multiplicity for f in factors) == 3
    assert [f.zero_action for f in factors] == [False, False]


def test_left_zero_regular_module(corpus, F3):
    # KS for S = {a, b} with xy = x: each basis vector is fixed, one simple twice
    factors = ModuleChopper().chop(regular_smodule(corpus("left_zero"), F3))
    assert [(f.dim, f.multiplicity) for f in factors] == [(1, 2)]


def test_right_zero_has_zero_factor(corpus, F3):
    # KS for xy = y: a - b spans a submodule killed by everything
    factors = ModuleChopper().chop(regular_smodule(corpus("right_zero"), F3))
    assert sorted((f.dim, f.zero_action) for f in factors) == [(1, False), (1, True)]


class TestSplittingFieldFallback:
    """C_3 over Q: the 2-dimensional simple has End(M) = Q(ω) and no certificate."""

    def test_rational_leaf_is_probably_simple(self, corpus, Q):
        chopper = ModuleChopper(sample_vectors=5)
        factors = chopper.chop(regular_module(_group(corpus, "cyclic3"), Q))
        assert sorted((f.dim, f.multiplicity) for f in factors) == [(1, 1), (2, 1)]
        plane = next(f for f in factors if f.dim == 2)
        assert plane.simplicity.verdict is SimplicityVerdict.PROBABLY_SIMPLE
        assert plane.simplicity.method == "sampled"
        assert plane.simplicity.samples == 5

    def test_small_field_leaf_is_certified(self, corpus, F2):
        factors = ModuleChopper().chop(regular_module(_group(corpus, "cyclic3"), F2))
        plane = next(f for f in factors if f.dim == 2)
        assert plane.simplicity.certified
        assert plane.simplicity.method == "exhaustive"
