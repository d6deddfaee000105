import pytest

from semirep.components.chop import irreducibles, regular_smodule
from semirep.components.construct import (
    apex_of,
    coinduce,
    construct_simple,
    induce,
    minimal_L,
    radical_N,
    restriction,
    sandwich_block,
    simple_from_coinduced,
    simple_from_induced,
    transport_group_module,
)
from semirep.components.schutzenberger import left_schutzenberger, right_schutzenberger
from semirep.core.errors import InputError, NoApex, ZeroAction
from semirep.core.fields import parse_field
from semirep.core.green import green_structure, idempotents_isomorphic, jclass_data
from semirep.core.matrix import Matrix
from semirep.core.modules import SModule, check_multiplicativity, hom_dimension


class Setup:
    def __init__(self, semigroup, field, j, idempotent=None):
        self.S = semigroup
        self.field = field
        self.green = green_structure(semigroup)
        self.jd = jclass_data(semigroup, self.green, j, idempotent)
        self.rho = right_schutzenberger(semigroup, self.jd)
        self.lam = left_schutzenberger(semigroup, self.jd)
        self.simples = irreducibles(self.jd.group, field)


class TestLeftZero:
    @pytest.fixture(scope="class")
    def setup(self, corpus, Q):
        return Setup(corpus("left_zero"), Q, 0)

    def test_sandwich_block(self, setup):
        V = setup.simples[0]
        assert sandwich_block(V, setup.jd) == Matrix.from_rows(setup.field, [[1, 1]])

    def test_induced_side(self, setup):
        V = setup.simples[0]
        induced = induce(setup.S, V, setup.jd, setup.rho)
        assert induced.dim == 1
        assert radical_N(induced, V, setup.jd).rows == 0

    def test_coinduced_side(self, setup):
        V = setup.simples[0]
        coinduced = coinduce(setup.S, V, setup.jd, setup.lam)
        assert coinduced.dim == 2
        assert check_multiplicativity(coinduced) is None
        minimal = minimal_L(coinduced, V, setup.jd)
        assert minimal == Matrix.from_rows(setup.field, [[1, 1]])

    def test_simple(self, setup):
        report = construct_simple(
            setup.S, setup.simples[0], setup.jd, setup.rho, setup.lam, setup.green
        )
        assert report.simple_dim == 1
        assert report.iso_check
        assert report.simple.annihilator() == ()


class TestConstantsClass:
    """T_2 at the class of constant maps: Ind is the permutation module on {c0, c1}."""

    @pytest.fixture(scope="class")
    def setup(self, T2, Q):
        return Setup(T2, Q, 1)

    def test_radical(self, setup):
        V = setup.simples[0]
        induced = induce(setup.S, V, setup.jd, setup.rho)
        assert induced.dim == 2
        N = radical_N(induced, V, setup.jd)
        assert N == Matrix.from_rows(setup.field, [[1, -1]])

    def test_simple_from_induced(self, setup):
        simple, induced, radical, verdict = simple_from_induced(
            setup.S, setup.simples[0], setup.jd, setup.rho, setup.green
        )
        assert simple.dim == induced.dim - radical.rows == 1
        assert verdict.certified
        assert apex_of(simple, setup.green) == 1
        # every element fixes the quotient line
        assert all(a == Matrix.identity(setup.field, 1) for a in simple.actions.values())

    def test_simple_from_coinduced(self, setup):
        simple, coinduced, minimal = simple_from_coinduced(
            setup.S, setup.simples[0], setup.jd, setup.lam, setup.green
        )
        assert coinduced.dim == 1
        assert minimal.rows == simple.dim == 1

    def test_restriction(self, setup):
        report = construct_simple(
            setup.S, setup.simples[0], setup.jd, setup.rho, setup.lam, setup.green
        )
        restricted = restriction(report.simple, setup.jd.group)
        assert restricted.dim == 1
        assert hom_dimension(restricted, setup.simples[0]) == 1

    def test_wrong_group(self, setup, T2, Q):
        other = Setup(T2, Q, 0)
        with pytest.raises(InputError):
            induce(T2, other.simples[0], setup.jd, setup.rho)


class TestGroupClass:
    @pytest.fixture(scope="class")
    def setup(self, T2, Q):
        return Setup(T2, Q, 0)

    def test_two_simples_killing_constants(self, setup):
        reports = [
            construct_simple(setup.S, V, setup.jd, setup.rho, setup.lam, setup.green)
            for V in setup.simples
        ]
        assert [r.simple_dim for r in reports] == [1, 1]
        for r in reports:
            assert r.simple.annihilator() == (1, 3)
            assert r.radical_dim == 0
        assert hom_dimension(reports[0].simple, reports[1].simple) == 0


@pytest.mark.parametrize("field_spec", ["Q", "Fp:2", "Fp:3"])
def test_t3_rank_two_dimensions(corpus, field_spec):
    S = corpus("full_transformation3")
    green = green_structure(S)
    j = next(k for k, cls in enumerate(green.j_classes) if len(cls) == 18)
    setup = Setup(S, parse_field(field_spec), j)
    for V in setup.simples:
        report = construct_simple(S, V, setup.jd, setup.rho, setup.lam, green)
        B = sandwich_block(V, setup.jd)
        assert report.induced_dim - report.radical_dim == B.rank() == report.minimal_dim
        assert report.iso_check


def test_transport_between_idempotents(T2, Q):
    at_e = Setup(T2, Q, 1)
    at_f = Setup(T2, Q, 1, idempotent=3)
    x, x_prime = idempotents_isomorphic(T2, 1, 3)
    V_f = transport_group_module(at_e.simples[0], at_f.jd.group, x, x_prime, T2)
    assert check_multiplicativity(V_f) is None
    first, _, _, _ = simple_from_induced(T2, at_e.simples[0], at_e.jd, at_e.rho, at_e.green)
    second, _, _, _ = simple_from_induced(T2, V_f, at_f.jd, at_f.rho, at_f.green)
    assert hom_dimension(first, second) == 1


class TestApex:
    def test_zero_module(self, T2, Q):
        zero = {s: Matrix.zeros(Q, 1, 1) for s in range(T2.size)}
        with pytest.raises(ZeroAction):
            apex_of(SModule(field=Q, dim=1, actions=zero, semigroup=T2), green_structure(T2))

    def test_no_apex(self, corpus, Q):
        # x acts nilpotently but nonzero, so Ann M holds only the zero element
        S = corpus("nilpotent_monoid")
        actions = {
            0: Matrix.identity(Q, 2),
            1: Matrix.from_rows(Q, [[0, 1], [0, 0]]),
            2: Matrix.zeros(Q, 2, 2),
        }
        module = SModule(field=Q, dim=2, actions=actions, semigroup=S)
        assert check_multiplicativity(module) is None
        with pytest.raises(NoApex):
            apex_of(module, green_structure(S))

    def test_regular_module_is_faithful(self, T2, Q):
        # Ann KS is empty, which is I_J only for the minimal class
        assert apex_of(regular_smodule(T2, Q), green_structure(T2)) == 1
