import logging

import numpy as np
import pytest

from semirep.config.run_config import RunConfig
from semirep.core.fields import parse_field
from semirep.core.modules import SimplicityVerdict, exhaustive_feasible, hom_dimension, is_simple
from semirep.pipeline.classifier import RepresentationClassifier

from .expected import EXPECTED_COUNTS, FIELD_SPECS, PRIME_FIELD_SPECS, expected_count


def _classifier(corpus, name, field_spec, **overrides):
    config = RunConfig(field=field_spec).with_overrides(**overrides)
    return RepresentationClassifier(corpus(name), config=config)


@pytest.mark.parametrize("field_spec", FIELD_SPECS)
@pytest.mark.parametrize("name", sorted(EXPECTED_COUNTS))
def test_counting(corpus, name, field_spec):
    classifier = _classifier(corpus, name, field_spec)
    reports = classifier.all_irreducibles()
    assert len(reports) == expected_count(name, field_spec)
    assert len(reports) == sum(classifier.count_by_jclass().values())
    for r in reports:
        assert r.iso_check
        assert r.induced_dim - r.radical_dim == r.simple_dim == r.minimal_dim


@pytest.mark.parametrize("field_spec", PRIME_FIELD_SPECS)
@pytest.mark.parametrize("name", sorted(EXPECTED_COUNTS))
def test_chop_oracle_agrees(corpus, name, field_spec):
    classifier = _classifier(corpus, name, field_spec)
    factors = classifier.chop_oracle()
    assert sum(f.dim * f.multiplicity for f in factors) == classifier.semigroup.size
    assert sum(1 for f in factors if not f.zero_action) == expected_count(name, field_spec)


def test_t2_over_rationals(corpus):
    classifier = _classifier(corpus, "full_transformation2", "Q")
    assert classifier.count_by_jclass() == {0: 2, 1: 1}
    reports = classifier.all_irreducibles()
    assert [r.jclass_id for r in reports] == [0, 0, 1]
    assert [r.simple_dim for r in reports] == [1, 1, 1]


def test_t2_in_characteristic_two(corpus):
    classifier = _classifier(corpus, "full_transformation2", "Fp:2")
    assert classifier.count_by_jclass() == {0: 1, 1: 1}


def test_cyclic3_over_rationals(corpus):
    reports = _classifier(corpus, "cyclic3", "Q").all_irreducibles()
    assert [r.simple_dim for r in reports] == [1, 2]
    assert reports[0].simplicity.certified
    # End(M) is Q(ω), so no certificate applies to the plane
    assert reports[1].simplicity.verdict is SimplicityVerdict.PROBABLY_SIMPLE
    assert hom_dimension(reports[1].simple, reports[1].simple) == 2


def test_t3_dimensions_over_rationals(corpus):
    classifier = _classifier(corpus, "full_transformation3", "Q")
    dims = sorted(r.simple_dim for r in classifier.all_irreducibles())
    assert sum(dims) == 10
    assert dims.count(1) == 3


@pytest.mark.parametrize("field_spec", ["Q", "Fp:2", "Fp:3"])
@pytest.mark.parametrize(
    "name", ["full_transformation2", "full_transformation3", "rectangular_band_2x3", "free_band_2"]
)
def test_transversal_independence(corpus, name, field_spec):
    classifier = _classifier(corpus, name, field_spec)
    for j in classifier.green.regular_classes:
        result = classifier.transversal_independence_check(j)
        assert result.passed, result.detail


@pytest.mark.parametrize("field_spec", PRIME_FIELD_SPECS)
@pytest.mark.parametrize("name", sorted(EXPECTED_COUNTS))
def test_oracle_round_trip(corpus, name, field_spec):
    classifier = _classifier(corpus, name, field_spec)
    reports = classifier.all_irreducibles()
    matches = classifier.match_oracle(classifier.chop_oracle(), reports)
    matched = [m.matched for m in matches if not m.factor.zero_action]
    assert None not in matched
    assert sorted(matched) == list(range(len(reports)))


def test_same_seed_same_modules(corpus):
    first = _classifier(corpus, "full_transformation3", "Fp:3", seed=5).all_irreducibles()
    second = _classifier(corpus, "full_transformation3", "Fp:3", seed=5).all_irreducibles()
    assert len(first) == len(second)
    for a, b in zip(first, second):
        assert a.jclass_id == b.jclass_id
        assert all(a.simple.actions[s] == b.simple.actions[s] for s in a.simple.elements)


def test_worker_count_does_not_change_results(corpus):
    serial = _classifier(corpus, "symmetric3", "Q", max_workers=1).all_irreducibles()
    pooled = _classifier(corpus, "symmetric3", "Q", max_workers=8).all_irreducibles()
    assert [r.simple_dim for r in serial] == [r.simple_dim for r in pooled]
    for a, b in zip(serial, pooled):
        assert hom_dimension(a.group_module, b.group_module) > 0


def test_field_argument_wins(corpus):
    classifier = RepresentationClassifier(
        corpus("cyclic2"), field=parse_field("Fp:2"), config=RunConfig(field="Q")
    )
    assert len(classifier.all_irreducibles()) == 1


@pytest.mark.parametrize("field_spec", PRIME_FIELD_SPECS)
@pytest.mark.parametrize("name", sorted(EXPECTED_COUNTS))
def test_simples_pass_exhaustive_and_sampled_checks(corpus, name, field_spec):
    classifier = _classifier(corpus, name, field_spec)
    for r in classifier.all_irreducibles():
        module = r.simple
        if not exhaustive_feasible(module.field, module.dim, classifier.config.exhaustive_cap):
            continue
        assert is_simple(module, mode="exhaustive").certified
        assert is_simple(module, mode="sampled", rng=np.random.default_rng(0)).is_simple


def test_sample_count_comes_from_config(corpus):
    classifier = _classifier(corpus, "cyclic3", "Q", sample_vectors=5)
    assert classifier.chopper.sample_vectors == 5
    plane = classifier.all_irreducibles()[1]
    assert plane.simplicity.method == "sampled"
    assert plane.simplicity.samples == 5
    oracle_plane = next(f for f in classifier.chop_oracle() if f.dim == 2)
    assert oracle_plane.simplicity.samples == 5


def test_sample_count_from_environment(corpus):
    config = RunConfig.from_env({"SEMIREP_SAMPLE_VECTORS": "3"})
    classifier = RepresentationClassifier(corpus("cyclic3"), config=config)
    assert classifier.all_irreducibles()[1].simplicity.samples == 3


def test_uncertified_simple_is_logged(corpus, caplog):
    with caplog.at_level(logging.WARNING):
        _classifier(corpus, "cyclic3", "Q", sample_vectors=4).all_irreducibles()
    assert "rests on 4 sampled vectors" in caplog.text
    assert "only probably simple" in caplog.text
