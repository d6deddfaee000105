import pytest

from semirep.cli import EXIT_OK, run
from semirep.config.run_config import RunConfig
from semirep.pipeline.classifier import RepresentationClassifier
from semirep.pipeline.verification import InvariantSuite

from .expected import BANDS, EXPECTED_COUNTS, FIELD_SPECS


def _suite(corpus, name, field_spec):
    classifier = RepresentationClassifier(corpus(name), config=RunConfig(field=field_spec))
    return InvariantSuite(classifier)


@pytest.mark.parametrize("field_spec", FIELD_SPECS)
@pytest.mark.parametrize("name", sorted(EXPECTED_COUNTS))
def test_suite_passes_on_corpus(corpus, name, field_spec):
    suite = _suite(corpus, name, field_spec)
    results = suite.run()
    failures = [f"{r.name}: {r.detail}" for r in results if not r.passed]
    assert not failures
    assert suite.passed
    assert not suite.internal_failure


def test_check_names(corpus):
    names = [r.name for r in _suite(corpus, "full_transformation2", "Fp:3").run()]
    assert names[0] == "semigroup.associativity"
    assert "green.j_order_reachability" in names
    assert "counting.chop_oracle" in names
    assert "oracle.round_trip" in names
    assert "bands.closed_form" not in names
    assert len(names) == len(set(names))


def test_oracle_checks_skipped_over_rationals(corpus):
    names = [r.name for r in _suite(corpus, "full_transformation2", "Q").run()]
    assert "counting.chop_oracle" not in names
    assert "construct.induced_vs_coinduced" in names


@pytest.mark.parametrize("name", BANDS + ["nilpotent_monoid"])
def test_closed_form_check_runs_for_da(corpus, name):
    results = {r.name: r for r in _suite(corpus, name, "Fp:5").run()}
    assert results["bands.closed_form"].passed


def test_failures_are_recorded(corpus):
    suite = _suite(corpus, "cyclic2", "Q")
    suite._record("demo.broken", lambda: "always fails")
    assert not suite.passed
    assert suite.results[-1].detail == "always fails"
    assert not suite.internal_failure


@pytest.mark.parametrize("name", sorted(EXPECTED_COUNTS))
def test_j_order_reachability(corpus, name):
    suite = _suite(corpus, name, "Fp:2")
    assert suite.check_j_order_reachability() is None


def test_j_order_reachability_detects_missing_edge(corpus):
    suite = _suite(corpus, "full_transformation2", "Fp:2")
    suite.classifier.green.j_order.remove_edge(1, 0)
    assert "J1 <= J0" in suite.check_j_order_reachability()


def test_verify_output_independent_of_workers(capsys):
    outputs = []
    for workers in ("1", "8"):
        argv = ["verify", "full_transformation3", "--field", "Fp:3", "--workers", workers]
        assert run(argv) == EXIT_OK
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
