"""
Command line entry point.

    semirep analyze  <file> [--dot]
    semirep irreps   <file> --field F
    semirep schutz   <file> --jclass k --side right|left
    semirep chop     <file> --field F
    semirep verify   <file> --field F [--seed s]

<file> is a JSON semigroup document, or the name of a bundled corpus
entry. Reports go to stdout as JSON; logs and the summary go to stderr.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import BaseModel

from semirep.components.construct import apex_of
from semirep.components.schutzenberger import schutzenberger
from semirep.config.run_config import RunConfig
from semirep.core.errors import (
    ChopFailure,
    InputError,
    InternalInconsistency,
    NoApex,
    NotRegular,
    SemirepError,
    VerificationFailure,
)
from semirep.core.fields import parse_field
from semirep.core.green import jclass_data, jorder_dot
from semirep.core.semigroup import Semigroup
from semirep.corpus import corpus_names, corpus_text
from semirep.pipeline.classifier import RepresentationClassifier
from semirep.pipeline.verification import InvariantSuite
from semirep.schemas.document import load_semigroup
from semirep.schemas.report import (
    ChopReport,
    CheckEntry,
    GreenReport,
    IrrepsReport,
    MonomialReport,
    VerifyReport,
)
from semirep.utils.logger import RunLogger

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semirep",
        description="Green's relations and irreducible representations of finite semigroups",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("source", help="semigroup JSON file or bundled corpus name")
    common.add_argument("--field", default=None, help="Q or Fp:<prime>")
    common.add_argument("--seed", type=int, default=None, help="random seed (default 0)")
    common.add_argument("--workers", type=int, default=None, help="thread pool size")
    common.add_argument("--log-level", default=None, help="stderr log level")

    sub = parser.add_subparsers(dest="command", required=True)
    analyze = sub.add_parser("analyze", parents=[common], help="Green's relations report")
    analyze.add_argument("--dot", action="store_true", help="include DOT text for the J-order")
    sub.add_parser("irreps", parents=[common], help="all irreducible representations")
    schutz = sub.add_parser("schutz", parents=[common], help="Schützenberger representation")
    schutz.add_argument("--jclass", type=int, required=True)
    schutz.add_argument("--side", choices=("right", "left"), default="right")
    sub.add_parser("chop", parents=[common], help="composition factors of the regular module")
    sub.add_parser("verify", parents=[common], help="run the invariant suite")
    return parser


def read_source(source: str) -> str:
    path = Path(source)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    if source in corpus_names():
        return corpus_text(source)
    raise InputError(f"{source!r} is neither a file nor a corpus entry")


def emit(report: BaseModel):
    sys.stdout.write(report.model_dump_json(indent=2) + "\n")


def summary(message: str):
    sys.stderr.write(message + "\n")


class CommandRunner:
    """Executes one parsed command."""

    def __init__(self, args: argparse.Namespace, config: RunConfig):
        self.args = args
        self.config = config
        self.logger = RunLogger("semirep", config.logging_level)
        self.logger.log_step("load", args.source)
        self.semigroup: Semigroup = load_semigroup(read_source(args.source), config.closure_limit)
        self.field = parse_field(config.field)
        self.logger.log_step(args.command, f"{self.semigroup.size} elements over {self.field}")
        self.classifier = RepresentationClassifier(self.semigroup, self.field, config, self.logger)

    def analyze(self) -> int:
        green = self.classifier.green
        dot = jorder_dot(green) if self.args.dot else None
        emit(GreenReport.build(self.semigroup, green, self.classifier.jclass_data, dot))
        summary(
            f"{self.semigroup.size} elements, {len(green.j_classes)} J-classes, "
            f"{len(green.regular_classes)} regular"
        )
        return EXIT_OK

    def irreps(self) -> int:
        reports = self.classifier.all_irreducibles()
        emit(IrrepsReport.build(self.field, reports, self.classifier.count_by_jclass()))
        summary(f"{len(reports)} irreducible representations over {self.field}")
        return EXIT_OK

    def schutz(self) -> int:
        green = self.classifier.green
        j = self.args.jclass
        if not 0 <= j < len(green.j_classes):
            raise InputError(f"J-class {j} out of range [0, {len(green.j_classes)})")
        if not green.regular[j]:
            raise NotRegular(j)
        jd = jclass_data(self.semigroup, green, j)
        rep = schutzenberger(self.semigroup, jd, self.args.side)
        emit(MonomialReport.build(rep, jd))
        summary(f"{rep.side} Schützenberger representation of J{j}, size {rep.size}")
        return EXIT_OK

    def chop(self) -> int:
        factors = self.classifier.chop_oracle()
        apexes = [None if f.zero_action else apex_of(f.module, self.classifier.green) for f in factors]
        report = ChopReport.build(self.field, self.semigroup.size, factors, apexes)
        emit(report)
        summary(f"{report.distinct} distinct nonzero composition factors over {self.field}")
        return EXIT_OK

    def verify(self) -> int:
        suite = InvariantSuite(self.classifier)
        results = suite.run()
        emit(
            VerifyReport(
                field=self.field.name,
                seed=self.config.seed,
                passed=suite.passed,
                checks=[CheckEntry(name=r.name, passed=r.passed, detail=r.detail) for r in results],
            )
        )
        for r in results:
            summary(f"{'PASS' if r.passed else 'FAIL'} {r.name}" + (f": {r.detail}" if r.detail else ""))
        if suite.internal_failure:
            return EXIT_INTERNAL
        return EXIT_OK if suite.passed else EXIT_VERIFICATION


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT

    try:
        config = RunConfig.from_env().with_overrides(
            field=args.field, seed=args.seed, max_workers=args.workers, log_level=args.log_level
        )
        runner = CommandRunner(args, config)
        return getattr(runner, args.command)()
    except InternalInconsistency as e:
        summary(f"internal inconsistency: {e}")
        return EXIT_INTERNAL
    except InputError as e:
        summary(f"input error: {e}")
        return EXIT_INPUT
    except (VerificationFailure, NoApex, ChopFailure) as e:
        summary(f"verification failure: {e}")
        return EXIT_VERIFICATION
    except SemirepError as e:
        summary(f"internal inconsistency: {e}")
        return EXIT_INTERNAL
    except OSError as e:
        summary(f"input error: {e}")
        return EXIT_INPUT


def main(argv: Optional[List[str]] = None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
