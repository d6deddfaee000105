"""Bundled semigroup documents, addressable by name."""
from importlib import resources
from typing import List

from semirep.core.semigroup import Semigroup
from semirep.schemas.document import load_semigroup

_DATA = resources.files(__name__) / "data"


def corpus_names() -> List[str]:
    return sorted(p.name[: -len(".json")] for p in _DATA.iterdir() if p.name.endswith(".json"))


def corpus_text(name: str) -> str:
    return (_DATA / f"{name}.json").read_text(encoding="utf-8")


def load_corpus(name: str) -> Semigroup:
    if name not in corpus_names():
        raise KeyError(f"no corpus entry named {name!r}")
    return load_semigroup(corpus_text(name))


__all__ = ["corpus_names", "corpus_text", "load_corpus"]
