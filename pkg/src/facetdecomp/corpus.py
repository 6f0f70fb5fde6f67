"""Complexes shipped with the package, each with expected verdicts."""
from __future__ import annotations

import json
from importlib import resources

from .complex import Complex
from .fileformat import parse


def _data():
    return resources.files("facetdecomp") / "data"


def expected() -> dict[str, dict]:
    return json.loads((_data() / "corpus.json").read_text(encoding="utf-8"))


def names() -> list[str]:
    return sorted(expected())


def load(name: str) -> Complex:
    return parse((_data() / f"{name}.txt").read_text(encoding="utf-8"))


def path(name: str):
    return _data() / f"{name}.txt"
