"""Reading and writing facet files.

Text form::

    # comment
    n=6
    1 2 3
    1 4 5
    -            <- the empty face, so a file holding only "-" is {∅}

JSON form: ``{"n": 6, "facets": [[1, 2, 3], [1, 4, 5]]}`` (``n`` optional).
"""
from __future__ import annotations

import json
import re
from pathlib import Path

from .complex import Complex, ComplexError, from_facets


class FacetFileError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


_HEADER = re.compile(r"^n\s*=\s*(\S+)\s*$")


def read_sets_text(text: str) -> tuple[int | None, list[list[int]]]:
    """Declared ``n`` (or None) and the vertex lists exactly as written."""
    n = None
    facets: list[list[int]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        header = _HEADER.match(line)
        if header:
            if seen_content:
                raise FacetFileError("n= header must come before the facets", lineno, 1)
            try:
                n = int(header.group(1))
            except ValueError:
                raise FacetFileError(f"bad vertex count {header.group(1)!r}", lineno,
                                     raw.index(header.group(1)) + 1) from None
            if n < 0:
                raise FacetFileError("vertex count must be nonnegative", lineno, 1)
            seen_content = True
            continue
        seen_content = True
        if line == "-":
            facets.append([])
            continue
        face = []
        for tok in re.finditer(r"\S+", raw):
            col = tok.start() + 1
            try:
                v = int(tok.group())
            except ValueError:
                raise FacetFileError(f"expected a vertex label, got {tok.group()!r}", lineno, col) from None
            if v <= 0:
                raise FacetFileError(f"vertex label {v} must be positive", lineno, col)
            if n is not None and v > n:
                raise FacetFileError(f"vertex label {v} exceeds n={n}", lineno, col)
            face.append(v)
        facets.append(face)
    if not facets:
        raise FacetFileError("no facets given (use '-' for the empty face)")
    return n, facets


def read_sets_json(text: str) -> tuple[int | None, list[list[int]]]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FacetFileError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(obj, dict) or "facets" not in obj:
        raise FacetFileError("JSON complex must be an object with a 'facets' array")
    facets = obj["facets"]
    n = obj.get("n")
    if n is not None and (isinstance(n, bool) or not isinstance(n, int)):
        raise FacetFileError("'n' must be an integer")
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise FacetFileError("'facets' must be an array of integer arrays")
    return n, facets


def read_sets(text: str) -> tuple[int | None, list[list[int]]]:
    if text.lstrip().startswith("{"):
        return read_sets_json(text)
    return read_sets_text(text)


def parse(text: str, *, compact: bool = False) -> Complex:
    n, facets = read_sets(text)
    try:
        return from_facets(facets, n, compact=compact)
    except ComplexError as exc:
        raise FacetFileError(str(exc)) from None


def read_file(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise FacetFileError(f"not UTF-8: {exc.reason}") from None


def load(path: str | Path, *, compact: bool = False) -> Complex:
    return parse(read_file(path), compact=compact)


def format_text(cx: Complex) -> str:
    lines = [f"n={cx.n}"]
    for f in cx.facet_sets():
        lines.append(" ".join(map(str, f)) if f else "-")
    return "\n".join(lines) + "\n"


def to_json(cx: Complex) -> dict:
    return {"n": cx.n, "facets": [list(f) for f in cx.facet_sets()]}
