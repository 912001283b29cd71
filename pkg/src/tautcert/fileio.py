"""Line-oriented presentation and representation files.

Presentation file::

    # comment
    genus: 3
    generators: x y z
    rplus: [[x,y][x^-1,y],z[y^-1,x][y,x]z^-1] | [x,y][y^-1,x^-1] | z
    sutures: yx | xaby
    label: genus3-derived2

Representation file::

    dim: 2
    field: Q
    x: [[1,1],[0,1]]
    y: [[0,1],[-1,0]]
    z: [[1,0],[0,1]]

Multi-word fields are separated by ``|`` because commas belong to brackets.
"""

from __future__ import annotations

import re
from pathlib import Path

from .algebra import Field, Matrix, ScalarParseError, field_from_tag
from .certifier.presentation import PresentationError, SuturedPresentation
from .representation import Representation, RepresentationError
from .words import Alphabet, WordError, parse_word


class InputFileError(ValueError):
    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        where = ""
        if path:
            where = f"{path}:{line}: " if line else f"{path}: "
        super().__init__(where + message)
        self.path = path
        self.line = line


def _fields(text: str, path: str | None) -> dict[str, tuple[int, str]]:
    out: dict[str, tuple[int, str]] = {}
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise InputFileError(f"expected 'key: value', got {raw.strip()!r}", path, n)
        key, value = line.split(":", 1)
        key = key.strip()
        if key in out:
            raise InputFileError(f"duplicate field {key!r}", path, n)
        out[key] = (n, value.strip())
    return out


def _split_bar(value: str) -> list[str]:
    return [p.strip() for p in value.split("|")] if value.strip() else []


def parse_presentation(text: str, path: str | None = None) -> SuturedPresentation:
    f = _fields(text, path)
    for key in ("generators", "rplus"):
        if key not in f:
            raise InputFileError(f"missing field {key!r}", path)
    unknown = set(f) - {"genus", "generators", "rplus", "sutures", "label"}
    if unknown:
        k = sorted(unknown)[0]
        raise InputFileError(f"unknown field {k!r}", path, f[k][0])
    names = tuple(f["generators"][1].split())
    try:
        alphabet = Alphabet(names)
    except ValueError as e:
        raise InputFileError(str(e), path, f["generators"][0]) from None
    if "genus" in f:
        line, value = f["genus"]
        try:
            g = int(value)
        except ValueError:
            raise InputFileError(f"genus must be an integer, got {value!r}", path, line) from None
        if g != alphabet.rank:
            raise InputFileError(f"genus {g} but {alphabet.rank} generators", path, line)
    line, value = f["rplus"]
    words = []
    for part in _split_bar(value):
        try:
            words.append(parse_word(part, alphabet))
        except WordError as e:
            raise InputFileError(f"in surface word {part!r}: {e}", path, line) from None
    sutures = tuple(_split_bar(f["sutures"][1])) if "sutures" in f else ()
    label = f["label"][1] if "label" in f else (Path(path).stem if path else "")
    try:
        return SuturedPresentation(alphabet, tuple(words), sutures, label, f"file {path}" if path else "")
    except PresentationError as e:
        raise InputFileError(str(e), path, line) from None


def format_presentation(pres: SuturedPresentation) -> str:
    lines = [
        f"genus: {pres.genus}",
        f"generators: {' '.join(pres.alphabet.names)}",
        f"rplus: {' | '.join(pres.word_strings())}",
    ]
    if pres.suture_metadata:
        lines.append(f"sutures: {' | '.join(pres.suture_metadata)}")
    if pres.label:
        lines.append(f"label: {pres.label}")
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, fld: Field) -> Matrix:
    """``[[a,b],[c,d]]`` with entries in the field's text form."""
    t = re.sub(r"\s+", " ", text.strip())
    m = re.fullmatch(r"\[\s*\[(.*)\]\s*\]", t)
    if not m:
        raise ScalarParseError(f"matrix must look like [[a,b],[c,d]], got {text!r}")
    rows = re.split(r"\]\s*,\s*\[", m.group(1))
    out = []
    for r in rows:
        if "[" in r or "]" in r:
            raise ScalarParseError(f"malformed matrix row {r!r}")
        out.append([fld.parse(e.strip()) for e in r.split(",")])
    if len({len(r) for r in out}) != 1:
        raise ScalarParseError("matrix rows have different lengths")
    return Matrix(out)


def parse_representation(text: str, alphabet: Alphabet, path: str | None = None) -> Representation:
    f = _fields(text, path)
    for key in ("dim", "field"):
        if key not in f:
            raise InputFileError(f"missing field {key!r}", path)
    try:
        dim = int(f["dim"][1])
    except ValueError:
        raise InputFileError("dim must be an integer", path, f["dim"][0]) from None
    if dim < 1:
        raise InputFileError("dim must be positive", path, f["dim"][0])
    try:
        fld = field_from_tag(f["field"][1])
    except (ScalarParseError, ValueError) as e:
        raise InputFileError(str(e), path, f["field"][0]) from None
    mats = {}
    for key, (line, value) in f.items():
        if key in ("dim", "field"):
            continue
        try:
            m = parse_matrix(value, fld)
        except (ScalarParseError, ValueError, ZeroDivisionError) as e:
            raise InputFileError(f"matrix for {key}: {e}", path, line) from None
        if m.shape != (dim, dim):
            raise InputFileError(f"matrix for {key} has shape {m.shape}, expected {(dim, dim)}", path, line)
        mats[key] = m
    try:
        return Representation.from_mapping(alphabet, fld, mats, f"file {path}" if path else "")
    except RepresentationError as e:
        raise InputFileError(str(e), path) from None


def format_representation(rho: Representation) -> str:
    lines = [f"dim: {rho.dim}", f"field: {rho.field.tag}"]
    for name, m in zip(rho.alphabet.names, rho.matrices):
        lines.append(f"{name}: {m.to_text(rho.field.format)}")
    return "\n".join(lines) + "\n"


def read_presentation(path) -> SuturedPresentation:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputFileError(f"cannot read: {e.strerror}", str(path)) from None
    return parse_presentation(text, str(path))


def read_representation(path, alphabet: Alphabet) -> Representation:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputFileError(f"cannot read: {e.strerror}", str(path)) from None
    return parse_representation(text, alphabet, str(path))


def write_presentation(pres: SuturedPresentation, path) -> None:
    Path(path).write_text(format_presentation(pres), encoding="utf-8")
