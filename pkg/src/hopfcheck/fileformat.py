"""On-disk form of the structure constants.

One structured-text document per algebra, two-space indent, fields in a
fixed order, every scalar rendered minimally relative to the document's
field_order.  Writing is canonical: the same algebra always produces the
same bytes, which is what lets dual-of-dual round trips be compared as
files.
"""

from __future__ import annotations

import json

from .cyclotomic import Cyc
from .errors import FormatError
from .hopf import Elem, Functional, HopfData
from .linalg import Mat, Tensor3

FIELDS = ("name", "dim", "field_order", "mult", "comult",
          "unit", "counit", "antipode", "star")


def hopf_to_text(h: HopfData) -> str:
    n = h.field_order
    d = h.dim

    def s(c: Cyc) -> str:
        return c.text(n)

    doc = {
        "name": h.name,
        "dim": d,
        "field_order": n,
        "mult": [[[s(h.mult.get(i, j, k)) for k in range(d)]
                  for j in range(d)] for i in range(d)],
        "comult": [[[s(h.comult.get(k, i, j)) for j in range(d)]
                    for i in range(d)] for k in range(d)],
        "unit": [s(c) for c in h.unit.coords],
        "counit": [s(c) for c in h.counit.coords],
        "antipode": [[s(h.antipode.get(r, c)) for c in range(d)] for r in range(d)],
    }
    if h.star is not None:
        doc["star"] = [[s(h.star.get(r, c)) for c in range(d)] for r in range(d)]
    return json.dumps(doc, indent=2) + "\n"


def _scalar(raw, order: int, where: str) -> Cyc:
    if not isinstance(raw, str):
        raise FormatError(f"{where}: scalar entries must be strings")
    try:
        return Cyc.parse(raw, order)
    except ValueError as e:
        raise FormatError(f"{where}: {e}") from e


def _vector(raw, d: int, order: int, where: str) -> tuple:
    if not isinstance(raw, list) or len(raw) != d:
        raise FormatError(f"{where}: expected a length-{d} array")
    return tuple(_scalar(x, order, f"{where}[{i}]") for i, x in enumerate(raw))


def _matrix(raw, d: int, order: int, where: str) -> Mat:
    if not isinstance(raw, list) or len(raw) != d:
        raise FormatError(f"{where}: expected a {d}x{d} array")
    entries = []
    for r, row in enumerate(raw):
        entries.extend(_vector(row, d, order, f"{where}[{r}]"))
    return Mat(d, d, entries)


def _tensor(raw, d: int, order: int, where: str) -> Tensor3:
    if not isinstance(raw, list) or len(raw) != d:
        raise FormatError(f"{where}: expected a {d}x{d}x{d} array")
    entries = []
    for a, plane in enumerate(raw):
        if not isinstance(plane, list) or len(plane) != d:
            raise FormatError(f"{where}[{a}]: expected a {d}x{d} array")
        for b, row in enumerate(plane):
            entries.extend(_vector(row, d, order, f"{where}[{a}][{b}]"))
    return Tensor3(d, entries)


def hopf_from_text(text: str) -> HopfData:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"not a structured-text document: {e}") from e
    if not isinstance(doc, dict):
        raise FormatError("top level must be a mapping")
    for field in FIELDS[:-1]:
        if field not in doc:
            raise FormatError(f"missing field {field!r}")
    unknown = set(doc) - set(FIELDS)
    if unknown:
        raise FormatError(f"unknown fields {sorted(unknown)}")
    name = doc["name"]
    if not isinstance(name, str) or not name:
        raise FormatError("name must be a nonempty string")
    d = doc["dim"]
    if not isinstance(d, int) or d < 1:
        raise FormatError("dim must be a positive integer")
    order = doc["field_order"]
    if not isinstance(order, int) or order < 1:
        raise FormatError("field_order must be a positive integer")
    star = None
    if "star" in doc:
        star = _matrix(doc["star"], d, order, "star")
    return HopfData(
        name=name, dim=d, field_order=order,
        mult=_tensor(doc["mult"], d, order, "mult"),
        unit=Elem(_vector(doc["unit"], d, order, "unit")),
        comult=_tensor(doc["comult"], d, order, "comult"),
        counit=Functional(_vector(doc["counit"], d, order, "counit")),
        antipode=_matrix(doc["antipode"], d, order, "antipode"),
        star=star)


def save_hopf(h: HopfData, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(hopf_to_text(h))


def load_hopf(path: str) -> HopfData:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return hopf_from_text(f.read())
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from e


def load_cayley(path: str) -> list:
    """Cayley table file: one row per line, 0-based indices, whitespace split."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            lines = [ln for ln in (line.strip() for line in f) if ln]
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from e
    table = []
    for ln in lines:
        try:
            table.append([int(tok) for tok in ln.split()])
        except ValueError as e:
            raise FormatError(f"{path}: non-integer entry in Cayley table") from e
    if not table:
        raise FormatError(f"{path}: empty Cayley table")
    return table
