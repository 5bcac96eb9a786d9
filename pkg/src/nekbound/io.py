"""Matrix ingestion (Matrix Market, CSV), the built-in example matrices, and
report serialization."""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import Optional, Union

import numpy as np

from .bounds import BoundReport
from .classify import Classification
from .core import as_matrix
from .errors import NotSquare, ParseError, UnknownName, UnsupportedFormat

Text = Union[str, bytes]


class Provenance(enum.Enum):
    BUILTIN_PAPER = "builtin_paper"
    FILE = "file"


@dataclass(frozen=True)
class NamedMatrix:
    name: str
    matrix: np.ndarray
    provenance: Provenance


_BUILTINS = {
    "A1": [[-7, 1, -0.2, 2], [7, 88, 2, -3], [2, 0.5, 13, -2], [0.5, 3, 1, 6]],
    "A2": [[8, 1, -0.2, 3.3], [7, 13, 2, -3], [-1.3, 6.7, 13, -2], [0.5, 3, 1, 6]],
    "A3": [
        [21, -9.1, -4.2, -2.1],
        [-0.7, 9.1, -4.2, -2.1],
        [-0.7, -0.7, 4.9, -2.1],
        [-0.7, -0.7, -0.7, 2.8],
    ],
    "A4": [[5, 1, 0.2, 2], [1, 21, 1, -3], [2, 0.5, 6.4, -2], [0.5, -1, 1, 9]],
    "A5": [[6, -3, -2], [-1, 11, -8], [-7, -3, 10]],
    "A6": [
        [8, -0.5, -0.5, -0.5],
        [-9, 16, -5, -5],
        [-6, -4, 15, -3],
        [-4.9, -0.9, -0.9, 6],
    ],
}

BUILTIN_NAMES = tuple(_BUILTINS)


def builtin(name: str) -> NamedMatrix:
    try:
        rows = _BUILTINS[name]
    except KeyError:
        raise UnknownName(name) from None
    return NamedMatrix(name, as_matrix(rows), Provenance.BUILTIN_PAPER)


def _decode(text: Text) -> str:
    if isinstance(text, bytes):
        try:
            return text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(1, f"not UTF-8 text: {exc}") from None
    return text


def _real(token: str, lineno: int) -> float:
    try:
        v = float(token)
    except ValueError:
        raise ParseError(lineno, f"not a number: {token!r}") from None
    if not math.isfinite(v):
        raise ParseError(lineno, f"non-finite value: {token!r}")
    return v


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, f"{what} is not an integer: {token!r}") from None


# ---------------------------------------------------------------- Matrix Market

_FIELDS = {"real", "complex", "integer"}


def parse_matrix_market(text: Text) -> np.ndarray:
    """Parse ``%%MatrixMarket matrix coordinate|array real|complex|integer general``.

    Coordinate indices are 1-based and missing entries are zero; array data
    is column-major.
    """
    lines = _decode(text).splitlines()
    if not lines:
        raise ParseError(1, "empty input")
    head = lines[0].split()
    if len(head) != 5 or head[0].lower() != "%%matrixmarket":
        raise ParseError(1, "missing '%%MatrixMarket' header")
    obj, layout, field, symmetry = (t.lower() for t in head[1:])
    if obj != "matrix":
        raise UnsupportedFormat(f"object {obj!r} is not supported")
    if layout not in {"coordinate", "array"}:
        raise UnsupportedFormat(f"layout {layout!r} is not supported")
    if field not in _FIELDS:
        raise UnsupportedFormat(f"field {field!r} is not supported")
    if symmetry != "general":
        raise UnsupportedFormat(f"symmetry {symmetry!r} is not supported")

    body = [
        (k, line.split())
        for k, line in enumerate(lines[1:], start=2)
        if line.strip() and not line.lstrip().startswith("%")
    ]
    if not body:
        raise ParseError(len(lines), "missing size line")
    size_line, size = body[0]
    entries = body[1:]
    width = 2 if field == "complex" else 1

    def value(tokens: list[str], lineno: int) -> complex:
        if len(tokens) != width:
            raise ParseError(lineno, f"expected {width} value field(s), got {len(tokens)}")
        if field == "integer":
            return complex(_int(tokens[0], lineno, "value"))
        parts = [_real(t, lineno) for t in tokens]
        return complex(parts[0], parts[1] if width == 2 else 0.0)

    if layout == "coordinate":
        if len(size) != 3:
            raise ParseError(size_line, "coordinate size line needs 'rows cols entries'")
        rows, cols, nnz = (_int(t, size_line, "size") for t in size)
    else:
        if len(size) != 2:
            raise ParseError(size_line, "array size line needs 'rows cols'")
        rows, cols = (_int(t, size_line, "size") for t in size)
        nnz = rows * cols
    if rows < 1 or cols < 1 or nnz < 0:
        raise ParseError(size_line, "sizes must be positive")
    if rows != cols:
        raise NotSquare(f"matrix is {rows}x{cols}")
    if len(entries) != nnz:
        last = entries[-1][0] if entries else size_line
        raise ParseError(last, f"expected {nnz} entries, found {len(entries)}")

    a = np.zeros((rows, cols), dtype=np.complex128)
    if layout == "array":
        for k, (lineno, tokens) in enumerate(entries):
            a[k % rows, k // rows] = value(tokens, lineno)
        return as_matrix(a)

    seen = set()
    for lineno, tokens in entries:
        if len(tokens) < 2:
            raise ParseError(lineno, "coordinate entry needs 'row col value'")
        i = _int(tokens[0], lineno, "row index")
        j = _int(tokens[1], lineno, "column index")
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise ParseError(lineno, f"index ({i}, {j}) outside {rows}x{cols}")
        if (i, j) in seen:
            raise ParseError(lineno, f"duplicate entry ({i}, {j})")
        seen.add((i, j))
        a[i - 1, j - 1] = value(tokens[2:], lineno)
    return as_matrix(a)


def write_matrix_market(a) -> str:
    """Coordinate format, ``real`` when every imaginary part is zero, else ``complex``.

    Values are written with ``repr`` so a re-parse is bit-exact.
    """
    a = as_matrix(a)
    n = a.shape[0]
    is_real = not np.any(a.imag)
    nz = [(i, j) for i in range(n) for j in range(n) if a[i, j] != 0]
    out = [
        f"%%MatrixMarket matrix coordinate {'real' if is_real else 'complex'} general",
        f"{n} {n} {len(nz)}",
    ]
    for i, j in nz:
        v = a[i, j]
        vals = repr(float(v.real)) if is_real else f"{float(v.real)!r} {float(v.imag)!r}"
        out.append(f"{i + 1} {j + 1} {vals}")
    return "\n".join(out) + "\n"


# ------------------------------------------------------------------------ CSV

_NUM = r"[0-9]+(?:\.[0-9]*)?(?:[eE][+-]?[0-9]+)?|\.[0-9]+(?:[eE][+-]?[0-9]+)?"
_REAL_RE = re.compile(rf"[+-]?(?:{_NUM})")
_COMPLEX_RE = re.compile(rf"(?P<re>[+-]?(?:{_NUM}))(?P<sign>[+-])(?P<im>(?:{_NUM})?)i")


def _csv_cell(cell: str, lineno: int) -> complex:
    cell = cell.strip()
    if _REAL_RE.fullmatch(cell):
        return complex(float(cell))
    m = _COMPLEX_RE.fullmatch(cell)
    if m:
        im = float(m["im"]) if m["im"] else 1.0
        return complex(float(m["re"]), -im if m["sign"] == "-" else im)
    raise ParseError(lineno, f"cannot parse cell {cell!r}")


def parse_csv(text: Text) -> np.ndarray:
    """One row per line; cells are reals or ``a+bi`` / ``a-bi`` literals."""
    rows = []
    for lineno, line in enumerate(_decode(text).splitlines(), start=1):
        if not line.strip():
            continue
        rows.append((lineno, [_csv_cell(c, lineno) for c in line.split(",")]))
    if not rows:
        raise ParseError(1, "empty input")
    width = len(rows[0][1])
    for lineno, cells in rows:
        if len(cells) != width:
            raise ParseError(lineno, f"ragged row: {len(cells)} cells, expected {width}")
    if width != len(rows):
        raise NotSquare(f"matrix is {len(rows)}x{width}")
    return as_matrix([cells for _, cells in rows])


def load_matrix(path: Union[str, Path], fmt: str = "auto") -> NamedMatrix:
    """Read a file; ``fmt`` is ``auto`` (by extension), ``mm``/``matrix-market`` or ``csv``."""
    path = Path(path)
    if fmt == "auto":
        suffix = path.suffix.lower()
        if suffix == ".mtx":
            fmt = "mm"
        elif suffix == ".csv":
            fmt = "csv"
        else:
            raise UnsupportedFormat(f"cannot infer format from extension {suffix!r}")
    data = path.read_bytes()
    if fmt in {"mm", "matrix-market"}:
        a = parse_matrix_market(data)
    elif fmt == "csv":
        a = parse_csv(data)
    else:
        raise UnsupportedFormat(f"unknown format {fmt!r}")
    return NamedMatrix(path.name, a, Provenance.FILE)


# -------------------------------------------------------------------- reports

def round4(x: float) -> Decimal:
    """Round half away from zero to 4 decimals, from the shortest repr of ``x``."""
    return Decimal(repr(float(x))).quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP)


def fmt4(x: Optional[float], missing: str = "-") -> str:
    return missing if x is None else str(round4(x))


def _floats(v) -> Optional[list[float]]:
    return None if v is None else [float(x) for x in v]


def report_dict(
    name: str,
    n: int,
    classification: Optional[Classification] = None,
    bounds: Optional[BoundReport] = None,
) -> dict:
    """JSON-ready report; absent values are ``None``."""
    c = classification
    b = bounds or BoundReport()
    out = {
        "name": name,
        "n": n,
        "class": {
            "sdd": None if c is None else c.is_sdd,
            "nekrasov": None if c is None else c.is_nekrasov,
            "h_matrix": None if c is None else c.is_h_matrix,
        },
        "margins": {
            "sdd": None if c is None else _floats(c.sdd_margins),
            "nekrasov": None if c is None else _floats(c.nekrasov_margins),
        },
        "bounds": {"varah": b.varah, "bound2": b.bound2, "bound3": b.bound3, "best": b.best},
        "exact": b.exact,
    }
    if c is not None:
        out["gudkov"] = {
            "permutation": None if c.gudkov_permutation is None else list(c.gudkov_permutation),
            "exhaustive": c.gudkov.exhaustive,
        }
    return out


def _bool(v: bool) -> str:
    return "true" if v else "false"


def classification_text(name: str, c: Classification) -> str:
    lines = [
        f"matrix: {name}",
        f"sdd: {_bool(c.is_sdd)}",
        f"nekrasov: {_bool(c.is_nekrasov)}",
        f"h_matrix: {_bool(c.is_h_matrix)}",
    ]
    if c.gudkov_permutation is not None:
        lines.append(f"gudkov: true (order {' '.join(str(p + 1) for p in c.gudkov_permutation)})")
    else:
        lines.append(f"gudkov: {'false' if c.gudkov.exhaustive else 'unknown (search capped)'}")
    lines.append("sdd margins: " + " ".join(fmt4(x) for x in c.sdd_margins))
    if c.nekrasov_margins is None:
        lines.append("nekrasov margins: - (zero diagonal)")
    else:
        lines.append("nekrasov margins: " + " ".join(fmt4(x) for x in c.nekrasov_margins))
    return "\n".join(lines) + "\n"


def bounds_text(name: str, b: BoundReport, violations=()) -> str:
    lines = [
        f"matrix: {name}",
        f"varah: {fmt4(b.varah, '- (not SDD)')}",
        f"bound2: {fmt4(b.bound2, '- (not Nekrasov)')}",
        f"bound3: {fmt4(b.bound3, '- (not Nekrasov)')}",
        f"best: {fmt4(b.best, '- (no bound applies)')}",
    ]
    if b.exact is not None:
        lines.append(f"exact: {fmt4(b.exact)}")
    for v in violations:
        lines.append(f"SOUNDNESS VIOLATION: {v} < exact")
    return "\n".join(lines) + "\n"


def table_text(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(r[k]) for r in [header, *rows]) for k in range(len(header))]

    def line(cells):
        return "  ".join(c.rjust(w) if k else c.ljust(w) for k, (c, w) in enumerate(zip(cells, widths)))

    rule = "  ".join("-" * w for w in widths)
    return "\n".join([line(header), rule, *(line(r) for r in rows)]) + "\n"
