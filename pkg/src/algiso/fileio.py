"""JSON algebra files.

::

    {
      "dim": 2,
      "field": {"kind": "prime", "p": 5},
      "constants": [
        ["1", "0", "0", "0"],
        ["0", "0", "0", "1"]
      ]
    }

Row ``i`` of ``constants`` holds ``A^i_{jk}`` at column ``(j-1)*dim + k``.
Scalars are strings (``"n"`` or ``"n/d"`` over the rationals, residues over
GF(p)) so no value ever passes through a float.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .field import field_from_json
from .linalg import Mat
from .msc import MSC


def parse_algebra(text: str) -> MSC:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ParseError("algebra file must be a JSON object")
    missing = {"dim", "field", "constants"} - obj.keys()
    if missing:
        raise ParseError(f"missing keys: {sorted(missing)}")
    m = obj["dim"]
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ParseError(f"dim must be a positive integer, got {m!r}")
    field = field_from_json(obj["field"])
    rows = obj["constants"]
    if not isinstance(rows, list) or len(rows) != m:
        raise ParseError(f"constants must have {m} rows")
    parsed = []
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != m * m:
            raise ParseError(f"row {i} must have {m * m} entries")
        vals = []
        for x in row:
            if not isinstance(x, str):
                raise ParseError(f"scalar {x!r} in row {i} must be a string")
            vals.append(field.parse(x))
        parsed.append(tuple(vals))
    return MSC(Mat._raw(field, tuple(parsed), m * m))


def format_matrix_rows(M: Mat, indent: str) -> str:
    lines = [indent + json.dumps(r) for r in M.tolist()]
    return ",\n".join(lines)


def dump_algebra(A: MSC) -> str:
    return (
        "{\n"
        f'  "dim": {A.m},\n'
        f'  "field": {json.dumps(A.field.to_json())},\n'
        '  "constants": [\n'
        f"{format_matrix_rows(A.mat, '    ')}\n"
        "  ]\n"
        "}\n"
    )


def load_algebra(path) -> MSC:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def save_algebra(A: MSC, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_algebra(A))
