"""Plain-text matrix files.

Format: a header line ``rows cols``, then ``rows`` lines of ``cols``
space-separated decimals. Lines starting with ``#`` are comments.
"""

from __future__ import annotations

import io
from pathlib import Path

import numpy as np

from .errors import MatrixFormatError


def parse_matrix(text: str) -> np.ndarray:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MatrixFormatError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise MatrixFormatError(f"header must be 'rows cols', got {lines[0]!r}")
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError as exc:
        raise MatrixFormatError(f"bad header {lines[0]!r}") from exc
    if rows < 0 or cols < 0:
        raise MatrixFormatError("negative matrix dimensions")
    body = lines[1:]
    if len(body) != rows:
        raise MatrixFormatError(f"expected {rows} rows, found {len(body)}")
    out = np.zeros((rows, cols))
    for i, ln in enumerate(body):
        fields = ln.split()
        if len(fields) != cols:
            raise MatrixFormatError(f"row {i + 1}: expected {cols} values, found {len(fields)}")
        try:
            out[i] = [float(f) for f in fields]
        except ValueError as exc:
            raise MatrixFormatError(f"row {i + 1}: {exc}") from exc
    if not np.all(np.isfinite(out)):
        raise MatrixFormatError("matrix contains non-finite values")
    return out


def format_matrix(m, comment: str | None = None) -> str:
    a = np.atleast_2d(np.asarray(m, dtype=float))
    buf = io.StringIO()
    if comment:
        for ln in comment.splitlines():
            buf.write(f"# {ln}\n")
    buf.write(f"{a.shape[0]} {a.shape[1]}\n")
    for row in a:
        buf.write(" ".join(format_float(v) for v in row) + "\n")
    return buf.getvalue()


def format_float(v: float) -> str:
    # 0.0 and -0.0 print the same so reports stay byte-stable
    if v == 0.0:
        return "0"
    return repr(float(v))


def read_matrix(path) -> np.ndarray:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc}") from exc
    return parse_matrix(text)


def write_matrix(path, m, comment: str | None = None):
    Path(path).write_text(format_matrix(m, comment))
