"""Plain-text matrix files.

First line ``n``; then ``n`` lines of ``n`` whitespace-separated ``re,im``
pairs.  A bare real number is accepted for ``re,0``.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import MatrixFormatError
from .linalg import ComplexMatrix, as_matrix


def parse_matrix(text: str) -> ComplexMatrix:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise MatrixFormatError("empty matrix file")
    try:
        n = int(lines[0])
    except ValueError:
        raise MatrixFormatError(f"first line must be the dimension, got {lines[0]!r}") from None
    if n < 1:
        raise MatrixFormatError(f"dimension must be positive, got {n}")
    rows = lines[1:]
    if len(rows) != n:
        raise MatrixFormatError(f"expected {n} rows, found {len(rows)}")
    m = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(rows):
        cells = row.split()
        if len(cells) != n:
            raise MatrixFormatError(f"row {i + 1}: expected {n} entries, found {len(cells)}")
        for j, cell in enumerate(cells):
            parts = cell.split(",")
            try:
                if len(parts) == 1:
                    m[i, j] = float(parts[0])
                elif len(parts) == 2:
                    m[i, j] = complex(float(parts[0]), float(parts[1]))
                else:
                    raise ValueError
            except ValueError:
                raise MatrixFormatError(f"row {i + 1}, column {j + 1}: bad entry {cell!r}") from None
    return as_matrix(m)


def format_matrix(m) -> str:
    m = np.asarray(m, dtype=np.complex128)
    out = [str(m.shape[0])]
    for row in m:
        out.append(" ".join(f"{float(z.real)!r},{float(z.imag)!r}" for z in row))
    return "\n".join(out) + "\n"


def read_matrix(path) -> ComplexMatrix:
    return parse_matrix(Path(path).read_text())


def write_matrix(path, m) -> None:
    Path(path).write_text(format_matrix(m))
