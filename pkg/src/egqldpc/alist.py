"""alist reader/writer for sparse parity-check matrices."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from egqldpc.binmat import BinMatrix


class AlistError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def dumps_alist(m: BinMatrix) -> str:
    dense = m.to_dense()
    col_w = dense.sum(axis=0).astype(int)
    row_w = dense.sum(axis=1).astype(int)
    max_c = int(col_w.max()) if m.cols else 0
    max_r = int(row_w.max()) if m.rows else 0
    lines = [
        f"{m.cols} {m.rows}",
        f"{max_c} {max_r}",
        " ".join(map(str, col_w)),
        " ".join(map(str, row_w)),
    ]
    for j in range(m.cols):
        idx = (np.flatnonzero(dense[:, j]) + 1).tolist()
        lines.append(" ".join(map(str, idx + [0] * (max_c - len(idx)))))
    for i in range(m.rows):
        idx = (np.flatnonzero(dense[i]) + 1).tolist()
        lines.append(" ".join(map(str, idx + [0] * (max_r - len(idx)))))
    return "\n".join(lines) + "\n"


def write_alist(m: BinMatrix, path: str | Path) -> None:
    Path(path).write_text(dumps_alist(m))


def _ints(lines: list[str], i: int, expect: int | None = None) -> list[int]:
    if i >= len(lines):
        raise AlistError(i + 1, "unexpected end of file")
    try:
        vals = [int(tok) for tok in lines[i].split()]
    except ValueError as exc:
        raise AlistError(i + 1, f"non-integer token ({exc})") from None
    if expect is not None and len(vals) != expect:
        raise AlistError(i + 1, f"expected {expect} values, found {len(vals)}")
    return vals


def loads_alist(text: str) -> BinMatrix:
    lines = text.splitlines()
    cols, rows = _ints(lines, 0, 2)
    max_c, max_r = _ints(lines, 1, 2)
    if cols < 0 or rows < 0:
        raise AlistError(1, "negative dimensions")
    col_w = _ints(lines, 2, cols)
    row_w = _ints(lines, 3, rows)
    if cols and max(col_w) != max_c:
        raise AlistError(3, f"column weights disagree with max {max_c}")
    if rows and max(row_w) != max_r:
        raise AlistError(4, f"row weights disagree with max {max_r}")

    dense = np.zeros((rows, cols), dtype=np.uint8)
    for j in range(cols):
        ln = 4 + j
        idx = [v for v in _ints(lines, ln, max_c) if v != 0]
        if len(idx) != col_w[j]:
            raise AlistError(ln + 1, f"column {j + 1} lists {len(idx)} entries, weight says {col_w[j]}")
        for v in idx:
            if not 1 <= v <= rows:
                raise AlistError(ln + 1, f"row index {v} out of range")
            dense[v - 1, j] = 1

    check = np.zeros_like(dense)
    for i in range(rows):
        ln = 4 + cols + i
        idx = [v for v in _ints(lines, ln, max_r) if v != 0]
        if len(idx) != row_w[i]:
            raise AlistError(ln + 1, f"row {i + 1} lists {len(idx)} entries, weight says {row_w[i]}")
        for v in idx:
            if not 1 <= v <= cols:
                raise AlistError(ln + 1, f"column index {v} out of range")
            check[i, v - 1] = 1
    if not np.array_equal(dense, check):
        raise AlistError(5 + cols, "row lists disagree with column lists")
    return BinMatrix.from_dense(dense)


def read_alist(path: str | Path) -> BinMatrix:
    return loads_alist(Path(path).read_text())
