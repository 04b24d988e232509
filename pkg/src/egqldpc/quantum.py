"""CSS stabilizer codes from self-orthogonal binary matrices."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from egqldpc.binmat import BinMatrix, RowBasis, is_self_orthogonal, nullspace_gf2, rank_gf2
from egqldpc.construct import CodeSpec

QUANTUM_DISTANCE_MAX_N = 16


class NotSelfOrthogonalError(ValueError):
    def __init__(self, pair: tuple[int, int]):
        super().__init__(f"rows {pair[0]} and {pair[1]} have odd overlap")
        self.pair = pair


@dataclass(frozen=True)
class StabilizerCode:
    hx: BinMatrix
    hz: BinMatrix
    N: int
    k_nominal: int
    k_exact: int
    rank: int
    d_lower: int | None

    @property
    def nominal_dimension_ok(self) -> bool:
        return self.k_nominal > 0

    def params(self) -> str:
        d = f">={self.d_lower}" if self.d_lower is not None else "?"
        return f"[[{self.N},{self.k_exact},{d}]]"


def css_from_self_orthogonal(h: BinMatrix, spec: CodeSpec | None = None, q: int | None = None) -> StabilizerCode:
    """Self-dual CSS code with H_X = H_Z = h.

    ``k_nominal`` is N - 2 * rows (the closed form, assuming full row rank);
    ``k_exact`` uses the GF(2) rank. The distance floor is q + 1 when q is
    known, from ``spec`` or passed directly.
    """
    report = is_self_orthogonal(h)
    if not report.ok:
        raise NotSelfOrthogonalError(report.pair)
    r = rank_gf2(h)
    if spec is not None:
        q = spec.q
    return StabilizerCode(
        hx=h,
        hz=h,
        N=h.cols,
        k_nominal=h.cols - 2 * h.rows,
        k_exact=h.cols - 2 * r,
        rank=r,
        d_lower=None if q is None else q + 1,
    )


def check_commutation(code: StabilizerCode) -> bool:
    """All generators commute: X S_z^T + Z S_x^T = 0 on the stacked (x|z) rows."""
    if code.hx.cols != code.hz.cols:
        return False
    zx = BinMatrix.zeros(code.hx.rows, code.N)
    zz = BinMatrix.zeros(code.hz.rows, code.N)
    x_part = BinMatrix.vstack([code.hx, zz])
    z_part = BinMatrix.vstack([zx, code.hz])
    form = (x_part.and_popcounts(z_part) + z_part.and_popcounts(x_part)) & 1
    return not form.any()


@dataclass(frozen=True)
class PauliString:
    ops: str

    @classmethod
    def from_xz(cls, x: np.ndarray, z: np.ndarray) -> PauliString:
        table = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
        return cls("".join(table[int(a), int(b)] for a, b in zip(x, z)))

    def to_xz(self) -> tuple[np.ndarray, np.ndarray]:
        x = np.array([c in "XY" for c in self.ops], dtype=np.uint8)
        z = np.array([c in "ZY" for c in self.ops], dtype=np.uint8)
        return x, z

    def __str__(self) -> str:
        return self.ops


def export_stabilizer(code: StabilizerCode) -> list[PauliString]:
    """X-type generators (rows of H_X) followed by Z-type ones (rows of H_Z)."""
    zeros = np.zeros(code.N, dtype=np.uint8)
    out = [PauliString.from_xz(row, zeros) for row in code.hx.to_dense()]
    out += [PauliString.from_xz(zeros, row) for row in code.hz.to_dense()]
    return out


def write_stabilizers(code: StabilizerCode, path: str | Path) -> None:
    lines = [f"{i} {s}" for i, s in enumerate(export_stabilizer(code))]
    Path(path).write_text("\n".join(lines) + "\n")


def _min_logical_weight(checks: BinMatrix, stabilizers: BinMatrix) -> int | None:
    basis = nullspace_gf2(checks).row_ints()
    stabs = RowBasis(stabilizers.row_ints())
    best = None
    for mask in range(1, 1 << len(basis)):
        v = 0
        for i, b in enumerate(basis):
            if (mask >> i) & 1:
                v ^= b
        if v in stabs:
            continue
        w = v.bit_count()
        if best is None or w < best:
            best = w
    return best


def quantum_distance_exhaustive(code: StabilizerCode, max_n: int = QUANTUM_DISTANCE_MAX_N) -> int | None:
    """Minimum weight of a logical X or Z operator; None when k_exact = 0.

    Enumerates null(H_Z) minus rowspace(H_X) and the mirrored set, so only
    tiny codes are accepted.
    """
    if code.N > max_n:
        raise ValueError(f"exhaustive quantum distance limited to N <= {max_n}")
    if code.k_exact <= 0:
        return None
    dx = _min_logical_weight(code.hz, code.hx)
    dz = _min_logical_weight(code.hx, code.hz)
    return min(d for d in (dx, dz) if d is not None)
