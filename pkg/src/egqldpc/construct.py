"""Type-I / Type-II EG-LDPC matrices and their self-orthogonal adaptation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

from egqldpc.binmat import BinMatrix, SelfOrthReport, circulant, is_self_orthogonal
from egqldpc.field import prime_power
from egqldpc.geometry import Geometry, build_geometry, incidence_vector

MatrixType = Literal["type1", "type2", "orth"]


def class_count(q: int, m: int) -> int:
    return (q ** (m - 1) - 1) // (q - 1)


@dataclass(frozen=True)
class CodeSpec:
    q: int
    m: int
    ell: int
    type: MatrixType
    n: int
    N: int
    rho: int  # column weight of the Type-II core
    lam: int  # row weight of the Type-II core
    parity_case: Literal["odd", "even"]
    class_count: int
    d_type1_lower: int
    d_orth_lower: int

    @property
    def k_nominal(self) -> int:
        """Logical qubit count N - 2n for the adapted code (may be <= 0)."""
        return self.orth_length - 2 * self.n

    @property
    def orth_length(self) -> int:
        return self.ell * self.n + 1 if self.parity_case == "odd" else (self.ell + 1) * self.n + 1


def _check_ell(q: int, m: int, ell: int) -> int:
    prime_power(q)
    if m < 2:
        raise ValueError("dimension m must be >= 2")
    cc = class_count(q, m)
    if not 1 <= ell <= cc:
        raise ValueError(f"ell={ell} outside [1, {cc}] for EG({m},{q})")
    return cc


def code_summary(q: int, m: int, ell: int, type: MatrixType = "orth") -> CodeSpec:
    cc = _check_ell(q, m, ell)
    n = q**m - 1
    lam = ell * q
    parity = "odd" if lam % 2 else "even"
    if type == "type1":
        N = n
    elif type == "type2":
        N = ell * n
    elif type == "orth":
        N = ell * n + 1 if parity == "odd" else (ell + 1) * n + 1
    else:
        raise ValueError(f"unknown matrix type {type!r}")
    return CodeSpec(
        q=q, m=m, ell=ell, type=type, n=n, N=N, rho=q, lam=lam,
        parity_case=parity, class_count=cc,
        d_type1_lower=ell * q + 1, d_orth_lower=q + 1,
    )


def _geometry(g: Geometry | None, q: int, m: int) -> Geometry:
    return g if g is not None else build_geometry(q, m)


def type1_matrix(g: Geometry, ell: int) -> BinMatrix:
    """Stack of ell class circulants: ell*n x n, row weight q, column weight ell*q."""
    _check_ell(g.q, g.m, ell)
    blocks = [circulant(incidence_vector(g, c.representative)) for c in g.classes[:ell]]
    return BinMatrix.vstack(blocks)


def type2_matrix(g: Geometry, ell: int) -> BinMatrix:
    """Transpose of the Type-I stack; rows are the non-origin points."""
    return type1_matrix(g, ell).T


@dataclass(frozen=True)
class AdaptResult:
    matrix: BinMatrix
    parity_case: Literal["odd", "even"]
    report: SelfOrthReport

    @property
    def self_orthogonal(self) -> bool:
        return self.report.ok


def adapt_self_orthogonal(ht: BinMatrix, spec: CodeSpec | None = None) -> AdaptResult:
    """Append [1] (odd row weight) or [1 | I] (even row weight) to ht.

    The result is always run through the self-orthogonality check; the
    verdict travels with the matrix instead of being assumed.
    """
    weights = set(ht.row_weights().tolist())
    if len(weights) != 1:
        raise ValueError(f"row weights of the core are not uniform: {sorted(weights)}")
    lam = weights.pop()
    ones = BinMatrix.from_dense(np.ones((ht.rows, 1), dtype=np.uint8))
    if lam % 2:
        parity = "odd"
        out = BinMatrix.hstack([ht, ones])
    else:
        parity = "even"
        out = BinMatrix.hstack([ht, ones, BinMatrix.identity(ht.rows)])
    if spec is not None:
        if spec.lam != lam:
            raise ValueError(f"core row weight {lam} != spec lambda {spec.lam}")
        if out.cols != spec.orth_length:
            raise ValueError(f"adapted width {out.cols} != expected {spec.orth_length}")
    return AdaptResult(out, parity, is_self_orthogonal(out))


def build_matrix(q: int, m: int, ell: int, type: MatrixType = "orth", g: Geometry | None = None) -> BinMatrix:
    """Convenience front end used by the CLI and harness."""
    spec = code_summary(q, m, ell, type)
    g = _geometry(g, q, m)
    if type == "type1":
        return type1_matrix(g, ell)
    ht = type2_matrix(g, ell)
    if type == "type2":
        return ht
    return adapt_self_orthogonal(ht, spec).matrix


def characteristic_vector(exponents: Iterable[int], n: int) -> np.ndarray:
    """Location vector z(alpha^i, ...) with coordinate i <-> alpha^i."""
    exps = list(exponents)
    if not exps:
        raise ValueError("at least one exponent is required")
    v = np.zeros(n, dtype=np.uint8)
    for e in exps:
        if not 0 <= e < n:
            raise ValueError(f"exponent {e} outside [0, {n})")
        v[e] = 1
    return v


def characteristic_matrix(i: int, n: int) -> BinMatrix:
    """Circulant permutation matrix A(alpha^i); row r is z(alpha^(i+r))."""
    if not 0 <= i < n:
        raise ValueError(f"exponent {i} outside [0, {n})")
    return BinMatrix.from_dense(np.stack([characteristic_vector([(i + r) % n], n) for r in range(n)]))


# Point-line incidence of the 4-point, 6-line toy geometry, lines as rows.
TOY_TYPE1 = BinMatrix.from_dense(
    [
        [1, 1, 0, 0],
        [1, 0, 1, 0],
        [1, 0, 0, 1],
        [0, 1, 1, 0],
        [0, 1, 0, 1],
        [0, 0, 1, 1],
    ]
)
