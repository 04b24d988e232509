"""Bit-packed dense matrices over GF(2).

Rows are packed little-endian into uint64 words: column j lives in word
``j >> 6`` at bit ``j & 63``. Padding bits past ``cols`` are always zero.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

DEFAULT_FULL_ENUM_COLS = 30
DEFAULT_WEIGHT_CAP = 4
DEFAULT_GRAY_MAX_NULLITY = 20


def _pack(dense: np.ndarray) -> np.ndarray:
    rows, cols = dense.shape
    words = max(1, -(-cols // 64))
    buf = np.zeros((rows, words * 8), dtype=np.uint8)
    if cols:
        packed = np.packbits(dense.astype(np.uint8, copy=False) & 1, axis=1, bitorder="little")
        buf[:, : packed.shape[1]] = packed
    return buf.view("<u8").astype(np.uint64)


class BinMatrix:
    """Immutable GF(2) matrix with packed rows."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: np.ndarray):
        self.rows = rows
        self.cols = cols
        data = np.ascontiguousarray(data, dtype=np.uint64)
        data.setflags(write=False)
        self.data = data

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]] | np.ndarray) -> BinMatrix:
        arr = np.asarray(dense, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("expected a 2-D array")
        return cls(arr.shape[0], arr.shape[1], _pack(arr % 2))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BinMatrix:
        return cls.from_dense(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> BinMatrix:
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_row_ints(cls, rows: Sequence[int], cols: int) -> BinMatrix:
        dense = np.zeros((len(rows), cols), dtype=np.uint8)
        for i, r in enumerate(rows):
            for j in range(cols):
                if (r >> j) & 1:
                    dense[i, j] = 1
        return cls.from_dense(dense)

    @classmethod
    def hstack(cls, blocks: Iterable[BinMatrix]) -> BinMatrix:
        return cls.from_dense(np.hstack([b.to_dense() for b in blocks]))

    @classmethod
    def vstack(cls, blocks: Iterable[BinMatrix]) -> BinMatrix:
        return cls.from_dense(np.vstack([b.to_dense() for b in blocks]))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def to_dense(self) -> np.ndarray:
        raw = self.data.astype("<u8").view(np.uint8).reshape(self.rows, self.data.shape[1] * 8)
        return np.unpackbits(raw, axis=1, count=self.cols, bitorder="little")

    def row_ints(self) -> list[int]:
        """Rows as Python ints, bit j = column j."""
        out = []
        for row in self.data:
            v = 0
            for w, word in enumerate(row):
                v |= int(word) << (64 * w)
            out.append(v)
        return out

    def col_ints(self) -> list[int]:
        return self.T.row_ints()

    @property
    def T(self) -> BinMatrix:
        return BinMatrix.from_dense(self.to_dense().T)

    def row_weights(self) -> np.ndarray:
        return np.bitwise_count(self.data).sum(axis=1).astype(np.int64)

    def col_weights(self) -> np.ndarray:
        return self.to_dense().sum(axis=0).astype(np.int64)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return int(self.data[i, j >> 6] >> np.uint64(j & 63)) & 1

    def flip(self, i: int, j: int) -> BinMatrix:
        """Copy with entry (i, j) toggled."""
        dense = self.to_dense()
        dense[i, j] ^= 1
        return BinMatrix.from_dense(dense)

    def and_popcounts(self, other: BinMatrix) -> np.ndarray:
        """Entry (i, j) = |row_i(self) AND row_j(other)| as integers."""
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        anded = self.data[:, None, :] & other.data[None, :, :]
        return np.bitwise_count(anded).sum(axis=2).astype(np.int64)

    def __matmul__(self, other: BinMatrix) -> BinMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return BinMatrix.from_dense(self.and_popcounts(other.T) & 1)

    def mul_vec(self, v: np.ndarray) -> np.ndarray:
        """Matrix-vector product over GF(2) with a dense 0/1 vector."""
        v = np.asarray(v, dtype=np.uint8)
        if v.shape != (self.cols,):
            raise ValueError(f"vector length {v.shape} != {self.cols}")
        return (self.to_dense().astype(np.int64) @ v) & 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.data, other.data)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"BinMatrix({self.rows}x{self.cols})"

    def __str__(self) -> str:
        return "\n".join("".join(map(str, r)) for r in self.to_dense())


def circulant(v: Sequence[int] | np.ndarray) -> BinMatrix:
    """n x n matrix whose row j is v cyclically shifted right by j."""
    v = np.asarray(v, dtype=np.uint8) & 1
    if v.ndim != 1 or v.size == 0:
        raise ValueError("circulant needs a non-empty vector")
    return BinMatrix.from_dense(np.stack([np.roll(v, j) for j in range(v.size)]))


class RowBasis:
    """Reduced row basis over GF(2) for rowspace membership tests."""

    def __init__(self, rows: Iterable[int]):
        self.pivots: dict[int, int] = {}
        for r in rows:
            r = self.reduce(r)
            if r:
                self.pivots[r.bit_length() - 1] = r

    def reduce(self, v: int) -> int:
        for bit in sorted(self.pivots, reverse=True):
            if (v >> bit) & 1:
                v ^= self.pivots[bit]
        return v

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank_gf2(m: BinMatrix) -> int:
    """Rank by Gaussian elimination with fixed pivot order."""
    work = m.row_ints()
    rank = 0
    for col in range(m.cols):
        bit = 1 << col
        pivot = next((r for r in range(rank, len(work)) if work[r] & bit), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and work[r] & bit:
                work[r] ^= work[rank]
        rank += 1
        if rank == len(work):
            break
    return rank


def nullspace_gf2(m: BinMatrix) -> BinMatrix:
    """Basis of {x : M x = 0}, one basis vector per row."""
    work = m.row_ints()
    pivot_cols = []
    rank = 0
    for col in range(m.cols):
        bit = 1 << col
        pivot = next((r for r in range(rank, len(work)) if work[r] & bit), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and work[r] & bit:
                work[r] ^= work[rank]
        pivot_cols.append(col)
        rank += 1
    pivot_set = set(pivot_cols)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = 1 << f
        for r, pc in enumerate(pivot_cols):
            if (work[r] >> f) & 1:
                v |= 1 << pc
        basis.append(v)
    return BinMatrix.from_row_ints(basis, m.cols)


class SelfOrthReport(NamedTuple):
    ok: bool
    pair: tuple[int, int] | None  # first (i, j), i <= j, with odd inner product

    def __bool__(self) -> bool:
        return self.ok


def is_self_orthogonal(m: BinMatrix) -> SelfOrthReport:
    """Check M M^T = 0; i == j in the reported pair means an odd-weight row."""
    gram = m.and_popcounts(m) & 1
    bad = np.argwhere(np.triu(gram))
    if bad.size == 0:
        return SelfOrthReport(True, None)
    i, j = bad[0]
    return SelfOrthReport(False, (int(i), int(j)))


@dataclass(frozen=True)
class OverlapProfile:
    pairwise: np.ndarray  # rows x rows, diagonal = row weights
    histogram: dict[int, int]

    def pair(self, i: int, j: int) -> int:
        return int(self.pairwise[i, j])

    def partners(self, i: int, value: int) -> list[int]:
        return [j for j in range(self.pairwise.shape[0]) if j != i and self.pairwise[i, j] == value]


def overlap_profile(m: BinMatrix) -> OverlapProfile:
    if m.rows < 2:
        raise ValueError("overlap profile needs at least two rows")
    pw = m.and_popcounts(m)
    iu = np.triu_indices(m.rows, k=1)
    hist = Counter(int(v) for v in pw[iu])
    return OverlapProfile(pw, dict(sorted(hist.items())))


def four_cycle_counts(m: BinMatrix) -> np.ndarray:
    """Per row pair count of 4-cycles, C(overlap, 2); upper triangle only."""
    pw = m.and_popcounts(m)
    counts = pw * (pw - 1) // 2
    return np.triu(counts, k=1)


def count_four_cycles_by_columns(m: BinMatrix) -> int:
    """Total 4-cycles counted from the column side of the Tanner graph."""
    t = m.T
    pw = t.and_popcounts(t)
    iu = np.triu_indices(t.rows, k=1)
    return int(sum(int(c) * (int(c) - 1) // 2 for c in pw[iu]))


def tanner_girth(m: BinMatrix) -> float:
    """Shortest cycle in the Tanner graph, ``math.inf`` if acyclic."""
    dense = m.to_dense()
    n_var = m.cols
    adj: list[list[int]] = [[] for _ in range(m.cols + m.rows)]
    for r, c in zip(*np.nonzero(dense)):
        adj[int(c)].append(n_var + int(r))
        adj[n_var + int(r)].append(int(c))
    best = math.inf
    for start in range(len(adj)):
        dist = {start: 0}
        parent = {start: -1}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def four_cycles_and_girth(m: BinMatrix) -> tuple[np.ndarray, float]:
    return four_cycle_counts(m), tanner_girth(m)


@dataclass(frozen=True)
class DistanceResult:
    distance: int | None
    status: str  # "exact" | "no_codeword" | "exceeds_cap"
    codeword: np.ndarray | None = None

    @property
    def exact(self) -> bool:
        return self.status == "exact"


def _gray_min_weight(basis: BinMatrix) -> tuple[int, np.ndarray]:
    b = basis.to_dense().astype(np.uint8)
    k = b.shape[0]
    best, best_word = None, None
    chunk_bits = min(k, 16)
    low = b[:chunk_bits]
    combos = ((np.arange(1 << chunk_bits)[:, None] >> np.arange(chunk_bits)) & 1).astype(np.int64)
    low_words = (combos @ low) & 1
    for hi in range(1 << (k - chunk_bits)):
        offset = np.zeros(b.shape[1], dtype=np.int64)
        for i in range(k - chunk_bits):
            if (hi >> i) & 1:
                offset ^= b[chunk_bits + i]
        words = low_words ^ offset
        w = words.sum(axis=1)
        if hi == 0:
            w[0] = np.iinfo(np.int64).max
        idx = int(np.argmin(w))
        if best is None or w[idx] < best:
            best, best_word = int(w[idx]), words[idx].astype(np.uint8)
    return best, best_word


def _subset_search(cols: list[int], max_weight: int) -> tuple[int, tuple[int, ...]] | None:
    for w in range(1, max_weight + 1):
        found = _dfs(cols, w, 0, 0, ())
        if found is not None:
            return w, found
    return None


def _dfs(cols: list[int], left: int, start: int, acc: int, chosen: tuple[int, ...]):
    if left == 0:
        return chosen if acc == 0 else None
    for j in range(start, len(cols) - left + 1):
        hit = _dfs(cols, left - 1, j + 1, acc ^ cols[j], chosen + (j,))
        if hit is not None:
            return hit
    return None


def min_distance_exhaustive(
    m: BinMatrix,
    weight_cap: int | None = None,
    full_enum_cols: int = DEFAULT_FULL_ENUM_COLS,
    gray_max_nullity: int = DEFAULT_GRAY_MAX_NULLITY,
) -> DistanceResult:
    """Minimum weight of a nonzero vector in the null space of M.

    An explicit ``weight_cap`` always bounds the search. Without one, the
    answer is exact for ``cols <= full_enum_cols``: codewords are enumerated
    from a null-space basis when the nullity is small, otherwise column
    subsets are searched by increasing weight. Wider matrices are then
    searched up to weight 4.
    """
    nullity = m.cols - rank_gf2(m)
    if nullity == 0:
        return DistanceResult(None, "no_codeword")
    if weight_cap is not None:
        cap = weight_cap
    elif m.cols <= full_enum_cols and nullity <= gray_max_nullity:
        d, word = _gray_min_weight(nullspace_gf2(m))
        return DistanceResult(d, "exact", word)
    else:
        cap = m.cols if m.cols <= full_enum_cols else DEFAULT_WEIGHT_CAP
    cols = m.col_ints()
    hit = _subset_search(cols, cap)
    if hit is None:
        return DistanceResult(None, "exceeds_cap")
    d, support = hit
    word = np.zeros(m.cols, dtype=np.uint8)
    word[list(support)] = 1
    return DistanceResult(d, "exact", word)
