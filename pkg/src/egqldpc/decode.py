"""Syndrome sum-product decoding for binary and CSS codes."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from egqldpc.binmat import BinMatrix, RowBasis
from egqldpc.quantum import StabilizerCode

LLR_SATURATION = 25.0
DEFAULT_MAX_ITER = 50
# undamped BP overshoots on the all-ones column of the adapted matrices
DEFAULT_DAMPING = 0.5
# largest |tanh(x/2)| that still maps back to a finite message
_TANH_CAP = math.tanh(LLR_SATURATION / 2)


@dataclass(frozen=True)
class ChannelModel:
    kind: Literal["bsc", "depolarizing"]
    p: float

    def __post_init__(self):
        if self.kind == "bsc":
            if not 0 <= self.p < 0.5:
                raise ValueError(f"bsc needs 0 <= p < 0.5, got {self.p}")
        elif self.kind == "depolarizing":
            if not 0 <= self.p < 0.75:
                raise ValueError(f"depolarizing needs 0 <= p < 0.75, got {self.p}")
        else:
            raise ValueError(f"unknown channel kind {self.kind!r}")

    @property
    def marginal(self) -> float:
        """Per-component flip probability seen by each binary decoder."""
        return self.p if self.kind == "bsc" else 2 * self.p / 3


def channel_priors(ch: ChannelModel) -> float:
    """Prior LLR ln((1 - pi) / pi), saturated at LLR_SATURATION."""
    pi = ch.marginal
    if pi == 0:
        return LLR_SATURATION
    return min(math.log((1 - pi) / pi), LLR_SATURATION)


@dataclass(frozen=True)
class DecodeResult:
    estimate: np.ndarray
    converged: bool
    iterations: int
    posterior: np.ndarray


class BPDecoder:
    """Flooding sum-product on the Tanner graph of a fixed check matrix.

    The graph layout is built once; :meth:`decode` keeps all message state
    local, so one instance can serve concurrent callers.
    """

    def __init__(self, h: BinMatrix, max_iter: int = DEFAULT_MAX_ITER, damping: float = DEFAULT_DAMPING):
        if not 0 <= damping < 1:
            raise ValueError("damping must be in [0, 1)")
        self.h = h
        self.max_iter = max_iter
        self.damping = damping
        dense = h.to_dense()
        chk, var = np.nonzero(dense)
        self.n_checks, self.n_vars = h.shape
        self.edge_check = chk
        self.edge_var = var
        deg = np.bincount(chk, minlength=self.n_checks)
        width = int(deg.max()) if deg.size and deg.max() > 0 else 1
        # slot[c, k] = edge index of the k-th edge at check c, -1 for padding
        slot = np.full((self.n_checks, width), -1, dtype=np.int64)
        start = np.concatenate(([0], np.cumsum(deg)[:-1])) if self.n_checks else np.array([], dtype=np.int64)
        pos = np.arange(chk.size) - start[chk]
        slot[chk, pos] = np.arange(chk.size)
        self.slot = slot
        self.pad = slot < 0

    def syndrome(self, e: np.ndarray) -> np.ndarray:
        bits = e[self.edge_var].astype(np.int64)
        return np.bincount(self.edge_check, weights=bits, minlength=self.n_checks).astype(np.int64) & 1

    def decode(self, syndrome: np.ndarray, priors: float | np.ndarray) -> DecodeResult:
        s = np.asarray(syndrome, dtype=np.int64) & 1
        if s.shape != (self.n_checks,):
            raise ValueError(f"syndrome length {s.shape} != {self.n_checks} checks")
        prior = np.broadcast_to(np.asarray(priors, dtype=np.float64), (self.n_vars,)).copy()
        np.clip(prior, -LLR_SATURATION, LLR_SATURATION, out=prior)

        estimate = (prior < 0).astype(np.uint8)
        if np.array_equal(self.syndrome(estimate), s):
            return DecodeResult(estimate, True, 0, prior)

        sign = np.where(s[self.edge_check] == 1, -1.0, 1.0)
        v2c = prior[self.edge_var].copy()
        c2v = np.zeros_like(v2c)
        posterior = prior
        safe_slot = np.where(self.pad, 0, self.slot)
        for it in range(1, self.max_iter + 1):
            t = np.tanh(v2c / 2)[safe_slot]
            t[self.pad] = 1.0
            ones = np.ones((self.n_checks, 1))
            prefix = np.cumprod(np.hstack([ones, t[:, :-1]]), axis=1)
            suffix = np.cumprod(np.hstack([ones, t[:, :0:-1]]), axis=1)[:, ::-1]
            excl = np.clip(prefix * suffix, -_TANH_CAP, _TANH_CAP)
            new = np.empty_like(c2v)
            new[self.slot[~self.pad]] = 2 * np.arctanh(excl[~self.pad])
            new *= sign
            np.clip(new, -LLR_SATURATION, LLR_SATURATION, out=new)
            c2v = new if self.damping == 0 else (1 - self.damping) * new + self.damping * c2v

            posterior = prior + np.bincount(self.edge_var, weights=c2v, minlength=self.n_vars)
            v2c = np.clip(posterior[self.edge_var] - c2v, -LLR_SATURATION, LLR_SATURATION)
            estimate = (posterior < 0).astype(np.uint8)
            if np.array_equal(self.syndrome(estimate), s):
                return DecodeResult(estimate, True, it, posterior)
        return DecodeResult(estimate, False, self.max_iter, posterior)


def bp_syndrome_decode(
    h: BinMatrix,
    syndrome: np.ndarray,
    priors: float | np.ndarray,
    max_iter: int = DEFAULT_MAX_ITER,
    damping: float = DEFAULT_DAMPING,
) -> DecodeResult:
    return BPDecoder(h, max_iter, damping).decode(syndrome, priors)


class CSSDecoder:
    """Two independent binary decoders: H_Z sees X errors, H_X sees Z errors."""

    def __init__(self, code: StabilizerCode, max_iter: int = DEFAULT_MAX_ITER, damping: float = DEFAULT_DAMPING):
        self.code = code
        self.x_decoder = BPDecoder(code.hz, max_iter, damping)
        self.z_decoder = BPDecoder(code.hx, max_iter, damping)
        self.x_stabilizers = RowBasis(code.hx.row_ints())
        self.z_stabilizers = RowBasis(code.hz.row_ints())

    def decode(
        self, syndrome_x: np.ndarray, syndrome_z: np.ndarray, ch: ChannelModel
    ) -> tuple[DecodeResult, DecodeResult]:
        """``syndrome_x`` = H_X z (X-check outcomes), ``syndrome_z`` = H_Z x."""
        llr = channel_priors(ch)
        return self.x_decoder.decode(syndrome_z, llr), self.z_decoder.decode(syndrome_x, llr)


def css_decode(
    code: StabilizerCode,
    syndrome_x: np.ndarray,
    syndrome_z: np.ndarray,
    ch: ChannelModel,
    max_iter: int = DEFAULT_MAX_ITER,
    damping: float = DEFAULT_DAMPING,
) -> tuple[np.ndarray, np.ndarray]:
    """Return (x_hat, z_hat); Y-error correlations are ignored."""
    rx, rz = CSSDecoder(code, max_iter, damping).decode(syndrome_x, syndrome_z, ch)
    return rx.estimate, rz.estimate


class Outcome(str, enum.Enum):
    EXACT = "exact"
    DEGENERATE = "degenerate_success"
    FAILURE = "logical_failure"


def _to_int(v: np.ndarray) -> int:
    out = 0
    for j in np.flatnonzero(v):
        out |= 1 << int(j)
    return out


def classify_residual(actual: np.ndarray, estimate: np.ndarray, h: BinMatrix | RowBasis) -> Outcome:
    """Exact match, a stabilizer residual, or a logical failure."""
    actual = np.asarray(actual, dtype=np.uint8)
    estimate = np.asarray(estimate, dtype=np.uint8)
    if actual.shape != estimate.shape:
        raise ValueError(f"length mismatch {actual.shape} vs {estimate.shape}")
    residual = actual ^ estimate
    if not residual.any():
        return Outcome.EXACT
    basis = h if isinstance(h, RowBasis) else RowBasis(h.row_ints())
    return Outcome.DEGENERATE if _to_int(residual) in basis else Outcome.FAILURE
