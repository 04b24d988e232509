"""Monte Carlo decoding experiments and result persistence."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

import numpy as np
from scipy.stats import binomtest

from egqldpc.alist import dumps_alist, read_alist
from egqldpc.binmat import BinMatrix, RowBasis
from egqldpc.construct import build_matrix, code_summary
from egqldpc.decode import (
    DEFAULT_DAMPING,
    DEFAULT_MAX_ITER,
    BPDecoder,
    ChannelModel,
    Outcome,
    channel_priors,
    classify_residual,
)
from egqldpc.quantum import css_from_self_orthogonal

SEED_ENV = "EGQLDPC_SEED"
CSV_FIELDS = ["p", "trials", "exact", "degenerate", "failures", "nonconverged", "rate", "ci_lo", "ci_hi"]


@dataclass(frozen=True)
class SimConfig:
    code: dict[str, Any]  # {"q", "m", "ell"} or {"alist": path}
    channel: dict[str, Any]  # {"kind": "depolarizing" | "bsc", "p": [...]}
    trials: int
    seed: int = 0
    max_iter: int = DEFAULT_MAX_ITER
    damping: float = DEFAULT_DAMPING

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        ps = list(self.channel.get("p", []))
        if any(b <= a for a, b in zip(ps, ps[1:])):
            raise ValueError("p values must be strictly increasing")
        ChannelModel(self.channel.get("kind", "depolarizing"), 0.0)
        for p in ps:
            ChannelModel(self.channel.get("kind", "depolarizing"), p)

    @property
    def kind(self) -> str:
        return self.channel.get("kind", "depolarizing")

    @property
    def p_values(self) -> list[float]:
        return [float(p) for p in self.channel.get("p", [])]

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> SimConfig:
        d = dict(d)
        env = os.environ.get(SEED_ENV)
        if env is not None and env != "":
            d["seed"] = int(env, 0)
        return cls(**d)

    @classmethod
    def load(cls, path: str | Path) -> SimConfig:
        return cls.from_dict(json.loads(Path(path).read_text()))


@dataclass(frozen=True)
class PointResult:
    p: float
    trials: int
    exact: int
    degenerate: int
    failures: int
    nonconverged: int
    rate: float
    ci_lo: float
    ci_hi: float

    @property
    def strict_rate(self) -> float:
        """Failure rate when only exact recovery counts as success."""
        return 1 - self.exact / self.trials


@dataclass(frozen=True)
class SimResult:
    points: list[PointResult]
    metadata: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps({"points": [asdict(pt) for pt in self.points], "metadata": self.metadata}, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> SimResult:
        d = json.loads(text)
        return cls([PointResult(**pt) for pt in d["points"]], d["metadata"])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for pt in self.points:
            w.writerow([repr(getattr(pt, k)) for k in CSV_FIELDS])
        return buf.getvalue()


def wilson_interval(failures: int, trials: int) -> tuple[float, float]:
    ci = binomtest(failures, trials).proportion_ci(confidence_level=0.95, method="wilson")
    return float(ci.low), float(ci.high)


def matrix_hash(m: BinMatrix) -> str:
    """git blob hash of the matrix's alist serialization."""
    body = dumps_alist(m).encode()
    return hashlib.sha1(b"blob %d\0" % len(body) + body).hexdigest()


def load_matrix(code: dict[str, Any]) -> tuple[BinMatrix, dict[str, Any]]:
    if "alist" in code:
        return read_alist(code["alist"]), {"source": str(code["alist"])}
    q, m, ell = int(code["q"]), int(code["m"]), int(code["ell"])
    spec = code_summary(q, m, ell)
    h = build_matrix(q, m, ell, "orth")
    return h, {"q": q, "m": m, "ell": ell, "N": spec.N, "n": spec.n}


def sample_depolarizing(rng: np.random.Generator, n: int, p: float) -> tuple[np.ndarray, np.ndarray]:
    """(x, z) parts of an n-qubit Pauli error with X, Y, Z each at rate p/3."""
    u = rng.random(n)
    x = (u < 2 * p / 3).astype(np.uint8)
    z = ((u >= p / 3) & (u < p)).astype(np.uint8)
    return x, z


class _TrialRunner:
    """Per-process decoding state; every trial depends only on its indices."""

    def __init__(self, h_dense: np.ndarray, kind: str, seed: int, max_iter: int, damping: float):
        self.h = BinMatrix.from_dense(h_dense)
        self.kind = kind
        self.seed = seed
        self.decoder = BPDecoder(self.h, max_iter, damping)
        # classical mode has no stabilizers: any nonzero residual is a failure
        self.stabilizers = RowBasis(self.h.row_ints()) if kind == "depolarizing" else RowBasis([])

    def trial(self, p: float, p_index: int, t: int) -> tuple[Outcome, bool]:
        rng = np.random.default_rng([self.seed, p_index, t])
        n = self.h.cols
        llr = channel_priors(ChannelModel(self.kind, p))
        if self.kind == "bsc":
            components = [(rng.random(n) < p).astype(np.uint8)]
        else:
            components = list(sample_depolarizing(rng, n, p))
        worst = Outcome.EXACT
        nonconv = False
        for e in components:
            res = self.decoder.decode(self.decoder.syndrome(e), llr)
            nonconv |= not res.converged
            outcome = classify_residual(e, res.estimate, self.stabilizers)
            if outcome == Outcome.FAILURE or (outcome == Outcome.DEGENERATE and worst == Outcome.EXACT):
                worst = outcome
        return worst, nonconv

    def chunk(self, p: float, p_index: int, start: int, stop: int) -> np.ndarray:
        counts = np.zeros(4, dtype=np.int64)  # exact, degenerate, failure, nonconverged
        order = {Outcome.EXACT: 0, Outcome.DEGENERATE: 1, Outcome.FAILURE: 2}
        for t in range(start, stop):
            outcome, nonconv = self.trial(p, p_index, t)
            counts[order[outcome]] += 1
            counts[3] += nonconv
        return counts


_worker: _TrialRunner | None = None


def _init_worker(*args) -> None:
    global _worker
    _worker = _TrialRunner(*args)


def _run_chunk(job: tuple[float, int, int, int]) -> np.ndarray:
    assert _worker is not None
    return _worker.chunk(*job)


def run_trials(cfg: SimConfig, workers: int = 1) -> SimResult:
    """Sample, decode and score ``cfg.trials`` errors at every p value.

    In depolarizing mode a trial fails when either the X or Z component ends
    in a logical failure. Results are identical for any worker count.
    """
    h, meta = load_matrix(cfg.code)
    if cfg.kind == "depolarizing":
        css_from_self_orthogonal(h)  # rejects matrices that do not commute
    init = (h.to_dense(), cfg.kind, cfg.seed, cfg.max_iter, cfg.damping)

    jobs = []
    n_chunks = max(1, workers * 4)
    for pi, p in enumerate(cfg.p_values):
        bounds = np.linspace(0, cfg.trials, min(n_chunks, cfg.trials) + 1).astype(int)
        jobs += [(p, pi, int(a), int(b)) for a, b in zip(bounds, bounds[1:]) if b > a]

    if workers <= 1:
        _init_worker(*init)
        outs = [_run_chunk(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=init) as pool:
            outs = list(pool.map(_run_chunk, jobs))

    totals = {pi: np.zeros(4, dtype=np.int64) for pi in range(len(cfg.p_values))}
    for (p, pi, _, _), c in zip(jobs, outs):
        totals[pi] += c
    points = []
    for pi, p in enumerate(cfg.p_values):
        ex, dg, fl, nc = (int(v) for v in totals[pi])
        lo, hi = wilson_interval(fl, cfg.trials)
        points.append(PointResult(p, cfg.trials, ex, dg, fl, nc, fl / cfg.trials, lo, hi))

    meta.update(
        seed=cfg.seed,
        channel=cfg.kind,
        max_iter=cfg.max_iter,
        damping=cfg.damping,
        rows=h.rows,
        cols=h.cols,
        matrix_hash=matrix_hash(h),
    )
    return SimResult(points, meta)


def exhaustive_weight_one(
    h: BinMatrix, p: float, max_iter: int = DEFAULT_MAX_ITER, damping: float = DEFAULT_DAMPING
) -> dict[tuple[str, int], Outcome]:
    """Decode every single-qubit X and Z error of the self-dual CSS code on h."""
    decoder = BPDecoder(h, max_iter, damping)
    stabs = RowBasis(h.row_ints())
    llr = channel_priors(ChannelModel("depolarizing", p))
    out = {}
    for comp in ("X", "Z"):
        for j in range(h.cols):
            e = np.zeros(h.cols, dtype=np.uint8)
            e[j] = 1
            res = decoder.decode(decoder.syndrome(e), llr)
            out[comp, j] = classify_residual(e, res.estimate, stabs)
    return out


def write_results(r: SimResult, path: str | Path, format: str = "csv") -> None:
    if format == "csv":
        text = r.to_csv()
    elif format == "json":
        text = r.to_json()
    else:
        raise ValueError(f"unknown format {format!r}")
    Path(path).write_text(text)
