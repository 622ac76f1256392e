"""Random instances and the perturbation experiments.

Every sample draws from its own ``random.Random`` seeded by a 64-bit hash of
``(master seed, sample index)``, so results do not depend on how samples are
scheduled across worker processes.
"""

from __future__ import annotations

import hashlib
import io
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .classify import CaseLabel, classify_case, classify_mechanism
from .errors import (
    EmptyGadget,
    GraphError,
    NotEnoughNonEdges,
    ParameterError,
    RejectionBudgetExhausted,
)
from .graph import Graph, norm_pair
from .line import L
from .pinv import build_ilp, solve_branch_and_bound, solve_enumeration, verify_solution
from .pinv.solution import FlipSet
from .spectral import SMITH_TOL, case_bounds_from_norms, norm

CSV_HEADER = "sample,Vh,Eh,case,objective,normG,normGhat,normHtilde,normHhat,ratio_root,ratio_pinv,time_ms,status"


# -- generators -------------------------------------------------------------------


def derive_seed(master: int, index: int) -> int:
    digest = hashlib.blake2b(f"{master}:{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def gen_connected_er(n: int, p: float, rng: random.Random, max_attempts: int = 10_000) -> Graph:
    """G(n, p) conditioned on connectivity by resampling the whole graph."""
    if n < 1 or not 0 < p <= 1:
        raise ParameterError(f"need n >= 1 and 0 < p <= 1, got n={n}, p={p}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(max_attempts):
        g = Graph(n, frozenset(e for e in pairs if rng.random() < p))
        if g.is_connected():
            return g
    raise RejectionBudgetExhausted(f"no connected G({n}, {p}) in {max_attempts} attempts")


def gen_ba(n: int, attach: int, rng: random.Random) -> Graph:
    """Preferential attachment grown from a star on ``attach + 1`` vertices."""
    if not n > attach >= 1:
        raise ParameterError(f"need n > attach >= 1, got n={n}, attach={attach}")
    edges = {(0, v) for v in range(1, attach + 1)}
    # every vertex appears once per incident edge
    repeated = [0] * attach + list(range(1, attach + 1))
    for new in range(attach + 1, n):
        targets: set[int] = set()
        while len(targets) < attach:
            targets.add(rng.choice(repeated))
        for t in sorted(targets):
            edges.add(norm_pair(t, new))
            repeated += [t, new]
    return Graph(n, frozenset(edges))


def perturb_add_edges(h: Graph, k: int, rng: random.Random) -> tuple[Graph, FlipSet]:
    non_edges = list(h.non_edges())
    if len(non_edges) < k:
        raise NotEnoughNonEdges(f"{len(non_edges)} non-edges, {k} requested")
    chosen = rng.sample(non_edges, k)
    flips = FlipSet.from_pairs(h, chosen)
    return flips.apply(h), flips


def augment_with_gadget(h: Graph, gadget: Graph, rng: random.Random) -> Graph:
    """Disjoint union with ``gadget``, then glue one gadget vertex onto one vertex of ``h``."""
    if gadget.vertex_count == 0:
        raise EmptyGadget("gadget has no vertices")
    if h.vertex_count == 0:
        return gadget
    gv = rng.randrange(gadget.vertex_count)
    hv = rng.randrange(h.vertex_count)
    label = {}
    nxt = h.vertex_count
    for v in range(gadget.vertex_count):
        if v == gv:
            label[v] = hv
        else:
            label[v] = nxt
            nxt += 1
    edges = set(h.edges) | {norm_pair(label[a], label[b]) for a, b in gadget.edges}
    return Graph(nxt, frozenset(edges))


# -- experiment -------------------------------------------------------------------


@dataclass(frozen=True)
class ExperimentConfig:
    model: str = "er"  # "er" or "ba"
    n: int = 15
    p: float = 0.2
    attach: int = 1
    samples: int = 2000
    edges_added: int = 1
    gadget: Graph | None = None
    seed: int = 42
    engine: str = "enum"  # "enum", "bnb" or "both"
    k_max: int = 3
    threads: int = 1
    timing: bool = True
    mechanisms: bool = False
    n_max: int | None = None  # sweep n..n_max with `samples` graphs each

    def __post_init__(self):
        if self.samples <= 0:
            raise ParameterError("samples must be positive")
        if self.n < 3:
            raise ParameterError("n must be at least 3")
        if self.model == "er" and not 0 < self.p < 1:
            raise ParameterError("p must lie strictly between 0 and 1")
        if self.model not in ("er", "ba"):
            raise ParameterError(f"unknown model {self.model!r}")
        if self.engine not in ("enum", "bnb", "both"):
            raise ParameterError(f"unknown engine {self.engine!r}")
        if self.gadget is None and self.edges_added < 1:
            raise ParameterError("edges_added must be at least 1")
        if self.n_max is not None and self.n_max < self.n:
            raise ParameterError("n_max must be >= n")

    @property
    def total_samples(self) -> int:
        if self.n_max is None:
            return self.samples
        return self.samples * (self.n_max - self.n + 1)

    def n_for(self, index: int) -> int:
        return self.n if self.n_max is None else self.n + index // self.samples


@dataclass
class ExperimentRecord:
    sample: int
    vh: int = 0
    eh: int = 0
    case: str = ""
    objective: int = -1
    norm_g: float = float("nan")
    norm_g_hat: float = float("nan")
    norm_h_tilde: float = float("nan")
    norm_h_hat: float = float("nan")
    ratio_root: float = float("nan")
    ratio_pinv: float = float("nan")
    time_ms: float = float("nan")
    status: str = "ok"
    # beyond the CSV columns
    norm_h: float = float("nan")
    adds: int = 0
    removes: int = 0
    mixed: bool = False
    root_bound_applies: bool = False
    pinv_bound_applies: bool = False
    bounds: list = field(default_factory=list)
    mechanism: str = ""
    g_edges: tuple = ()
    g_vertices: int = 0

    def csv_row(self, timing: bool = True) -> str:
        def f(x: float) -> str:
            return "" if x != x else format(x, ".12g")

        t = f(self.time_ms) if timing else "NA"
        cells = [
            str(self.sample), str(self.vh), str(self.eh), self.case, str(self.objective) if self.objective >= 0 else "",
            f(self.norm_g), f(self.norm_g_hat), f(self.norm_h_tilde), f(self.norm_h_hat),
            f(self.ratio_root), f(self.ratio_pinv), t, self.status,
        ]
        return ",".join(cells)


def _solve(h_tilde: Graph, config: ExperimentConfig):
    if config.engine == "enum":
        return solve_enumeration(h_tilde, config.k_max), "ok"
    bnb = solve_branch_and_bound(build_ilp(h_tilde))
    if config.engine == "bnb":
        if bnb.optimal:
            return bnb, "ok"
        return solve_enumeration(h_tilde, config.k_max), "ok"
    enum = solve_enumeration(h_tilde, config.k_max)
    if bnb.optimal and bnb.objective != enum.objective:
        return enum, "engine_mismatch"
    return enum, "ok"


def run_sample(config: ExperimentConfig, index: int) -> ExperimentRecord:
    rec = ExperimentRecord(sample=index)
    try:
        rng = random.Random(derive_seed(config.seed, index))
        n = config.n_for(index)
        g = gen_connected_er(n, config.p, rng) if config.model == "er" else gen_ba(n, config.attach, rng)
        rec.g_edges, rec.g_vertices = g.sorted_edges, g.vertex_count
        h = L(g)
        rec.vh, rec.eh = h.vertex_count, h.m
        added = None
        if config.gadget is not None:
            h_tilde = augment_with_gadget(h, config.gadget, rng)
        else:
            h_tilde, added = perturb_add_edges(h, config.edges_added, rng)
        t0 = time.perf_counter()
        sol, status = _solve(h_tilde, config)
        rec.time_ms = (time.perf_counter() - t0) * 1000.0
        rec.status = status
        if not verify_solution(h_tilde, sol):
            rec.status = "verify_failed"
        rec.objective = sol.objective
        rec.adds, rec.removes = len(sol.flips.adds), len(sol.flips.removes)
        rec.mixed = bool(rec.adds and rec.removes)
        if added is not None:
            rec.case = classify_case(h, h_tilde, sol, added).value
        else:
            rec.case = "I" if sol.objective == 0 else ("ADD" if rec.adds else "DEL")
        rec.norm_g = norm(g)
        rec.norm_h = norm(h)
        rec.norm_g_hat = norm(sol.g_hat)
        rec.norm_h_tilde = norm(h_tilde)
        rec.norm_h_hat = norm(sol.h_hat)
        rec.ratio_root = rec.norm_g_hat / rec.norm_h_hat if rec.norm_h_hat else float("nan")
        rec.ratio_pinv = rec.norm_g_hat / rec.norm_h_tilde if rec.norm_h_tilde else float("nan")
        rec.root_bound_applies = rec.norm_h_hat > 2 + SMITH_TOL
        rec.pinv_bound_applies = rec.norm_h_tilde > 2 + SMITH_TOL
        violated = (rec.root_bound_applies and rec.ratio_root > 2 + SMITH_TOL) or (
            rec.pinv_bound_applies and rec.ratio_pinv > 3 + SMITH_TOL
        )
        if added is not None and len(added) == 1:
            rec.bounds = case_bounds_from_norms(rec.norm_g, rec.norm_g_hat, rec.norm_h, rec.norm_h_hat, rec.case)
            violated = violated or not all(b.satisfied for b in rec.bounds)
        if violated and rec.status == "ok":
            rec.status = "bound_violation"
        if config.mechanisms:
            rec.mechanism = classify_mechanism(g, sol.g_hat).value
    except GraphError as exc:
        rec.status = f"error:{type(exc).__name__}"
    return rec


def _run_chunk(args) -> list[ExperimentRecord]:
    config, indices = args
    return [run_sample(config, i) for i in indices]


def run_records(config: ExperimentConfig) -> list[ExperimentRecord]:
    total = config.total_samples
    if config.threads <= 1:
        return [run_sample(config, i) for i in range(total)]
    chunks = [(config, list(range(s, min(s + 25, total)))) for s in range(0, total, 25)]
    with ProcessPoolExecutor(max_workers=config.threads) as pool:
        out = [rec for part in pool.map(_run_chunk, chunks) for rec in part]
    return sorted(out, key=lambda r: r.sample)


def records_to_csv(records: list[ExperimentRecord], timing: bool = True) -> str:
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for rec in records:
        buf.write(rec.csv_row(timing) + "\n")
    return buf.getvalue()


def _percentile(values: list[float], q: float) -> float:
    if not values:
        return float("nan")
    s = sorted(values)
    idx = min(len(s) - 1, max(0, round(q * (len(s) - 1))))
    return s[idx]


def summarize(records: list[ExperimentRecord], config: ExperimentConfig | None = None) -> str:
    ok = [r for r in records if not r.status.startswith("error")]
    lines = []
    if config is not None and config.gadget is not None:
        lines.append(f"{'edits':>6} {'Add':>6} {'Remove':>7}")
        for k in sorted({r.objective for r in ok}):
            add = sum(1 for r in ok if r.objective == k and r.adds)
            rem = sum(1 for r in ok if r.objective == k and not r.adds)
            lines.append(f"{k:>6} {add:>6} {rem:>7}")
    else:
        counts = {
            "Case I": sum(r.case == "I" for r in ok),
            "Case II": sum(r.case == "II" for r in ok),
            "Del_e(H~)": sum(r.case in ("III", "DEL") for r in ok),
            "Add_e(H~)": sum(r.case in ("IV", "ADD") for r in ok),
        }
        lines.append(" ".join(f"{k:>10}" for k in counts))
        lines.append(" ".join(f"{v:>10}" for v in counts.values()))
        mixed = sum(r.mixed for r in ok)
        if mixed:
            lines.append(f"mixed add+remove optima: {mixed}")
    rr = [r.ratio_root for r in ok if r.root_bound_applies]
    rp = [r.ratio_pinv for r in ok if r.pinv_bound_applies]
    lines.append(f"max ||L^-1(H^)||/||H^||  = {max(rr):.4f}" if rr else "max ratio_root: n/a")
    lines.append(f"max ||L+(H~)||/||H~||    = {max(rp):.4f}" if rp else "max ratio_pinv: n/a")
    times = [r.time_ms for r in ok if r.time_ms == r.time_ms]
    if times:
        lines.append(
            f"time ms p50={_percentile(times, 0.5):.2f} p90={_percentile(times, 0.9):.2f} max={max(times):.2f}"
        )
    bad = [r for r in records if r.status != "ok"]
    lines.append(f"samples={len(records)} failed_or_flagged={len(bad)}")
    return "\n".join(lines)


def run_experiment(config: ExperimentConfig) -> tuple[str, str, list[ExperimentRecord]]:
    """Run every sample; returns ``(summary, csv_text, records)``."""
    records = run_records(config)
    return summarize(records, config), records_to_csv(records, config.timing), records


__all__ = [
    "CSV_HEADER",
    "CaseLabel",
    "ExperimentConfig",
    "ExperimentRecord",
    "augment_with_gadget",
    "derive_seed",
    "gen_ba",
    "gen_connected_er",
    "perturb_add_edges",
    "run_experiment",
    "run_records",
    "run_sample",
    "summarize",
]
