"""Exhaustive and randomised verification sweeps.

Sweeps walk upper-triangle masks (``0 .. 2^(n(n-1)/2) - 1`` for labelled
enumeration, or one orbit representative per isomorphism class) in fixed-size
contiguous shards.  Each shard produces a partial :class:`SearchReport`;
partials merge associatively and commutatively, so the final report does not
depend on how shards are spread over worker processes.

Small-n sweeps are evidence for the theorems, not proofs of them.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import logging
import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterator

import numpy as np

from . import batch, bounds
from .graph import (
    Graph,
    canonical_form,
    encode_graph6,
    from_edge_list,
    from_mask,
    make_snk,
    max_degenerate_edges,
)
from .spectral import mu_index, q_index

log = logging.getLogger(__name__)

STRICT_MARGIN = 1e-7
VALUE_TOL = 1e-8
SOUND_TOL = 1e-9
MAX_LABELED_N = 7
LONG_RUN_N = 8
SHARD_SIZE = 1 << 16
CHECKPOINT_EVERY = 1 << 20
MAX_LISTED = 50
TARGETS = ("q", "mu", "bound", "edges")
HIST_EDGES = (-1e-7, 1e-7, 1e-5, 1e-3, 1e-2, 1e-1, 1.0, 10.0, math.inf)
NOTE = "Exhaustive verification at small n is evidence for the theorems, not a proof."


class ScopeError(ValueError):
    """Requested n/k lies outside what a sweep supports."""


def hist_labels() -> list[str]:
    labels = [f"<{HIST_EDGES[0]:g}"]
    for lo, hi in zip(HIST_EDGES, HIST_EDGES[1:]):
        labels.append(f"[{lo:g},{hi:g})")
    return labels


def _histogram(gaps: np.ndarray) -> dict[str, int]:
    labels = hist_labels()
    idx = np.searchsorted(np.array(HIST_EDGES), gaps, side="right")
    counts = np.bincount(idx, minlength=len(labels))
    return {label: int(c) for label, c in zip(labels, counts)}


# -- enumeration ---------------------------------------------------------------


def check_n(n: int, allow_long: bool = False) -> None:
    top = LONG_RUN_N if allow_long else MAX_LABELED_N
    if not 1 <= n <= top:
        hint = "" if allow_long or n != LONG_RUN_N else " (n = 8 needs the explicit long-running opt-in)"
        raise ScopeError(f"n must be in [1, {top}], got {n}{hint}")


def num_labeled(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


@lru_cache(maxsize=None)
def _perm_weights(n: int) -> np.ndarray:
    """``(n!, npairs)`` uint64 weights: pair bit t maps to ``1 << new_index``."""
    ii, jj = batch.pair_arrays(n)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)
    pi, pj = perms[:, ii], perms[:, jj]
    lo, hi = np.minimum(pi, pj), np.maximum(pi, pj)
    new = (hi * (hi - 1) // 2 + lo).astype(np.uint64)
    return np.left_shift(np.uint64(1), new)


def orbit_images(n: int, mask: int) -> np.ndarray:
    w = _perm_weights(n)
    npairs = w.shape[1]
    bits = np.array([(mask >> t) & 1 for t in range(npairs)], dtype=np.uint64)
    return (w * bits).sum(axis=1, dtype=np.uint64)


def orbit_min(n: int, mask: int) -> int:
    if n < 2:
        return 0
    return int(orbit_images(n, mask).min())


@lru_cache(maxsize=None)
def iso_representatives(n: int) -> np.ndarray:
    """Smallest mask of every isomorphism class, ascending."""
    if n < 2:
        return np.zeros(1, dtype=np.uint64)
    total = num_labeled(n)
    seen = np.zeros(total, dtype=bool)
    reps = []
    for mask in range(total):
        if seen[mask]:
            continue
        reps.append(mask)
        seen[orbit_images(n, mask)] = True
    return np.array(reps, dtype=np.uint64)


def scope_masks(n: int, iso_reduce: bool) -> np.ndarray:
    if iso_reduce:
        return iso_representatives(n)
    return np.arange(num_labeled(n), dtype=np.uint64)


def enumerate_graphs(n: int, iso_reduce: bool = False, allow_long: bool = False) -> Iterator[Graph]:
    check_n(n, allow_long)
    if iso_reduce:
        for mask in iso_representatives(n):
            yield from_mask(n, int(mask))
    else:
        for mask in range(num_labeled(n)):
            yield from_mask(n, mask)


def canonical_graph(g: Graph) -> Graph:
    """The labelling of ``g`` whose bit string is :func:`canonical_form`."""
    form = canonical_form(g)
    n = form[0]
    npairs = n * (n - 1) // 2
    value = int.from_bytes(form[1:], "big") if npairs else 0
    mask = 0
    for t in range(npairs):
        if value >> (npairs - 1 - t) & 1:
            mask |= 1 << t
    return from_mask(n, mask)


# -- random generators -----------------------------------------------------------


def random_k_degenerate(n: int, k: int, seed: int) -> Graph:
    """Vertex j joins a uniform random subset, of uniform size in [0, min(k, j)], of earlier vertices."""
    if n < 1 or k < 0:
        raise ValueError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    rng = random.Random(seed)
    edges = []
    for j in range(1, n):
        size = rng.randint(0, min(k, j))
        edges.extend((i, j) for i in rng.sample(range(j), size))
    return from_edge_list(n, edges)


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return from_edge_list(n, [(i, j) for j in range(1, n) for i in range(j) if rng.random() < p])


def random_test_graphs(count: int, max_n: int = 32, seed: int = 0) -> list[Graph]:
    """Deterministic mix of G(n, p) graphs, k-degenerate graphs and unions with regular parts."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(1, max_n)
        kind = i % 3
        if kind == 0:
            out.append(random_graph(n, rng.random(), rng.randrange(1 << 30)))
        elif kind == 1:
            out.append(random_k_degenerate(n, rng.randint(0, max(n - 1, 0)), rng.randrange(1 << 30)))
        else:
            # circulant part makes regular components (the equality-heavy cases) common
            c = rng.randint(1, n)
            steps = rng.sample(range(1, c // 2 + 1), rng.randint(0, c // 2)) if c > 2 else []
            edges = {(min(v, (v + s) % c), max(v, (v + s) % c)) for v in range(c) for s in steps}
            edges = {e for e in edges if e[0] != e[1]}
            rest = random_graph(n - c, rng.random(), rng.randrange(1 << 30)) if n > c else None
            if rest is not None:
                edges |= {(u + c, v + c) for u, v in rest.edges()}
            out.append(from_edge_list(n, sorted(edges)))
    return out


# -- reports -------------------------------------------------------------------


@dataclass
class SearchReport:
    target: str
    n: int
    k: int | None
    mode: str
    graphs_scanned: int = 0
    graphs_in_scope: int = 0
    violation_count: int = 0
    violations: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)
    tightness: dict = field(default_factory=dict)
    min_positive_gap: float | None = None
    max_equal_gap: float | None = None
    closed_form: float | None = None
    extremal_graph: str | None = None
    extremal_value: float | None = None
    unique_up_to_iso: bool | None = None
    degenerate_scope: bool = False
    candidates: list = field(default_factory=list)
    best: list | None = None
    counters: dict = field(default_factory=dict)
    examples: dict = field(default_factory=dict)
    note: str = NOTE

    @property
    def verified(self) -> bool:
        return self.violation_count == 0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verified"] = self.verified
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> SearchReport:
        d = dict(d)
        d.pop("verified", None)
        return cls(**d)

    def histogram_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["bin", "count"])
        writer.writerows([label, self.tightness.get(label, 0)] for label in hist_labels())
        return buf.getvalue()

    def add_violation(self, mask: int, kind: str, detail: str) -> None:
        self.violation_count += 1
        self.violations.append({"graph6": encode_graph6(from_mask(self.n, mask)), "mask": mask,
                                "kind": kind, "detail": detail})

    def bump(self, name: str, count: int = 1) -> None:
        self.checks[name] = self.checks.get(name, 0) + int(count)

    def count(self, name: str, amount: int) -> None:
        self.counters[name] = self.counters.get(name, 0) + int(amount)


def _merge_opt(a, b, fn):
    if a is None:
        return b
    if b is None:
        return a
    return fn(a, b)


def merge_reports(a: SearchReport, b: SearchReport) -> SearchReport:
    """Combine two partial reports of the same sweep.  Associative and commutative."""
    if (a.target, a.n, a.k, a.mode) != (b.target, b.n, b.k, b.mode):
        raise ValueError("cannot merge reports of different sweeps")
    out = SearchReport(a.target, a.n, a.k, a.mode)
    out.graphs_scanned = a.graphs_scanned + b.graphs_scanned
    out.graphs_in_scope = a.graphs_in_scope + b.graphs_in_scope
    out.violation_count = a.violation_count + b.violation_count
    out.violations = sorted(a.violations + b.violations, key=lambda v: (v["mask"], v["kind"]))[:MAX_LISTED]
    out.checks = _add_dicts(a.checks, b.checks)
    out.counters = _add_dicts(a.counters, b.counters)
    out.tightness = _add_dicts(a.tightness, b.tightness)
    # each partial keeps its smallest masks, so the merged prefix is the global one
    out.examples = {key: _merge_examples(a.examples.get(key, []), b.examples.get(key, []))
                    for key in sorted(set(a.examples) | set(b.examples))}
    out.min_positive_gap = _merge_opt(a.min_positive_gap, b.min_positive_gap, min)
    out.max_equal_gap = _merge_opt(a.max_equal_gap, b.max_equal_gap, max)
    out.candidates = sorted(a.candidates + b.candidates, key=lambda c: c["mask"])
    out.best = _merge_opt(a.best, b.best, lambda x, y: max(x, y, key=lambda t: (t[0], -t[1])))
    out.closed_form = a.closed_form if a.closed_form is not None else b.closed_form
    out.degenerate_scope = a.degenerate_scope or b.degenerate_scope
    return out


def _merge_examples(x: list, y: list) -> list:
    by_mask = {e["mask"]: e for e in x + y}
    return [by_mask[mask] for mask in sorted(by_mask)[:MAX_LISTED]]


def _add_dicts(x: dict, y: dict) -> dict:
    return {key: x.get(key, 0) + y.get(key, 0) for key in sorted(set(x) | set(y))}


# -- shard kernels -----------------------------------------------------------------


def _new_partial(target, n, k, mode, closed=None) -> SearchReport:
    rep = SearchReport(target, n, k, mode, closed_form=closed)
    rep.degenerate_scope = k is not None and k >= n - 1
    return rep


def _gap_stats(rep: SearchReport, gaps: np.ndarray) -> None:
    pos = gaps[gaps > STRICT_MARGIN]
    eq = gaps[np.abs(gaps) <= STRICT_MARGIN]
    if pos.size:
        rep.min_positive_gap = _merge_opt(rep.min_positive_gap, float(pos.min()), min)
    if eq.size:
        rep.max_equal_gap = _merge_opt(rep.max_equal_gap, float(np.abs(eq).max()), max)


def _flag(rep: SearchReport, masks: np.ndarray, bad: np.ndarray, kind: str, detail) -> None:
    """Record each flagged graph; ``detail`` maps a batch index to a message."""
    idx = np.nonzero(bad)[0]
    for i in idx[:MAX_LISTED]:
        rep.add_violation(int(masks[i]), kind, detail(i))
    rep.violation_count += max(0, idx.size - MAX_LISTED)
    rep.bump(kind, idx.size)


def _scan_theorem(target, n, k, mode, masks) -> SearchReport:
    closed = bounds.closed_q_snk(n, k) if target == "q" else bounds.closed_mu_snk(n, k)
    rep = _new_partial(target, n, k, mode, closed)
    rep.graphs_scanned = int(masks.size)
    a = batch.adjacency_from_masks(n, masks)
    keep = batch.degeneracy(a) <= k
    a, masks = a[keep], masks[keep]
    rep.graphs_in_scope = int(masks.size)
    if not masks.size:
        return rep
    values = batch.q_values(a) if target == "q" else batch.mu_values(a)
    gaps = closed - values
    rep.tightness = _histogram(gaps)
    _gap_stats(rep, gaps)
    best = int(np.argmax(values))
    first = int(np.nonzero(values == values[best])[0][0])
    rep.best = [float(values[first]), int(masks[first])]
    for i in np.nonzero(gaps <= STRICT_MARGIN)[0]:
        g = from_mask(n, int(masks[i]))
        rep.candidates.append({"mask": int(masks[i]), "value": float(values[i]),
                               "canonical": canonical_form(g).hex()})
    return rep


def _scan_bound(n, mode, masks) -> SearchReport:
    rep = _new_partial("bound", n, None, mode)
    rep.graphs_scanned = rep.graphs_in_scope = int(masks.size)
    a = batch.adjacency_from_masks(n, masks)
    deg = batch.degrees(a)
    m = deg.sum(axis=1) // 2
    lo, hi = deg.min(axis=1), deg.max(axis=1)
    q = batch.q_values(a)
    mu = batch.mu_values(a)
    main = bounds.main_bound(n, m, lo, hi)
    root = bounds.main_quadratic_root(n, m, lo, hi)
    values = {
        "cor1": bounds.cor1_bound(n, m, lo),
        "cor2": bounds.cor2_bound(m, hi),
        "lipa": bounds.lipa_bound(n, m, lo, hi),
        "llt": bounds.llt_bound(n, m, lo, hi),
    }
    thm_a = bounds.thm_a_mu_bound(n, m, lo)

    gaps = main - q
    rep.tightness = _histogram(gaps)
    _gap_stats(rep, gaps)
    _flag(rep, masks, q > main + SOUND_TOL, "main_unsound", lambda i: f"q={q[i]!r} > bound_main={main[i]!r}")

    codes = batch.main_certificates(a)
    equal = np.abs(gaps) <= STRICT_MARGIN
    _flag(rep, masks, equal != (codes != batch.CERT_NONE), "main_certificate_mismatch",
          lambda i: f"certificate={batch.CERT_NAMES[int(codes[i])]}, |bound-q|={abs(gaps[i])!r}")
    for code, name in batch.CERT_NAMES.items():
        rep.count(f"certificate_{name}", int((codes == code).sum()))
    rep.count("equality_main", int(equal.sum()))

    # the literal condition is tracked, not treated as a violation
    literal = batch.literal_condition(codes)
    literal_off = equal != literal
    rep.count("literal_condition_mismatch", int(literal_off.sum()))
    rep.examples["literal_condition_mismatch"] = [
        {"mask": int(x), "graph6": encode_graph6(from_mask(n, int(x)))} for x in masks[literal_off][:MAX_LISTED]]
    rep.count("root_equality_vs_literal_condition_mismatch", int(((np.abs(root - q) <= STRICT_MARGIN) != literal).sum()))

    for name, val in values.items():
        _flag(rep, masks, q > val + SOUND_TOL, f"{name}_unsound", lambda i, v=val: f"q={q[i]!r} > {v[i]!r}")
    _flag(rep, masks, mu > thm_a + SOUND_TOL, "thm_a_mu_unsound", lambda i: f"mu={mu[i]!r} > {thm_a[i]!r}")
    for name in ("lipa", "llt"):
        val = values[name]
        _flag(rep, masks, main > val + SOUND_TOL, f"not_dominating_{name}",
              lambda i, v=val: f"bound_main={main[i]!r} > {v[i]!r}")
    for name in ("cor1", "cor2"):
        val = values[name]
        _flag(rep, masks, main > val + SOUND_TOL, f"main_above_{name}",
              lambda i, v=val: f"bound_main={main[i]!r} > {v[i]!r}")

    cor1_equal = np.abs(values["cor1"] - q) <= STRICT_MARGIN
    _flag(rep, masks, cor1_equal != batch.cor1_certificates(a), "cor1_certificate_mismatch",
          lambda i: f"|bound_cor1-q|={abs(values['cor1'][i] - q[i])!r}")
    thm_a_equal = np.abs(thm_a - mu) <= STRICT_MARGIN
    _flag(rep, masks, thm_a_equal != literal, "thm_a_certificate_mismatch",
          lambda i: f"|bound_thm_a-mu|={abs(thm_a[i] - mu[i])!r}")

    rows = batch.m_rowsums(a)
    ceiling = 4 * m - 2 * (n - 1 + hi) * lo
    _flag(rep, masks, np.any(rows > ceiling[:, None], axis=1), "rowsum_exceeds",
          lambda i: f"max rowsum {rows[i].max()} > {ceiling[i]}")
    quad = bounds.qin_quadratic(q, n, m, lo, hi)
    _flag(rep, masks, quad > STRICT_MARGIN, "qin_positive", lambda i: f"quadratic at q = {quad[i]!r}")
    return rep


def _scan_edges(n, k, mode, masks) -> SearchReport:
    rep = _new_partial("edges", n, k, mode)
    rep.closed_form = float(max_degenerate_edges(n, k)) if n >= k else None
    rep.graphs_scanned = int(masks.size)
    a = batch.adjacency_from_masks(n, masks)
    keep = batch.degeneracy(a) <= k
    a, masks = a[keep], masks[keep]
    rep.graphs_in_scope = int(masks.size)
    if not masks.size:
        return rep
    edges = batch.degrees(a).sum(axis=1) // 2
    cap = max_degenerate_edges(n, k)
    _flag(rep, masks, edges > cap, "edge_bound_exceeded", lambda i: f"e={edges[i]} > {cap}")
    top = int(edges.max())
    first = int(np.nonzero(edges == top)[0][0])
    rep.best = [float(top), int(masks[first])]
    rep.count("attained", int((edges == cap).sum()))
    snk_masks = _snk_masks(n, k)
    rep.count("snk_attains", int(np.isin(masks[edges == cap], snk_masks).sum()))

    done = batch.complete_to_maximal(a, k)
    dd = batch.degrees(done)
    _flag(rep, masks, dd.sum(axis=1) // 2 != cap, "completion_edge_count",
          lambda i: f"completion has {dd[i].sum() // 2} edges, expected {cap}")
    _flag(rep, masks, batch.degeneracy(done) > k, "completion_not_degenerate", lambda i: "degeneracy grew")
    if n >= k + 1:
        _flag(rep, masks, dd.min(axis=1) != k, "completion_min_degree",
              lambda i: f"min degree {dd[i].min()} != {k}")
    return rep


@lru_cache(maxsize=None)
def _snk_masks(n: int, k: int) -> np.ndarray:
    if not 1 <= k <= n:
        return np.zeros(0, dtype=np.uint64)
    mask = make_snk(n, k).upper_mask()
    return np.array(sorted({mask, orbit_min(n, mask)}), dtype=np.uint64)


def scan_shard(target: str, n: int, k: int | None, mode: str, lo: int, hi: int) -> SearchReport:
    """Scan positions ``lo .. hi-1`` of the sweep's mask list."""
    masks = scope_masks(n, mode == "iso")[lo:hi]
    if target in ("q", "mu"):
        return _scan_theorem(target, n, k, mode, masks)
    if target == "bound":
        return _scan_bound(n, mode, masks)
    if target == "edges":
        return _scan_edges(n, k, mode, masks)
    raise ScopeError(f"unknown target {target!r}")


def _scan_args(args):
    return scan_shard(*args)


# -- finalisation -------------------------------------------------------------------


def finalize(rep: SearchReport) -> SearchReport:
    """Turn candidate lists into verdicts once every shard has been merged."""
    n, k = rep.n, rep.k
    if rep.target in ("q", "mu"):
        snk = make_snk(n, k)
        snk_canon = canonical_form(snk).hex()
        classes = sorted({c["canonical"] for c in rep.candidates})
        for c in rep.candidates:
            if c["canonical"] != snk_canon:
                rep.add_violation(c["mask"], "non_extremal_graph_within_margin",
                                  f"value {c['value']!r} within {STRICT_MARGIN} of {rep.closed_form!r}")
                rep.bump("non_extremal_graph_within_margin")
            elif abs(c["value"] - rep.closed_form) > VALUE_TOL:
                rep.add_violation(c["mask"], "closed_form_mismatch",
                                  f"value {c['value']!r} vs closed form {rep.closed_form!r}")
                rep.bump("closed_form_mismatch")
        if rep.graphs_in_scope and snk_canon not in classes:
            rep.violation_count += 1
            rep.bump("extremal_graph_missing")
        rep.unique_up_to_iso = classes == [snk_canon]
        if rep.best is not None:
            best = canonical_graph(from_mask(n, rep.best[1]))
            rep.extremal_graph = encode_graph6(best)
            rep.extremal_value = q_index(best) if rep.target == "q" else mu_index(best)
    elif rep.target == "edges" and rep.best is not None:
        rep.extremal_value = rep.best[0]
        cap = max_degenerate_edges(n, k)
        if rep.graphs_in_scope and int(rep.best[0]) != cap:
            rep.violation_count += 1
            rep.bump("edge_bound_not_attained")
        if rep.counters.get("snk_attains"):
            rep.extremal_graph = encode_graph6(canonical_graph(make_snk(n, k)))
        else:
            rep.extremal_graph = encode_graph6(canonical_graph(from_mask(n, rep.best[1])))
    rep.violations = sorted(rep.violations, key=lambda v: (v["mask"], v["kind"]))[:MAX_LISTED]
    # per-labelling details are dropped so labelled and iso-reduced sweeps compare equal
    rep.best = None
    rep.candidates = []
    return rep


# -- drivers ----------------------------------------------------------------------------


def default_workers() -> int:
    env = os.environ.get("QINDEX_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _check_scope(target, n, k, long_run):
    if target not in TARGETS:
        raise ScopeError(f"target must be one of {TARGETS}, got {target!r}")
    check_n(n, long_run)
    if target in ("q", "mu"):
        if k is None or not 1 <= k <= n:
            raise ScopeError(f"theorem sweeps need 1 <= k <= n, got n={n}, k={k}")
    elif target == "edges":
        if k is None or not 0 <= k <= n:
            raise ScopeError(f"edge-bound sweeps need 0 <= k <= n, got n={n}, k={k}")


def run_sweep(
    target: str,
    n: int,
    k: int | None = None,
    iso_reduce: bool = False,
    workers: int = 1,
    shard_size: int = SHARD_SIZE,
    long_run: bool = False,
    checkpoint: str | os.PathLike | None = None,
) -> SearchReport:
    _check_scope(target, n, k, long_run)
    if target == "bound":
        k = None
    mode = "iso" if iso_reduce else "labeled"
    total = scope_masks(n, iso_reduce).size
    shards = [(target, n, k, mode, lo, min(lo + shard_size, total)) for lo in range(0, total, shard_size)]
    if target in ("q", "mu"):
        closed = bounds.closed_q_snk(n, k) if target == "q" else bounds.closed_mu_snk(n, k)
    else:
        closed = None
    report = _new_partial(target, n, k, mode, closed)
    if target == "edges":
        report.closed_form = float(max_degenerate_edges(n, k))

    start = 0
    ckpt = Path(checkpoint) if checkpoint else None
    if ckpt is not None and ckpt.exists():
        start, report = _load_checkpoint(ckpt, report)
        shards = [s for s in shards if s[4] >= start]
    since = 0
    for part in _map_shards(shards, workers):
        report = merge_reports(report, part)
        since += part.graphs_scanned
        if ckpt is not None and since >= CHECKPOINT_EVERY:
            _save_checkpoint(ckpt, report.graphs_scanned - 1, report)
            since = 0
    if ckpt is not None:
        _save_checkpoint(ckpt, report.graphs_scanned - 1, report)
    return finalize(report)


def _map_shards(shards, workers):
    if workers <= 1 or len(shards) <= 1:
        for s in shards:
            yield scan_shard(*s)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves shard order
        yield from pool.map(_scan_args, shards)


def _save_checkpoint(path: Path, last: int, report: SearchReport) -> None:
    path.write_text(f"last_completed_mask {last}\n")
    Path(str(path) + ".report.json").write_text(json.dumps(report.to_dict(), sort_keys=True))


def _load_checkpoint(path: Path, fresh: SearchReport) -> tuple[int, SearchReport]:
    key, value = path.read_text().split()
    if key != "last_completed_mask":
        raise ValueError(f"bad checkpoint file {path}")
    side = Path(str(path) + ".report.json")
    if not side.exists():
        return 0, fresh
    report = SearchReport.from_dict(json.loads(side.read_text()))
    if (report.target, report.n, report.k, report.mode) != (fresh.target, fresh.n, fresh.k, fresh.mode):
        raise ValueError("checkpoint belongs to a different sweep")
    log.info("resuming after position %s", value)
    return int(value) + 1, report


def verify_theorem_q(n: int, k: int, **kw) -> SearchReport:
    return run_sweep("q", n, k, **kw)


def verify_theorem_mu(n: int, k: int, **kw) -> SearchReport:
    return run_sweep("mu", n, k, **kw)


def verify_bound_universal(n: int, **kw) -> SearchReport:
    return run_sweep("bound", n, None, **kw)


def verify_edge_bound(n: int, k: int, **kw) -> SearchReport:
    return run_sweep("edges", n, k, **kw)
