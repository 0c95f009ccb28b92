"""Benchmark harness: median-of-samples timing with warmup discard,
timer-overhead calibration, and CSV + figure reporting.

The measurement discipline is portable: a monotonic clock instead of
cycle counters, per-measurement repeat counts auto-tuned until timer
overhead is below 10%, the first ``warmup_discard`` measurements thrown
away, and the median (with a nonparametric confidence interval) reported
per element.  Inputs are regenerated randomly per suite so table-touching
operations see a uniform access pattern.
"""

from __future__ import annotations

import csv
import io
import math
import os
import random
import time

from . import registry
from .baselines import (AdHashParams, MuHashParams, adhash_security_bits,
                        adhash_update, ecmh_security_bits, nfs_security_bits)
from .multiset import ECMHParams, UpdateOp, digest_new, digest_update, hash_multiset

CSV_COLUMNS = ["construction", "param", "security_bits", "operation", "batch",
               "ns_per_elem", "samples", "ci_half_width"]
DEFAULT_SUITES = [
    ("ecmh", "toy13", "single", 1),
    ("ecmh", "toy13", "batch", 256),
    ("ecmh", "sect163k1", "single", 1),
    ("ecmh", "sect163k1", "batch", 256),
    ("ecmh", "sect163k1", "blinded", 1),
    ("ecmh", "sect233k1", "single", 1),
    ("ecmh", "sect233k1", "batch", 256),
    ("ecmh", "sect233k1", "blinded", 1),
    ("muhash", "p1024", "insert", 1),
    ("muhash", "p3072", "insert", 1),
    ("adhash", "n128", "update", 1),
]
MIN_ELEMENTS = 1024  # random elements per suite (uniform table access)


class BenchConfig:
    """Suites plus the measurement discipline knobs."""

    def __init__(self, suites=None, warmup_discard: int = 2000,
                 min_samples: int = 1000, target_ci: float = 0.001):
        if min_samples < 100:
            raise ValueError("min_samples must be at least 100")
        if warmup_discard < 0:
            raise ValueError("warmup_discard must be nonnegative")
        self.suites = list(suites) if suites is not None else list(DEFAULT_SUITES)
        self.warmup_discard = warmup_discard
        self.min_samples = min_samples
        self.target_ci = target_ci


class BenchRecord:
    """One suite's result; the CSV row plus a degraded-precision flag."""

    def __init__(self, construction, param, security_bits, operation, batch,
                 ns_per_elem, samples, ci_half_width, degraded=False):
        if ns_per_elem <= 0:
            raise ValueError("ns_per_elem must be positive")
        self.construction = construction
        self.param = param
        self.security_bits = security_bits
        self.operation = operation
        self.batch = batch
        self.ns_per_elem = ns_per_elem
        self.samples = samples
        self.ci_half_width = ci_half_width
        self.degraded = degraded

    def row(self):
        return [self.construction, self.param, "%.1f" % self.security_bits,
                self.operation, str(self.batch), "%.3f" % self.ns_per_elem,
                str(self.samples), "%.3f" % self.ci_half_width]

    def __repr__(self):
        return "<BenchRecord %s/%s %s b%d: %.1f ns/elem>" % (
            self.construction, self.param, self.operation, self.batch, self.ns_per_elem)


def timer_overhead_ns(trials: int = 1000) -> float:
    """Median cost of one back-to-back clock read pair."""
    deltas = []
    for _ in range(trials):
        t0 = time.perf_counter_ns()
        t1 = time.perf_counter_ns()
        deltas.append(t1 - t0)
    deltas.sort()
    return float(deltas[len(deltas) // 2])


def _noop():
    return None


def call_overhead_ns(repeats: int, trials: int = 200) -> float:
    """Median per-iteration cost of the timing loop calling a no-op."""
    fn = _noop  # local binding, same lookup cost as the measurement loop
    spans = []
    for _ in range(trials):
        t0 = time.perf_counter_ns()
        for _ in range(repeats):
            fn()
        spans.append(time.perf_counter_ns() - t0)
    spans.sort()
    return spans[len(spans) // 2] / repeats


def measure(fn, elems_per_call: int, config: BenchConfig):
    """Median ns/element of fn() with the full discipline applied.

    Returns (ns_per_elem, samples, ci_half_width, degraded).  fn is
    repeated within each measurement until the clock overhead is below
    10% of the measured span; the timing-loop call overhead (measured
    against a no-op) is subtracted from every sample.
    """
    overhead = timer_overhead_ns()
    floor = max(10 * overhead, 20000.0)
    fn()  # warm before tuning: the first call is not representative
    repeats = 1
    while True:
        spans = []
        for _ in range(5):
            t0 = time.perf_counter_ns()
            for _ in range(repeats):
                fn()
            spans.append(time.perf_counter_ns() - t0)
        spans.sort()
        if spans[2] >= floor or repeats >= 1 << 16:
            break
        repeats *= 2
    loop_cost = call_overhead_ns(repeats)
    total = config.warmup_discard + config.min_samples
    samples = []
    for i in range(total):
        t0 = time.perf_counter_ns()
        for _ in range(repeats):
            fn()
        samples.append(time.perf_counter_ns() - t0 - overhead - repeats * loop_cost)
    samples = sorted(samples[config.warmup_discard:])
    n = len(samples)
    median = samples[n // 2] / (repeats * elems_per_call)
    # nonparametric CI for the median via binomial order statistics
    half_rank = int(math.ceil(1.96 * math.sqrt(n) / 2))
    lo = samples[max(0, n // 2 - half_rank)] / (repeats * elems_per_call)
    hi = samples[min(n - 1, n // 2 + half_rank)] / (repeats * elems_per_call)
    ci = (hi - lo) / 2
    # degraded: clock ticks are too coarse relative to one measurement span
    resolution_ns = time.get_clock_info("perf_counter").resolution * 1e9
    span_ns = max(samples[n // 2], 1)
    degraded = resolution_ns / span_ns > config.target_ci
    return median, n, ci, degraded


def _random_elements(rng, count: int) -> list[bytes]:
    return [rng.getrandbits(128).to_bytes(16, "little") for _ in range(count)]


def _suite_fn(construction, param, operation, batch, rng):
    """Build (callable, elems_per_call, security_bits) for one suite.

    Each call consumes the next `batch` elements of a >= 1024-element
    random pool, so repeated measurements walk the tables uniformly
    instead of hammering one input.
    """
    pool = _random_elements(rng, max(MIN_ELEMENTS, batch))
    npool = len(pool)
    cursor = [0]

    def take():
        i = cursor[0]
        cursor[0] = (i + batch) % npool
        return pool[i:i + batch] or pool[:batch]

    if construction == "noop":
        return (lambda: None), 1, 0.0
    if construction == "ecmh":
        curve = registry.get_curve(param)
        params = ECMHParams(curve, key=b"bench-key")
        bits = ecmh_security_bits(curve.field.m)
        if operation == "batch":
            return (lambda: hash_multiset(params, [(e, 1) for e in take()],
                                          batch_size=batch)), batch, bits
        if operation == "blinded":
            brng = random.Random(rng.getrandbits(64))
            return (lambda: hash_multiset(params, [(e, 1) for e in take()],
                                          blinded=True, rng=brng)), batch, bits
        # single: incremental one-at-a-time updates into a running digest
        state = [digest_new(params)]

        def run_single():
            for e in take():
                state[0] = digest_update(state[0], UpdateOp(e, 1))
        return run_single, batch, bits
    if construction == "muhash":
        p = registry.get_muhash_prime(param)
        mp = MuHashParams(p, key=b"bench-key", name=param)
        bits = nfs_security_bits(mp.bits)
        acc = [1]

        def run_muhash():
            y = acc[0]
            for e in take():
                y = mp.redc(y * mp.element(e))
            acc[0] = y
        return run_muhash, batch, bits
    if construction == "adhash":
        n = registry.get_adhash_bits(param)
        ap = AdHashParams(n, key=b"bench-key", name=param)
        bits = adhash_security_bits(n)
        acc = [0]

        def run_adhash():
            a = acc[0]
            for e in take():
                a = adhash_update(ap, a, e, 1)
            acc[0] = a
        return run_adhash, batch, bits
    raise ValueError("unknown construction %r" % construction)


def run_bench(config: BenchConfig, csv_path=None, fig_path=None, rng=None,
              log=None) -> list[BenchRecord]:
    """Run every suite; optionally write the CSV and render the figure."""
    rng = rng or random.Random(0xBE7C)
    records = []
    for construction, param, operation, batch in config.suites:
        fn, elems, bits = _suite_fn(construction, param, operation, batch, rng)
        fn()  # one untimed call: first-use compilation and table build
        med, n, ci, degraded = measure(fn, elems, config)
        rec = BenchRecord(construction, param, bits, operation, batch,
                          max(med, 1e-3), n, ci, degraded)
        records.append(rec)
        if log:
            log("%s%s" % (rec, " [degraded precision]" if degraded else ""))
    if csv_path:
        with open(csv_path, "w", newline="", encoding="utf-8") as fh:
            _write_csv(fh, records)
    if fig_path:
        render_figure(records, fig_path)
    return records


def _write_csv(fh, records):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow(rec.row())


def records_to_csv(records) -> str:
    buf = io.StringIO()
    _write_csv(buf, records)
    return buf.getvalue()


def parse_records(text: str) -> list[BenchRecord]:
    """Parse the CSV format back into records (round-trip of the writer)."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != CSV_COLUMNS:
        raise ValueError("unrecognized benchmark CSV header")
    out = []
    for row in rows[1:]:
        c, p, bits, op, batch, ns, n, ci = row
        out.append(BenchRecord(c, p, float(bits), op, int(batch),
                               float(ns), int(n), float(ci)))
    return out


def render_figure(records, fig_path):
    """Bar chart of ns/element per suite, written next to the CSV."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = ["%s\n%s %s" % (r.construction, r.param, r.operation) for r in records]
    values = [r.ns_per_elem for r in records]
    errors = [r.ci_half_width for r in records]
    fig, ax = plt.subplots(figsize=(max(6, 1.1 * len(records)), 4.5))
    ax.bar(range(len(records)), values, yerr=errors, capsize=3, color="#4878a8")
    ax.set_xticks(range(len(records)))
    ax.set_xticklabels(labels, fontsize=7)
    ax.set_ylabel("ns per element (median)")
    ax.set_yscale("log")
    ax.set_title("multiset hash cost per element")
    fig.tight_layout()
    fig.savefig(fig_path, dpi=150)
    plt.close(fig)
    return os.path.abspath(fig_path)
