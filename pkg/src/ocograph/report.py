"""Scaling measurements for the tree algorithms, as CSV rows and a figure."""

from __future__ import annotations

import csv
import gc
import random
import time
import tracemalloc
from dataclasses import asdict, dataclass

from .algorithms import cotree_isomorphic, label_coloring
from .cotree import CoExpr, postorder, random_canonical, relabel_tree, shuffle_unions

__all__ = ["ScalingRow", "measure_scaling", "write_csv", "plot_scaling", "growth_ratios"]

OPERATIONS = ("label_coloring", "cotree_isomorphic")


@dataclass(frozen=True)
class ScalingRow:
    operation: str
    leaves: int
    nodes: int
    seconds: float
    peak_bytes: int

    @property
    def bytes_per_node(self) -> float:
        return self.peak_bytes / self.nodes


def _timed(fn, *args, repeats: int = 1) -> float:
    best = float("inf")
    for _ in range(repeats):
        gc.collect()
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def _peak(fn, *args) -> int:
    gc.collect()
    tracemalloc.start()
    try:
        fn(*args)
        return tracemalloc.get_traced_memory()[1]
    finally:
        tracemalloc.stop()


def _workload(n: int, seed: int) -> tuple[CoExpr, CoExpr, int]:
    t = random_canonical(n, seed)
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    twin = relabel_tree(shuffle_unions(t, rng), perm)
    nodes = sum(1 for _ in postorder(t))
    return t, twin, nodes


def measure_scaling(
    sizes: list[int],
    seed: int = 0,
    memory: bool = True,
    repeats: int = 1,
) -> list[ScalingRow]:
    """Time (and optionally trace peak memory of) both operations per size.

    The isomorphism test compares a tree with a leaf-renamed copy whose
    Union children are shuffled, which forces the full level-by-level pass.
    Reported time is the best of ``repeats`` runs.
    """
    rows = []
    for n in sizes:
        t, twin, nodes = _workload(n, seed)
        for op in OPERATIONS:
            args = (t,) if op == "label_coloring" else (t, twin)
            fn = label_coloring if op == "label_coloring" else cotree_isomorphic
            seconds = _timed(fn, *args, repeats=repeats)
            peak = _peak(fn, *args) if memory else 0
            rows.append(ScalingRow(op, n, nodes, seconds, peak))
        del t, twin
    return rows


def growth_ratios(rows: list[ScalingRow]) -> dict[str, list[float]]:
    """Time ratio between successive sizes, per operation."""
    out: dict[str, list[float]] = {}
    for op in OPERATIONS:
        series = sorted((r for r in rows if r.operation == op), key=lambda r: r.leaves)
        out[op] = [b.seconds / a.seconds for a, b in zip(series, series[1:])]
    return out


def write_csv(rows: list[ScalingRow], stream) -> None:
    writer = csv.writer(stream)
    writer.writerow(["operation", "leaves", "nodes", "seconds", "peak_bytes", "bytes_per_node"])
    for r in rows:
        d = asdict(r)
        writer.writerow(
            [d["operation"], d["leaves"], d["nodes"], f"{d['seconds']:.6f}",
             d["peak_bytes"], f"{r.bytes_per_node:.1f}"]
        )


def plot_scaling(rows: list[ScalingRow], path: str) -> None:
    """Log-log wall-clock plot with a linear reference, plus memory per node."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, (ax_t, ax_m) = plt.subplots(1, 2, figsize=(9, 3.6))
    for op, marker in zip(OPERATIONS, ("o", "s")):
        series = sorted((r for r in rows if r.operation == op), key=lambda r: r.leaves)
        if not series:
            continue
        xs = [r.leaves for r in series]
        ax_t.loglog(xs, [r.seconds for r in series], marker=marker, label=op)
        if any(r.peak_bytes for r in series):
            ax_m.semilogx(xs, [r.bytes_per_node for r in series], marker=marker, label=op)
    if rows:
        base = min(rows, key=lambda r: r.leaves)
        xs = sorted({r.leaves for r in rows})
        ax_t.loglog(xs, [base.seconds * x / base.leaves for x in xs], "k--", lw=0.8, label="linear")
    ax_t.set_xlabel("leaves")
    ax_t.set_ylabel("seconds")
    ax_t.legend(frameon=False, fontsize=8)
    ax_m.set_xlabel("leaves")
    ax_m.set_ylabel("peak bytes per tree node")
    ax_m.set_ylim(bottom=0)
    ax_m.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
