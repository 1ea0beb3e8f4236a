"""Timing the elimination pipeline against Buchberger-Moeller on random point sets."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .gbuilder import groebner_lagrange
from .oracle import bm_vanishing_ideal
from .polyring import MonomialOrdering, count_ops


@dataclass
class BenchRow:
    d: int
    n: int
    kind: str
    instance: int
    pipeline_s: float
    oracle_s: float
    pipeline_ops: int
    oracle_ops: int
    equal: bool

    @property
    def ratio(self) -> float:
        return self.pipeline_s / self.oracle_s if self.oracle_s else float("inf")


def random_points(rng: random.Random, d: int, n: int, radius: int = 5) -> list[tuple[int, ...]]:
    """n distinct integer points with coordinates in [-radius, radius] (widened if too few)."""
    while (2 * radius + 1) ** d < n:
        radius += 1
    pts: list[tuple[int, ...]] = []
    seen = set()
    while len(pts) < n:
        p = tuple(rng.randint(-radius, radius) for _ in range(d))
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return pts


def make_instances(seed: int, dims, sizes, kinds, repeats: int = 1):
    rng = random.Random(seed)
    out = []
    for d in dims:
        for n in sizes:
            for kind in kinds:
                for r in range(repeats):
                    out.append((d, n, kind, r, random_points(rng, d, n)))
    return out


def run_instance(inst) -> BenchRow:
    d, n, kind, r, pts = inst
    ordering = MonomialOrdering.default(kind, d)
    with count_ops() as ops:
        t0 = time.perf_counter()
        a = groebner_lagrange(pts, ordering)
        t1 = time.perf_counter()
    pipeline_ops = ops[0]
    with count_ops() as ops:
        t2 = time.perf_counter()
        b = bm_vanishing_ideal(pts, ordering)
        t3 = time.perf_counter()
    return BenchRow(d, n, kind, r, t1 - t0, t3 - t2, pipeline_ops, ops[0], a.same_basis(b))


def run_bench(seed: int = 1, dims=(2,), sizes=(4, 8, 16), kinds=("grlex",), repeats: int = 1,
              jobs: int = 1) -> list[BenchRow]:
    instances = make_instances(seed, dims, sizes, kinds, repeats)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(run_instance, instances))
    return [run_instance(i) for i in instances]


def format_table(rows: list[BenchRow]) -> str:
    header = ("d", "n", "order", "#", "pipeline s", "oracle s", "ratio",
              "pipeline ops", "oracle ops", "equal")
    body = [(str(r.d), str(r.n), r.kind, str(r.instance), f"{r.pipeline_s:.4f}",
             f"{r.oracle_s:.4f}", f"{r.ratio:.2f}", str(r.pipeline_ops), str(r.oracle_ops),
             "yes" if r.equal else "NO") for r in rows]
    widths = [max(len(h), *(len(b[i]) for b in body)) if body else len(h)
              for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.rjust(w) for c, w in zip(b, widths)) for b in body]
    return "\n".join(lines)
