"""Seeded Monte Carlo estimate of the FG-squircle area.

Samples come from numpy's counter-based Philox generator, one independent
stream per fixed-size chunk spawned from the seed, so the estimate depends on
(seed, n) only and not on how many workers evaluate the chunks.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import SquircleParams, contains

CHUNK = 1_000_000


@dataclass(frozen=True)
class MonteCarloArea:
    area: float
    half_width: float  # 3 sigma
    n: int
    hits: int


def _count_hits(p: SquircleParams, seq: np.random.SeedSequence, m: int) -> int:
    gen = np.random.Generator(np.random.Philox(seq))
    pts = gen.random((m, 2)) * p.r
    return int(np.count_nonzero(contains(p, pts[:, 0], pts[:, 1])))


def area_monte_carlo(p: SquircleParams, n: int, seed: int, workers: int = 1) -> MonteCarloArea:
    """Hit-or-miss estimate over the first quadrant [0, r]^2, times four."""
    if n < 1:
        raise ValueError(f"need at least one sample, got {n}")
    sizes = [CHUNK] * (n // CHUNK)
    if n % CHUNK:
        sizes.append(n % CHUNK)
    streams = np.random.SeedSequence(seed).spawn(len(sizes))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(lambda job: _count_hits(p, *job), zip(streams, sizes)))
    else:
        hits = sum(_count_hits(p, seq, m) for seq, m in zip(streams, sizes))
    frac = hits / n
    box = 4.0 * p.r * p.r
    return MonteCarloArea(area=box * frac,
                          half_width=3.0 * box * math.sqrt(frac * (1.0 - frac) / n),
                          n=n, hits=hits)
