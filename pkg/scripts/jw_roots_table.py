"""Where the Jones-Wenzl recursion breaks, for q^(1/2) a primitive m-th root of unity."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from statedskein import tl
from statedskein.ring import CyclotomicField


@dataclass
class Config:
    m_min: int = 3
    m_max: int = 24
    n_max: int = 6


def first_failure(m: int, n_max: int) -> int | None:
    ring = CyclotomicField(m)
    N = ring.spec.N
    for n in range(min(n_max, N) + 1):
        try:
            tl.jones_wenzl(n, ring)
        except tl.NonInvertible:
            return n
    return None


def main(cfg: Config):
    print(f"{'m':>4} {'N':>4} {'first n without f_n':>20}")
    mismatches = 0
    for m in range(cfg.m_min, cfg.m_max + 1):
        ring = CyclotomicField(m)
        N = ring.spec.N
        n = first_failure(m, cfg.n_max)
        # with q^4 = 1 no quantum integer vanishes, so nothing fails
        expected = N if 1 < N <= cfg.n_max else None
        flag = "" if n == expected else "  <-- unexpected"
        mismatches += bool(flag)
        print(f"{m:>4} {N:>4} {str(n):>20}{flag}")
    return mismatches


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-min", type=int, default=3)
    ap.add_argument("--m-max", type=int, default=24)
    ap.add_argument("--n-max", type=int, default=6)
    a = ap.parse_args()
    raise SystemExit(1 if main(Config(a.m_min, a.m_max, a.n_max)) else 0)
