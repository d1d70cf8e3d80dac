"""Run the verification suite in several coefficient modes and save reports."""

from __future__ import annotations

import argparse
import json
from dataclasses import dataclass, field
from pathlib import Path

from statedskein import verify
from statedskein.ring import CyclotomicSpec


@dataclass
class Config:
    moduli: list[int] = field(default_factory=lambda: [16, 24, 40])
    kmax: int = 4
    out: Path = Path("results")
    jobs: int = 1


def main(cfg: Config) -> bool:
    cfg.out.mkdir(parents=True, exist_ok=True)
    modes = [None] + [CyclotomicSpec(m) for m in cfg.moduli]
    all_ok = True
    for spec in modes:
        rep = verify.run_suite(None, verify.SuiteConfig(spec=spec, kmax=cfg.kmax), jobs=cfg.jobs)
        name = rep["ring"].replace(":", "_")
        (cfg.out / f"verify_{name}.json").write_text(json.dumps(rep, indent=2, default=str))
        failed = [n for n, c in rep["checks"].items() if c["status"] != "pass"]
        print(f"{rep['ring']:>10}: {'all pass' if not failed else 'FAILED ' + ', '.join(failed)} ({rep['wall_time']} s)")
        all_ok &= not failed
    return all_ok


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--moduli", type=int, nargs="*", default=[16, 24, 40])
    ap.add_argument("--kmax", type=int, default=4)
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--jobs", type=int, default=1)
    a = ap.parse_args()
    raise SystemExit(0 if main(Config(a.moduli, a.kmax, a.out, a.jobs)) else 1)
