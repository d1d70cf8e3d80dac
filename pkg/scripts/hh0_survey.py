"""Classify every PBW monomial (and q-scaled commutators) of bounded degree in HH_0."""

from __future__ import annotations

import argparse
import collections
import json
from dataclasses import dataclass
from pathlib import Path

from statedskein import hh0
from statedskein.oq import OqElement, commutator
from statedskein.cutting import laurent_gcd
from statedskein.ring import divexact


@dataclass
class Config:
    degree: int = 2
    out: Path | None = None


def survey(cfg: Config) -> dict:
    rows = []
    mons = hh0.monomials_up_to(cfg.degree)
    for m in mons:
        cert = hh0.tau(OqElement.monomial(m), cfg.degree)
        rows.append({"element": str(m), "verdict": cert.verdict.value})
    # torsion: a commutator g*p with non-unit content g leaves p nonzero but g*p zero
    gens = [OqElement.gen(g) for g in "abcd"]
    for i, x in enumerate(gens):
        for y in gens[i + 1 :]:
            c = commutator(x, y)
            if not c:
                continue
            g = laurent_gcd(list(c.terms.values()))
            p = OqElement({m: divexact(v, g) for m, v in c.terms.items()})
            for label, el in ((str(p), p), (f"({g})*({p})", p.scale(g))):
                cert = hh0.tau(el, cfg.degree)
                rows.append({"element": label, "verdict": cert.verdict.value, "witness": cert.witness_str()})
    counts = collections.Counter(r["verdict"] for r in rows)
    return {"degree": cfg.degree, "counts": dict(counts), "rows": rows}


def main(cfg: Config) -> dict:
    rep = survey(cfg)
    for r in rep["rows"]:
        print(f"{r['verdict']:>8}  {r['element']}" + (f"   {r['witness']}" if r.get("witness") else ""))
    print("totals:", rep["counts"])
    if cfg.out is not None:
        cfg.out.write_text(json.dumps(rep, indent=2))
    return rep


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degree", type=int, default=2)
    ap.add_argument("--out", type=Path)
    a = ap.parse_args()
    main(Config(a.degree, a.out))
