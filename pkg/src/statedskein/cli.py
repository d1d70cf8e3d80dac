"""Command-line front end (``python -m statedskein`` or ``statedskein``)."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import bigon, cutting, hh0, oq, tl, verify
from .ring import CyclotomicField, CyclotomicSpec, parse_ring


@dataclass(frozen=True)
class RunConfig:
    ring: str = "generic"
    degree: int = 2
    kmax: int = 4
    json_path: Path | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.degree < 0 or self.kmax < 1 or self.jobs < 1:
            raise ValueError("bounds must be positive")
        parse_ring(self.ring)  # validates

    @property
    def spec(self) -> CyclotomicSpec | None:
        r = parse_ring(self.ring)
        return r.spec if isinstance(r, CyclotomicField) else None


def parse_element(text: str) -> oq.OqElement:
    """A JSON term list, or a sum of words such as ``ab + 2*bc``."""
    text = text.strip()
    if text.startswith("["):
        return oq.OqElement.from_json(json.loads(text))
    out = oq.OqElement()
    offset = 0
    for chunk in text.split("+"):
        body = chunk.strip()
        coef = 1
        if "*" in body and body.split("*", 1)[0].strip().lstrip("-").isdigit():
            head, body = body.split("*", 1)
            coef = int(head)
        elif body.startswith("-"):
            coef, body = -1, body[1:]
        try:
            x = oq.nf(body.strip()) if body.strip() != "1" else oq.OqElement.one()
        except ValueError as exc:
            raise ValueError(f"at offset {offset}: {exc}") from None
        out = out + x.scale(coef)
        offset += len(chunk) + 1
    return out


def parse_diagram(text: str) -> bigon.StatedTangle:
    path = Path(text)
    raw = path.read_text() if path.exists() else text
    return bigon.StatedTangle.from_json(json.loads(raw))


def cmd_jw(n: int, cfg: RunConfig) -> dict:
    # exact fractions in q are handled by the quantum-integer localization
    ring = tl.default_ring() if cfg.ring == "generic" else parse_ring(cfg.ring)
    try:
        f = tl.jones_wenzl(n, ring)
    except tl.NonInvertible as exc:
        return {"n": n, "ring": cfg.ring, "error": f"jones-wenzl recursion: {exc}"}
    return {"n": n, "ring": cfg.ring, "terms": len(f.terms), "element": f.to_json()}


def cmd_nf(word: str, cfg: RunConfig) -> dict:
    x = oq.nf(word)
    return {"word": word, "nf": str(x), "terms": x.to_json()}


def cmd_hopf(op: str, element: str, cfg: RunConfig) -> dict:
    x = parse_element(element)
    if op == "coproduct":
        r = oq.coproduct(x)
        return {"op": op, "input": str(x), "result": repr(r), "terms": r.to_json()}
    if op == "counit":
        r = oq.counit(x)
        return {"op": op, "input": str(x), "result": str(r), "terms": r.to_json()}
    if op == "antipode":
        r = oq.antipode(x)
        return {"op": op, "input": str(x), "result": str(r), "terms": r.to_json()}
    raise ValueError(f"unknown Hopf operation {op!r}")


def cmd_hh0(element: str, cfg: RunConfig) -> dict:
    x = parse_element(element)
    cert = hh0.tau(x, max(cfg.degree, x.degree()))
    return {"input": str(x), "verdict": cert.verdict.value, "witness": cert.witness_str(), "certificate": cert.to_json()}


def cmd_cut(diagram: str, pos: int, cfg: RunConfig) -> dict:
    t = parse_diagram(diagram)
    r = cutting.cut_state_sum(t, pos)
    return {"diagram": t.to_json(), "pos": pos, "result": repr(r), "terms": r.to_json()}


def cmd_verify(selector: list[str], cfg: RunConfig, N: int | None = None) -> dict:
    if selector == ["frobenius"] and N is not None:
        rep = verify.frobenius_kernel(N)
        return {"ring": cfg.ring, "checks": {"frobenius": {"status": "pass" if rep["ok"] else "fail", "certificate": rep}}, "passed": rep["ok"]}
    return verify.run_suite(selector, verify.SuiteConfig(spec=cfg.spec, kmax=cfg.kmax), jobs=cfg.jobs)


def _emit(result: dict, cfg: RunConfig, text: str):
    print(text)
    if cfg.json_path is not None:
        cfg.json_path.write_text(json.dumps(result, indent=2, default=str))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="statedskein", description="Exact skein and stated-skein computations.")
    p.add_argument("--ring", default="generic", help="generic | cyclo:<m> (m = order of q^(1/2))")
    p.add_argument("--degree", type=int, default=2, help="degree bound for HH0 searches")
    p.add_argument("--kmax", type=int, default=4, help="bound k+m for lemma checks")
    p.add_argument("--json", dest="json_path", type=Path, help="also write the result as JSON here")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for verify")
    sub = p.add_subparsers(dest="cmd", required=True)
    s = sub.add_parser("jw", help="Jones-Wenzl projector f_n")
    s.add_argument("n", type=int)
    s = sub.add_parser("nf", help="PBW normal form of a word in a,b,c,d")
    s.add_argument("word")
    s = sub.add_parser("hopf", help="coproduct / counit / antipode")
    s.add_argument("op", choices=["coproduct", "counit", "antipode"])
    s.add_argument("element")
    s = sub.add_parser("hh0", help="certified commutator-quotient test")
    s.add_argument("element")
    s = sub.add_parser("cut", help="cutting state sum of a stated diagram (JSON or file)")
    s.add_argument("diagram")
    s.add_argument("pos", type=int)
    s = sub.add_parser("verify", help="run verification checks")
    s.add_argument("selector", nargs="*", default=["all"], help="'all' or check names: " + ", ".join(sorted(verify.CHECKS)))
    s.add_argument("--N", type=int, help="N for a single frobenius report")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(args.ring, args.degree, args.kmax, args.json_path, args.jobs)
        if args.cmd == "jw":
            r = cmd_jw(args.n, cfg)
            text = r.get("error") or f"f_{args.n}: {r['terms']} terms\n" + "\n".join(f"  {c}  {m}" for m, c in r["element"])
            _emit(r, cfg, text)
            return 1 if "error" in r else 0
        if args.cmd == "nf":
            r = cmd_nf(args.word, cfg)
            _emit(r, cfg, r["nf"])
        elif args.cmd == "hopf":
            r = cmd_hopf(args.op, args.element, cfg)
            _emit(r, cfg, r["result"])
        elif args.cmd == "hh0":
            r = cmd_hh0(args.element, cfg)
            _emit(r, cfg, f"{r['verdict']}  {r['witness']}".rstrip())
        elif args.cmd == "cut":
            r = cmd_cut(args.diagram, args.pos, cfg)
            _emit(r, cfg, r["result"])
        else:
            r = cmd_verify(args.selector, cfg, args.N)
            lines = [f"{name}: {c['status']}" + (f" ({c['seconds']} s)" if "seconds" in c else "") for name, c in sorted(r["checks"].items())]
            if args.N is not None:
                lines.append(json.dumps(r["checks"]["frobenius"]["certificate"], indent=2))
            lines.append("ALL PASS" if r["passed"] else "FAILURES")
            _emit(r, cfg, "\n".join(lines))
            return 0 if r["passed"] else 1
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
