"""Commutator quotient of O_{q^2}(SL2), degree by degree.

Membership in the commutator span is searched first by leading-term division
over Z[q^{+-1/2}], then by Gaussian elimination over Q(q^{1/2}). A Zero verdict
is issued only for an integral combination that re-expands exactly to the
input. Non-membership is
certified at q^{1/2} = 1, where every commutator vanishes and the PBW
monomials specialize to a basis of the commutative coordinate ring.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache

from .cutting import core_loops, slit_value
from .oq import OqElement, PBWMonomial, commutator
from .ring import ZERO, HalfLaurent, divexact, generic_field


class Verdict(str, enum.Enum):
    ZERO = "Zero"
    NONZERO = "Nonzero"
    UNKNOWN = "Unknown"


def monomials_up_to(d: int) -> list[PBWMonomial]:
    out = []
    for total in range(d + 1):
        for i in range(total + 1):
            for j in range(total - i + 1):
                k = total - i - j
                out.append(PBWMonomial.a_fam(i, j, k))
                if i >= 1:
                    out.append(PBWMonomial.d_fam(i, j, k))
    return out


def _to_laurent(x) -> HalfLaurent | None:
    """Field element -> Laurent polynomial in q^{1/2}, or None if it is not one."""
    num, den = x.numer, x.denom
    dterms = den.terms()
    if len(dterms) != 1:
        return None
    (dexp,), dc = dterms[0]
    out = {}
    for (e,), c in num.terms():
        v = c / dc
        if v.denominator != 1:
            return None
        out[e - dexp] = int(v)
    return HalfLaurent(out)


def commutative_image(x: OqElement) -> dict[PBWMonomial, int]:
    """Image at q^{1/2} = 1, in the PBW basis of Z[a,b,c,d]/(ad-bc-1)."""
    out = {}
    for m, c in x.terms.items():
        v = c.at_one()
        if v:
            out[m] = v
    return out


def _image_str(img: dict) -> str:
    if not img:
        return "0"
    return " + ".join(f"{c}*{m}" for m, c in sorted(img.items()))


@dataclass
class HH0Certificate:
    verdict: Verdict
    element: OqElement
    degree: int
    witness: list = field(default_factory=list)

    def witness_str(self) -> str:
        if self.verdict is Verdict.ZERO:
            return " + ".join(f"({c})*[{m1},{m2}]" for c, m1, m2 in self.witness) or "0"
        if self.verdict is Verdict.NONZERO:
            return _image_str(dict(self.witness))
        return ""

    def to_json(self) -> dict:
        out = {"verdict": self.verdict.value, "degree": self.degree, "element": self.element.to_json()}
        if self.verdict is Verdict.ZERO:
            out["witness"] = [[c.to_json(), m1.to_json(), m2.to_json()] for c, m1, m2 in self.witness]
        elif self.verdict is Verdict.NONZERO:
            out["witness"] = [[m.to_json(), c] for m, c in self.witness]
        return out


class CommutatorSpan:
    """Echelon form of the commutators [m1, m2] with deg m1 + deg m2 <= d."""

    def __init__(self, d: int):
        if d < 0:
            raise ValueError("degree bound must be non-negative")
        self.d = d
        self.F = generic_field()
        mons = monomials_up_to(d)
        self.pairs: list[tuple[PBWMonomial, PBWMonomial]] = []
        self.generators: list[OqElement] = []
        for x, m1 in enumerate(mons):
            for m2 in mons[x + 1 :]:
                if m1.degree() + m2.degree() > d:
                    continue
                c = commutator(OqElement.monomial(m1), OqElement.monomial(m2))
                if c:
                    self.pairs.append((m1, m2))
                    self.generators.append(c)
        # pivot monomial -> (row vector, combination of generator indices)
        self.rows: dict[PBWMonomial, tuple[dict, dict]] = {}
        for idx, g in enumerate(self.generators):
            vec, combo = self._reduce(self._vector(g), {idx: self.F.one})
            if vec:
                self._insert(vec, combo)

    @staticmethod
    def _key(m: PBWMonomial):
        return (m.degree(), m)

    def _vector(self, x: OqElement) -> dict:
        return {m: self.F.from_laurent(c) for m, c in x.terms.items()}

    def _reduce(self, vec: dict, combo: dict) -> tuple[dict, dict]:
        vec, combo = dict(vec), dict(combo)
        while True:
            hits = [m for m in vec if m in self.rows]
            if not hits:
                return vec, combo
            m = max(hits, key=self._key)
            factor = vec[m]
            rvec, rcombo = self.rows[m]
            for k, v in rvec.items():
                nv = vec.get(k, self.F.zero) - factor * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
            for k, v in rcombo.items():
                nv = combo.get(k, self.F.zero) - factor * v
                if nv:
                    combo[k] = nv
                else:
                    combo.pop(k, None)

    def _insert(self, vec: dict, combo: dict):
        lead = max(vec, key=self._key)
        inv = 1 / vec[lead]
        self.rows[lead] = ({k: v * inv for k, v in vec.items()}, {k: v * inv for k, v in combo.items()})

    def residual(self, x: OqElement) -> dict:
        """Remainder of x after reduction against the span (over the field)."""
        vec, _ = self._reduce(self._vector(x), {})
        return vec

    def express(self, x: OqElement):
        """Field combination of generators equal to x, or None."""
        vec, combo = self._reduce(self._vector(x), {})
        if vec:
            return None
        # reduction subtracts; x = sum(-combo)
        return {k: -v for k, v in combo.items()}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def divide(self, x: OqElement, max_steps: int = 1000):
        """Division with remainder over Z[q^{+-1/2}] by leading terms.

        Returns ``{generator index: Laurent coefficient}`` when the remainder
        is zero, else None. Cheap and integral, but not complete.
        """
        by_lead: dict[PBWMonomial, list[int]] = {}
        for idx, g in enumerate(self.generators):
            by_lead.setdefault(max(g.terms, key=self._key), []).append(idx)
        combo: dict[int, HalfLaurent] = {}
        for _ in range(max_steps):
            if not x:
                return combo
            lead = max(x.terms, key=self._key)
            for idx in by_lead.get(lead, ()):
                g = self.generators[idx]
                try:
                    ratio = divexact(x.terms[lead], g.terms[lead])
                except ValueError:  # non-monic divisor
                    ratio = None
                if ratio is not None:
                    x = x - g.scale(ratio)
                    combo[idx] = combo.get(idx, ZERO) + ratio
                    break
            else:
                return None
        return None


@lru_cache(maxsize=16)
def commutator_span(d: int) -> CommutatorSpan:
    return CommutatorSpan(d)


def tau(x: OqElement, d: int | None = None) -> HH0Certificate:
    """Certified decision of whether x vanishes in HH_0."""
    if d is None:
        d = max(x.degree(), 0)
    if x.degree() > d:
        raise ValueError(f"element degree {x.degree()} exceeds bound {d}")
    img = commutative_image(x)
    if img:
        return HH0Certificate(Verdict.NONZERO, x, d, sorted(img.items()))
    if not x:
        return HH0Certificate(Verdict.ZERO, x, d, [])
    span = commutator_span(d)
    combo = span.divide(x)
    if combo is None:
        field_combo = span.express(x)
        if field_combo is None:
            return HH0Certificate(Verdict.UNKNOWN, x, d)
        combo = {idx: _to_laurent(c) for idx, c in field_combo.items()}
        if any(h is None for h in combo.values()):
            return HH0Certificate(Verdict.UNKNOWN, x, d)
    witness = []
    for idx, h in sorted(combo.items()):
        if not h:
            continue
        m1, m2 = span.pairs[idx]
        if h.coeff(h.max_exp()) < 0:
            h, m1, m2 = -h, m2, m1
        witness.append((h, m1, m2))
    if not verify_zero_witness(x, witness):
        return HH0Certificate(Verdict.UNKNOWN, x, d)
    return HH0Certificate(Verdict.ZERO, x, d, witness)


def verify_zero_witness(x: OqElement, witness) -> bool:
    acc = OqElement()
    for c, m1, m2 in witness:
        acc = acc + commutator(OqElement.monomial(m1), OqElement.monomial(m2)).scale(c)
    return acc == x


def same_class(x: OqElement, y: OqElement, d: int | None = None) -> HH0Certificate:
    """Certificate for x - y in HH_0 (Zero means tau(x) = tau(y))."""
    return tau(x - y, d)


@dataclass
class CoreLoopResult:
    copies: int
    bigon_value: OqElement
    expected: OqElement
    certificate: HH0Certificate

    @property
    def ok(self) -> bool:
        return self.certificate.verdict is Verdict.ZERO

    def to_json(self) -> dict:
        return {
            "copies": self.copies,
            "bigon_value": self.bigon_value.to_json(),
            "expected": self.expected.to_json(),
            "difference": self.certificate.to_json(),
            "ok": self.ok,
        }


def core_loop_value(n: int = 1, d: int = 0) -> CoreLoopResult:
    """``n`` parallel annulus cores through the slit state sum, compared with 2^n tau(1)."""
    basis = slit_value(core_loops(n))
    value = OqElement()
    for (ls, rs), c in basis.items():
        if ls or rs:
            raise AssertionError("core loop left boundary strands behind")
        value = value + OqElement.scalar(c)
    expected = OqElement.scalar(2**n)
    cert = same_class(value, expected, max(d, value.degree(), 0))
    result = CoreLoopResult(n, value, expected, cert)
    if not result.ok:
        raise AssertionError(f"core loop value {value} differs from {expected} in HH_0")
    return result
