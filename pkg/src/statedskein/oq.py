"""The quantized coordinate algebra O_{q^2}(SL2) in PBW normal form.

Generators a, b, c, d with

    ba = q^2 ab,  ca = q^2 ac,  db = q^2 bd,  dc = q^2 cd,
    bc = cb,      ad - q^-2 bc = 1 = da - q^2 bc.

Normal forms use the basis a^i b^j c^k (family ``A``) together with
b^j c^k d^i, i >= 1 (family ``D``).
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Mapping, NamedTuple

from .ring import ONE, ZERO, HalfLaurent

GENS = "abcd"


class PBWMonomial(NamedTuple):
    family: str
    i: int
    j: int
    k: int

    @classmethod
    def a_fam(cls, i: int, j: int, k: int) -> "PBWMonomial":
        return cls("A", i, j, k)

    @classmethod
    def d_fam(cls, i: int, j: int, k: int) -> "PBWMonomial":
        if i == 0:
            return cls("A", 0, j, k)
        return cls("D", i, j, k)

    def word(self) -> str:
        if self.family == "A":
            return "a" * self.i + "b" * self.j + "c" * self.k
        return "b" * self.j + "c" * self.k + "d" * self.i

    def degree(self) -> int:
        return self.i + self.j + self.k

    def __str__(self):
        w = self.word()
        if not w:
            return "1"
        out = []
        for g in GENS:
            n = w.count(g)
            if n:
                out.append(g if n == 1 else f"{g}^{n}")
        return "".join(out)

    def to_json(self) -> list:
        return [self.family, self.i, self.j, self.k]


UNIT = PBWMonomial("A", 0, 0, 0)


class OqElement:
    """Element of O_{q^2}(SL2): PBW monomial -> HalfLaurent coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[PBWMonomial, HalfLaurent] | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            if isinstance(c, int):
                c = HalfLaurent.const(c)
            if c:
                clean[m] = c
        self.terms = clean

    @classmethod
    def one(cls) -> "OqElement":
        return cls({UNIT: ONE})

    @classmethod
    def scalar(cls, c: HalfLaurent | int) -> "OqElement":
        return cls({UNIT: c})

    @classmethod
    def monomial(cls, m: PBWMonomial, c: HalfLaurent | int = 1) -> "OqElement":
        return cls({m: c})

    @classmethod
    def gen(cls, g: str) -> "OqElement":
        return nf(g)

    def __add__(self, other):
        other = _as_oq(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return OqElement(out)

    __radd__ = __add__

    def __neg__(self):
        return OqElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_oq(other))

    def __rsub__(self, other):
        return _as_oq(other) - self

    def scale(self, c: HalfLaurent | int) -> "OqElement":
        if isinstance(c, int):
            c = HalfLaurent.const(c)
        return OqElement({m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, HalfLaurent)):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, HalfLaurent)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        out = OqElement.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = _as_oq(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((m.degree() for m in self.terms), default=-1)

    def coeff(self, m: PBWMonomial) -> HalfLaurent:
        return self.terms.get(m, ZERO)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            parts.append(f"({c})*{m}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [[m.to_json(), c.to_json()] for m, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data) -> "OqElement":
        return cls({PBWMonomial(f, int(i), int(j), int(k)): HalfLaurent.from_json(c) for (f, i, j, k), c in data})


def _as_oq(x) -> OqElement:
    if isinstance(x, OqElement):
        return x
    if isinstance(x, (int, HalfLaurent)):
        return OqElement.scalar(x)
    raise TypeError(f"cannot coerce {x!r} to OqElement")


# ---------------------------------------------------------------------------
# multiplication


@lru_cache(maxsize=None)
def _times_gen(m: PBWMonomial, g: str) -> tuple[tuple[PBWMonomial, HalfLaurent], ...]:
    """Normal form of m * g as a tuple of (monomial, coefficient)."""
    f, i, j, k = m
    A, D = PBWMonomial.a_fam, PBWMonomial.d_fam
    if f == "A":
        if g == "a":
            return ((A(i + 1, j, k), HalfLaurent.q(2 * (j + k))),)
        if g == "b":
            return ((A(i, j + 1, k), ONE),)
        if g == "c":
            return ((A(i, j, k + 1), ONE),)
        # d: pull it left through b^j c^k, then use ad = 1 + q^-2 bc
        if i == 0:
            return ((D(1, j, k), ONE),)
        s = HalfLaurent.q(-2 * (j + k))
        return ((A(i - 1, j, k), s), (A(i - 1, j + 1, k + 1), s * HalfLaurent.q(-2)))
    if g == "a":
        # d^i a = d^{i-1} + q^{4i-2} bc d^{i-1}
        return ((D(i - 1, j, k), ONE), (D(i - 1, j + 1, k + 1), HalfLaurent.q(4 * i - 2)))
    if g == "b":
        return ((D(i, j + 1, k), HalfLaurent.q(2 * i)),)
    if g == "c":
        return ((D(i, j, k + 1), HalfLaurent.q(2 * i)),)
    return ((D(i + 1, j, k), ONE),)


def mul_gen(x: OqElement, g: str) -> OqElement:
    if g not in GENS:
        raise ValueError(f"unknown generator {g!r}")
    out: dict = {}
    for m, c in x.terms.items():
        for m2, c2 in _times_gen(m, g):
            out[m2] = out.get(m2, ZERO) + c * c2
    return OqElement(out)


def nf(word: str) -> OqElement:
    """PBW normal form of a word in a, b, c, d (spaces and '*' ignored)."""
    x = OqElement.one()
    for pos, g in enumerate(word):
        if g in " *":
            continue
        if g not in GENS:
            raise ValueError(f"unexpected character {g!r} at position {pos}")
        x = mul_gen(x, g)
    return x


def mul(x: OqElement, y: OqElement) -> OqElement:
    out = OqElement()
    for m, c in y.terms.items():
        part = x
        for g in m.word():
            part = mul_gen(part, g)
        out = out + part.scale(c)
    return out


def commutator(x: OqElement, y: OqElement) -> OqElement:
    return mul(x, y) - mul(y, x)


# ---------------------------------------------------------------------------
# independent rewriting oracle


def rewrite_random(word: str, rng: random.Random, max_steps: int = 100000) -> OqElement:
    """Reduce ``word`` by applying relations at randomly chosen positions.

    Besides the seven defining relations, a d that sits to the right of an a
    with only b, c in between is moved left (bd -> q^-2 db, cd -> q^-2 dc) so
    that the a-d pair can be eliminated; otherwise d moves right.
    """
    state: dict[str, HalfLaurent] = {word: ONE}
    for _ in range(max_steps):
        reducible = [(w, c) for w, c in state.items() if _redexes(w)]
        if not reducible:
            break
        w, c = rng.choice(reducible)
        pos, kind = rng.choice(_redexes(w))
        del state[w]
        for w2, c2 in _apply(w, pos, kind):
            state[w2] = state.get(w2, ZERO) + c * c2
            if not state[w2]:
                del state[w2]
    else:
        raise RuntimeError("rewriting did not terminate")
    out = OqElement()
    for w, c in state.items():
        out = out + OqElement({_word_to_pbw(w): c})
    return out


def _guarded(w: str, i: int) -> bool:
    """Is there an 'a' left of position i reachable through b/c only?"""
    j = i - 1
    while j >= 0 and w[j] in "bc":
        j -= 1
    return j >= 0 and w[j] == "a"


def _redexes(w: str) -> list[tuple[int, str]]:
    out = []
    for i in range(len(w) - 1):
        pair = w[i : i + 2]
        if pair in ("ba", "ca", "cb", "da", "ad"):
            out.append((i, pair))
        elif pair in ("db", "dc") and not _guarded(w, i):
            out.append((i, pair))
        elif pair in ("bd", "cd") and _guarded(w, i):
            out.append((i, pair))
    return out


def _apply(w: str, i: int, kind: str) -> list[tuple[str, HalfLaurent]]:
    pre, post = w[:i], w[i + 2 :]
    q2, qm2 = HalfLaurent.q(2), HalfLaurent.q(-2)
    if kind == "ba":
        return [(pre + "ab" + post, q2)]
    if kind == "ca":
        return [(pre + "ac" + post, q2)]
    if kind == "cb":
        return [(pre + "bc" + post, ONE)]
    if kind == "db":
        return [(pre + "bd" + post, q2)]
    if kind == "dc":
        return [(pre + "cd" + post, q2)]
    if kind == "bd":
        return [(pre + "db" + post, qm2)]
    if kind == "cd":
        return [(pre + "dc" + post, qm2)]
    if kind == "ad":
        return [(pre + post, ONE), (pre + "bc" + post, qm2)]
    if kind == "da":
        return [(pre + post, ONE), (pre + "bc" + post, q2)]
    raise AssertionError(kind)


def _word_to_pbw(w: str) -> PBWMonomial:
    i, j, k, l = (w.count(g) for g in GENS)
    if w != "a" * i + "b" * j + "c" * k + "d" * l or (i and l):
        raise ValueError(f"{w!r} is not a PBW word")
    return PBWMonomial.d_fam(l, j, k) if l else PBWMonomial.a_fam(i, j, k)


# ---------------------------------------------------------------------------
# tensors and Hopf structure


class Tensor2:
    """Element of O (x) O as (monomial, monomial) -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def pure(cls, x: OqElement, y: OqElement) -> "Tensor2":
        out = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                out[(m1, m2)] = out.get((m1, m2), ZERO) + c1 * c2
        return cls(out)

    def __add__(self, other: "Tensor2") -> "Tensor2":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return Tensor2(out)

    def __neg__(self):
        return Tensor2({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Tensor2":
        if isinstance(c, int):
            c = HalfLaurent.const(c)
        return Tensor2({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "Tensor2") -> "Tensor2":
        out = Tensor2()
        for (a1, a2), c in self.terms.items():
            for (b1, b2), d in other.terms.items():
                left = mul(OqElement.monomial(a1), OqElement.monomial(b1))
                right = mul(OqElement.monomial(a2), OqElement.monomial(b2))
                out = out + Tensor2.pure(left, right).scale(c * d)
        return out

    def apply(self, f_left, f_right) -> "Tensor2":
        """(f_left (x) f_right), each mapping OqElement -> OqElement."""
        out = Tensor2()
        for (m1, m2), c in self.terms.items():
            out = out + Tensor2.pure(f_left(OqElement.monomial(m1)), f_right(OqElement.monomial(m2))).scale(c)
        return out

    def multiply(self) -> OqElement:
        out = OqElement()
        for (m1, m2), c in self.terms.items():
            out = out + mul(OqElement.monomial(m1), OqElement.monomial(m2)).scale(c)
        return out

    def __eq__(self, other):
        return isinstance(other, Tensor2) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{a}(x){b}" for (a, b), c in sorted(self.terms.items()))

    def to_json(self) -> list:
        return [[a.to_json(), b.to_json(), c.to_json()] for (a, b), c in sorted(self.terms.items())]


def generator_coproducts() -> dict[str, Tensor2]:
    """Coproduct on generators, computed by cutting the arc diagrams."""
    from .cutting import generator_cut_table  # local: cutting depends on this module

    return generator_cut_table()


_GEN_DELTA: dict[str, Tensor2] = {}


def _gen_delta(g: str) -> Tensor2:
    if not _GEN_DELTA:
        _GEN_DELTA.update(generator_coproducts())
    return _GEN_DELTA[g]


def matrix_coproduct_table() -> dict[str, Tensor2]:
    """Delta(x_{nu mu}) = sum_eps x_{nu eps} (x) x_{eps mu}, written out."""
    g = {("+", "+"): "a", ("+", "-"): "b", ("-", "+"): "c", ("-", "-"): "d"}
    out = {}
    for (nu, mu), name in g.items():
        t = Tensor2()
        for eps in "+-":
            t = t + Tensor2.pure(nf(g[(nu, eps)]), nf(g[(eps, mu)]))
        out[name] = t
    return out


@lru_cache(maxsize=None)
def _delta_monomial(m: PBWMonomial) -> Tensor2:
    t = Tensor2.pure(OqElement.one(), OqElement.one())
    for g in m.word():
        t = t * _gen_delta(g)
    return t


def coproduct(x: OqElement) -> Tensor2:
    out = Tensor2()
    for m, c in x.terms.items():
        out = out + _delta_monomial(m).scale(c)
    return out


COUNIT_ON_GENS = {"a": 1, "b": 0, "c": 0, "d": 1}


def counit(x: OqElement) -> HalfLaurent:
    total = ZERO
    for m, c in x.terms.items():
        v = 1
        for g in m.word():
            v *= COUNIT_ON_GENS[g]
        if v:
            total = total + c * v
    return total


def _antipode_gen(g: str) -> OqElement:
    if g == "a":
        return nf("d")
    if g == "d":
        return nf("a")
    if g == "b":
        return nf("b").scale(HalfLaurent.q(2, -1))
    return nf("c").scale(HalfLaurent.q(-2, -1))


@lru_cache(maxsize=None)
def _antipode_monomial(m: PBWMonomial) -> OqElement:
    out = OqElement.one()
    for g in reversed(m.word()):
        out = mul(out, _antipode_gen(g))
    return out


def antipode(x: OqElement) -> OqElement:
    out = OqElement()
    for m, c in x.terms.items():
        out = out + _antipode_monomial(m).scale(c)
    return out


def random_word(rng: random.Random, max_len: int) -> str:
    n = rng.randint(0, max_len)
    return "".join(rng.choice(GENS) for _ in range(n))


def random_element(rng: random.Random, max_len: int = 4, max_terms: int = 3) -> OqElement:
    out = OqElement()
    for _ in range(rng.randint(1, max_terms)):
        c = HalfLaurent({rng.randint(-4, 4): rng.choice([-2, -1, 1, 2])})
        out = out + nf(random_word(rng, max_len)).scale(c)
    return out


def relation_pairs() -> list[tuple[str, OqElement, OqElement]]:
    """The seven defining relations as (name, lhs, rhs) with lhs, rhs in O."""
    q2, qm2 = HalfLaurent.q(2), HalfLaurent.q(-2)
    return [
        ("ba=q^2ab", nf("b") * nf("a"), (nf("a") * nf("b")).scale(q2)),
        ("ca=q^2ac", nf("c") * nf("a"), (nf("a") * nf("c")).scale(q2)),
        ("db=q^2bd", nf("d") * nf("b"), (nf("b") * nf("d")).scale(q2)),
        ("dc=q^2cd", nf("d") * nf("c"), (nf("c") * nf("d")).scale(q2)),
        ("bc=cb", nf("b") * nf("c"), nf("c") * nf("b")),
        ("ad-q^-2bc=1", nf("a") * nf("d") - (nf("b") * nf("c")).scale(qm2), OqElement.one()),
        ("da-q^2bc=1", nf("d") * nf("a") - (nf("b") * nf("c")).scale(q2), OqElement.one()),
    ]
