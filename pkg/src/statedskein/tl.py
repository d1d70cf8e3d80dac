"""Temperley-Lieb diagrams, Kauffman resolution and Jones-Wenzl projectors.

A :class:`Matching` is a planar pairing of ``bottom + top`` boundary points of a
rectangle. Index ``p < bottom`` is bottom position ``p`` (left to right); index
``p >= bottom`` is top position ``bottom + top - 1 - p``, so indices run once
around the boundary. Products stack the left factor on top of the right one.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .ring import (
    DELTA,
    HalfLaurent,
    LaurentRing,
    UniPoly,
    QuantumLocalRing,
    generic_field,
    quantum_factorial,
    quantum_int,
)


class WidthError(ValueError):
    """Boundary widths do not line up."""


class NonInvertible(ZeroDivisionError):
    """A quantum integer needed for a projector vanishes in the coefficient ring."""


@dataclass(frozen=True)
class Matching:
    bottom: int
    top: int
    pairing: tuple[int, ...]

    def __post_init__(self):
        n = self.bottom + self.top
        if len(self.pairing) != n:
            raise WidthError(f"pairing has {len(self.pairing)} entries, expected {n}")
        for i, j in enumerate(self.pairing):
            if not 0 <= j < n or j == i or self.pairing[j] != i:
                raise ValueError(f"pairing is not a fixed-point-free involution at {i}")
        if not _is_planar(self.pairing):
            raise ValueError("pairing is not planar")

    @classmethod
    def _raw(cls, bottom, top, pairing) -> "Matching":
        obj = object.__new__(cls)
        object.__setattr__(obj, "bottom", bottom)
        object.__setattr__(obj, "top", top)
        object.__setattr__(obj, "pairing", tuple(pairing))
        return obj

    @property
    def n(self) -> int:
        if self.bottom != self.top:
            raise WidthError("rectangular matching has no single strand count")
        return self.bottom

    def bot(self, i: int) -> int:
        return i

    def topi(self, j: int) -> int:
        """Boundary index of top position j."""
        return self.bottom + self.top - 1 - j

    def locate(self, p: int) -> tuple[str, int]:
        if p < self.bottom:
            return "b", p
        return "t", self.bottom + self.top - 1 - p

    @classmethod
    def identity(cls, n: int) -> "Matching":
        pairing = [0] * (2 * n)
        for i in range(n):
            pairing[i] = 2 * n - 1 - i
            pairing[2 * n - 1 - i] = i
        return cls._raw(n, n, pairing)

    @classmethod
    def from_pairs(cls, bottom: int, top: int, pairs: Iterable[tuple[tuple[str, int], tuple[str, int]]]) -> "Matching":
        """Build from pairs of ``("b", i)`` / ``("t", j)`` endpoints."""
        pairing = [-1] * (bottom + top)

        def idx(pt):
            side, k = pt
            return k if side == "b" else bottom + top - 1 - k

        for a, b in pairs:
            pairing[idx(a)] = idx(b)
            pairing[idx(b)] = idx(a)
        return cls(bottom, top, tuple(pairing))

    @classmethod
    def e(cls, n: int, i: int) -> "Matching":
        """Generator e_i (1-based gap i joins strands i-1, i)."""
        if not 1 <= i < n:
            raise ValueError("gap out of range")
        pairs = [(("b", i - 1), ("b", i)), (("t", i - 1), ("t", i))]
        pairs += [(("b", j), ("t", j)) for j in range(n) if j not in (i - 1, i)]
        return cls.from_pairs(n, n, pairs)

    def tensor(self, other: "Matching") -> "Matching":
        """Place ``other`` to the right of ``self``."""
        out = []
        for p in range(self.bottom):
            out.append(("b", p))
        pairs = []
        for M, boff, toff in ((self, 0, 0), (other, self.bottom, self.top)):
            for p, q in enumerate(M.pairing):
                if p < q:
                    sp, ip = M.locate(p)
                    sq, iq = M.locate(q)
                    pairs.append(((sp, ip + (boff if sp == "b" else toff)), (sq, iq + (boff if sq == "b" else toff))))
        return Matching.from_pairs(self.bottom + other.bottom, self.top + other.top, pairs)

    def to_json(self) -> dict:
        return {"bottom": self.bottom, "top": self.top, "pairing": list(self.pairing)}

    @classmethod
    def from_json(cls, data) -> "Matching":
        return cls(int(data["bottom"]), int(data["top"]), tuple(int(x) for x in data["pairing"]))


def _is_planar(pairing: Sequence[int]) -> bool:
    stack = []
    for i, j in enumerate(pairing):
        if j > i:
            stack.append(i)
        else:
            if not stack or stack[-1] != j:
                return False
            stack.pop()
    return not stack


def matching_compose(upper: Matching, lower: Matching) -> tuple[Matching, int]:
    """Glue the bottom of ``upper`` onto the top of ``lower``.

    Returns the composite and the number of closed loops formed.
    """
    if upper.bottom != lower.top:
        raise WidthError(f"cannot stack width {upper.bottom} on width {lower.top}")
    b, mid, t = lower.bottom, lower.top, upper.top
    lp, up = lower.pairing, upper.pairing
    lo_last = b + mid - 1
    up_last = mid + t - 1
    res_last = b + t - 1
    out = [0] * (b + t)
    seen = [False] * mid

    def walk_from_lower(idx):
        # idx: boundary index in lower; follow until exiting, return result index
        while True:
            p = lp[idx]
            if p < b:
                return p
            j = lo_last - p  # middle position
            seen[j] = True
            p = up[j]
            if p >= mid:
                return res_last - (up_last - p)
            seen[p] = True
            idx = lo_last - p

    def walk_from_upper(idx):
        while True:
            p = up[idx]
            if p >= mid:
                return res_last - (up_last - p)
            seen[p] = True
            p = lp[lo_last - p]
            if p < b:
                return p
            j = lo_last - p
            seen[j] = True
            idx = j

    for i in range(b):
        out[i] = walk_from_lower(i)
    for j in range(t):
        out[res_last - j] = walk_from_upper(up_last - j)

    loops = 0
    for j in range(mid):
        if seen[j]:
            continue
        loops += 1
        k = j
        while True:
            seen[k] = True
            k2 = up[k]  # middle, since no exits remain
            seen[k2] = True
            k = lo_last - lp[lo_last - k2]
            if k == j:
                break
    return Matching._raw(b, t, out), loops


# ---------------------------------------------------------------------------
# linear combinations


def _coerce(ring, c):
    if isinstance(c, HalfLaurent):
        return ring.from_laurent(c)
    if isinstance(c, int):
        return ring.from_laurent(HalfLaurent.const(c))
    return c


class TLElement:
    """Linear combination of matchings with a fixed boundary shape."""

    __slots__ = ("ring", "bottom", "top", "terms")

    def __init__(self, ring, bottom: int, top: int, terms=None):
        self.ring = ring
        self.bottom = bottom
        self.top = top
        clean = {}
        norm = getattr(ring, "normalize", None)
        for m, c in (terms or {}).items():
            c = _coerce(ring, c)
            if norm is not None:
                c = norm(c)
            if c:
                if m.bottom != bottom or m.top != top:
                    raise WidthError("matching shape differs from element shape")
                clean[m] = c
        self.terms = clean

    @classmethod
    def identity(cls, ring, n: int) -> "TLElement":
        return cls(ring, n, n, {Matching.identity(n): ring.one})

    @classmethod
    def basis(cls, ring, m: Matching, coeff=None) -> "TLElement":
        return cls(ring, m.bottom, m.top, {m: ring.one if coeff is None else coeff})

    @property
    def n(self) -> int:
        if self.bottom != self.top:
            raise WidthError("rectangular element")
        return self.bottom

    def __add__(self, other: "TLElement") -> "TLElement":
        self._check(other)
        out = dict(self.terms)
        zero = self.ring.zero
        for m, c in other.terms.items():
            out[m] = out.get(m, zero) + c
        return TLElement(self.ring, self.bottom, self.top, out)

    def __neg__(self):
        return TLElement(self.ring, self.bottom, self.top, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TLElement":
        c = _coerce(self.ring, c)
        return TLElement(self.ring, self.bottom, self.top, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "TLElement") -> "TLElement":
        return tl_mul(self, other)

    def tensor(self, other: "TLElement") -> "TLElement":
        out = {}
        zero = self.ring.zero
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.tensor(m2)
                out[m] = out.get(m, zero) + c1 * c2
        return TLElement(self.ring, self.bottom + other.bottom, self.top + other.top, out)

    def coeff(self, m: Matching):
        return self.terms.get(m, self.ring.zero)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if (self.bottom, self.top) != (other.bottom, other.top):
            raise WidthError("shape mismatch")

    def __eq__(self, other):
        if not isinstance(other, TLElement):
            return NotImplemented
        return (self.bottom, self.top) == (other.bottom, other.top) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"TLElement({self.bottom}->{self.top}, {len(self.terms)} terms)"

    def to_json(self) -> list:
        return [[m.pairing, str(c)] for m, c in sorted(self.terms.items(), key=lambda kv: kv[0].pairing)]


def tl_mul(upper: TLElement, lower: TLElement) -> TLElement:
    """Stack ``upper`` on top of ``lower``; each closed loop contributes delta."""
    if upper.bottom != lower.top:
        raise WidthError(f"cannot stack width {upper.bottom} on width {lower.top}")
    ring = upper.ring
    delta = ring.from_laurent(DELTA)
    powers = [ring.one]
    out: dict = {}
    zero = ring.zero
    for m1, c1 in upper.terms.items():
        for m2, c2 in lower.terms.items():
            m, loops = matching_compose(m1, m2)
            while len(powers) <= loops:
                powers.append(powers[-1] * delta)
            c = c1 * c2 if loops == 0 else c1 * c2 * powers[loops]
            out[m] = out.get(m, zero) + c
    return TLElement(ring, lower.bottom, upper.top, out)


# ---------------------------------------------------------------------------
# Jones-Wenzl


_JW_LOCK = threading.Lock()
_JW_CACHE: dict = {}


def jones_wenzl(n: int, ring=None) -> TLElement:
    """The projector f_n, via f_n = f_{n-1} + ([n-1]/[n]) f_{n-1} e_{n-1} f_{n-1}."""
    ring = ring if ring is not None else default_ring()
    key = (n, ring.key)
    hit = _JW_CACHE.get(key)
    if hit is not None:
        return hit
    if n < 0:
        raise ValueError("n must be non-negative")
    if n <= 1:
        f = TLElement.identity(ring, n)
    else:
        prev = jones_wenzl(n - 1, ring).tensor(TLElement.identity(ring, 1))
        qn = ring.from_laurent(quantum_int(n))
        if not qn:
            raise NonInvertible(f"[{n}]_q vanishes in {ring!r}")
        try:
            inv = ring.inv(qn)
        except ZeroDivisionError as exc:
            raise NonInvertible(f"[{n}]_q is not invertible in {ring!r}") from exc
        coeff = ring.from_laurent(quantum_int(n - 1)) * inv
        e = TLElement.basis(ring, Matching.e(n, n - 1))
        f = prev + (prev * e * prev).scale(coeff)
    with _JW_LOCK:
        _JW_CACHE.setdefault(key, f)
    return _JW_CACHE[key]


def cap_on(n: int, i: int) -> Matching:
    """Width n -> n-2, joining bottom positions i and i+1."""
    pairs = [(("b", i), ("b", i + 1))]
    pairs += [(("b", j), ("t", j if j < i else j - 2)) for j in range(n) if j not in (i, i + 1)]
    return Matching.from_pairs(n, n - 2, pairs)


def cup_on(n: int, i: int) -> Matching:
    """Width n -> n+2, a new arc at top positions i and i+1."""
    pairs = [(("t", i), ("t", i + 1))]
    pairs += [(("b", j), ("t", j if j < i else j + 2)) for j in range(n)]
    return Matching.from_pairs(n, n + 2, pairs)


def symmetric_sum(n: int, weight: int, ring=None, negative: bool = False) -> TLElement:
    """(1/[n]!) * sum over permutations of q^{weight * length} times the braid lift.

    Positive crossings are used for the lift unless ``negative``.
    """
    ring = ring if ring is not None else default_ring()
    total = TLElement(ring, n, n)
    kind = "neg" if negative else "pos"
    for perm in itertools.permutations(range(n)):
        word = _reduced_word(perm)
        w = SliceWord(n, tuple(Slice(kind, i) for i in word))
        total = total + resolve(w, ring).scale(HalfLaurent.q(weight * len(word)))
    return total.scale(ring.inv(ring.from_laurent(quantum_factorial(n))))


def _reduced_word(perm: Sequence[int]) -> list[int]:
    p = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i)
                changed = True
    return word[::-1]


def jw_weight_report(n: int = 2, ring=None) -> dict:
    """Which symmetric-group weighting reproduces f_n, if any."""
    ring = ring if ring is not None else default_ring()
    f = jones_wenzl(n, ring)
    out = {}
    for neg in (False, True):
        for w in (1, -1, 3, -3):
            out[f"{'neg' if neg else 'pos'}:q^{w}l"] = symmetric_sum(n, w, ring, neg) == f
    return out


# ---------------------------------------------------------------------------
# slice words


KINDS = ("id", "cup", "cap", "pos", "neg", "jw", "twist", "half")


@dataclass(frozen=True)
class Slice:
    """One horizontal layer.

    ``pos``/``neg`` cross strands ``pos`` and ``pos+1``; ``jw`` puts f_size on
    strands ``pos..pos+size-1``; ``twist`` is a full framing kink of sign
    ``size``; ``half`` is a boundary half-twist whose scalar is chosen by the
    caller (``size`` = +1 or -1 for its two directions).
    """

    kind: str
    pos: int = 0
    size: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown slice kind {self.kind!r}")

    def out_width(self, w: int) -> int:
        if self.kind == "cup":
            return w + 2
        if self.kind == "cap":
            return w - 2
        return w

    def check(self, w: int):
        k = self.kind
        if k == "cup" and not 0 <= self.pos <= w:
            raise WidthError(f"cup at {self.pos} on width {w}")
        if k in ("cap", "pos", "neg") and not 0 <= self.pos <= w - 2:
            raise WidthError(f"{k} at {self.pos} on width {w}")
        if k == "jw" and not (self.size >= 0 and 0 <= self.pos and self.pos + self.size <= w):
            raise WidthError(f"jw box {self.pos}+{self.size} on width {w}")
        if k in ("twist", "half") and not 0 <= self.pos < w:
            raise WidthError(f"{k} at {self.pos} on width {w}")

    def to_json(self) -> list:
        if self.kind in ("jw", "twist", "half"):
            return [self.kind, self.pos, self.size]
        return [self.kind, self.pos]

    @classmethod
    def from_json(cls, data) -> "Slice":
        return cls(data[0], int(data[1]) if len(data) > 1 else 0, int(data[2]) if len(data) > 2 else 0)


@dataclass(frozen=True)
class SliceWord:
    """Slices listed bottom to top, starting from ``width`` strands."""

    width: int
    slices: tuple[Slice, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "slices", tuple(self.slices))
        w = self.width
        if w < 0:
            raise WidthError("negative width")
        for s in self.slices:
            s.check(w)
            w = s.out_width(w)

    def widths(self) -> list[int]:
        ws = [self.width]
        for s in self.slices:
            ws.append(s.out_width(ws[-1]))
        return ws

    @property
    def top_width(self) -> int:
        return self.widths()[-1]

    def then(self, other: "SliceWord") -> "SliceWord":
        """``other`` stacked on top of ``self``."""
        if other.width != self.top_width:
            raise WidthError("width mismatch when concatenating slice words")
        return SliceWord(self.width, self.slices + other.slices)

    def to_json(self) -> dict:
        return {"width": self.width, "slices": [s.to_json() for s in self.slices]}

    @classmethod
    def from_json(cls, data) -> "SliceWord":
        return cls(int(data["width"]), tuple(Slice.from_json(s) for s in data["slices"]))


KAPPA_DEFAULT = (HalfLaurent.const(1), HalfLaurent({6: -1}))


def slice_element(s: Slice, w: int, ring, kappa=KAPPA_DEFAULT) -> TLElement:
    k = s.kind
    if k == "id":
        return TLElement.identity(ring, w)
    if k == "cup":
        return TLElement.basis(ring, cup_on(w, s.pos))
    if k == "cap":
        return TLElement.basis(ring, cap_on(w, s.pos))
    if k in ("pos", "neg"):
        idm = Matching.identity(w)
        e = Matching.e(w, s.pos + 1)
        a, b = (HalfLaurent.q(1), HalfLaurent.q(-1)) if k == "pos" else (HalfLaurent.q(-1), HalfLaurent.q(1))
        return TLElement(ring, w, w, {idm: a, e: b})
    if k == "jw":
        left = TLElement.identity(ring, s.pos)
        right = TLElement.identity(ring, w - s.pos - s.size)
        return left.tensor(jones_wenzl(s.size, ring)).tensor(right)
    if k == "twist":
        return TLElement.identity(ring, w).scale(HalfLaurent({6: -1}) ** s.size)
    if k == "half":
        c = kappa[0] if s.size >= 0 else kappa[1]
        return TLElement.identity(ring, w).scale(c)
    raise AssertionError(k)


def resolve(word: SliceWord, ring=None, kappa=KAPPA_DEFAULT) -> TLElement:
    """Expand every crossing and projector; loops become delta."""
    ring = ring if ring is not None else default_ring()
    cur = TLElement.identity(ring, word.width)
    w = word.width
    for s in word.slices:
        if s.kind == "id":
            continue
        cur = tl_mul(slice_element(s, w, ring, kappa), cur)
        w = s.out_width(w)
    return cur


# ---------------------------------------------------------------------------
# enumeration and closure


def enumerate_matchings(n: int) -> list[Matching]:
    """All planar matchings of TL_n (2n boundary points)."""
    out = []
    for pairing in _noncrossing(2 * n):
        out.append(Matching._raw(n, n, pairing))
    return out


def _noncrossing(size: int):
    if size == 0:
        yield ()
        return

    def rec(lo, hi):
        # pairings of indices lo..hi-1
        if lo >= hi:
            yield {}
            return
        for j in range(lo + 1, hi, 2):
            for inner in rec(lo + 1, j):
                for outer in rec(j + 1, hi):
                    d = {lo: j, j: lo}
                    d.update(inner)
                    d.update(outer)
                    yield d

    for d in rec(0, size):
        yield tuple(d[i] for i in range(size))


def annulus_closure(x: TLElement) -> UniPoly:
    """Close top position i to bottom position i around an annulus.

    Returns a polynomial in the core class ``a`` with ring coefficients.
    """
    n = x.n
    ring = x.ring
    delta = ring.from_laurent(DELTA)
    out = UniPoly({}, "a")
    for m, c in x.terms.items():
        ess, triv = _closure_loops(m)
        coef = c
        for _ in range(triv):
            coef = coef * delta
        out = out + UniPoly({ess: coef}, "a")
    return out


def _closure_loops(m: Matching) -> tuple[int, int]:
    n = m.bottom
    last = 2 * n - 1
    seen = [False] * (2 * n)
    ess = triv = 0
    for start in range(2 * n):
        if seen[start]:
            continue
        winding = 0
        idx = start
        while True:
            seen[idx] = True
            p = m.pairing[idx]
            seen[p] = True
            if p >= n:  # top position last - p: travel around to the bottom
                winding += 1
                idx = last - p
            else:  # bottom position p: travel around to the top
                winding -= 1
                idx = last - p
            if idx == start:
                break
        if winding:
            ess += 1
        else:
            triv += 1
    return ess, triv


# ---------------------------------------------------------------------------
# the u/v patterns


@dataclass(frozen=True)
class UVConfig:
    """Reading of the u/v figure as slice-word templates.

    ``slid`` selects which outermost through-strand is lassoed around the
    others ("right" = last position, "left" = position 0); ``sign`` is the
    crossing kind used on the way out, ``back`` the kind on the way back.
    """

    slid: str = "right"
    sign: str = "pos"
    back: str = "pos"


DEFAULT_UV = UVConfig()


def uv_words(k: int, m: int, cfg: UVConfig = DEFAULT_UV) -> tuple[SliceWord, SliceWord]:
    if k < 0 or m < 0:
        raise ValueError("k and m must be non-negative")
    n = k + m
    base_lo = [Slice("jw", 0, n), Slice("jw", n, n)] if n else []
    caps = [Slice("cap", n - 1 - i) for i in range(m)]
    cups = [Slice("cup", k + i) for i in range(m)]
    lasso: list[Slice] = []
    if k >= 1:
        w = 2 * k
        if cfg.slid == "right":
            lasso = [Slice(cfg.sign, i) for i in range(w - 2, -1, -1)] + [Slice(cfg.back, i) for i in range(w - 1)]
        elif cfg.slid == "left":
            lasso = [Slice(cfg.sign, i) for i in range(w - 1)] + [Slice(cfg.back, i) for i in range(w - 2, -1, -1)]
        else:
            raise ValueError(f"unknown slid side {cfg.slid!r}")
    v = SliceWord(2 * n, tuple(base_lo + caps + cups + base_lo))
    u = SliceWord(2 * n, tuple(base_lo + caps + lasso + cups + base_lo))
    return u, v


def build_uv(k: int, m: int, cfg: UVConfig = DEFAULT_UV, ring=None) -> tuple[TLElement, TLElement]:
    ring = ring if ring is not None else default_ring()
    if k == 0 and m == 0:
        empty = TLElement.identity(ring, 0)
        return empty, empty
    u, v = uv_words(k, m, cfg)
    return resolve(u, ring), resolve(v, ring)


def uv_rhs(k: int, m: int, cfg: UVConfig = DEFAULT_UV, ring=None) -> TLElement:
    """q^{4k-2} v_{k,m} + q^{2k-4}(q^{2k} - q^{-2k}) v_{k-1,m+1}."""
    ring = ring if ring is not None else default_ring()
    _, v = build_uv(k, m, cfg, ring)
    _, v2 = build_uv(k - 1, m + 1, cfg, ring)
    c2 = HalfLaurent.q(2 * k - 4) * (HalfLaurent.q(2 * k) - HalfLaurent.q(-2 * k))
    return v.scale(HalfLaurent.q(4 * k - 2)) + v2.scale(c2)


def default_ring():
    """Exact ring used for diagram computations unless told otherwise."""
    return _QLOCAL


_QLOCAL = QuantumLocalRing()


def catalan(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)


def laurent_ring() -> LaurentRing:
    return LaurentRing()
