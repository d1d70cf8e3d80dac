"""Stated skein rewriting in the bigon and the monogon.

A :class:`StatedTangle` is a slice word read from the left edge to the right
edge: the word's bottom row is the left edge and its top row is the right
edge, both listed bottom to top. Evaluation resolves crossings, removes loops,
evaluates returning arcs, sorts states to increasing order and reads off a PBW
normal form.

Boundary rules, with ``f, s`` the first and second endpoint met along the
edge orientation and ``sigma = 1`` on a positive edge, ``-q^3`` on a negative
one:

* returning arc:  sigma * [f == -s] * C(f)
* exchange:       (f, s) = (+, -)  ->  q^2 (-, +) + q^{-1/2} sigma J

where J joins the two strands next to the edge.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from functools import lru_cache

from .oq import OqElement, nf
from .ring import C_MINUS, C_PLUS, ONE, ZERO, HalfLaurent, LaurentRing
from .tl import KAPPA_DEFAULT, Matching, Slice, SliceWord, WidthError, resolve

STATES = "+-"
GEN_OF = {("+", "+"): "a", ("+", "-"): "b", ("-", "+"): "c", ("-", "-"): "d"}
ARC_OF = {g: s for s, g in GEN_OF.items()}

NEG_SIGMA = HalfLaurent({6: -1})
Q2 = HalfLaurent.q(2)
QMH = HalfLaurent.qh(-1)

#: the two admissible half-twist conventions (kappa_1, kappa_2), kappa_1 kappa_2 = -q^3
KAPPA_CONVENTIONS = {
    "plus": KAPPA_DEFAULT,
    "minus": (HalfLaurent.const(-1), HalfLaurent({6: 1})),
}


def C(state: str) -> HalfLaurent:
    return C_PLUS if state == "+" else C_MINUS


def flip(state: str) -> str:
    return "-" if state == "+" else "+"


@dataclass(frozen=True)
class StatedTangle:
    word: SliceWord
    left: str = ""
    right: str = ""
    left_positive: bool = False
    right_positive: bool = True

    def __post_init__(self):
        if len(self.left) != self.word.width:
            raise WidthError(f"{len(self.left)} left states for width {self.word.width}")
        if len(self.right) != self.word.top_width:
            raise WidthError(f"{len(self.right)} right states for width {self.word.top_width}")
        if any(s not in STATES for s in self.left + self.right):
            raise ValueError("states must be '+' or '-'")

    @classmethod
    def arc(cls, nu: str, mu: str) -> "StatedTangle":
        """Horizontal arc with left state nu and right state mu."""
        return cls(SliceWord(1), nu, mu)

    @classmethod
    def generator(cls, g: str) -> "StatedTangle":
        nu, mu = ARC_OF[g]
        return cls.arc(nu, mu)

    @classmethod
    def empty(cls) -> "StatedTangle":
        return cls(SliceWord(0))

    @property
    def standard(self) -> bool:
        return not self.left_positive and self.right_positive

    def to_json(self) -> dict:
        out = {"word": self.word.to_json()["slices"], "width": self.word.width, "left": self.left, "right": self.right}
        if not self.standard:
            out["orientation"] = {"left_positive": self.left_positive, "right_positive": self.right_positive}
        return out

    @classmethod
    def from_json(cls, data) -> "StatedTangle":
        left = data.get("left", "")
        word = SliceWord(int(data.get("width", len(left))), tuple(Slice.from_json(s) for s in data.get("word", [])))
        o = data.get("orientation", {})
        return cls(word, left, data.get("right", ""), o.get("left_positive", False), o.get("right_positive", True))


# ---------------------------------------------------------------------------
# reduction of a planar stated diagram


def _sigma(positive: bool) -> HalfLaurent:
    return ONE if positive else NEG_SIGMA


def _edge_upward(edge: str, positive: bool) -> bool:
    # right edge: positive = upward; left edge: positive = downward
    return positive if edge == "R" else not positive


def _cup_value(lower: str, upper: str, edge: str, positive: bool) -> HalfLaurent:
    f, s = (lower, upper) if _edge_upward(edge, positive) else (upper, lower)
    if f == s:
        return ZERO
    return _sigma(positive) * C(f)


def _add(acc: dict, key, c: HalfLaurent):
    v = acc.get(key, ZERO) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def _remove_pair(m: Matching, p: int, q: int) -> Matching:
    """Drop boundary indices p, q (paired with each other) from a matching."""
    keep = [i for i in range(len(m.pairing)) if i not in (p, q)]
    new_index = {old: new for new, old in enumerate(keep)}
    nb = m.bottom - sum(1 for i in (p, q) if i < m.bottom)
    nt = m.top - sum(1 for i in (p, q) if i >= m.bottom)
    pairing = tuple(new_index[m.pairing[i]] for i in keep)
    return Matching._raw(nb, nt, pairing)


@lru_cache(maxsize=200000)
def _reduce(m: Matching, ls: str, rs: str, lpos: bool, rpos: bool) -> tuple:
    """Basis expansion of a crossingless stated diagram (memoized)."""
    L, R = m.bottom, m.top
    last = L + R - 1
    # returning arcs with adjacent endpoints
    for i in range(L - 1):
        if m.pairing[i] == i + 1:
            v = _cup_value(ls[i], ls[i + 1], "L", lpos)
            if not v:
                return ()
            sub = _reduce(_remove_pair(m, i, i + 1), ls[:i] + ls[i + 2 :], rs, lpos, rpos)
            return tuple((k, c * v) for k, c in sub)
    for j in range(R - 1):
        pj, pj1 = last - j, last - j - 1
        if m.pairing[pj] == pj1:
            v = _cup_value(rs[j], rs[j + 1], "R", rpos)
            if not v:
                return ()
            sub = _reduce(_remove_pair(m, pj, pj1), ls, rs[:j] + rs[j + 2 :], lpos, rpos)
            return tuple((k, c * v) for k, c in sub)
    # only parallel through-strands remain: sort states along each edge
    assert L == R
    for edge, states, positive in (("L", ls, lpos), ("R", rs, rpos)):
        up = _edge_upward(edge, positive)
        for i in range(len(states) - 1):
            lo, hi = states[i], states[i + 1]
            f, s = (lo, hi) if up else (hi, lo)
            if (f, s) != ("+", "-"):
                continue
            swapped = states[:i] + hi + lo + states[i + 2 :]
            acc: dict = {}
            if edge == "L":
                first = _reduce(m, swapped, rs, lpos, rpos)
                joined = _join(m, "L", i)
                second = _reduce(joined, ls[:i] + ls[i + 2 :], rs, lpos, rpos)
            else:
                first = _reduce(m, ls, swapped, lpos, rpos)
                joined = _join(m, "R", i)
                second = _reduce(joined, ls, rs[:i] + rs[i + 2 :], lpos, rpos)
            for k, c in first:
                _add(acc, k, c * Q2)
            coef = QMH * _sigma(positive)
            for k, c in second:
                _add(acc, k, c * coef)
            return tuple(acc.items())
    return (((ls, rs), ONE),)


def _join(m: Matching, edge: str, i: int) -> Matching:
    """Join parallel strands i, i+1 next to ``edge``: they become a returning arc
    on the opposite edge."""
    n = m.bottom
    pairs = []
    for k in range(n):
        if k in (i, i + 1):
            continue
        if edge == "L":
            pairs.append((("b", k if k < i else k - 2), ("t", k)))
        else:
            pairs.append((("b", k), ("t", k if k < i else k - 2)))
    if edge == "L":
        pairs.append((("t", i), ("t", i + 1)))
        return Matching.from_pairs(n - 2, n, pairs)
    pairs.append((("b", i), ("b", i + 1)))
    return Matching.from_pairs(n, n - 2, pairs)


_LAURENT = LaurentRing()


def evaluate_basis(t: StatedTangle, kappa=KAPPA_DEFAULT) -> dict[tuple[str, str], HalfLaurent]:
    """Expansion in increasingly stated parallel-arc diagrams ``(left, right)``."""
    tl = resolve(t.word, _LAURENT, kappa)
    acc: dict = {}
    for m, c in tl.terms.items():
        for k, v in _reduce(m, t.left, t.right, t.left_positive, t.right_positive):
            _add(acc, k, c * v)
    return acc


def basis_to_oq(key: tuple[str, str]) -> OqElement:
    ls, rs = key
    word = "".join(GEN_OF[(ls[i], rs[i])] for i in range(len(ls) - 1, -1, -1))
    return nf(word)


def evaluate(t: StatedTangle, kappa=KAPPA_DEFAULT) -> OqElement:
    """Value in O_{q^2}(SL2) of a diagram on the standard bigon."""
    if not t.standard:
        raise ValueError("evaluate needs the standard bigon orientation; use evaluate_basis")
    out = OqElement()
    for key, c in evaluate_basis(t, kappa).items():
        out = out + basis_to_oq(key).scale(c)
    return out


def monogon_eval(t: StatedTangle, kappa=KAPPA_DEFAULT) -> HalfLaurent:
    """Scalar value of a diagram whose endpoints all lie on one (right) edge."""
    if t.word.width != 0:
        raise ValueError("monogon diagrams have no left-edge endpoints")
    basis = evaluate_basis(t, kappa)
    if set(basis) - {("", "")}:
        raise AssertionError("monogon reduction left a non-empty diagram")
    return basis.get(("", ""), ZERO)


def stack(x: StatedTangle, y: StatedTangle) -> StatedTangle:
    """x placed above y (the product xy)."""
    if (x.left_positive, x.right_positive) != (y.left_positive, y.right_positive):
        raise ValueError("edge orientations differ")
    wy = y.word.top_width
    shifted = tuple(replace(s, pos=s.pos + wy) for s in x.word.slices)
    word = SliceWord(y.word.width + x.word.width, y.word.slices + shifted)
    return StatedTangle(word, y.left + x.left, y.right + x.right, x.left_positive, x.right_positive)


def product(*ts: StatedTangle) -> StatedTangle:
    out = StatedTangle.empty()
    for t in reversed(ts):
        out = stack(t, out)
    return out


def inv_edge(t: StatedTangle, edge: str) -> tuple[HalfLaurent, StatedTangle]:
    """Reverse the orientation of ``edge`` ("L" or "R").

    Returns ``(coefficient, diagram)``: states on the edge are switched, the
    coefficient is the product of C(original state), and a half-twist slice is
    inserted on every strand meeting the edge.
    """
    if edge == "L":
        coef = ONE
        for s in t.left:
            coef = coef * C(s)
        direction = 1 if t.left_positive else -1
        twists = tuple(Slice("half", i, direction) for i in range(t.word.width))
        word = SliceWord(t.word.width, twists + t.word.slices)
        new = StatedTangle(word, "".join(flip(s) for s in t.left), t.right, not t.left_positive, t.right_positive)
    elif edge == "R":
        coef = ONE
        for s in t.right:
            coef = coef * C(s)
        direction = 1 if t.right_positive else -1
        twists = tuple(Slice("half", i, direction) for i in range(t.word.top_width))
        word = SliceWord(t.word.width, t.word.slices + twists)
        new = StatedTangle(word, t.left, "".join(flip(s) for s in t.right), t.left_positive, not t.right_positive)
    else:
        raise ValueError("edge must be 'L' or 'R'")
    return coef, new


def scaled_basis(coef: HalfLaurent, basis: dict) -> dict:
    return {k: coef * v for k, v in basis.items() if coef * v}


# ---------------------------------------------------------------------------
# random diagrams and moves (used by tests and experiments)


def random_tangle(rng: random.Random, max_width: int = 4, max_slices: int = 6, allow_caps: bool = True) -> StatedTangle:
    w = rng.randint(0, max_width)
    slices = []
    cur = w
    for _ in range(rng.randint(0, max_slices)):
        choices = ["cup"]
        if cur >= 2:
            choices += ["pos", "neg"] + (["cap"] if allow_caps else [])
        kind = rng.choice(choices)
        if kind == "cup":
            if cur + 2 > max_width + 2:
                continue
            slices.append(Slice("cup", rng.randint(0, cur)))
        else:
            slices.append(Slice(kind, rng.randint(0, cur - 2)))
        cur = slices[-1].out_width(cur)
    word = SliceWord(w, tuple(slices))
    left = "".join(rng.choice(STATES) for _ in range(w))
    right = "".join(rng.choice(STATES) for _ in range(word.top_width))
    return StatedTangle(word, left, right)


def insert_r2(t: StatedTangle, rng: random.Random) -> StatedTangle:
    """Insert a cancelling crossing pair somewhere (Reidemeister II)."""
    widths = t.word.widths()
    spots = [i for i, w in enumerate(widths) if w >= 2]
    if not spots:
        return t
    at = rng.choice(spots)
    p = rng.randint(0, widths[at] - 2)
    a, b = ("pos", "neg") if rng.random() < 0.5 else ("neg", "pos")
    sl = t.word.slices[:at] + (Slice(a, p), Slice(b, p)) + t.word.slices[at:]
    return replace(t, word=SliceWord(t.word.width, sl))


def insert_r3(t: StatedTangle, rng: random.Random) -> tuple[StatedTangle, StatedTangle]:
    """Two diagrams differing by a braid-type Reidemeister III move."""
    widths = t.word.widths()
    spots = [i for i, w in enumerate(widths) if w >= 3]
    if not spots:
        return t, t
    at = rng.choice(spots)
    p = rng.randint(0, widths[at] - 3)
    k = rng.choice(["pos", "neg"])
    one = (Slice(k, p), Slice(k, p + 1), Slice(k, p))
    two = (Slice(k, p + 1), Slice(k, p), Slice(k, p + 1))
    sl = t.word.slices
    return (
        replace(t, word=SliceWord(t.word.width, sl[:at] + one + sl[at:])),
        replace(t, word=SliceWord(t.word.width, sl[:at] + two + sl[at:])),
    )


def insert_zigzag(t: StatedTangle, rng: random.Random) -> StatedTangle:
    """Insert a cup/cap zigzag on one strand (planar isotopy)."""
    widths = t.word.widths()
    at = rng.randrange(len(widths))
    w = widths[at]
    if w == 0:
        return t
    p = rng.randrange(w)
    if rng.random() < 0.5:
        zig = (Slice("cup", p + 1), Slice("cap", p))
    else:
        zig = (Slice("cup", p), Slice("cap", p + 1))
    sl = t.word.slices
    return replace(t, word=SliceWord(t.word.width, sl[:at] + zig + sl[at:]))


def commute_far(t: StatedTangle, rng: random.Random) -> StatedTangle:
    """Swap two adjacent crossing slices acting on disjoint strands."""
    sl = list(t.word.slices)
    idx = [
        i
        for i in range(len(sl) - 1)
        if sl[i].kind in ("pos", "neg") and sl[i + 1].kind in ("pos", "neg") and abs(sl[i].pos - sl[i + 1].pos) >= 2
    ]
    if not idx:
        return t
    i = rng.choice(idx)
    sl[i], sl[i + 1] = sl[i + 1], sl[i]
    return replace(t, word=SliceWord(t.word.width, tuple(sl)))


def boundary_slide(t: StatedTangle, rng: random.Random) -> StatedTangle:
    """Add a strand that leaves the right edge, passes under/over its
    neighbour and comes back: a returning arc isotopic to a plain one after R2."""
    w = t.word.top_width
    if w == 0:
        return t
    p = rng.randrange(w)
    # a crossing immediately followed by its inverse next to the right edge
    k = rng.choice(["pos", "neg"])
    other = "neg" if k == "pos" else "pos"
    if w >= 2 and p <= w - 2:
        extra = (Slice(k, p), Slice(other, p))
    else:
        extra = ()
    return replace(t, word=SliceWord(t.word.width, t.word.slices + extra))
