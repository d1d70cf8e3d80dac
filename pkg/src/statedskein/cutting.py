"""Cutting and slitting state sums on rectangle-presented diagrams.

Cuts are vertical lines between two slices of a word. A cut meeting the
diagram in ``k`` points produces ``2**k`` split diagrams, one per state
assignment on the cut; the left piece gets those states on its new right edge
and the right piece on its new left edge.

Slits are modelled on the slit surface directly. A :class:`SlitTemplate` is a
diagram whose right edge (the broken boundary circle) carries two kinds of
endpoints: ordinary stated ones and the pairs created where a strand crossed
the slit arc. Crossing ``i`` leaves an endpoint ``A<i>`` just after the slit
foot and ``B<i>`` just before it; the state sum gives ``A<i>`` the state e,
``B<i>`` the opposite state, and weights the term by ``C(e)^{-1}``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import reduce

import sympy

from .bigon import (
    C,
    StatedTangle,
    _add,
    evaluate,
    evaluate_basis,
    flip,
    monogon_eval,
)
from .oq import OqElement, Tensor2, coproduct
from .ring import ONE, ZERO, HalfLaurent
from .tl import Slice, SliceWord, WidthError

_TOKEN = re.compile(r"^([+-]|[AB]\d+)$")


class CutError(ValueError):
    pass


def split(t: StatedTangle, pos: int) -> list[tuple[str, StatedTangle, StatedTangle]]:
    """All stated splittings of ``t`` along the vertical line before slice ``pos``."""
    if not t.standard:
        raise CutError("cutting needs the standard bigon orientation")
    n = len(t.word.slices)
    if not 0 <= pos <= n:
        raise CutError(f"cut position {pos} outside 0..{n}")
    w = t.word.widths()[pos]
    lw = SliceWord(t.word.width, t.word.slices[:pos])
    rw = SliceWord(w, t.word.slices[pos:])
    out = []
    for eps in itertools.product("+-", repeat=w):
        e = "".join(eps)
        out.append((e, StatedTangle(lw, t.left, e), StatedTangle(rw, e, t.right)))
    return out


def cut_state_sum(t: StatedTangle, pos: int) -> Tensor2:
    """Sum over cut states of evaluate(left piece) (x) evaluate(right piece)."""
    out = Tensor2()
    for _, lt, rt in split(t, pos):
        x = evaluate(lt)
        if not x:
            continue
        out = out + Tensor2.pure(x, evaluate(rt))
    return out


def generator_cut_table() -> dict[str, Tensor2]:
    """Cut of each generator arc (an empty word, so the only cut is at 0)."""
    return {g: cut_state_sum(StatedTangle.generator(g), 0) for g in "abcd"}


# ---------------------------------------------------------------------------
# triple tensors for the two-cut check


def _pure3(x: OqElement, y: OqElement, z: OqElement) -> dict:
    out: dict = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            c12 = c1 * c2
            for m3, c3 in z.terms.items():
                _add(out, (m1, m2, m3), c12 * c3)
    return out


def _merge(acc: dict, other: dict, c: HalfLaurent = ONE):
    for k, v in other.items():
        _add(acc, k, v * c)


def cut_twice(t: StatedTangle, p1: int, p2: int, first: str = "left") -> dict:
    """Triple tensor from cuts at ``p1 < p2``, performing the ``first`` one first."""
    if not p1 <= p2:
        raise CutError("need p1 <= p2")
    acc: dict = {}
    if first == "left":
        for _, lt, rt in split(t, p1):
            x = evaluate(lt)
            if not x:
                continue
            for _, mt, rrt in split(rt, p2 - p1):
                _merge(acc, _pure3(x, evaluate(mt), evaluate(rrt)))
    else:
        for _, lt, rt in split(t, p2):
            z = evaluate(rt)
            if not z:
                continue
            for _, llt, mt in split(lt, p1):
                _merge(acc, _pure3(evaluate(llt), evaluate(mt), z))
    return acc


def tensor3_from(t2: Tensor2, side: str) -> dict:
    """(coproduct (x) id) or (id (x) coproduct) applied to a Tensor2."""
    acc: dict = {}
    for (m1, m2), c in t2.terms.items():
        if side == "left":
            for (x1, x2), d in coproduct(OqElement.monomial(m1)).terms.items():
                _add(acc, (x1, x2, m2), c * d)
        else:
            for (y1, y2), d in coproduct(OqElement.monomial(m2)).terms.items():
                _add(acc, (m1, y1, y2), c * d)
    return acc


# ---------------------------------------------------------------------------
# half-ideal slit


@dataclass(frozen=True)
class SlitTemplate:
    """Diagram on the slit surface with crossing markers on the right edge."""

    word: SliceWord
    left: str
    right: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "right", tuple(self.right))
        if len(self.left) != self.word.width or len(self.right) != self.word.top_width:
            raise WidthError("template endpoint counts do not match the word")
        for tok in self.right:
            if not _TOKEN.match(tok):
                raise ValueError(f"bad right-edge token {tok!r}")
        a = sorted(int(x[1:]) for x in self.right if x[0] == "A")
        b = sorted(int(x[1:]) for x in self.right if x[0] == "B")
        if a != b or len(set(a)) != len(a):
            raise ValueError("each slit crossing needs exactly one A and one B endpoint")

    @property
    def crossings(self) -> list[int]:
        return sorted(int(x[1:]) for x in self.right if x[0] == "A")

    @classmethod
    def plain(cls, t: StatedTangle) -> "SlitTemplate":
        return cls(t.word, t.left, tuple(t.right))


def half_ideal_slit(tpl: SlitTemplate) -> list[tuple[HalfLaurent, StatedTangle]]:
    """The ``2**k`` weighted stated diagrams on the slit surface."""
    ids = tpl.crossings
    out = []
    for eps in itertools.product("+-", repeat=len(ids)):
        state = dict(zip(ids, eps))
        coef = ONE
        for e in eps:
            coef = coef * C(e).inverse()
        right = []
        for tok in tpl.right:
            if tok in "+-":
                right.append(tok)
            elif tok[0] == "A":
                right.append(state[int(tok[1:])])
            else:
                right.append(flip(state[int(tok[1:])]))
        out.append((coef, StatedTangle(tpl.word, tpl.left, "".join(right))))
    return out


def slit_value(tpl: SlitTemplate) -> dict:
    """Evaluated slit state sum, as a basis expansion."""
    acc: dict = {}
    for coef, t in half_ideal_slit(tpl):
        _merge(acc, evaluate_basis(t), coef)
    return acc


def m1_move(t: StatedTangle, end: str = "top") -> SlitTemplate:
    """Slide the extreme right-edge endpoint of ``t`` across the slit foot.

    The strand now crosses the slit once; a short arc joins the new slit
    endpoint on the far side to the original stated endpoint.
    """
    R = t.word.top_width
    if R == 0:
        raise ValueError("no right-edge endpoint to move")
    if end == "top":
        s = t.right[-1]
        word = SliceWord(t.word.width, t.word.slices + (Slice("cup", 0),))
        right = ("A1", s) + tuple(t.right[:-1]) + ("B1",)
    else:
        s = t.right[0]
        word = SliceWord(t.word.width, t.word.slices + (Slice("cup", R),))
        right = ("A1",) + tuple(t.right[1:]) + (s, "B1")
    return SlitTemplate(word, t.left, right)


def finger_move(t: StatedTangle) -> SlitTemplate:
    """Push a finger of the topmost right-edge strand across the slit twice."""
    R = t.word.top_width
    if R == 0:
        raise ValueError("no right-edge endpoint")
    s = t.right[-1]
    # strand end -> B1 (last); finger tip A1-A2 at the start; B2 joined to s
    word = SliceWord(t.word.width, t.word.slices + (Slice("cup", 0), Slice("cup", R + 1)))
    right = ("A1", "A2") + tuple(t.right[:-1]) + (s, "B2", "B1")
    return SlitTemplate(word, t.left, right)


def loop_across(k_loops: int = 1) -> SlitTemplate:
    """``k_loops`` small loops side by side along the slit, each crossing it twice."""
    n = 2 * k_loops
    word = SliceWord(0, (Slice("cup", 0),) * n)
    right = tuple(f"A{i + 1}" for i in range(n)) + tuple(f"B{n - i}" for i in range(n))
    return SlitTemplate(word, "", right)


def core_loops(n: int) -> SlitTemplate:
    """``n`` parallel copies of a loop crossing the slit once (annulus cores)."""
    word = SliceWord(0, tuple(Slice("cup", i) for i in range(n)))
    right = tuple(f"A{i + 1}" for i in range(n)) + tuple(f"B{n - i}" for i in range(n))
    return SlitTemplate(word, "", right)


# ---------------------------------------------------------------------------
# compact slit and the disk


@dataclass(frozen=True)
class SlitRelation:
    left: str
    right: str
    top: HalfLaurent
    bottom: HalfLaurent

    @property
    def difference(self) -> HalfLaurent:
        return self.top - self.bottom

    def to_json(self) -> dict:
        return {"states": self.left + self.right, "top": self.top.to_json(), "bottom": self.bottom.to_json()}


def _arc(lo: str, hi: str) -> StatedTangle:
    return StatedTangle(SliceWord(0, (Slice("cup", 0),)), "", lo + hi)


def compact_slit_relations(reflected: bool = False) -> list[SlitRelation]:
    """The identification top arc ~ bottom arc for every state pair.

    The top arc meets the boundary with its right endpoint first; the bottom
    arc with its left endpoint first. ``reflected`` swaps the two readings.
    """
    rels = []
    for l, r in itertools.product("+-", repeat=2):
        top = monogon_eval(_arc(r, l))
        bottom = monogon_eval(_arc(l, r))
        if reflected:
            top, bottom = bottom, top
        rels.append(SlitRelation(l, r, top, bottom))
    return rels


def laurent_gcd(values: list[HalfLaurent]) -> HalfLaurent:
    """Gcd in Z[q^{+-1/2}], normalized to a polynomial in q^{1/2} with nonzero
    constant term and positive leading coefficient."""
    t = sympy.Symbol("t")
    polys = []
    for v in values:
        if not v:
            continue
        lo = v.min_exp()
        polys.append(sympy.Poly({(e - lo,): c for e, c in v.items()}, t, domain="ZZ"))
    if not polys:
        return ZERO
    g = reduce(sympy.gcd, polys)
    terms = {m[0]: int(c) for m, c in g.terms()}
    lo = min(terms)
    h = HalfLaurent({e - lo: c for e, c in terms.items()})
    if h.coeff(h.max_exp()) < 0:
        h = -h
    return h


def disk_module(reflected: bool = False) -> HalfLaurent:
    """Generator of the annihilator of the empty skein in the disk."""
    return laurent_gcd([r.difference for r in compact_slit_relations(reflected)])
