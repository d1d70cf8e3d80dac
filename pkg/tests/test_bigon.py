import itertools
import random

import pytest
from hypothesis import given, strategies as st

from statedskein import bigon, oq
from statedskein.bigon import StatedTangle, evaluate, evaluate_basis, inv_edge, monogon_eval, product, stack
from statedskein.oq import OqElement, nf
from statedskein.ring import C_MINUS, C_PLUS, ONE, ZERO, HalfLaurent
from statedskein.tl import Slice, SliceWord, WidthError

G = {g: StatedTangle.generator(g) for g in "abcd"}


def cup(lo, hi, positive=True):
    return StatedTangle(SliceWord(0, (Slice("cup", 0),)), "", lo + hi, right_positive=positive)


def test_generators():
    for g in "abcd":
        assert evaluate(G[g]) == OqElement.gen(g)
    assert evaluate(StatedTangle.empty()) == OqElement.one()


def test_arc_values_in_monogon():
    assert monogon_eval(cup("+", "-")) == C_PLUS
    assert monogon_eval(cup("-", "+")) == C_MINUS
    assert monogon_eval(cup("+", "+")) == ZERO
    assert monogon_eval(cup("-", "-")) == ZERO
    assert monogon_eval(StatedTangle.empty()) == ONE


def test_reversed_edge_arc_values():
    # on a negatively oriented edge the arc picks up -q^3 and the order flips
    minus_q3 = HalfLaurent({6: -1})
    assert evaluate_basis(cup("-", "+", positive=False)) == {("", ""): minus_q3 * C_PLUS}
    assert evaluate_basis(cup("+", "-", positive=False)) == {("", ""): minus_q3 * C_MINUS}


def test_stack_examples():
    assert stack(G["a"], StatedTangle.empty()) == G["a"]
    assert evaluate(stack(G["a"], G["d"])) == nf("ad")
    assert nf("ad") == OqElement.one() + nf("bc").scale(HalfLaurent.q(-2))
    assert evaluate(stack(G["b"], G["c"])) == evaluate(stack(G["c"], G["b"]))
    assert evaluate(stack(G["b"], G["a"])) == nf("ab").scale(HalfLaurent.q(2))


@given(st.text(alphabet="abcd", max_size=5), st.text(alphabet="abcd", max_size=5))
def test_stack_is_multiplication(x, y):
    X, Y = product(*(G[g] for g in x)), product(*(G[g] for g in y))
    assert evaluate(stack(X, Y)) == evaluate(X) * evaluate(Y)
    assert evaluate(X) == nf(x)


def test_presentation_relations():
    from statedskein.verify import bigon_relations

    for name, ok in bigon_relations():
        assert ok, name


def test_exchange_relation_both_sides():
    """Two strands at the right edge: (+,-) = q^2 (-,+) + q^{-1/2} (joined)."""
    for left in map("".join, itertools.product("+-", repeat=2)):
        lhs = evaluate(StatedTangle(SliceWord(2), left, "+-"))
        swapped = evaluate(StatedTangle(SliceWord(2), left, "-+"))
        joined = StatedTangle(SliceWord(2, (Slice("cap", 0),)), left, "")
        rhs = swapped.scale(HalfLaurent.q(2)) + evaluate(joined).scale(HalfLaurent.qh(-1))
        assert lhs == rhs


def test_crossing_pair_next_to_edge_cancels():
    for left, right in itertools.product(map("".join, itertools.product("+-", repeat=2)), repeat=2):
        t = StatedTangle(SliceWord(2, (Slice("pos", 0), Slice("neg", 0))), left, right)
        assert evaluate(t) == evaluate(StatedTangle(SliceWord(2), left, right))


def _seed_diagrams(n=20):
    rng = random.Random(2718)
    out = []
    while len(out) < n:
        t = bigon.random_tangle(rng, max_width=3, max_slices=5)
        if t.word.slices:
            out.append(t)
    return out


@pytest.mark.parametrize("seed", range(20))
def test_isotopy_invariance(seed):
    t = _seed_diagrams()[seed]
    rng = random.Random(seed)
    base = evaluate(t)
    moves = [bigon.insert_r2, bigon.insert_zigzag, bigon.commute_far, bigon.boundary_slide]
    for _ in range(100):
        mv = rng.choice(moves + [None])
        if mv is None:
            a, b = bigon.insert_r3(t, rng)
            assert evaluate(a) == evaluate(b)
            continue
        assert evaluate(mv(t, rng)) == base


def test_increasing_diagrams_give_pbw_basis():
    for k in range(0, 7):
        leads = set()
        for i, j in itertools.product(range(k + 1), repeat=2):
            t = StatedTangle(SliceWord(k), "-" * i + "+" * (k - i), "-" * j + "+" * (k - j))
            x = evaluate(t)
            top = {m: c for m, c in x.terms.items() if m.degree() == k}
            assert len(top) == 1
            (m, c), = top.items()
            assert c.is_unit()
            leads.add(m)
        assert len(leads) == (k + 1) ** 2


@pytest.mark.parametrize("g", "abcd")
@pytest.mark.parametrize("edge", "LR")
def test_inv_edge_involution(g, edge):
    c1, t1 = inv_edge(G[g], edge)
    c2, t2 = inv_edge(t1, edge)
    for kappa in bigon.KAPPA_CONVENTIONS.values():
        assert bigon.scaled_basis(c1 * c2, evaluate_basis(t2, kappa)) == evaluate_basis(G[g], kappa)
    assert (t2.left_positive, t2.right_positive) == (G[g].left_positive, G[g].right_positive)


def test_inv_edge_example_and_empty():
    c, t = inv_edge(G["a"], "R")
    assert c == C_PLUS and t.right == "-" and not t.right_positive
    c0, t0 = inv_edge(StatedTangle.empty(), "L")
    assert c0 == ONE and evaluate_basis(t0) == {("", ""): ONE}


def test_inverted_arc_relation_preserved():
    # the image of the arc relation under inversion of the right edge
    for lo, hi in itertools.product("+-", repeat=2):
        c, t = inv_edge(cup(lo, hi), "R")
        assert bigon.scaled_basis(c, evaluate_basis(t)) == evaluate_basis(cup(lo, hi))


@pytest.mark.parametrize("name", list(bigon.KAPPA_CONVENTIONS))
def test_negative_edge_rules_agree_with_inversion(name):
    kappa = bigon.KAPPA_CONVENTIONS[name]
    rng = random.Random(len(name))
    for _ in range(60):
        t = bigon.random_tangle(rng)
        for edge in "LR":
            c, ti = inv_edge(t, edge)
            direct = bigon.scaled_basis(c, evaluate_basis(ti, kappa))
            via_basis: dict = {}
            for (ls, rs), v in evaluate_basis(t, kappa).items():
                c2, b2 = inv_edge(StatedTangle(SliceWord(len(ls)), ls, rs), edge)
                for key, w in evaluate_basis(b2, kappa).items():
                    via_basis[key] = via_basis.get(key, ZERO) + w * c2 * v
            assert direct == {k: v for k, v in via_basis.items() if v}


def test_json_round_trip():
    t = StatedTangle(SliceWord(2, (Slice("pos", 0), Slice("cup", 1))), "+-", "-++-")
    assert StatedTangle.from_json(t.to_json()) == t
    c, ti = inv_edge(t, "L")
    assert StatedTangle.from_json(ti.to_json()) == ti


def test_validation():
    with pytest.raises(WidthError):
        StatedTangle(SliceWord(2), "+", "++")
    with pytest.raises(ValueError):
        StatedTangle(SliceWord(1), "x", "+")
    with pytest.raises(ValueError):
        evaluate(StatedTangle(SliceWord(1), "+", "+", left_positive=True))
