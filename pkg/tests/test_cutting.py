import random

import pytest
from hypothesis import given, strategies as st

from statedskein import bigon, cutting, oq
from statedskein.bigon import StatedTangle, evaluate, evaluate_basis
from statedskein.cutting import SlitTemplate, cut_state_sum, half_ideal_slit, slit_value
from statedskein.oq import OqElement, Tensor2
from statedskein.ring import C_MINUS, C_PLUS, DELTA, ONE, HalfLaurent
from statedskein.tl import Slice, SliceWord


def test_cut_single_arc():
    a, b, c = (OqElement.gen(g) for g in "abc")
    assert cut_state_sum(StatedTangle.generator("a"), 0) == Tensor2.pure(a, a) + Tensor2.pure(b, c)


def test_cut_disjoint_diagram():
    t = StatedTangle(SliceWord(0, (Slice("cup", 0),)), "", "-+")
    # the cut before the cup meets nothing; the cut after it meets two points
    assert cut_state_sum(t, 0) == Tensor2.pure(OqElement.one(), evaluate(t))
    assert cut_state_sum(t, 1) == Tensor2.pure(evaluate(t), OqElement.one())


def test_generator_table_is_coproduct():
    assert cutting.generator_cut_table() == oq.matrix_coproduct_table()


def test_cut_position_errors():
    with pytest.raises(cutting.CutError):
        cut_state_sum(StatedTangle.generator("a"), 1)
    with pytest.raises(cutting.CutError):
        cut_state_sum(StatedTangle(SliceWord(1), "+", "+", left_positive=True), 0)


@pytest.mark.parametrize("seed", range(50))
def test_cut_equals_coproduct(seed):
    rng = random.Random(seed)
    t = bigon.random_tangle(rng)
    pos = rng.randint(0, len(t.word.slices))
    assert cut_state_sum(t, pos) == oq.coproduct(evaluate(t))


@pytest.mark.parametrize("seed", range(20))
def test_two_cuts_commute(seed):
    rng = random.Random(1000 + seed)
    t = bigon.random_tangle(rng, max_width=3, max_slices=4)
    n = len(t.word.slices)
    p1 = rng.randint(0, n)
    p2 = rng.randint(p1, n)
    one = cutting.cut_twice(t, p1, p2, "left")
    two = cutting.cut_twice(t, p1, p2, "right")
    assert one == two
    assert one == cutting.tensor3_from(cut_state_sum(t, p2), "left")


def test_slit_single_crossing_expansion():
    tpl = cutting.core_loops(1)
    terms = half_ideal_slit(tpl)
    assert [(c, t.right) for c, t in terms] == [(C_PLUS.inverse(), "+-"), (C_MINUS.inverse(), "-+")]


def test_slit_retraction():
    rng = random.Random(5)
    for _ in range(30):
        t = bigon.random_tangle(rng)
        tpl = SlitTemplate.plain(t)
        terms = half_ideal_slit(tpl)
        assert len(terms) == 1 and terms[0][0] == ONE and terms[0][1] == t


@pytest.mark.parametrize("seed", range(40))
def test_m1_and_finger_moves(seed):
    rng = random.Random(seed)
    t = bigon.random_tangle(rng)
    while t.word.top_width == 0:
        t = bigon.random_tangle(rng)
    base = evaluate_basis(t)
    assert slit_value(cutting.m1_move(t, "top")) == base
    assert slit_value(cutting.m1_move(t, "bottom")) == base
    assert slit_value(cutting.finger_move(t)) == base


@pytest.mark.parametrize("n", range(0, 4))
def test_loops_crossing_slit_twice_are_trivial(n):
    assert slit_value(cutting.loop_across(n)) == {("", ""): DELTA ** n}


@pytest.mark.parametrize("n", range(0, 5))
def test_core_loops(n):
    assert slit_value(cutting.core_loops(n)) == {("", ""): HalfLaurent.const(2**n)}


def test_template_validation():
    with pytest.raises(ValueError):
        SlitTemplate(SliceWord(0, (Slice("cup", 0),)), "", ("A1", "A1"))
    with pytest.raises(ValueError):
        SlitTemplate(SliceWord(0, (Slice("cup", 0),)), "", ("A1", "x"))


def test_compact_slit_relations_and_disk():
    rels = {(r.left, r.right): r for r in cutting.compact_slit_relations()}
    assert rels["+", "-"].top == HalfLaurent.qh(-1)
    assert rels["+", "-"].bottom == HalfLaurent.qh(-5, -1)
    assert rels["-", "+"].top == HalfLaurent.qh(-5, -1)
    assert not rels["+", "+"].top and not rels["-", "-"].bottom
    one_plus_q2 = ONE + HalfLaurent.q(2)
    assert cutting.disk_module() == one_plus_q2
    assert cutting.disk_module(reflected=True) == one_plus_q2


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4), st.integers(-6, 6))
def test_laurent_gcd_strips_units(coeffs, shift):
    p = HalfLaurent({4 * i: c for i, c in enumerate(coeffs)})
    if not p:
        return
    g = cutting.laurent_gcd([p.shift(shift), p * (ONE + HalfLaurent.q(1))])
    assert g.min_exp() == 0
    # g divides p up to a unit and integer content
    assert cutting.laurent_gcd([g, p]) == g
