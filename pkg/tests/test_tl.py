import pytest
from hypothesis import given, strategies as st

from statedskein.ring import DELTA, CyclotomicField, HalfLaurent, LaurentRing, cheb_S
from statedskein import tl
from statedskein.tl import Matching, Slice, SliceWord, TLElement, WidthError

LR = LaurentRing()


@st.composite
def matchings(draw, n=None):
    n = draw(st.integers(0, 5)) if n is None else n
    return draw(st.sampled_from(tl.enumerate_matchings(n)))


@pytest.mark.parametrize("n,c", list(zip(range(1, 9), [1, 2, 5, 14, 42, 132, 429, 1430])))
def test_catalan(n, c):
    ms = tl.enumerate_matchings(n)
    assert len(ms) == c == tl.catalan(n)
    assert len(set(ms)) == c


def test_matching_validation():
    with pytest.raises(ValueError):
        Matching(2, 2, (2, 3, 0, 1))  # crossing pairing
    with pytest.raises(ValueError):
        Matching(1, 1, (0, 1))  # not an involution without fixed points
    m = Matching.e(3, 1)
    assert Matching.from_json(m.to_json()) == m


@given(st.data())
def test_composition_associative(data):
    n = data.draw(st.integers(1, 4))
    a, b, c = (data.draw(matchings(n)) for _ in range(3))
    A, B, Cc = (TLElement.basis(LR, x) for x in (a, b, c))
    assert (A * B) * Cc == A * (B * Cc)


@given(st.data())
def test_identity_is_neutral(data):
    n = data.draw(st.integers(0, 5))
    a = TLElement.basis(LR, data.draw(matchings(n)))
    one = TLElement.identity(LR, n)
    assert a * one == a == one * a


def test_temperley_lieb_relations():
    for n in range(2, 6):
        for i in range(1, n):
            e = TLElement.basis(LR, Matching.e(n, i))
            assert e * e == e.scale(DELTA)
            if i + 1 < n:
                f = TLElement.basis(LR, Matching.e(n, i + 1))
                assert e * f * e == e
                assert f * e * f == f


def test_kauffman_resolution():
    pos = tl.resolve(SliceWord(2, (Slice("pos", 0),)), LR)
    neg = tl.resolve(SliceWord(2, (Slice("neg", 0),)), LR)
    ident = Matching.identity(2)
    assert {pos.coeff(ident), neg.coeff(ident)} == {HalfLaurent.q(1), HalfLaurent.q(-1)}
    assert pos * neg == TLElement.identity(LR, 2)


def test_kink_and_reidemeister_three():
    kink = tl.resolve(SliceWord(1, (Slice("cup", 1), Slice("pos", 0), Slice("cap", 1))), LR)
    assert kink == TLElement.identity(LR, 1).scale(HalfLaurent({6: -1}))
    for k in ("pos", "neg"):
        a = tl.resolve(SliceWord(3, (Slice(k, 0), Slice(k, 1), Slice(k, 0))), LR)
        b = tl.resolve(SliceWord(3, (Slice(k, 1), Slice(k, 0), Slice(k, 1))), LR)
        assert a == b


def test_twist_slices():
    t = tl.resolve(SliceWord(2, (Slice("twist", 0, 2),)), LR)
    assert t == TLElement.identity(LR, 2).scale(HalfLaurent.q(3, -1) ** 2)


def test_slice_word_widths_and_json():
    w = SliceWord(2, (Slice("cup", 1), Slice("pos", 0), Slice("cap", 2)))
    assert w.widths() == [2, 4, 4, 2]
    assert SliceWord.from_json(w.to_json()) == w
    with pytest.raises(WidthError):
        SliceWord(1, (Slice("pos", 0),))
    with pytest.raises(WidthError):
        SliceWord(2, (Slice("cap", 1),))


@pytest.mark.parametrize("n", range(0, 6))
def test_jones_wenzl_properties(n):
    f = tl.jones_wenzl(n)
    assert f * f == f
    assert f.coeff(Matching.identity(n)) == f.ring.one
    for i in range(n - 1):
        cap = TLElement.basis(f.ring, tl.cap_on(n, i))
        cup = TLElement.basis(f.ring, tl.cup_on(n - 2, i))
        assert not (cap * f)
        assert not (f * cup)


def test_identity_is_returnable():
    one = TLElement.identity(tl.default_ring(), 3)
    cap = TLElement.basis(one.ring, tl.cap_on(3, 0))
    assert cap * one


@pytest.mark.parametrize("m", [16, 24, 40])
def test_jones_wenzl_root_of_unity(m):
    ring = CyclotomicField(m)
    N = ring.spec.N
    for n in range(N):
        f = tl.jones_wenzl(n, ring)
        assert f * f == f
    for n in (N, N + 1):
        with pytest.raises(tl.NonInvertible):
            tl.jones_wenzl(n, ring)


@pytest.mark.parametrize("n", range(0, 6))
def test_closure_is_chebyshev(n):
    got = tl.annulus_closure(tl.jones_wenzl(n))
    ring = tl.default_ring()
    want = cheb_S(n)
    assert set(got.coeffs) == set(want.coeffs)
    for p, c in want.coeffs.items():
        assert got.coeffs[p] == ring.from_laurent(HalfLaurent.const(int(c)))


def test_closure_of_basis_elements():
    # the closure of e_1 in TL_2 is a single trivial loop times one essential
    assert tl.annulus_closure(TLElement.identity(LR, 2)).coeffs == {2: HalfLaurent.const(1)}
    e = TLElement.basis(LR, Matching.e(2, 1))
    assert tl.annulus_closure(e).coeffs == {0: DELTA}


def test_weighted_symmetrizers_do_not_give_projector():
    report = tl.jw_weight_report(2)
    assert report and not any(report.values())


@pytest.mark.parametrize("k,m", [(1, 0), (2, 0), (1, 1), (1, 2)])
def test_uv_lemma_small(k, m):
    u, _ = tl.build_uv(k, m)
    assert u == tl.uv_rhs(k, m)


def test_uv_lemma_fails_for_other_configuration():
    cfg = tl.UVConfig(slid="right", sign="neg", back="neg")
    u, _ = tl.build_uv(1, 0, cfg)
    assert u != tl.uv_rhs(1, 0, cfg)
