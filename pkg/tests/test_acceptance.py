"""The thirteen acceptance criteria, each timed from cold caches."""

import time

import pytest

from conftest import ACCEPTANCE
from statedskein import verify
from statedskein.ring import CyclotomicSpec

GENERIC = verify.SuiteConfig()


def _jones_wenzl_all(cfg):
    results = [verify.check_jones_wenzl(cfg)]
    results += [verify.check_jones_wenzl(verify.SuiteConfig(CyclotomicSpec(m))) for m in (16, 24, 40)]
    return all(ok for ok, _ in results), [c for _, c in results]


CRITERIA = [
    (1, "TL dimensions are Catalan numbers", verify.check_catalan, 1.0),
    (2, "Jones-Wenzl idempotent, non-returnable; fails exactly for n >= N", _jones_wenzl_all, 10.0),
    (3, "closure of f_n is S_n", verify.check_closure, 10.0),
    (4, "u/v lemma (k+m <= 4) and stated variant (k+m <= 3)", verify.check_uvkm_suite, 60.0),
    (5, "vanishing chain at m = 16, 24, 40; none generically", verify.check_vanishing, 5.0),
    (6, "confluence, seven relations in the bigon, Hopf axioms", verify.check_presentation, 30.0),
    (7, "cutting state sum equals the coproduct", verify.check_coproduct_cut, 30.0),
    (8, "HH0 torsion pair", verify.check_hh0_torsion, 5.0),
    (9, "core loop is 2 tau(1)", verify.check_core_loop, 1.0),
    (10, "disk annihilator is (1+q^2)", verify.check_disk, 1.0),
    (11, "Chebyshev-Frobenius kernel, N <= 20", verify.check_frobenius, 5.0),
    (12, "Hoste-Przytycki survivors", verify.check_hoste_przytycki, 1.0),
    (13, "inv_edge is an involution", verify.check_involution, 1.0),
]


@pytest.mark.parametrize("num,title,check,bound", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(num, title, check, bound):
    verify.clear_caches()
    t0 = time.perf_counter()
    ok, cert = check(GENERIC)
    elapsed = time.perf_counter() - t0
    passed = ok and elapsed < bound
    line = f"[{'PASS' if passed else 'FAIL'}] {num:2d}. {title}  ({elapsed:.2f} s, bound {bound:g} s)"
    ACCEPTANCE.append(line)
    print(line)
    assert ok, cert
    assert elapsed < bound, f"took {elapsed:.2f} s"
