import pytest
from hypothesis import HealthCheck, settings, strategies as st

from statedskein.ring import HalfLaurent

settings.register_profile("default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def half_laurent(draw, max_terms=4, span=8):
    terms = draw(st.dictionaries(st.integers(-span, span), st.integers(-3, 3), max_size=max_terms))
    return HalfLaurent(terms)


@st.composite
def unit(draw):
    return HalfLaurent({draw(st.integers(-10, 10)): draw(st.sampled_from([-1, 1]))})


@pytest.fixture(scope="session")
def rng():
    import random

    return random.Random(12345)


# one line per acceptance criterion, filled by test_acceptance.py
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
