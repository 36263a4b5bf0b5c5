from fractions import Fraction

import sys

import pytest
from hypothesis import settings, strategies as st

from fglaw.algebra import P, QQ
from fglaw.series import UniSeries

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

p1, p2, p3, p4 = P.gens()

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)

exponents = st.tuples(*(st.integers(0, 2) for _ in range(4)))


@st.composite
def polys(draw, max_terms=3):
    terms = draw(st.lists(st.tuples(exponents, small_rationals), max_size=max_terms))
    return P.from_terms(terms)


@st.composite
def homogeneous_polys(draw):
    # weight w in units of 2: e1 + 2 e2 + 3 e3 + 4 e4 = w
    w = draw(st.integers(0, 4))
    monos = [
        (a, b, c, d)
        for a in range(5)
        for b in range(3)
        for c in range(2)
        for d in range(2)
        if a + 2 * b + 3 * c + 4 * d == w
    ]
    chosen = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=3, unique=True))
    coeffs = draw(st.lists(small_rationals.filter(bool), min_size=len(chosen), max_size=len(chosen)))
    return P.from_terms(zip(chosen, coeffs))


@st.composite
def qq_series(draw, order=6, const=None, linear=None):
    cs = draw(st.lists(small_rationals, min_size=order + 1, max_size=order + 1))
    if const is not None:
        cs[0] = Fraction(const)
    if linear is not None:
        cs[1] = Fraction(linear)
    return UniSeries(QQ, cs)


@st.composite
def p_series(draw, order=5, const=None, linear=None):
    cs = draw(st.lists(polys(max_terms=2), min_size=order + 1, max_size=order + 1))
    if const is not None:
        cs[0] = P.const(const)
    if linear is not None:
        cs[1] = P.const(linear)
    return UniSeries(P, cs)


@pytest.fixture
def gens():
    return p1, p2, p3, p4


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
