import pytest

from fglaw import addition as ad
from fglaw.algebra import P
from fglaw.params import generic, rational_point
from fglaw.series import UniSeries

from .conftest import p1, p2, p3


@pytest.fixture(scope="module")
def bundle8():
    return ad.build_bundle(8)


def test_logG_and_SN_low_coefficients(bundle8):
    logG, sn = bundle8.logG, bundle8.SN
    assert logG.coeffs[:5] == [0, 1, -p1 / 4, p1**2 / 8 - p2 / 6,
                               -5 * p1**3 / 64 + 3 * p1 * p2 / 16 - p3 / 8]
    assert sn.coeffs[:4] == [0, 1, p1 / 4, p2 / 6]


def test_G_low_coefficients(bundle8):
    G = bundle8.G_via_exp
    assert G[1, 0] == 1 and G[0, 1] == 1
    assert G[1, 1] == p1 / 2
    assert bundle8.G_via_theorem[1, 1] == p1 / 2


def test_theorem_matches_exponential_route():
    r = ad.check_G_theorem(8)
    assert r.passed, r.line()


def test_printed_P2_fails_at_first_coefficient():
    # known-bad control: with nu(x) inside the bracket the assembly misses G at x y
    r = ad.check_G_theorem(6, p2_variant="printed")
    assert not r.passed
    assert r.first_failure == ((1, 1), "-1/2*p1")


def test_printed_P2_is_not_homogeneous():
    _, P2, _ = ad.build_P_series(6, generic(), "printed")
    weights = {c.weight() for (i, j), c in P2.coeffs.items() if c and i + j == 4}
    assert None in weights or len(weights) > 1


def test_unknown_variant():
    with pytest.raises(ValueError):
        ad.build_P_series(4, generic(), "other")


def test_P_structure(bundle8):
    assert bundle8.P1 == bundle8.P3
    r = ad.check_P_structure(8)
    assert r.passed, r.line()


def test_P2_vanishes_at_origin_of_parameters():
    zero = [P.zero] * 4
    _, P2, _ = ad.build_P_series(6, generic())
    for (i, j), c in P2.coeffs.items():
        if i + j <= 3:
            assert c.subs(zero, P) == 0, (i, j)


def test_G_axioms(bundle8):
    G = bundle8.G_via_theorem
    assert G == G.swap()
    assert G.row_x() == UniSeries.x(P, 8)
    assert ad.check_G_symmetry(8).passed


@pytest.mark.parametrize(
    "check", [ad.check_strict_iso, ad.check_SN_addition, ad.check_G_log_additivity, ad.check_G_grading]
)
def test_checks_pass(check):
    r = check(8)
    assert r.passed, r.line()


def test_strict_iso_negative_control():
    wrong = UniSeries(P, [0, 1, 0, 1], 8)
    assert not ad.check_strict_iso(8, iso=wrong).passed


def test_theorem_at_rational_point():
    params = rational_point(["1/3", "-2/5", "3/7", "1/2"])
    assert ad.check_G_theorem(8, params).passed
    assert ad.check_SN_addition(8, params).passed
