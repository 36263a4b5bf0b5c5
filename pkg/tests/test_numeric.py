import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fglaw import numeric as nm
from fglaw.algebra import ParamPoint

SINE = ParamPoint.jacobi(0.0)
POINT = ParamPoint(0.3, -0.7, 0.11, 0.2)


# -- quadrature ----------------------------------------------------------------


@pytest.mark.parametrize("x, value", [(0.3, 0.304692654015), (0.4, 0.411516846068), (-0.5, -math.pi / 6)])
def test_arcsine_values(x, value):
    assert nm.elliptic_integral(SINE, x).value == pytest.approx(value, abs=1e-12)


def test_integral_of_constant_quartic():
    assert nm.elliptic_integral(ParamPoint(0, 0, 0, 0), 0.7).value == pytest.approx(0.7, abs=1e-15)
    assert nm.elliptic_integral(POINT, 0.0).value == 0.0


def test_gauss_panel_converges_fast():
    exact = math.e - 1
    one = abs(nm._panel(np.exp, 0.0, 1.0) - exact)
    assert one < 1e-14
    res = nm.adaptive_gauss(lambda t: 1 / (1 + 25 * t * t), -1.0, 1.0, 1e-12)
    assert res.value == pytest.approx(2 / 5 * math.atan(5), abs=1e-11)
    assert res.evaluations > 30


def test_adaptive_refines_near_singularity():
    # 1/sqrt(1 - t^2) close to t = 1 needs many panels but converges
    res = nm.adaptive_gauss(lambda t: 1 / (1 - t * t) ** 0.5, 0.0, 0.9999, 1e-10)
    assert res.value == pytest.approx(math.asin(0.9999), abs=1e-10)
    coarse = nm.adaptive_gauss(lambda t: 1 / (1 - t * t) ** 0.5, 0.0, 0.9999, 1e-6)
    assert coarse.evaluations < res.evaluations


def test_rounding_noise_is_reported_not_hidden():
    # at 1 - 1e-6 the integrand carries ~1e-11 relative rounding noise
    with pytest.raises(nm.ConvergenceError):
        nm.adaptive_gauss(lambda t: 1 / (1 - t * t) ** 0.5, 0.0, 0.999999, 1e-10)


def test_convergence_error():
    with pytest.raises(nm.ConvergenceError):
        nm.adaptive_gauss(lambda t: 1 / abs(t - 0.3) ** 0.9, 0.0, 1.0, 1e-13, max_evaluations=2000)


def test_domain_errors():
    with pytest.raises(nm.DomainError):
        nm.elliptic_integral(ParamPoint(0, 0, 0, -1), 2.0)
    with pytest.raises(nm.DomainError):
        nm.elliptic_integral(SINE, 1.0)
    with pytest.raises(ValueError):
        nm.elliptic_integral(SINE, 0.1, tol=1e-16)


@given(st.floats(-0.9, 0.9))
def test_integral_is_odd_for_even_quartic(x):
    a = nm.elliptic_integral(SINE, x).value
    b = nm.elliptic_integral(SINE, -x).value
    assert a == pytest.approx(-b, abs=1e-14)
    assert a == pytest.approx(math.asin(x), abs=1e-12)


# -- series evaluation --------------------------------------------------------


def test_sine_addition_closed_form():
    x, y = 0.03, 0.04
    g = nm.eval_G_numeric(SINE, x, y, exact=False)
    closed = x * math.sqrt(1 - y * y) + y * math.sqrt(1 - x * x)
    assert g == pytest.approx(closed, abs=1e-12)
    assert g == pytest.approx(0.06995798634048878, abs=1e-12)


def test_routes_agree():
    x, y = 0.02, -0.015
    a = nm.eval_G_numeric(POINT, x, y, order=10)
    b = nm.eval_G_numeric(POINT, x, y, order=10, exact=False)
    c = nm.eval_G_numeric(POINT, x, y, order=10, exact=False, route="theorem")
    assert a == pytest.approx(b, abs=1e-15)
    assert a == pytest.approx(c, abs=1e-15)


def test_G_symmetry_and_unit():
    a = nm.eval_G_numeric(POINT, 0.01, 0.02, order=10, exact=False)
    b = nm.eval_G_numeric(POINT, 0.02, 0.01, order=10, exact=False)
    assert a == pytest.approx(b, abs=1e-16)
    assert nm.eval_G_numeric(POINT, 0.01, 0.0, order=10, exact=False) == pytest.approx(0.01, abs=1e-17)


def test_radius_guard():
    with pytest.raises(nm.DomainError):
        nm.eval_G_numeric(POINT, 0.3, 0.0, order=10)
    with pytest.raises(ValueError):
        nm.eval_G_numeric(POINT, 0.01, 0.0, order=10, route="other")


def test_sn_reference_matches_series():
    for k in (0.0, 0.5, 0.9):
        u = 0.03
        ref = nm.sn_reference(k, u)
        ser = nm.eval_SN_numeric(ParamPoint.jacobi(k), u)
        assert ref == pytest.approx(ser, abs=1e-13)
    assert nm.sn_reference(0.0, 0.5) == pytest.approx(math.sin(0.5), abs=1e-13)
    assert nm.sn_reference(0.3, -0.2) == pytest.approx(-nm.sn_reference(0.3, 0.2), abs=1e-15)


def test_sn_reference_rejects_bad_input():
    with pytest.raises(ValueError):
        nm.sn_reference(1.0, 0.1)
    with pytest.raises(nm.ConvergenceError):
        nm.sn_reference(0.0, 2.0)


# -- addition check -------------------------------------------------------


def test_addition_check_sine_case():
    r = nm.addition_check(SINE, 0.3, 0.4, tol=1e-9, order=40, radius=0.5, exact=False)
    assert r.passed, r.line()
    assert r.extra["G"] == pytest.approx(0.656530222264, abs=1e-11)
    assert r.extra["I(x)"] + r.extra["I(y)"] == pytest.approx(0.71620950, abs=1e-8)


def test_addition_check_generic_point():
    r = nm.addition_check(POINT, 0.02, 0.02, tol=1e-8, order=12)
    assert r.passed, r.line()
    assert r.extra["residual"] < 1e-12


def test_addition_check_detects_low_order():
    # order 2 leaves an O(x^3) error far above a tight tolerance
    r = nm.addition_check(SINE, 0.3, 0.4, tol=1e-9, order=2, radius=0.5, exact=False)
    assert not r.passed
