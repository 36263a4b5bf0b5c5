"""Canonical series of the Buchstaber law.

Expected coefficients were produced once with sympy by solving the defining
ODE with undetermined coefficients and are frozen here; ``test_live_sympy``
redoes that computation at low order when sympy is available.
"""
from fractions import Fraction

import pytest

from fglaw import buchstaber as bu
from fglaw.algebra import P, QQ
from fglaw.params import fkh_jacobi, generic, rational_point
from fglaw.series import UniSeries

from .conftest import p1, p2, p3, p4


FROZEN = {
    "B": [1, -p1 / 2, (p1**2 - 4 * p2) / 16, -p3 / 6, -(p1 * p3 + 2 * p4) / 16,
          -(5 * p1**2 * p3 + 24 * p1 * p4 + 4 * p2 * p3) / 240],
    "A": [1, -p1 / 2, 0, -p3 / 12],
    "mu": [0, 1, p1 / 2, 3 * p1**2 / 16 + p2 / 4, p1**3 / 16 + p1 * p2 / 4 + p3 / 6],
    "nu": [0, 1, -p1 / 2, 5 * p1**2 / 16 - p2 / 4, -7 * p1**3 / 32 + 3 * p1 * p2 / 8 - p3 / 6],
    "logF": [0, 1, p1 / 4, p1**2 / 16 + p2 / 12, p1**3 / 64 + p1 * p2 / 16 + p3 / 24],
    "R": [1, p1 / 2, -p1**2 / 8 + p2 / 2, p1**3 / 16 - p1 * p2 / 4 + p3 / 2],
    "expF": [0, 1, -p1 / 4, p1**2 / 16 - p2 / 12],
}


@pytest.fixture(scope="module")
def cs12():
    return bu.build_canonical(12)


def test_b1_b2():
    B = bu.build_B(3)
    assert B[1] == -p1 / 2
    assert B[2] == p1**2 / 16 - p2 / 4
    assert bu.b_shift_constant(generic()) == B[2]


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_frozen_coefficients(cs12, name):
    want = FROZEN[name]
    got = cs12.named()[name]
    for n, c in enumerate(want):
        assert got[n] == c, (name, n)


def test_A_two_forms_agree(cs12):
    assert cs12.A[0] == 1
    assert bu.build_A(10) == bu.build_A_via_lemma(10)


def test_live_sympy():
    sp = pytest.importorskip("sympy")
    x = sp.Symbol("x")
    q = sp.symbols("p1:5")
    N = 5
    c = sp.symbols(f"c1:{N + 1}")
    B = 1 + sum(c[i] * x ** (i + 1) for i in range(N))
    lhs = B**2 * (B - x * sp.diff(B, x)) ** 2
    rhs = B**4 + q[0] * x * B**3 + q[1] * x**2 * B**2 + q[2] * x**3 * B + q[3] * x**4
    poly = sp.Poly(sp.expand(lhs - rhs), x)
    sol = {}
    for n in range(1, N + 1):
        eq = poly.coeff_monomial(x**n).subs(sol)
        sol[c[n - 1]] = sp.solve(eq, c[n - 1])[0]
    ours = bu.build_B(N)
    for n in range(1, N + 1):
        expected = sp.Poly(sp.expand(sol[c[n - 1]]), *q)
        mine = {e: Fraction(int(v.numerator), int(v.denominator)) for e, v in ours[n].terms()}
        theirs = {e: Fraction(int(v.p), int(v.q)) for e, v in expected.terms()}
        assert mine == theirs, n


# -- checks and their negative controls ------------------------------------


def test_ode_check_and_negative_control():
    assert bu.check_B_ode(12).passed
    B = bu.build_B(13)
    bad = bu.check_B_ode(12, B=bu.perturbed(B, 2, p1 * p1))
    assert not bad.passed
    assert bad.first_failure[0] == (2,)
    shifted = bu.check_B_ode(12, B=bu.perturbed(B, 2, P.one))
    assert not shifted.passed


@pytest.mark.parametrize(
    "check, order",
    [
        (bu.check_A_forms, 12),
        (bu.check_mu_nu, 12),
        (bu.check_exp_ode, 12),
        (bu.check_xi_identity, 11),
        (bu.check_hoehn_condition, 12),
        (bu.check_B_R_bridge, 12),
        (bu.check_grading, 12),
        (bu.check_log_additivity, 8),
        (bu.check_F_matches_log, 8),
        (bu.check_fgl_axioms, 8),
    ],
)
def test_checks_pass(check, order):
    r = check(order)
    assert r.passed, r.line()


def test_fault_injection_breaks_hoehn():
    r = bu.check_hoehn_condition(12, generic().with_fault("b2-sign"))
    assert not r.passed
    assert r.first_failure[0] == (2,)


def test_hoehn_rejects_wrong_exponent(cs12):
    f = cs12.expF
    wrong = UniSeries(P, list(f.coeffs[:3]) + [f[3] + p2] + list(f.coeffs[4:]))
    res = bu.hoehn_residual(wrong, generic())
    assert res.valuation() is not None


def test_F_ignores_x2_shift_of_A():
    # x^2 A(y) - y^2 A(x) does not see a c x^2 term in A
    cs = bu.build_canonical(8)
    x2 = UniSeries(P, [0, 0, p2], 8)
    assert bu.fgl_from_AB(cs.A + x2, cs.B) == bu.fgl_from_AB(cs.A, cs.B)


def test_F_built_from_wrong_A_fails():
    cs = bu.build_canonical(8)
    x3 = UniSeries(P, [0, 0, 0, p3], 8)
    F = bu.fgl_from_AB(cs.A + x3, cs.B)
    assert not bu.check_log_additivity(8, F=F).passed


def test_F_low_coefficients():
    F = bu.build_F(3)
    assert F[1, 0] == 1 and F[0, 1] == 1
    assert F[1, 1] == -p1 / 2
    assert F.is_symmetric()


def test_b_from_taylor_coefficients(cs12):
    f = cs12.expF
    f2 = 2 * f[2]  # f''(0)
    f3 = 6 * f[3]  # f'''(0)
    assert cs12.B[1] == f2
    assert cs12.B[2] == f3 / 2 - f2 * f2 / 2


def test_specialization_commutes_with_building():
    values = [Fraction(1, 3), Fraction(-2, 5), Fraction(3, 7), Fraction(1, 2)]
    images = [QQ.const(v) for v in values]
    generic_B = bu.build_B(8)
    point_B = bu.build_B(8, rational_point(values))
    for n in range(9):
        assert generic_B[n].subs(images, QQ) == point_B[n]


def test_jacobi_fkh_closed_form():
    params = fkh_jacobi()
    cs = bu.build_canonical(12, params)
    k = params.ring.gen("k")
    quartic = UniSeries(params.ring, [1, 0, -(1 + k * k), 0, k * k], 12)
    assert cs.A == UniSeries(params.ring, [1], 12)
    assert cs.B == quartic.sqrt()


def test_weight_violation_is_reported():
    assert bu.series_weight_violations("B", bu.build_B(5), 0) == []
    bad = bu.perturbed(bu.build_B(5), 3, p1)
    assert bu.series_weight_violations("B", bad, 0)[0][0] == ("B", 3)


# -- associativity on three variables ----------------------------------------


def _tri_mul(a, b, N):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
            if sum(e) <= N:
                out[e] = out.get(e, P.zero) + ca * cb
    return {e: c for e, c in out.items() if c}


def _tri_compose(F, u, v, N):
    """F(u, v) for trivariate u, v without constant term."""
    upow = [{(0, 0, 0): P.one}]
    vpow = [{(0, 0, 0): P.one}]
    for _ in range(N):
        upow.append(_tri_mul(upow[-1], u, N))
        vpow.append(_tri_mul(vpow[-1], v, N))
    out = {}
    for (i, j), c in F.coeffs.items():
        if not c or i + j > N:
            continue
        for e, t in _tri_mul(upow[i], vpow[j], N).items():
            out[e] = out.get(e, P.zero) + c * t
    return {e: c for e, c in out.items() if c}


def test_F_is_associative():
    N = 6
    F = bu.build_F(N)
    x, z = {(1, 0, 0): P.one}, {(0, 0, 1): P.one}
    Fxy = {(i, j, 0): c for (i, j), c in F.coeffs.items() if c}
    Fyz = {(0, i, j): c for (i, j), c in F.coeffs.items() if c}
    assert _tri_compose(F, Fxy, z, N) == _tri_compose(F, x, Fyz, N)
