"""Classical cases: Jacobi sn, Euler's addition law, Cayley's form, the even quartic."""
from __future__ import annotations

from gmpy2 import mpq

from . import params as P
from .addition import build_bundle, build_logG_SN
from .buchstaber import build_canonical
from .report import VerifyReport, combine, residual_report
from .series import BiSeries, UniSeries


def jacobi_sine_oracle(ring, k, order: int) -> UniSeries:
    """sn(x) from f'^2 = (1 - f^2)(1 - k^2 f^2), f = x + O(x^2), solved coefficientwise.

    At x^(n-1) the left side contains 2 n f_n (from 2 f'_0 f'_{n-1}) while the
    right side only involves f_1..f_{n-2}.
    """
    f = [ring.zero, ring.one] + [ring.zero] * (order - 1)
    k2 = k * k
    for n in range(2, order + 1):
        m = n - 1
        fs = UniSeries(ring, f[:n], m)
        fd = UniSeries(ring, [ring.scale(f[i], i) for i in range(1, n)] + [ring.zero], m)
        rhs = (1 - fs * fs) * (1 - (fs * fs) * k2)
        gap = rhs[m] - (fd * fd)[m]
        f[n] = ring.scale(gap, mpq(1, 2 * n))
    return UniSeries(ring, f)


def euler_T(ring, k, order: int) -> BiSeries:
    """(x R(y) + y R(x)) / (1 - k^2 x^2 y^2) with R = sqrt((1 - t^2)(1 - k^2 t^2))."""
    k2 = k * k
    R = UniSeries(ring, [ring.one, ring.zero, -(1 + k2), ring.zero, k2], order).sqrt()
    x = BiSeries(ring, {(1, 0): ring.one}, order)
    y = BiSeries(ring, {(0, 1): ring.one}, order)
    num = x * BiSeries.from_uni(R, "y") + y * BiSeries.from_uni(R, "x")
    den = BiSeries(ring, {(0, 0): ring.one, (2, 2): -k2}, order)
    return num * den.inv()


def cayley_residual(G: BiSeries, R: UniSeries) -> BiSeries:
    """G (x R(y) - y R(x)) - (x^2 - y^2)."""
    r = G.ring
    N = G.order
    x = BiSeries(r, {(1, 0): r.one}, N)
    y = BiSeries(r, {(0, 1): r.one}, N)
    Rt = R.truncate(N)
    diff = x * BiSeries.from_uni(Rt, "y") - y * BiSeries.from_uni(Rt, "x")
    return G * diff - (x * x - y * y)


def check_euler_specialization(order: int = 8) -> VerifyReport:
    """At R^2 = (1 - x^2)(1 - k^2 x^2) the law G is Euler's T(x, y)."""
    params = P.euler_jacobi()
    ring = params.ring
    k = ring.gen("k")
    b = build_bundle(order, params)
    T = euler_T(ring, k, order)
    sine = T.map(lambda c: c.subs([ring.zero], ring))
    x = UniSeries.x(ring, order)
    sine_closed = (
        BiSeries.from_uni(x, "x") * BiSeries.from_uni(UniSeries(ring, [1, 0, -1], order).sqrt(), "y")
        + BiSeries.from_uni(x, "y") * BiSeries.from_uni(UniSeries(ring, [1, 0, -1], order).sqrt(), "x")
    )
    Gk0 = b.G_via_exp.map(lambda c: c.subs([ring.zero], ring))
    return combine(
        "euler_specialization",
        [
            residual_report("G_exp=T", b.G_via_exp - T),
            residual_report("G_theorem=T", b.G_via_theorem - T),
            residual_report("k=0 sine addition", Gk0 - sine_closed),
            residual_report("cayley", cayley_residual(b.G_via_exp, build_canonical(order, params).R)),
            residual_report("SN=sn", b.SN - jacobi_sine_oracle(ring, k, order)),
        ],
        order=order,
    )


def check_jacobi_FKH(order: int = 12, sine_order: int = 7) -> VerifyReport:
    """At p = (0, 2(1+k^2), 0, (1-k^2)^2): A = 1, B^2 = (1-x^2)(1-k^2x^2), exp_F = sn."""
    params = P.fkh_jacobi()
    ring = params.ring
    k = ring.gen("k")
    cs = build_canonical(order, params)
    quartic = UniSeries(ring, [ring.one, ring.zero, -(1 + k * k), ring.zero, k * k], order)
    sn = jacobi_sine_oracle(ring, k, sine_order)
    expected = UniSeries(
        ring,
        [0, 1, 0, -(1 + k * k) * mpq(1, 6), 0, (1 + 14 * k * k + k**4) * mpq(1, 120)],
        5,
    )
    return combine(
        "jacobi_fkh",
        [
            residual_report("A=1", cs.A - 1),
            residual_report("B^2=quartic", cs.B * cs.B - quartic),
            residual_report("expF=sn", cs.expF.truncate(sine_order) - sn),
            residual_report("sn coefficients", sn.truncate(5) - expected),
        ],
        order=order,
    )


def check_ochanine_specialization(order: int = 12) -> VerifyReport:
    """R^2 = 1 + delta t^2 + epsilon t^4: SN is odd, x^3 coefficient delta/6, Cayley holds."""
    params = P.ochanine()
    ring = params.ring
    delta = ring.gen("delta")
    _, sn = build_logG_SN(order, params)
    even = UniSeries(ring, [c if n % 2 == 0 else ring.zero for n, c in enumerate(sn.coeffs)])
    bivariate_order = min(order, 10)
    b = build_bundle(bivariate_order, params)
    R = build_canonical(bivariate_order, params).R
    return combine(
        "ochanine",
        [
            residual_report("SN even part", even),
            residual_report("SN x^3", UniSeries(ring, [sn[3] - delta * mpq(1, 6)], 0)),
            residual_report("cayley", cayley_residual(b.G_via_exp, R)),
        ],
        order=order,
    )
