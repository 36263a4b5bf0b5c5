"""The Buchstaber formal group law over Q[p1, p2, p3, p4].

Builds R, B, A, mu, nu, log_F, exp_F and the two-variable law

    F(x, y) = (x^2 A(y) - y^2 A(x)) / (x B(y) - y B(x)),

and checks the identities tying them together: the ODE for B, the two
formulas for A, f' = B(f), the xi_1/xi_2 addition data and Hoehn's condition.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

from .params import Params, generic
from .report import VerifyReport, combine, residual_report
from .series import BiSeries, SeriesError, UniSeries


def _x(params: Params, order: int) -> UniSeries:
    return UniSeries.x(params.ring, order)


def quartic(params: Params, order: int) -> UniSeries:
    """1 + p1 x + p2 x^2 + p3 x^3 + p4 x^4."""
    r = params.ring
    return UniSeries(r, [r.one, *params.p], order)


def build_R(order: int, params: Params | None = None) -> UniSeries:
    params = params or generic()
    return quartic(params, order).sqrt()


def _conv(a: list, b: list, n: int, ring):
    acc = ring.zero
    for i in range(n + 1):
        if ring.is_zero(a[i]) or ring.is_zero(b[n - i]):
            continue
        acc = acc + a[i] * b[n - i]
    return acc


def build_B(order: int, params: Params | None = None) -> UniSeries:
    """The solution of B^2 (B - x B')^2 = B^4 + p1 x B^3 + p2 x^2 B^2 + p3 x^3 B + p4 x^4
    with B(0) = 1, solved one coefficient at a time.

    Setting b_n = 0 and reading off the residual r_n at x^n, the coefficient
    enters linearly with factor (4 - 2n) - 4 = -2n, so b_n = r_n / (2n).
    """
    params = params or generic()
    r = params.ring
    N = order
    b = [r.one] + [r.zero] * N
    d = [r.one] + [r.zero] * N  # B - x B'
    b2, b3, b4, d2, lhs = ([r.zero] * (N + 1) for _ in range(5))

    def fill(n):
        b2[n] = _conv(b, b, n, r)
        b3[n] = _conv(b2, b, n, r)
        b4[n] = _conv(b3, b, n, r)
        d2[n] = _conv(d, d, n, r)
        lhs[n] = _conv(b2, d2, n, r)

    def residual(n):
        p1, p2, p3, p4 = params.p
        rhs = b4[n]
        if n >= 1:
            rhs = rhs + p1 * b3[n - 1]
        if n >= 2:
            rhs = rhs + p2 * b2[n - 2]
        if n >= 3:
            rhs = rhs + p3 * b[n - 3]
        if n == 4:
            rhs = rhs + p4
        return lhs[n] - rhs

    fill(0)
    for n in range(1, N + 1):
        fill(n)
        b[n] = r.scale(residual(n), mpq(1, 2 * n))
        d[n] = r.scale(b[n], 1 - n)
        fill(n)
        if r.exact and not r.is_zero(residual(n)):
            raise ArithmeticError(f"coefficient recursion for B failed at x^{n}")
    if params.fault == "b2-sign" and N >= 2:
        b[2] = -b[2]
    return UniSeries(r, b)


def b_ode_residual(B: UniSeries, params: Params) -> UniSeries:
    """B^2 (B - x B')^2 - (B^4 + p1 x B^3 + p2 x^2 B^2 + p3 x^3 B + p4 x^4)."""
    x = _x(params, B.order)
    xdB = B.derive().shift(1)
    lhs = B * B * (B - xdB) ** 2
    B2 = B * B
    B3 = B2 * B
    rhs = B2 * B2
    for k, (p, lower) in enumerate(zip(params.p, (B3, B2, B, None)), start=1):
        term = x**k if lower is None else lower * x**k
        rhs = rhs + term * p
    return lhs - rhs


def b_shift_constant(params: Params):
    """p1^2/16 - p2/4, the x^2 coefficient of B."""
    return params.p1 * params.p1 * mpq(1, 16) - params.p2 * mpq(1, 4)


def build_A(order: int, params: Params | None = None, B: UniSeries | None = None) -> UniSeries:
    """A = B^2 - x B B'/2 + p1 x B / 4 - (p1^2/16 - p2/4) x^2."""
    params = params or generic()
    B = B if B is not None else build_B(order + 1, params)
    B = B.truncate(order + 1)
    x = _x(params, order)
    xB = B.shift(1).truncate(order)
    Bt = B.truncate(order)
    out = Bt * Bt - (xB * B.derive()).scale(mpq(1, 2)) + xB.scale(mpq(1, 4)) * params.p1
    return out - (x * x) * b_shift_constant(params)


def build_A_via_lemma(
    order: int, params: Params | None = None, B: UniSeries | None = None
) -> UniSeries:
    """A = -x^2 B beta - b1 x B + B^2 - b2 x^2 with beta = (B' - b1) / (2x)."""
    params = params or generic()
    B = B if B is not None else build_B(order + 1, params)
    B = B.truncate(order + 1)
    r = params.ring
    b1, b2 = B[1], B[2]
    dB = B.derive()
    beta = (dB - b1).shift(-1).scale(mpq(1, 2))  # order N - 1
    x = _x(params, order)
    Bt = B.truncate(order)
    out = -(beta.shift(2) * Bt) - Bt.shift(1).truncate(order) * b1 + Bt * Bt
    return out - (x * x) * b2


def build_mu_nu(B: UniSeries) -> tuple[UniSeries, UniSeries]:
    mu = B.inv().shift(1)
    return mu, mu.revert()


def build_logF(B: UniSeries) -> UniSeries:
    return B.inv().integrate()


@dataclass(frozen=True)
class CanonicalSeries:
    order: int
    params: Params
    R: UniSeries
    B: UniSeries
    A: UniSeries
    mu: UniSeries
    nu: UniSeries
    logF: UniSeries
    expF: UniSeries

    def named(self) -> dict[str, UniSeries]:
        return {
            "R": self.R,
            "B": self.B,
            "A": self.A,
            "mu": self.mu,
            "nu": self.nu,
            "logF": self.logF,
            "expF": self.expF,
        }


def build_canonical(order: int, params: Params | None = None) -> CanonicalSeries:
    params = params or generic()
    return _build_canonical(order, params)


@lru_cache(maxsize=32)
def _build_canonical(order: int, params: Params) -> CanonicalSeries:
    B_ext = build_B(order + 1, params)
    B = B_ext.truncate(order)
    mu, nu = build_mu_nu(B)
    logF = build_logF(B).truncate(order)
    return CanonicalSeries(
        order=order,
        params=params,
        R=build_R(order, params),
        B=B,
        A=build_A(order, params, B_ext),
        mu=mu,
        nu=nu,
        logF=logF,
        expF=logF.revert(),
    )


def times_monomial(a: UniSeries, power: int, variable: str) -> BiSeries:
    """x^power * a(y) (variable='y') or y^power * a(x) (variable='x')."""
    if variable == "y":
        coeffs = {(power, j): c for j, c in enumerate(a.coeffs)}
    else:
        coeffs = {(i, power): c for i, c in enumerate(a.coeffs)}
    return BiSeries(a.ring, coeffs, a.order + power)


def fgl_from_AB(A: UniSeries, B: UniSeries) -> BiSeries:
    """(x^2 A(y) - y^2 A(x)) / (x B(y) - y B(x)); order min(ord A, ord B)."""
    num = times_monomial(A, 2, "y") - times_monomial(A, 2, "x")
    den = times_monomial(B, 1, "y") - times_monomial(B, 1, "x")
    return num.antisym_div(den)


def build_F(order: int, params: Params | None = None) -> BiSeries:
    cs = build_canonical(order, params)
    return fgl_from_AB(cs.A, cs.B).truncate(order)


def fgl_from_log(log: UniSeries, exp: UniSeries | None = None) -> BiSeries:
    """exp(log(x) + log(y))."""
    exp = exp if exp is not None else log.revert()
    s = BiSeries.from_uni(log, "x") + BiSeries.from_uni(log, "y")
    return s.compose_into(exp)


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------


def check_B_ode(order: int, params: Params | None = None, B: UniSeries | None = None) -> VerifyReport:
    params = params or generic()
    B = B if B is not None else build_B(order + 1, params)
    res = b_ode_residual(B.truncate(order + 1), params).truncate(order)
    return residual_report("B_ode", res)


def check_A_forms(order: int, params: Params | None = None) -> VerifyReport:
    params = params or generic()
    B = build_B(order + 1, params)
    return residual_report("A_two_forms", build_A(order, params, B) - build_A_via_lemma(order, params, B))


def check_mu_nu(order: int, params: Params | None = None) -> VerifyReport:
    cs = build_canonical(order, params)
    x = _x(cs.params, order)
    return combine(
        "mu_nu_inverse",
        [
            residual_report("mu(nu)", cs.mu.compose(cs.nu) - x),
            residual_report("nu(mu)", cs.nu.compose(cs.mu) - x),
        ],
    )


def check_exp_ode(order: int, params: Params | None = None) -> VerifyReport:
    """f' = B(f) for f = exp_F."""
    cs = build_canonical(order, params)
    f = cs.expF
    return residual_report("expF_ode", f.derive() - cs.B.compose(f).truncate(order - 1))


def check_log_additivity(order: int, params: Params | None = None, F: BiSeries | None = None) -> VerifyReport:
    """log_F(F(x, y)) = log_F(x) + log_F(y)."""
    cs = build_canonical(order, params)
    F = F if F is not None else fgl_from_AB(cs.A, cs.B)
    lhs = F.compose_into(cs.logF)
    rhs = BiSeries.from_uni(cs.logF, "x") + BiSeries.from_uni(cs.logF, "y")
    return residual_report("logF_additivity", lhs - rhs)


def check_F_matches_log(order: int, params: Params | None = None, F: BiSeries | None = None) -> VerifyReport:
    cs = build_canonical(order, params)
    F = F if F is not None else fgl_from_AB(cs.A, cs.B)
    return residual_report("F_equals_exp_log", F - fgl_from_log(cs.logF, cs.expF))


def check_fgl_axioms(order: int, params: Params | None = None, F: BiSeries | None = None) -> VerifyReport:
    cs = build_canonical(order, params)
    F = F if F is not None else fgl_from_AB(cs.A, cs.B)
    x = _x(cs.params, F.order)
    return combine(
        "F_axioms",
        [
            residual_report("F(x,0)=x", F.row_x() - x),
            residual_report("F symmetric", F - F.swap()),
        ],
    )


def xi1_from_exponent(f: UniSeries) -> UniSeries:
    """f'^2 - (f'' + f''(0) f') f / 2 + (f''(0)^2 - f'''(0)) f^2 / 2, order N - 2."""
    N = f.order - 2
    f1 = f.derive()
    f2 = f1.derive()
    f2_0 = f2[0]
    f3_0 = f2.derive()[0]
    ft = f.truncate(N)
    f1t = f1.truncate(N)
    out = f1t * f1t - ((f2 + f1.truncate(N) * f2_0) * ft).scale(mpq(1, 2))
    return out + (ft * ft).scale(mpq(1, 2)) * (f2_0 * f2_0 - f3_0)


def check_xi_identity(order: int, params: Params | None = None) -> VerifyReport:
    """xi_2 = B(f) = f' and xi_1 = A(f) = the closed form in f, f', f''."""
    cs = build_canonical(order + 2, params)
    f = cs.expF
    xi2 = residual_report("xi2", (cs.B.compose(f) - f.derive()).truncate(order))
    xi1 = residual_report("xi1", (cs.A.compose(f).truncate(order) - xi1_from_exponent(f)).truncate(order))
    b1, b2 = cs.B[1], cs.B[2]
    taylor = residual_report(
        "b_from_taylor",
        UniSeries(
            cs.params.ring,
            [b1 - f.derive().derive()[0], b2 - (f[3] * 3 - f[2] * f[2] * 2)],
        ),
    )
    return combine("xi_identity", [xi2, xi1, taylor], order=order)


def hoehn_residual(f: UniSeries, params: Params) -> UniSeries:
    """(x q' - q)^2 - (q^4 + p1 x q^3 + p2 x^2 q^2 + p3 x^3 q + p4 x^4), q = x f'/f."""
    N = f.order - 1
    q = f.derive().shift(1).exact_div(f.truncate(N + 1)).truncate(N)
    x = _x(params, N)
    dq = q.derive().shift(1)
    lhs = (dq - q) ** 2
    q2 = q * q
    q3 = q2 * q
    rhs = q2 * q2 + (x * q3) * params.p1 + (x**2 * q2) * params.p2 + (x**3 * q) * params.p3
    rhs = rhs + x**4 * params.p4
    return lhs - rhs


def check_B_R_bridge(order: int, params: Params | None = None) -> VerifyReport:
    """B(nu(x)) = R(x) nu'(x)."""
    cs = build_canonical(order + 1, params)
    lhs = cs.B.compose(cs.nu).truncate(order)
    rhs = cs.R.truncate(order) * cs.nu.derive()
    return residual_report("B_R_bridge", lhs - rhs)


def check_hoehn_condition(order: int, params: Params | None = None) -> VerifyReport:
    cs = build_canonical(order + 1, params)
    return residual_report("hoehn", hoehn_residual(cs.expF, cs.params).truncate(order))


def check_grading(order: int, params: Params | None = None) -> VerifyReport:
    """Coefficient of x^n has weight 2n in R, B, A and 2(n-1) in mu, nu, logF, expF."""
    cs = build_canonical(order, params)
    if not cs.params.graded:
        return VerifyReport("grading", order, True, detail="not applicable: ungraded ring")
    bad = []
    for name, s in cs.named().items():
        shift = 0 if name in ("R", "B", "A") else -1
        bad.extend(series_weight_violations(name, s, shift))
    return VerifyReport(
        "grading",
        order,
        not bad,
        first_failure=bad[0] if bad else None,
        detail=f"{len(bad)} violations" if bad else "",
    )


def series_weight_violations(name: str, s: UniSeries | BiSeries, shift: int) -> list:
    """Coefficients of x^n (or x^i y^j with n = i + j) not of weight 2(n + shift)."""
    out = []
    items = (
        ((n,), c) for n, c in enumerate(s.coeffs)
    ) if isinstance(s, UniSeries) else s.coeffs.items()
    for powers, c in items:
        if not c:
            continue
        expected = 2 * (sum(powers) + shift)
        if c.weight() != expected:
            out.append(((name, *powers), str(c)))
    return out


def perturbed(B: UniSeries, n: int, delta) -> UniSeries:
    """B with delta added to the x^n coefficient (negative controls)."""
    coeffs = list(B.coeffs)
    coeffs[n] = coeffs[n] + delta
    return UniSeries(B.ring, coeffs)


def require(report: VerifyReport) -> VerifyReport:
    if not report.passed:
        raise SeriesError(report.line())
    return report
