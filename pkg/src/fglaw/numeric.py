"""Floating-point confirmation of the addition law.

The elliptic integral is computed by adaptive Gauss-Legendre quadrature; the
series G is evaluated by Horner's rule.  The two are independent, so
|I(x) + I(y) - I(G(x, y))| is an honest residual.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq

from .addition import build_G_via_exp, build_G_via_theorem, build_logG_SN
from .algebra import ParamPoint
from .params import float_point, generic
from .report import VerifyReport

DOMAIN_FLOOR = 1e-9
MIN_TOL = 1e-13
DEFAULT_ORDER = 16
DEFAULT_RADIUS = 0.05
MAX_EVALUATIONS = 200_000

_GAUSS_POINTS = 10
_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(_GAUSS_POINTS)


class NumericError(Exception):
    pass


class DomainError(NumericError):
    pass


class ConvergenceError(NumericError):
    pass


@dataclass(frozen=True)
class QuadResult:
    value: float
    est_error: float
    evaluations: int


def _quartic(p: ParamPoint):
    p1, p2, p3, p4 = p.as_tuple()
    return lambda t: 1.0 + t * (p1 + t * (p2 + t * (p3 + t * p4)))


def check_domain(p: ParamPoint, x: float, floor: float = DOMAIN_FLOOR) -> None:
    """Raise DomainError unless R^2 >= floor on the segment between 0 and x."""
    lo, hi = min(0.0, x), max(0.0, x)
    # R^2 - floor, highest degree first for numpy
    coeffs = [p.p4, p.p3, p.p2, p.p1, 1.0 - floor]
    while coeffs and coeffs[0] == 0.0:
        coeffs.pop(0)
    roots = np.roots(coeffs) if len(coeffs) > 1 else []
    for r in roots:
        if abs(r.imag) <= 1e-12 * max(1.0, abs(r.real)) and lo <= r.real <= hi:
            raise DomainError(f"R^2 drops to {floor:g} at t = {r.real:.6g} inside [{lo:g}, {hi:g}]")
    q = _quartic(p)
    if q(x) < floor:
        raise DomainError(f"R^2({x:g}) = {q(x):.3g} is below the floor {floor:g}")


def _panel(f, a: float, b: float) -> float:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    return half * float(np.dot(_WEIGHTS, f(mid + half * _NODES)))


def adaptive_gauss(f, a: float, b: float, tol: float, max_evaluations: int = MAX_EVALUATIONS) -> QuadResult:
    """Integrate f on [a, b] by bisection; a panel is accepted when the
    Gauss rule on it agrees with the sum over its two halves within the
    panel's share of ``tol``."""
    if a == b:
        return QuadResult(0.0, 0.0, 0)
    evaluations = _GAUSS_POINTS
    stack = [(a, b, _panel(f, a, b))]
    total = 0.0
    err = 0.0
    width = abs(b - a)
    while stack:
        lo, hi, whole = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _panel(f, lo, mid)
        right = _panel(f, mid, hi)
        evaluations += 2 * _GAUSS_POINTS
        diff = abs(left + right - whole)
        if diff <= tol * abs(hi - lo) / width or abs(hi - lo) < 1e-15 * width:
            total += left + right
            err += diff
            continue
        if evaluations > max_evaluations:
            raise ConvergenceError(f"no convergence within {max_evaluations} evaluations")
        stack.append((lo, mid, left))
        stack.append((mid, hi, right))
    return QuadResult(total, err, evaluations)


def elliptic_integral(p: ParamPoint, x: float, tol: float = 1e-13) -> QuadResult:
    """int_0^x dt / sqrt(1 + p1 t + p2 t^2 + p3 t^3 + p4 t^4)."""
    if tol < MIN_TOL:
        raise ValueError(f"tolerance must be at least {MIN_TOL:g}")
    if x == 0:
        return QuadResult(0.0, 0.0, 0)
    check_domain(p, x)
    q = _quartic(p)
    return adaptive_gauss(lambda t: 1.0 / np.sqrt(q(t)), 0.0, x, tol)


@lru_cache(maxsize=4)
def _generic_G(order: int, route: str):
    if route == "exp":
        return build_G_via_exp(order, generic())
    return build_G_via_theorem(order, generic())


def eval_G_numeric(
    p: ParamPoint,
    x: float,
    y: float,
    order: int = DEFAULT_ORDER,
    radius: float = DEFAULT_RADIUS,
    exact: bool = True,
    route: str = "exp",
) -> float:
    """G(x, y) from its power series.

    ``exact=True`` evaluates the exact coefficients over Q[p1..p4] at ``p``;
    ``exact=False`` rebuilds the series directly over floats, which is much
    cheaper at high order.  ``route`` picks the exponential construction
    ("exp") or the explicit P1/P2/P3 assembly ("theorem").
    """
    if abs(x) > radius or abs(y) > radius:
        raise DomainError(f"|x|, |y| must be <= {radius:g} for a degree-{order} series")
    if route not in ("exp", "theorem"):
        raise ValueError("route must be 'exp' or 'theorem'")
    if exact:
        G = _generic_G(order, route)
        point = p.as_tuple()
        return G.eval_float(x, y, lambda c: c.eval_float(point))
    fp = float_point(p)
    G = build_G_via_exp(order, fp) if route == "exp" else build_G_via_theorem(order, fp)
    return G.eval_float(x, y)


def addition_check(
    p: ParamPoint,
    x: float,
    y: float,
    tol: float = 1e-8,
    order: int = DEFAULT_ORDER,
    radius: float = DEFAULT_RADIUS,
    exact: bool = True,
) -> VerifyReport:
    """|I(x) + I(y) - I(G(x, y))| <= tol with I the elliptic integral."""
    quad_tol = max(MIN_TOL, tol * 1e-3)
    ix = elliptic_integral(p, x, quad_tol).value
    iy = elliptic_integral(p, y, quad_tol).value
    g = eval_G_numeric(p, x, y, order, radius, exact)
    ig = elliptic_integral(p, g, quad_tol).value
    residual = abs(ix + iy - ig)
    return VerifyReport(
        "numeric_addition",
        order,
        residual <= tol,
        detail=f"residual={residual:.3e} tol={tol:.1e}",
        extra={"I(x)": ix, "I(y)": iy, "G": g, "I(G)": ig, "residual": residual},
    )


def sn_reference(k: float, u: float, tol: float = 1e-13) -> float:
    """sn(u | k) by inverting the integral with Brent's method."""
    if not 0.0 <= k < 1.0:
        raise ValueError("need 0 <= k < 1")
    if u == 0.0:
        return 0.0
    p = ParamPoint.jacobi(k)
    target = abs(u)
    hi = min(1.0 - 1e-12, 2.0 * target)
    # the integral grows faster than t on [0, 1), so sn(u) <= u
    hi = min(1.0 - 1e-12, target) if target < 1.0 else hi
    g = lambda t: elliptic_integral(p, t, tol).value - target
    try:
        beyond = g(hi) < 0
    except DomainError:
        beyond = True
    if beyond:
        raise ConvergenceError(f"u = {u} lies beyond the quarter period")
    try:
        root = brentq(g, 0.0, hi, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)
    except (RuntimeError, ValueError) as exc:
        raise ConvergenceError(str(exc)) from None
    return math.copysign(root, u)


def eval_SN_numeric(p: ParamPoint, u: float, order: int = DEFAULT_ORDER) -> float:
    _, sn = build_logG_SN(order, float_point(p))
    return sn.eval_float(u)
