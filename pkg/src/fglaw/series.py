"""Truncated power series in one and two variables.

Coefficients live in a *coefficient ring*: any object exposing ``zero``,
``one``, ``coerce(value)``, ``scale(c, q)`` (multiply by a rational),
``inv_unit(c)`` and ``is_zero(c)``.  :class:`~fglaw.algebra.PolyRing` is the
exact ring used throughout; :data:`FLOAT` lets the numeric checks run the same
code on doubles.

Every series carries its truncation order explicitly.  A UniSeries of order N
knows the coefficients of x^0..x^N; a BiSeries of order N knows every x^i y^j
with i + j <= N.  Binary operations truncate to the smaller order.
"""
from __future__ import annotations

import math
from typing import Callable, Iterable, Sequence

from gmpy2 import mpq


class SeriesError(ValueError):
    """A series operation's precondition does not hold."""


class _FloatRing:
    exact = False
    zero = 0.0
    one = 1.0
    names = ("float",)
    graded = False

    def coerce(self, value):
        return float(value)

    def scale(self, c, q):
        return c * float(q)

    def inv_unit(self, c):
        if c == 0.0:
            raise ZeroDivisionError("zero is not a unit")
        return 1.0 / c

    def is_zero(self, c):
        return c == 0.0

    def close(self, a, b):
        return math.isclose(a, b, rel_tol=1e-9, abs_tol=1e-12)

    def __repr__(self):
        return "FLOAT"


FLOAT = _FloatRing()


# ---------------------------------------------------------------------------
# univariate
# ---------------------------------------------------------------------------


class UniSeries:
    """c_0 + c_1 x + ... + c_N x^N + O(x^{N+1})."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs: Sequence, order: int | None = None):
        coeffs = [ring.coerce(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise SeriesError("order must be non-negative")
        coeffs = coeffs[: order + 1]
        coeffs += [ring.zero] * (order + 1 - len(coeffs))
        self.ring = ring
        self.coeffs = coeffs

    @classmethod
    def x(cls, ring, order: int) -> "UniSeries":
        return cls(ring, [ring.zero, ring.one], order)

    @classmethod
    def constant(cls, ring, value, order: int) -> "UniSeries":
        return cls(ring, [value], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        if n > self.order:
            raise IndexError(f"x^{n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "UniSeries":
        if order > self.order:
            raise SeriesError(f"cannot raise order {self.order} to {order}")
        return UniSeries(self.ring, self.coeffs[: order + 1], order)

    def valuation(self) -> int | None:
        for n, c in enumerate(self.coeffs):
            if not self.ring.is_zero(c):
                return n
        return None

    def map(self, fn: Callable, ring=None) -> "UniSeries":
        ring = ring or self.ring
        return UniSeries(ring, [fn(c) for c in self.coeffs])

    def __repr__(self):
        return f"UniSeries(order={self.order}, {self.coeffs!r})"

    def __str__(self):
        parts = []
        for n, c in enumerate(self.coeffs):
            if self.ring.is_zero(c):
                continue
            parts.append(f"({c})*x^{n}" if n else f"({c})")
        return " + ".join(parts or ["0"]) + f" + O(x^{self.order + 1})"

    # -- arithmetic -------------------------------------------------------

    def _lift(self, other) -> "UniSeries | None":
        if isinstance(other, UniSeries):
            return other
        if isinstance(other, BiSeries):
            return None
        try:
            return UniSeries(self.ring, [other], self.order)
        except (TypeError, ValueError):
            return None

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.order == o.order and all(a == b for a, b in zip(self.coeffs, o.coeffs))

    __hash__ = None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return UniSeries(self.ring, [self.coeffs[i] + o.coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return UniSeries(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if not isinstance(other, UniSeries):
            o = self._lift(other)
            if o is None:
                return NotImplemented
            if o.valuation() in (None, 0) and all(
                self.ring.is_zero(c) for c in o.coeffs[1:]
            ):
                c0 = o.coeffs[0]
                return UniSeries(self.ring, [c * c0 for c in self.coeffs])
            other = o
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        za = [not self.ring.is_zero(c) for c in a[: n + 1]]
        zb = [not self.ring.is_zero(c) for c in b[: n + 1]]
        out = [self.ring.zero] * (n + 1)
        for i in range(n + 1):
            if not za[i]:
                continue
            ai = a[i]
            for j in range(n + 1 - i):
                if zb[j]:
                    out[i + j] = out[i + j] + ai * b[j]
        return UniSeries(self.ring, out)

    __rmul__ = __mul__

    def scale(self, q) -> "UniSeries":
        """Multiply every coefficient by the rational ``q``."""
        return UniSeries(self.ring, [self.ring.scale(c, q) for c in self.coeffs])

    def __pow__(self, n: int) -> "UniSeries":
        if n < 0:
            raise SeriesError("use inv() for negative powers")
        out = UniSeries.constant(self.ring, self.ring.one, self.order)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "UniSeries":
        """Multiply by x^k (k >= 0) or divide by x^-k when the low terms vanish."""
        if k >= 0:
            return UniSeries(self.ring, [self.ring.zero] * k + self.coeffs)
        k = -k
        if any(not self.ring.is_zero(c) for c in self.coeffs[:k]):
            raise SeriesError(f"series is not divisible by x^{k}")
        return UniSeries(self.ring, self.coeffs[k:])

    # -- calculus -----------------------------------------------------------

    def derive(self) -> "UniSeries":
        if self.order < 1:
            raise SeriesError("derivative of an order-0 series carries no information")
        r = self.ring
        return UniSeries(r, [r.scale(self.coeffs[n], n) for n in range(1, self.order + 1)])

    def integrate(self) -> "UniSeries":
        r = self.ring
        return UniSeries(
            r, [r.zero] + [r.scale(c, mpq(1, n + 1)) for n, c in enumerate(self.coeffs)]
        )

    def inv(self) -> "UniSeries":
        """Multiplicative inverse; the constant term must be a unit."""
        r = self.ring
        a = self.coeffs
        try:
            u = r.inv_unit(a[0])
        except ZeroDivisionError as exc:
            raise SeriesError(f"constant term is not invertible: {exc}") from None
        b = [u]
        for n in range(1, self.order + 1):
            acc = r.zero
            for j in range(1, n + 1):
                if not r.is_zero(a[j]):
                    acc = acc + a[j] * b[n - j]
            b.append(-(acc * u))
        return UniSeries(r, b)

    def sqrt(self) -> "UniSeries":
        """Square root with constant term 1."""
        r = self.ring
        a = self.coeffs
        if a[0] != r.one:
            raise SeriesError("sqrt needs constant term 1")
        b = [r.one]
        for n in range(1, self.order + 1):
            acc = a[n]
            for j in range(1, n):
                acc = acc - b[j] * b[n - j]
            b.append(r.scale(acc, mpq(1, 2)))
        return UniSeries(r, b)

    def compose(self, inner: "UniSeries") -> "UniSeries":
        """self(inner(x)); ``inner`` must vanish at 0."""
        if not inner.ring.is_zero(inner.coeffs[0]):
            raise SeriesError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        out = UniSeries.constant(self.ring, self.coeffs[n], n)
        for k in range(n - 1, -1, -1):
            out = out * inner
            out.coeffs[0] = out.coeffs[0] + self.coeffs[k]
        return out

    def __call__(self, inner):
        if isinstance(inner, BiSeries):
            return inner.compose_into(self)
        return self.compose(inner)

    def revert(self) -> "UniSeries":
        """Compositional inverse of x + a_2 x^2 + ...

        Solves a(b(x)) = x order by order.  At step n the unknown b_n enters
        [x^n] a(b) only through a_1 b_n = b_n; every other contribution is
        [x^n] b^k for k >= 2, which uses b_1..b_{n-1}.  ``pw[k][m]`` caches
        [x^m] b^k.
        """
        r = self.ring
        a = self.coeffs
        N = self.order
        if not r.is_zero(a[0]) or (N >= 1 and a[1] != r.one):
            raise SeriesError("reversion needs a series of the form x + O(x^2)")
        b = [r.zero, r.one] + [r.zero] * max(N - 1, 0)
        if N <= 1:
            return UniSeries(r, b[: N + 1])
        pw: list[list] = [[r.zero] * (N + 1) for _ in range(N + 1)]
        pw[1][1] = r.one
        for n in range(2, N + 1):
            # [x^k] b^k = 1
            pw[n][n] = r.one
            for k in range(2, n):
                acc = r.zero
                for j in range(1, n - k + 2):
                    p = pw[k - 1][n - j]
                    if not r.is_zero(b[j]) and not r.is_zero(p):
                        acc = acc + b[j] * p
                pw[k][n] = acc
            acc = r.zero
            for k in range(2, n + 1):
                if not r.is_zero(a[k]) and not r.is_zero(pw[k][n]):
                    acc = acc + a[k] * pw[k][n]
            b[n] = -acc
            pw[1][n] = b[n]
        return UniSeries(r, b)

    def exact_div(self, den: "UniSeries") -> "UniSeries":
        """q with q * den = self, cancelling the lowest power of x in den."""
        v = den.valuation()
        if v is None:
            raise SeriesError("division by the zero series")
        try:
            num = self.shift(-v)
        except SeriesError:
            raise SeriesError(
                f"division is not exact: numerator has terms below x^{v}"
            ) from None
        return num * den.shift(-v).inv()

    def __truediv__(self, other):
        if isinstance(other, UniSeries):
            return self.exact_div(other)
        return NotImplemented

    def eval_float(self, x: float, coeff_to_float: Callable = float) -> float:
        out = 0.0
        for c in reversed(self.coeffs):
            out = out * x + coeff_to_float(c)
        return out


# ---------------------------------------------------------------------------
# bivariate
# ---------------------------------------------------------------------------


class BiSeries:
    """Sum of c_ij x^i y^j over i + j <= N; zero coefficients are not stored."""

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring, coeffs: dict, order: int):
        if order < 0:
            raise SeriesError("order must be non-negative")
        self.ring = ring
        self.order = order
        self.coeffs = {
            (i, j): c
            for (i, j), c in coeffs.items()
            if i + j <= order and not ring.is_zero(c)
        }

    @classmethod
    def from_uni(cls, a: UniSeries, variable: str = "x") -> "BiSeries":
        if variable not in ("x", "y"):
            raise SeriesError("variable must be 'x' or 'y'")
        if variable == "x":
            return cls(a.ring, {(n, 0): c for n, c in enumerate(a.coeffs)}, a.order)
        return cls(a.ring, {(0, n): c for n, c in enumerate(a.coeffs)}, a.order)

    @classmethod
    def xy_outer(cls, fx: UniSeries, gy: UniSeries, order: int | None = None) -> "BiSeries":
        """f(x) * g(y)."""
        r = fx.ring
        N = min(fx.order, gy.order) if order is None else order
        out = {}
        for i, a in enumerate(fx.coeffs[: N + 1]):
            if r.is_zero(a):
                continue
            for j, b in enumerate(gy.coeffs[: N + 1 - i]):
                if not r.is_zero(b):
                    out[(i, j)] = a * b
        return cls(r, out, N)

    def __getitem__(self, ij):
        i, j = ij
        if i + j > self.order:
            raise IndexError(f"x^{i} y^{j} is beyond the truncation order {self.order}")
        return self.coeffs.get((i, j), self.ring.zero)

    def truncate(self, order: int) -> "BiSeries":
        if order > self.order:
            raise SeriesError(f"cannot raise order {self.order} to {order}")
        return BiSeries(self.ring, self.coeffs, order)

    def swap(self) -> "BiSeries":
        return BiSeries(self.ring, {(j, i): c for (i, j), c in self.coeffs.items()}, self.order)

    def is_zero(self) -> bool:
        return not self.coeffs

    def lowest_nonzero(self):
        """The nonzero coefficient with smallest (i + j, i), or None."""
        if not self.coeffs:
            return None
        key = min(self.coeffs, key=lambda ij: (ij[0] + ij[1], ij[0]))
        return key, self.coeffs[key]

    def row_x(self) -> UniSeries:
        """The restriction y = 0 as a series in x."""
        return UniSeries(self.ring, [self[(i, 0)] for i in range(self.order + 1)])

    def map(self, fn: Callable, ring=None) -> "BiSeries":
        ring = ring or self.ring
        return BiSeries(ring, {ij: fn(c) for ij, c in self.coeffs.items()}, self.order)

    def __repr__(self):
        return f"BiSeries(order={self.order}, {len(self.coeffs)} terms)"

    def __str__(self):
        parts = [
            f"({c})*x^{i}*y^{j}"
            for (i, j), c in sorted(self.coeffs.items(), key=lambda t: (sum(t[0]), t[0]))
        ]
        return " + ".join(parts or ["0"]) + f" + O(deg {self.order + 1})"

    # -- arithmetic -------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, BiSeries):
            return other
        if isinstance(other, UniSeries):
            return None
        try:
            return BiSeries(self.ring, {(0, 0): self.ring.coerce(other)}, self.order)
        except (TypeError, ValueError):
            return None

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.order == o.order and (self - o).is_zero()

    __hash__ = None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        N = min(self.order, o.order)
        out = {ij: c for ij, c in self.coeffs.items() if ij[0] + ij[1] <= N}
        for ij, c in o.coeffs.items():
            if ij[0] + ij[1] > N:
                continue
            out[ij] = out[ij] + c if ij in out else c
        return BiSeries(self.ring, out, N)

    __radd__ = __add__

    def __neg__(self):
        return BiSeries(self.ring, {ij: -c for ij, c in self.coeffs.items()}, self.order)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        N = min(self.order, o.order)
        r = self.ring
        if set(o.coeffs) <= {(0, 0)}:
            c0 = o.coeffs.get((0, 0), r.zero)
            return BiSeries(r, {ij: c * c0 for ij, c in self.coeffs.items()}, N)
        out: dict = {}
        bitems = sorted(o.coeffs.items(), key=lambda t: t[0][0] + t[0][1])
        for (i1, j1), a in self.coeffs.items():
            d1 = i1 + j1
            if d1 > N:
                continue
            for (i2, j2), b in bitems:
                if d1 + i2 + j2 > N:
                    break
                key = (i1 + i2, j1 + j2)
                prod = a * b
                out[key] = out[key] + prod if key in out else prod
        return BiSeries(r, out, N)

    __rmul__ = __mul__

    def scale(self, q) -> "BiSeries":
        return BiSeries(self.ring, {ij: self.ring.scale(c, q) for ij, c in self.coeffs.items()}, self.order)

    def derive_x(self) -> "BiSeries":
        r = self.ring
        return BiSeries(
            r, {(i - 1, j): r.scale(c, i) for (i, j), c in self.coeffs.items() if i}, self.order - 1
        )

    # -- homogeneous components ------------------------------------------

    def _component(self, d: int) -> dict:
        return {ij: c for ij, c in self.coeffs.items() if ij[0] + ij[1] == d}

    def inv(self) -> "BiSeries":
        """Multiplicative inverse; the constant term must be a unit."""
        r = self.ring
        try:
            u = r.inv_unit(self[(0, 0)])
        except ZeroDivisionError as exc:
            raise SeriesError(f"constant term is not invertible: {exc}") from None
        N = self.order
        comps = [self._component(d) for d in range(N + 1)]
        w = [{(0, 0): u}]
        for d in range(1, N + 1):
            acc: dict = {}
            for e in range(1, d + 1):
                for (i1, j1), a in comps[e].items():
                    for (i2, j2), b in w[d - e].items():
                        key = (i1 + i2, j1 + j2)
                        prod = a * b
                        acc[key] = acc[key] + prod if key in acc else prod
            w.append({ij: -(c * u) for ij, c in acc.items() if not r.is_zero(c)})
        out = {}
        for comp in w:
            out.update(comp)
        return BiSeries(r, out, N)

    def is_antisymmetric(self) -> bool:
        r = self.ring
        return all(r.close(c, -self[(j, i)]) for (i, j), c in self.coeffs.items())

    def is_symmetric(self) -> bool:
        return (self - self.swap()).is_zero()

    def div_x_minus_y(self) -> "BiSeries":
        """Exact quotient by (x - y); order drops by one.

        Works one homogeneous degree at a time: writing h_d = (x - y) q_{d-1}
        gives q[i, d-1-i] = q[i-1, d-i] - h[i, d-i], and the last equation
        h[d, 0] = q[d-1, 0] is the remainder test.
        """
        r = self.ring
        if self.order < 1:
            raise SeriesError("order too small to divide by (x - y)")
        if not r.close(self[(0, 0)], r.zero):
            raise SeriesError("division by (x - y) leaves a remainder at degree 0")
        out = {}
        for d in range(1, self.order + 1):
            prev = r.zero
            for i in range(d):
                q = prev - self[(i, d - i)]
                if not r.is_zero(q):
                    out[(i, d - 1 - i)] = q
                prev = q
            if not r.close(self[(d, 0)], prev):
                raise SeriesError(f"division by (x - y) leaves a remainder at degree {d}")
        return BiSeries(r, out, self.order - 1)

    def antisym_div(self, den: "BiSeries") -> "BiSeries":
        """num / den for antisymmetric num and den = (x - y) * u, u(0, 0) a unit."""
        if not self.is_antisymmetric():
            raise SeriesError("numerator is not antisymmetric")
        if not den.is_antisymmetric():
            raise SeriesError("denominator is not antisymmetric")
        num_q = self.div_x_minus_y()
        u = den.div_x_minus_y()
        return num_q * u.inv()

    def compose_into(self, outer: UniSeries) -> "BiSeries":
        """outer(self(x, y)); self must vanish at the origin."""
        r = self.ring
        if not r.is_zero(self[(0, 0)]):
            raise SeriesError("inner series must have zero constant term")
        N = min(outer.order, self.order)
        inner = self.truncate(N)
        out = BiSeries(r, {(0, 0): outer.coeffs[N]}, N)
        for k in range(N - 1, -1, -1):
            out = out * inner
            c = outer.coeffs[k]
            if not r.is_zero(c):
                out.coeffs[(0, 0)] = out.coeffs[(0, 0)] + c if (0, 0) in out.coeffs else c
                if r.is_zero(out.coeffs[(0, 0)]):
                    del out.coeffs[(0, 0)]
        return out

    def substitute(self, fx: UniSeries, gy: UniSeries) -> "BiSeries":
        """self(f(x), g(y)) for f, g vanishing at 0."""
        r = self.ring
        if not (r.is_zero(fx.coeffs[0]) and r.is_zero(gy.coeffs[0])):
            raise SeriesError("substituted series must vanish at 0")
        N = min(self.order, fx.order, gy.order)
        fp = [UniSeries.constant(r, r.one, N)]
        gp = [UniSeries.constant(r, r.one, N)]
        for _ in range(N):
            fp.append(fp[-1] * fx.truncate(N))
            gp.append(gp[-1] * gy.truncate(N))
        out = BiSeries(r, {}, N)
        for (i, j), c in self.coeffs.items():
            if i + j > N:
                continue
            term = BiSeries.xy_outer(fp[i], gp[j], N)
            out = out + term.map(lambda t: t * c)
        return out

    def eval_float(self, x: float, y: float, coeff_to_float: Callable = float) -> float:
        # Horner in y inside Horner in x
        rows: dict[int, dict[int, object]] = {}
        for (i, j), c in self.coeffs.items():
            rows.setdefault(i, {})[j] = c
        total = 0.0
        for i in range(self.order, -1, -1):
            row = rows.get(i, {})
            inner = 0.0
            for j in range(self.order - i, -1, -1):
                c = row.get(j)
                inner = inner * y + (coeff_to_float(c) if c is not None else 0.0)
            total = total * x + inner
        return total


def uni_to_bi(a: UniSeries, which_variable: str = "x") -> BiSeries:
    return BiSeries.from_uni(a, which_variable)


def series_from_callable(ring, order: int, fn: Callable[[int], object]) -> UniSeries:
    return UniSeries(ring, [fn(n) for n in range(order + 1)])


def polynomial(ring, coeffs: Iterable, order: int) -> UniSeries:
    """A polynomial in x, viewed as a series of the given order."""
    return UniSeries(ring, list(coeffs), order)
