"""Coefficient rings and values of (p1, p2, p3, p4) for building series.

Every builder takes a :class:`Params`: the ring the coefficients live in plus
the four quartic coefficients as elements of that ring.  The generic case uses
the polynomial generators themselves; specializations re-instantiate the ring
with fresh symbols (k for the Jacobi modulus, delta and epsilon for the even
quartic) so identities in those symbols are checked exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .algebra import P, QQ, ParamPoint, PolyRing, to_rational
from .series import FLOAT

K_RING = PolyRing(("k",), (0,))
OCHANINE_RING = PolyRing(("delta", "epsilon"), (4, 8))


FAULTS = ("b2-sign",)


@dataclass(frozen=True)
class Params:
    name: str
    ring: object
    p: tuple
    # deliberate corruption of B for negative-control runs; None in normal use
    fault: str | None = None

    def with_fault(self, fault: str | None) -> "Params":
        if fault is not None and fault not in FAULTS:
            raise ValueError(f"unknown fault {fault!r}; choose from {FAULTS}")
        return replace(self, fault=fault)

    @property
    def graded(self) -> bool:
        """True when coefficients carry the weight grading of p1..p4."""
        return bool(getattr(self.ring, "graded", False)) and self.ring.nvars > 0

    @property
    def p1(self):
        return self.p[0]

    @property
    def p2(self):
        return self.p[1]

    @property
    def p3(self):
        return self.p[2]

    @property
    def p4(self):
        return self.p[3]


def generic() -> Params:
    return Params("generic", P, P.gens())


def euler_jacobi() -> Params:
    """R(t)^2 = (1 - t^2)(1 - k^2 t^2): the genus-G side becomes sn."""
    k = K_RING.gen("k")
    return Params("jacobi", K_RING, (K_RING.zero, -(1 + k * k), K_RING.zero, k * k))


def fkh_jacobi() -> Params:
    """p = (0, 2(1 + k^2), 0, (1 - k^2)^2): B becomes sqrt((1 - x^2)(1 - k^2 x^2))."""
    k = K_RING.gen("k")
    return Params(
        "jacobi-fkh", K_RING, (K_RING.zero, 2 * (1 + k * k), K_RING.zero, (1 - k * k) ** 2)
    )


def ochanine() -> Params:
    """R(t)^2 = 1 + delta t^2 + epsilon t^4."""
    d, e = OCHANINE_RING.gens()
    return Params("ochanine", OCHANINE_RING, (OCHANINE_RING.zero, d, OCHANINE_RING.zero, e))


def rational_point(values: Sequence) -> Params:
    vals = tuple(QQ.const(to_rational(v)) for v in values)
    if len(vals) != 4:
        raise ValueError("need four values")
    return Params("point", QQ, vals)


def float_point(point: ParamPoint | Sequence[float]) -> Params:
    if isinstance(point, ParamPoint):
        point = point.as_tuple()
    vals = tuple(float(v) for v in point)
    if len(vals) != 4:
        raise ValueError("need four values")
    return Params("float", FLOAT, vals)


SPECIALIZATIONS = {
    "generic": generic,
    "jacobi": euler_jacobi,
    "jacobi-fkh": fkh_jacobi,
    "ochanine": ochanine,
}
