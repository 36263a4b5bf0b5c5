"""Exact graded polynomials over the rationals.

A :class:`PolyRing` names its variables and assigns each a weight; the default
ring :data:`P` is Q[p1, p2, p3, p4] with weights 2, 4, 6, 8.  Auxiliary rings
(for instance Q[k] for the Jacobi modulus) are built the same way.

Monomials are packed into a single Python int, ``_BITS`` bits per exponent,
so multiplying monomials is one integer addition.
"""
from __future__ import annotations

from dataclasses import dataclass
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

Rational = mpq

_BITS = 16
_MASK = (1 << _BITS) - 1


def to_rational(value) -> mpq:
    """Coerce an int, Fraction, mpq or decimal string ("3/4") to mpq."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or a string")
    if isinstance(value, str):
        num, _, den = value.partition("/")
        return mpq(int(num), int(den) if den else 1)
    if isinstance(value, (int, _RationalABC)) or type(value) is type(mpq(0)):
        return mpq(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def _is_scalar(value) -> bool:
    return isinstance(value, (int, _RationalABC)) or type(value) is type(mpq(0))


class PolyRing:
    """Q[v1, ..., vn] with integer variable weights."""

    exact = True

    def __init__(self, names: Sequence[str], weights: Sequence[int]):
        if len(names) != len(weights):
            raise ValueError("names and weights differ in length")
        self.names = tuple(names)
        self.weights = tuple(weights)
        self.nvars = len(names)
        self.graded = all(w > 0 for w in weights)

    def __repr__(self):
        return f"PolyRing({self.names!r}, {self.weights!r})"

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.names, self.weights))

    def pack(self, exps: Sequence[int]) -> int:
        if len(exps) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(exps)}")
        key = 0
        for i, e in enumerate(exps):
            if e < 0 or e > _MASK:
                raise ValueError(f"exponent {e} out of range")
            key |= e << (_BITS * i)
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        return tuple((key >> (_BITS * i)) & _MASK for i in range(self.nvars))

    def key_weight(self, key: int) -> int:
        return sum(w * e for w, e in zip(self.weights, self.unpack(key)))

    # -- element constructors -------------------------------------------------

    @property
    def zero(self) -> "GradedPoly":
        return GradedPoly(self, {})

    @property
    def one(self) -> "GradedPoly":
        return GradedPoly(self, {0: mpq(1)})

    def const(self, value) -> "GradedPoly":
        q = to_rational(value)
        return GradedPoly(self, {0: q} if q else {})

    def gen(self, name_or_index) -> "GradedPoly":
        i = self.names.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        return GradedPoly(self, {1 << (_BITS * i): mpq(1)})

    def gens(self) -> tuple["GradedPoly", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def from_terms(self, terms: Iterable[tuple[Sequence[int], object]]) -> "GradedPoly":
        out: dict[int, mpq] = {}
        for exps, c in terms:
            k = self.pack(exps)
            out[k] = out.get(k, mpq(0)) + to_rational(c)
        return GradedPoly(self, {k: v for k, v in out.items() if v})

    # -- series-engine coefficient protocol ------------------------------------

    def coerce(self, value) -> "GradedPoly":
        if isinstance(value, GradedPoly):
            if value.ring != self:
                raise ValueError("polynomial belongs to a different ring")
            return value
        return self.const(value)

    def scale(self, c: "GradedPoly", q) -> "GradedPoly":
        return c * q

    def inv_unit(self, c: "GradedPoly") -> "GradedPoly":
        if not c.is_constant() or not c:
            raise ZeroDivisionError(f"{c} is not a unit of {self.names or 'Q'}")
        return self.const(1 / c.constant_term())

    def is_zero(self, c: "GradedPoly") -> bool:
        return not c

    def close(self, a: "GradedPoly", b: "GradedPoly") -> bool:
        return a == b


P = PolyRing(("p1", "p2", "p3", "p4"), (2, 4, 6, 8))
QQ = PolyRing((), ())


class GradedPoly:
    """Immutable sparse polynomial; ``terms`` maps packed monomials to mpq."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[int, mpq]):
        self.ring = ring
        self._terms = terms
        self._hash = None

    # -- inspection -----------------------------------------------------------

    def terms(self) -> list[tuple[tuple[int, ...], mpq]]:
        """Terms as (exponent tuple, coefficient), sorted by exponent."""
        unpack = self.ring.unpack
        return sorted((unpack(k), c) for k, c in self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._terms)

    def constant_term(self) -> mpq:
        return self._terms.get(0, mpq(0))

    def coefficient(self, exps: Sequence[int]) -> mpq:
        return self._terms.get(self.ring.pack(exps), mpq(0))

    def weight(self) -> int | None:
        """Weighted degree, or None when the terms disagree.

        Raises ValueError for the zero polynomial, which has no weight.
        """
        if not self._terms:
            raise ValueError("the zero polynomial has no weight")
        ws = {self.ring.key_weight(k) for k in self._terms}
        return ws.pop() if len(ws) == 1 else None

    # -- arithmetic -----------------------------------------------------------

    def _other(self, other) -> "GradedPoly | None":
        if isinstance(other, GradedPoly):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        if _is_scalar(other):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not o._terms:
            return self
        if not self._terms:
            return o
        out = dict(self._terms)
        for k, c in o._terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return GradedPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return GradedPoly(self.ring, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            q = mpq(other)
            if not q:
                return GradedPoly(self.ring, {})
            return GradedPoly(self.ring, {k: c * q for k, c in self._terms.items()})
        o = self._other(other)
        if o is None:
            return NotImplemented
        a, b = self._terms, o._terms
        if not a or not b:
            return GradedPoly(self.ring, {})
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, mpq] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return GradedPoly(self.ring, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return self * (1 / mpq(other))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, GradedPoly):
            return self.ring == other.ring and self._terms == other._terms
        if _is_scalar(other):
            q = mpq(other)
            return self._terms == ({0: q} if q else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- evaluation -----------------------------------------------------------

    def eval_rational(self, point: Sequence) -> mpq:
        vals = [to_rational(v) for v in point]
        if len(vals) != self.ring.nvars:
            raise ValueError("point has the wrong dimension")
        total = mpq(0)
        for k, c in self._terms.items():
            t = c
            for v, e in zip(vals, self.ring.unpack(k)):
                if e:
                    t *= v**e
            total += t
        return total

    def eval_float(self, point: Sequence[float]) -> float:
        """Double-precision evaluation; coefficients are rounded to float last."""
        vals = [float(v) for v in point]
        if len(vals) != self.ring.nvars:
            raise ValueError("point has the wrong dimension")
        total = 0.0
        for k, c in self._terms.items():
            t = float(c)
            for v, e in zip(vals, self.ring.unpack(k)):
                if e:
                    t *= v**e
            total += t
        return total

    def subs(self, images: Sequence["GradedPoly"], target: PolyRing) -> "GradedPoly":
        """Ring homomorphism sending variable i to ``images[i]`` in ``target``."""
        if len(images) != self.ring.nvars:
            raise ValueError("one image per variable required")
        imgs = [target.coerce(im) for im in images]
        total = target.zero
        for k, c in self._terms.items():
            t = target.const(c)
            for im, e in zip(imgs, self.ring.unpack(k)):
                if e:
                    t = t * im**e
            total = total + t
        return total

    # -- text -----------------------------------------------------------------

    def __repr__(self):
        return f"GradedPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps, c in sorted(self.terms(), key=lambda t: (-sum(t[0]), t[0]), reverse=False):
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.names, exps)
                if e
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class ParamPoint:
    """Floating-point values of p1..p4."""

    p1: float
    p2: float
    p3: float
    p4: float

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.p1, self.p2, self.p3, self.p4)

    @classmethod
    def jacobi(cls, k: float) -> "ParamPoint":
        """The quartic (1 - t^2)(1 - k^2 t^2)."""
        return cls(0.0, -(1.0 + k * k), 0.0, k * k)


def poly_weight(a: GradedPoly) -> int | None:
    return a.weight()


def poly_eval_rational(a: GradedPoly, point: Sequence) -> mpq:
    return a.eval_rational(point)


def poly_eval_float(a: GradedPoly, point: ParamPoint | Sequence[float]) -> float:
    if isinstance(point, ParamPoint):
        point = point.as_tuple()
    return a.eval_float(point)
