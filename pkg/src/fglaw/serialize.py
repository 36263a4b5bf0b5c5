"""JSON encoding of polynomials and series.

Rationals are written as decimal strings so that coefficients wider than 64
bits survive any JSON reader.

    poly      [{"e": [e1, e2, e3, e4], "num": "-1", "den": "2"}, ...]
    UniSeries {"order": N, "variable": "x",
               "coefficients": [{"x_power": n, "poly": <poly>}, ...]}
    BiSeries  {"order": N, "variables": ["x", "y"],
               "coefficients": [{"powers": [i, j], "poly": <poly>}, ...]}

Series additionally record the ring's variable names under "ring" when it is
not Q[p1, p2, p3, p4].
"""
from __future__ import annotations

from gmpy2 import mpq

from .algebra import P, GradedPoly, PolyRing
from .series import BiSeries, UniSeries


def poly_to_json(a: GradedPoly) -> list[dict]:
    return [
        {"e": list(e), "num": str(c.numerator), "den": str(c.denominator)}
        for e, c in a.terms()
    ]


def poly_from_json(data: list[dict], ring: PolyRing = P) -> GradedPoly:
    terms = []
    for t in data:
        den = int(t["den"])
        if den <= 0:
            raise ValueError("denominator must be positive")
        terms.append((t["e"], mpq(int(t["num"]), den)))
    return ring.from_terms(terms)


def _ring_header(ring: PolyRing) -> dict:
    if ring == P:
        return {}
    return {"ring": {"names": list(ring.names), "weights": list(ring.weights)}}


def _ring_from(data: dict) -> PolyRing:
    spec = data.get("ring")
    if spec is None:
        return P
    return PolyRing(spec["names"], spec["weights"])


def uni_to_json(s: UniSeries, variable: str = "x") -> dict:
    return {
        "order": s.order,
        "variable": variable,
        **_ring_header(s.ring),
        "coefficients": [
            {"x_power": n, "poly": poly_to_json(c)} for n, c in enumerate(s.coeffs)
        ],
    }


def uni_from_json(data: dict) -> UniSeries:
    ring = _ring_from(data)
    order = int(data["order"])
    coeffs = [ring.zero] * (order + 1)
    for entry in data["coefficients"]:
        coeffs[int(entry["x_power"])] = poly_from_json(entry["poly"], ring)
    return UniSeries(ring, coeffs, order)


def bi_to_json(s: BiSeries) -> dict:
    return {
        "order": s.order,
        "variables": ["x", "y"],
        **_ring_header(s.ring),
        "coefficients": [
            {"powers": [i, j], "poly": poly_to_json(c)}
            for (i, j), c in sorted(s.coeffs.items(), key=lambda t: (sum(t[0]), t[0]))
        ],
    }


def bi_from_json(data: dict) -> BiSeries:
    ring = _ring_from(data)
    coeffs = {
        tuple(entry["powers"]): poly_from_json(entry["poly"], ring)
        for entry in data["coefficients"]
    }
    return BiSeries(ring, coeffs, int(data["order"]))


def uni_to_text(s: UniSeries, name: str = "") -> str:
    width = len(f"x^{s.order}")
    lines = [f"{name} (order {s.order})" if name else f"order {s.order}"]
    for n, c in enumerate(s.coeffs):
        lines.append(f"  {f'x^{n}':>{width}} : {c}")
    return "\n".join(lines)


def bi_to_text(s: BiSeries, name: str = "") -> str:
    lines = [f"{name} (total order {s.order})" if name else f"total order {s.order}"]
    keys = sorted(s.coeffs, key=lambda ij: (sum(ij), ij))
    labels = [f"x^{i} y^{j}" for i, j in keys]
    width = max((len(t) for t in labels), default=0)
    for label, key in zip(labels, keys):
        lines.append(f"  {label:>{width}} : {s.coeffs[key]}")
    return "\n".join(lines)
