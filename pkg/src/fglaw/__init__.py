"""Exact series for the Buchstaber formal group law and the addition law of
the general elliptic integral int_0^x dt / sqrt(1 + p1 t + p2 t^2 + p3 t^3 + p4 t^4)."""

from .algebra import P, GradedPoly, ParamPoint, PolyRing
from .series import BiSeries, UniSeries

__all__ = ["P", "GradedPoly", "ParamPoint", "PolyRing", "BiSeries", "UniSeries"]
