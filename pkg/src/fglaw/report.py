from __future__ import annotations

from dataclasses import dataclass, field

from .series import BiSeries, UniSeries


@dataclass(frozen=True)
class VerifyReport:
    name: str
    order: int
    passed: bool
    first_failure: tuple | None = None  # (powers, coefficient as text)
    detail: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status}  {self.name:<28} order={self.order}"
        if self.first_failure is not None:
            powers, coeff = self.first_failure
            out += f"  first nonzero at {powers}: {coeff}"
        if self.detail:
            out += f"  ({self.detail})"
        return out

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "passed": self.passed,
            "first_failure": None
            if self.first_failure is None
            else {"powers": list(self.first_failure[0]), "coefficient": self.first_failure[1]},
            "detail": self.detail,
        }


def first_nonzero(residual: UniSeries | BiSeries):
    """(powers, coefficient) of the lowest nonzero coefficient, or None."""
    if isinstance(residual, UniSeries):
        n = residual.valuation()
        return None if n is None else ((n,), residual[n])
    hit = residual.lowest_nonzero()
    return hit


def residual_report(name: str, residual: UniSeries | BiSeries, detail: str = "") -> VerifyReport:
    hit = first_nonzero(residual)
    return VerifyReport(
        name=name,
        order=residual.order,
        passed=hit is None,
        first_failure=None if hit is None else (tuple(hit[0]), str(hit[1])),
        detail=detail,
    )


def combine(
    name: str, reports: list[VerifyReport], detail: str = "", order: int | None = None
) -> VerifyReport:
    """One report that passes iff every sub-report passes."""
    failed = [r for r in reports if not r.passed]
    first = failed[0] if failed else None
    return VerifyReport(
        name=name,
        order=min(r.order for r in reports) if order is None else order,
        passed=not failed,
        first_failure=None if first is None else first.first_failure,
        detail=detail or ("; ".join(f"{r.name} failed" for r in failed)),
        extra={"parts": reports},
    )
