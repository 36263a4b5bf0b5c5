"""Registry of the exact identity checks driven by ``fglaw verify``."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from . import addition, buchstaber, specializations
from .params import Params, generic
from .report import VerifyReport

DEFAULT_ORDER = 12
DEFAULT_BI_ORDER = 10
WORKERS_ENV = "FGLAW_WORKERS"

# name -> (runner(order, bi_order, params), included in "all")
Check = Callable[[int, int, Params], VerifyReport]

CHECKS: dict[str, tuple[Check, bool]] = {
    "B_ode": (lambda n, m, p: buchstaber.check_B_ode(n, p), True),
    "A_two_forms": (lambda n, m, p: buchstaber.check_A_forms(n, p), True),
    "mu_nu": (lambda n, m, p: buchstaber.check_mu_nu(n, p), True),
    "B_R_bridge": (lambda n, m, p: buchstaber.check_B_R_bridge(n, p), True),
    "expF_ode": (lambda n, m, p: buchstaber.check_exp_ode(n, p), True),
    "xi": (lambda n, m, p: buchstaber.check_xi_identity(n - 1, p), True),
    "hoehn": (lambda n, m, p: buchstaber.check_hoehn_condition(n, p), True),
    "grading": (lambda n, m, p: buchstaber.check_grading(n, p), True),
    "F_axioms": (lambda n, m, p: buchstaber.check_fgl_axioms(m, p), True),
    "logF_additivity": (lambda n, m, p: buchstaber.check_log_additivity(m, p), True),
    "F_exp_log": (lambda n, m, p: buchstaber.check_F_matches_log(m, p), True),
    "strict_iso": (lambda n, m, p: addition.check_strict_iso(m, p), True),
    "G_theorem": (lambda n, m, p: addition.check_G_theorem(m, p), True),
    "G_theorem_printed": (lambda n, m, p: addition.check_G_theorem(m, p, "printed"), False),
    "G_log_additivity": (lambda n, m, p: addition.check_G_log_additivity(m, p), True),
    "SN_addition": (lambda n, m, p: addition.check_SN_addition(m, p), True),
    "P_structure": (lambda n, m, p: addition.check_P_structure(m, p), True),
    "G_axioms": (lambda n, m, p: addition.check_G_symmetry(m, p), True),
    "G_grading": (lambda n, m, p: addition.check_G_grading(m, p), True),
    "euler": (lambda n, m, p: specializations.check_euler_specialization(min(m, 8)), True),
    "jacobi_fkh": (lambda n, m, p: specializations.check_jacobi_FKH(n), True),
    "ochanine": (lambda n, m, p: specializations.check_ochanine_specialization(n), True),
}


def default_names() -> list[str]:
    return sorted(name for name, (_, in_all) in CHECKS.items() if in_all)


def _run_one(args) -> VerifyReport:
    name, order, bi_order, params = args
    runner, _ = CHECKS[name]
    report = runner(order, bi_order, params)
    return report if report.name == name else _renamed(report, name)


def _renamed(report: VerifyReport, name: str) -> VerifyReport:
    return VerifyReport(
        name, report.order, report.passed, report.first_failure, report.detail, report.extra
    )


def run_checks(
    names: list[str] | None = None,
    order: int = DEFAULT_ORDER,
    bi_order: int = DEFAULT_BI_ORDER,
    params: Params | None = None,
    workers: int | None = None,
) -> list[VerifyReport]:
    """Run the named checks (default: all) and return reports sorted by name."""
    names = sorted(names or default_names())
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise KeyError(f"unknown check(s): {', '.join(unknown)}")
    params = params or generic()
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    jobs = [(n, order, bi_order, params) for n in names]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run_one, jobs))
    else:
        reports = [_run_one(j) for j in jobs]
    return sorted(reports, key=lambda r: r.name)
