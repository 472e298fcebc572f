"""Executable invariants.

Each ``*_violations`` function returns a list of human-readable violation
messages (empty when everything holds). Tests, the acceptance suite and
``dualrs selftest`` all go through these.
"""

from __future__ import annotations

from typing import Sequence

from .euclid import SolverState
from .keyeq import KeyEqSolution
from .poly import MINUS_INF, Poly, monic_gcd
from .rs import (
    CodeSpec,
    Variant,
    full_syndrome,
    locator_evaluator,
    star_map,
    syndrome_dual,
    syndrome_primal,
)


def stepwise_invariant_violations(s: SolverState, a: Poly, b: Poly) -> list[str]:
    """Invariants of a step-wise Euclid state started from ``(a, b)``."""
    bad = []
    one = Poly.one(a.field)
    if s.F * b + s.G * a != s.R:
        bad.append("F*b + G*a != R")
    if s.Ft * b + s.Gt * a != s.Rt:
        bad.append("Ft*b + Gt*a != Rt")
    if not s.Rt.is_monic() or s.Rt.deg != s.dt:
        bad.append("Rt not monic of degree dt")
    if not s.R.deg <= s.d:
        bad.append("deg R > d")
    if s.d != MINUS_INF and s.d + s.dt != a.deg + b.deg - s.iter:
        bad.append("d + dt != deg a + deg b - i")
    if s.F * s.Gt - s.Ft * s.G != one:
        bad.append("F*Gt - Ft*G != 1")
    if not s.F.is_monic():
        bad.append("F not monic")
    if a.deg != s.F.deg + s.dt:
        bad.append("deg a != deg F + dt")
    if not a.deg > s.Ft.deg + s.d:
        bad.append("deg a <= deg Ft + d")
    # det [[F, R], [Ft, Rt]] is preserved by both updates and equals a at i = 0
    if s.F * s.Rt - s.Ft * s.R != a:
        bad.append("F*Rt - Ft*R != a")
    return bad


def dual_solution_violations(spec: CodeSpec, sbar: Poly, sol: KeyEqSolution) -> list[str]:
    """Structural properties of a dual solver output (degree bound, monic, coprime)."""
    bad = []
    lam, om = sol.locator, sol.evaluator
    x_n_1 = Poly.x_n_minus_1(spec.field, spec.n)
    if not 2 * (lam * sbar - x_n_1 * om).deg < 2 * spec.n - spec.d:
        bad.append("degree bound on L*Sbar - (x^n-1)*W fails")
    if not 2 * lam.deg <= spec.d:
        bad.append("2 deg L > d")
    if not lam.is_monic():
        bad.append("L not monic")
    if monic_gcd(lam, om) != Poly.one(spec.field):
        bad.append("L, W not coprime")
    return bad


def key_equation_violations(spec: CodeSpec, e: Sequence[int]) -> list[str]:
    """All locator/evaluator/syndrome identities for a planted dual error ``e``.

    ``spec`` may be of either variant; the dual and primal codes of the same
    dimension are both checked, with ``e* = star_map(e)``.
    """
    bad = []
    fld, n = spec.field, spec.n
    dual = spec.with_variant(Variant.DUAL)
    primal = spec.with_variant(Variant.PRIMAL)
    e_star = star_map(fld, e)
    t = sum(1 for c in e if c)

    lam, om = locator_evaluator(dual, e)
    lam_s, om_s = locator_evaluator(primal, e_star)
    s_full = full_syndrome(dual, e)
    s_star = full_syndrome(primal, e_star)
    x_n_1 = Poly.x_n_minus_1(fld, n)

    if lam * s_full != x_n_1 * om:
        bad.append("L*S != (x^n - 1)*W")
    if lam_s * s_star != -(x_n_1 * om_s):
        bad.append("L* S* != (1 - x^n) W*")

    sbar_s = syndrome_primal(primal, e_star)
    if (lam_s * sbar_s).truncate(n - spec.k) != om_s.truncate(n - spec.k):
        bad.append("L* Sbar* != W* mod x^(n-k)")

    sbar = syndrome_dual(dual, e)
    if not 2 * (lam * sbar - x_n_1 * om).deg < 2 * n - spec.d:
        bad.append("2 deg(L Sbar - (x^n - 1) W) >= 2n - d")

    if lam != lam_s.reverse(t):
        bad.append("L != x^t L*(1/x)")
    if t and om != om_s.reverse(t - 1):
        bad.append("W != x^(t-1) W*(1/x)")
    if not t and (om or om_s):
        bad.append("nonzero evaluator for zero error")
    if s_full != s_star.reverse(n - 1):
        bad.append("S != x^(n-1) S*(1/x)")
    return bad
