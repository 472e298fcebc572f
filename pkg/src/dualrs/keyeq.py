"""Key-equation solvers.

For a dual code the locator ``L`` and evaluator ``W`` are pinned down by
the degree bound ``2 * deg(L * Sbar - (x^n - 1) * W) < 2n - d`` (bounds on
``d/2`` are kept in doubled integers throughout). Two solvers handle it:

* :func:`solve_dual_euclid` runs the step-wise Euclidean engine on
  ``a = x^n - 1``, ``b = Sbar`` and stops once ``2 d_i < 2n - d``. The
  locator is the final ``F``; the engine keeps ``F*b + G*a = R``, so the
  evaluator is ``-G``.
* :func:`solve_dual_bm` performs the same updates on ``(F, G, Ft, Gt)``
  only. The leading coefficient of the dropped remainder is read off as
  ``coeff(F * Sbar, d)``, a windowed convolution: the Berlekamp-Massey
  discrepancy.

:func:`solve_primal_sugiyama` is the classical Euclidean decoder for the
primal key equation ``L* Sbar* = W* mod x^(n-k)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .euclid import (
    Branch,
    EuclidRow,
    EuclidTrace,
    SolverState,
    choose_branch,
    euclid_rows,
    stepwise_run,
)
from .errors import SingularNormalization
from .poly import MINUS_INF, Poly
from .rs import CodeSpec


@dataclass
class KeyEqSolution:
    locator: Poly
    evaluator: Poly
    iterations: int = 0
    #: discrepancies and branch tags per iteration (filled when tracing)
    mu_sequence: list[int] | None = None
    branches: list[Branch] | None = None
    #: solver states (step-wise solvers) or Euclid rows (Sugiyama), when tracing
    trace: list = field(default_factory=list)
    #: R / Rt polynomial rows recomputed; always 0 for the BM solver
    remainder_updates: int = 0
    #: field multiplications spent computing discrepancies
    discrepancy_mults: int = 0

    def trace_records(self) -> list[dict]:
        out = []
        if self.trace and isinstance(self.trace[0], EuclidRow):
            for i, row in enumerate(self.trace):
                out.append({"i": i, "r": row.r.to_text(), "f": row.f.to_text(),
                            "g": row.g.to_text(), "q": row.q.to_text()})
            return out
        steps = zip(self.trace, self.mu_sequence or [], self.branches or [])
        for s, mu, br in steps:
            rec = s.to_record()
            rec.update(branch=br.value, mu=mu, p=s.d - s.dt)
            out.append(rec)
        if self.trace:
            rec = self.trace[-1].to_record()
            rec.update(branch=None, mu=None, p=None)
            out.append(rec)
        return out


def _dual_condition(spec: CodeSpec):
    bound = 2 * spec.n - spec.d

    def condition(d, _iter):
        return 2 * d >= bound

    return condition


def solve_dual_euclid(spec: CodeSpec, sbar: Poly, trace: bool = False) -> KeyEqSolution:
    a = Poly.x_n_minus_1(spec.field, spec.n)
    run: EuclidTrace = stepwise_run(a, sbar, _dual_condition(spec), trace=trace)
    s = run.final
    return KeyEqSolution(
        locator=s.F,
        evaluator=-s.G,
        iterations=run.iterations,
        mu_sequence=run.mus if trace else None,
        branches=run.branches if trace else None,
        trace=run.states if trace else [],
        remainder_updates=run.remainder_updates,
    )


def solve_dual_bm(spec: CodeSpec, sbar: Poly, trace: bool = False) -> KeyEqSolution:
    fld = spec.field
    mul, add = fld.mul, fld.add
    keep_going = _dual_condition(spec)
    syn = sbar.coeffs
    one, zero = Poly.one(fld), Poly.zero(fld)
    F, G, Ft, Gt = one, zero, zero, one
    d, dt, i = sbar.deg, spec.n, 0
    mus, branches, states = [], [], []
    mults = 0
    while d != MINUS_INF and keep_going(d, i):
        if trace:
            states.append(SolverState(None, F, G, None, Ft, Gt, d, dt, i))
        # coefficient of x^d in F * Sbar
        mu = 0
        for j in range(max(0, d - len(syn) + 1), min(len(F.coeffs), d + 1)):
            fj = F.coeffs[j]
            if fj:
                mu = add(mu, mul(fj, syn[d - j]))
                mults += 1
        p = d - dt
        br = choose_branch(mu, p)
        if trace:
            mus.append(mu)
            branches.append(br)
        if br is Branch.FIRST:
            if mu:
                F = F.sub_scaled_shift(mu, p, Ft)
                G = G.sub_scaled_shift(mu, p, Gt)
            d -= 1
        else:
            inv = fld.inv(mu)
            F, Ft = F.shift(-p).sub_scaled_shift(mu, 0, Ft), F.scale(inv)
            G, Gt = G.shift(-p).sub_scaled_shift(mu, 0, Gt), G.scale(inv)
            d, dt = dt - 1, d
        i += 1
    if trace:
        states.append(SolverState(None, F, G, None, Ft, Gt, d, dt, i))
    return KeyEqSolution(
        locator=F,
        evaluator=-G,
        iterations=i,
        mu_sequence=mus if trace else None,
        branches=branches if trace else None,
        trace=states,
        discrepancy_mults=mults,
    )


def solve_primal_sugiyama(spec: CodeSpec, sbar_star: Poly, trace: bool = False) -> KeyEqSolution:
    """Classical Euclid on ``x^(n-k)`` and ``Sbar*``.

    Stops at the first remainder with ``2 deg r < n - k`` and scales
    ``(f, r)`` so that the locator has constant term 1.
    """
    fld = spec.field
    r_len = spec.n - spec.k
    if sbar_star.is_zero():
        return KeyEqSolution(Poly.one(fld), Poly.zero(fld))
    f, r, iterations, rows = Poly.one(fld), sbar_star, 0, []
    if not 2 * sbar_star.deg < r_len:
        for row in euclid_rows(Poly.monomial(fld, r_len), sbar_star):
            iterations += 1
            if trace:
                rows.append(row)
            if 2 * row.r.deg < r_len:
                f, r = row.f, row.r
                break
    f0 = f.coeff(0)
    if f0 == 0:
        raise SingularNormalization("locator candidate has zero constant term")
    inv = fld.inv(f0)
    return KeyEqSolution(f.scale(inv), r.scale(inv), iterations=iterations,
                         trace=rows, remainder_updates=iterations)
