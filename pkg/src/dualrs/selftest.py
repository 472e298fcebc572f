"""Small-scale invariant sweep behind ``dualrs selftest``."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .checks import dual_solution_violations, key_equation_violations, stepwise_invariant_violations
from .decode import decode_dual, decode_primal
from .euclid import stepwise_run
from .keyeq import solve_dual_bm, solve_dual_euclid
from .poly import Poly
from .rs import (
    CodeSpec,
    Variant,
    add_words,
    encode,
    is_codeword,
    random_error,
    random_info,
    star_map,
    syndrome_dual,
)


@dataclass
class CheckResult:
    name: str
    checks: int = 0
    violations: list[str] = field(default_factory=list)

    def to_dict(self):
        return {"name": self.name, "checks": self.checks, "violations": self.violations}


def _random_poly(fld, deg, rng, monic=False):
    coeffs = rng.integers(0, fld.q, size=deg + 1).tolist()
    if monic:
        coeffs[-1] = 1
    return Poly(fld, coeffs)


def check_field(spec: CodeSpec, rng) -> CheckResult:
    res = CheckResult("field")
    f = spec.field
    elems = range(1, f.q) if f.q <= 64 else rng.integers(1, f.q, size=64).tolist()
    for a in elems:
        res.checks += 1
        if f.mul(a, f.inv(a)) != 1 or f.exp(f.log(a)) != a:
            res.violations.append(f"inverse/log failure at {a}")
    return res


def check_stepwise_invariants(spec: CodeSpec, rng, trials: int) -> CheckResult:
    res = CheckResult("stepwise euclid invariants")
    fld = spec.field
    for _ in range(trials):
        da = int(rng.integers(1, 12))
        a = _random_poly(fld, da, rng, monic=True)
        b = _random_poly(fld, int(rng.integers(0, da)), rng)
        for s in stepwise_run(a, b, trace=True).states:
            res.checks += 1
            res.violations += stepwise_invariant_violations(s, a, b)
    return res


def check_key_equations(spec: CodeSpec, rng, trials: int) -> CheckResult:
    res = CheckResult("key equations")
    for _ in range(trials):
        e = random_error(spec, int(rng.integers(0, spec.t_max + 1)), rng)
        res.checks += 1
        res.violations += key_equation_violations(spec, e)
    return res


def check_roundtrip(spec: CodeSpec, rng, trials: int) -> CheckResult:
    res = CheckResult("dual round trip and euclid/bm trace equality")
    dual = spec.with_variant(Variant.DUAL)
    for _ in range(trials):
        c = encode(dual, random_info(dual, rng))
        e = random_error(dual, int(rng.integers(0, dual.t_max + 1)), rng)
        u = add_words(dual.field, c, e)
        sbar = syndrome_dual(dual, u)
        a = solve_dual_euclid(dual, sbar, trace=True)
        b = solve_dual_bm(dual, sbar, trace=True)
        res.checks += 1
        if (a.branches, a.mu_sequence, a.locator, a.evaluator) != \
                (b.branches, b.mu_sequence, b.locator, b.evaluator):
            res.violations.append(f"euclid/bm diverge on error {e}")
        if sbar:
            res.violations += dual_solution_violations(dual, sbar, a)
        for algo in ("euclid", "bm"):
            r = decode_dual(dual, u, algo)
            if not (r.ok and r.codeword == c and r.error == e):
                res.violations.append(f"{algo} failed to recover error {e}")
    return res


def check_bridge(spec: CodeSpec, rng, trials: int) -> CheckResult:
    res = CheckResult("primal/dual bridge")
    primal = spec.with_variant(Variant.PRIMAL)
    dual = spec.with_variant(Variant.DUAL)
    for _ in range(trials):
        c = encode(primal, random_info(primal, rng))
        e = random_error(primal, int(rng.integers(0, primal.t_max + 1)), rng)
        u = add_words(primal.field, c, e)
        a = decode_primal(primal, u, "sugiyama")
        b = decode_primal(primal, u, "via_star")
        res.checks += 2
        if not (a.ok and a.codeword == c and a.same_outcome(b)):
            res.violations.append(f"sugiyama/via_star disagree on error {e}")
        cd = encode(dual, random_info(dual, rng))
        if not is_codeword(primal, star_map(dual.field, cd)):
            res.violations.append("star_map(C(k)) not inside C*(k)")
    return res


def check_soundness(spec: CodeSpec, rng, trials: int) -> CheckResult:
    res = CheckResult("soundness beyond capacity")
    dual = spec.with_variant(Variant.DUAL)
    t = dual.t_max + 1
    if t > dual.n:
        return res
    for _ in range(trials):
        c = encode(dual, random_info(dual, rng))
        u = add_words(dual.field, c, random_error(dual, t, rng))
        for algo in ("euclid", "bm"):
            r = decode_dual(dual, u, algo)
            res.checks += 1
            if r.ok and not is_codeword(dual, r.codeword):
                res.violations.append(f"{algo} emitted a non-codeword")
    return res


def run_all(spec: CodeSpec, seed: int = 0, trials: int = 50) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    return [
        check_field(spec, rng),
        check_stepwise_invariants(spec, rng, max(trials // 2, 1)),
        check_key_equations(spec, rng, trials),
        check_roundtrip(spec, rng, trials),
        check_bridge(spec, rng, trials),
        check_soundness(spec, rng, trials),
    ]
