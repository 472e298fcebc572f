"""Root finding, Forney formulas and full decoders for both code variants."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DerivativeZero, SingularNormalization, VariantMismatch
from .keyeq import KeyEqSolution, solve_dual_bm, solve_dual_euclid, solve_primal_sugiyama
from .poly import Poly
from .rs import (
    CodeSpec,
    Variant,
    is_codeword,
    star_inv,
    star_map,
    sub_words,
    syndrome_dual,
    syndrome_primal,
)

DUAL_SOLVERS = {"euclid": solve_dual_euclid, "bm": solve_dual_bm}
PRIMAL_ALGOS = ("sugiyama", "via_star")


class Status(str, enum.Enum):
    CORRECTED = "CORRECTED"
    FAILURE = "FAILURE"


@dataclass
class DecodeResult:
    status: Status
    codeword: list[int] | None
    error: list[int] | None
    locator: Poly
    evaluator: Poly
    algo: str
    iterations: int = 0
    mu: list[int] | None = None
    solution: KeyEqSolution | None = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return self.status is Status.CORRECTED

    def same_outcome(self, other: DecodeResult) -> bool:
        """Equal status, words and decoding polynomials (ignores algo and trace)."""
        return (self.status == other.status and self.codeword == other.codeword
                and self.error == other.error and self.locator == other.locator
                and self.evaluator == other.evaluator)

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "codeword": self.codeword,
            "error": self.error,
            "locator": self.locator.to_text(),
            "evaluator": self.evaluator.to_text(),
            "algo": self.algo,
            "iterations": self.iterations,
            "mu": self.mu,
        }


def find_error_positions(spec: CodeSpec, locator: Poly) -> list[int]:
    """Positions i with locator(alpha^i) = 0 (dual) or locator(alpha^-i) = 0 (primal)."""
    fld = spec.field
    sign = 1 if spec.variant is Variant.DUAL else -1
    return [i for i in range(spec.n) if locator(fld.exp(sign * i)) == 0]


def forney_dual(locator: Poly, evaluator: Poly, positions: Sequence[int]) -> list[tuple[int, int]]:
    """Error values W(alpha^i) / L'(alpha^i)."""
    fld = locator.field
    deriv = locator.derivative()
    out = []
    for i in positions:
        x = fld.exp(i)
        den = deriv(x)
        if den == 0:
            raise DerivativeZero(f"locator derivative vanishes at position {i}")
        out.append((i, fld.div(evaluator(x), den)))
    return out


def forney_primal(locator: Poly, evaluator: Poly, positions: Sequence[int]) -> list[tuple[int, int]]:
    """Error values -W*(alpha^-i) / L*'(alpha^-i)."""
    fld = locator.field
    deriv = locator.derivative()
    out = []
    for i in positions:
        x = fld.exp(-i)
        den = deriv(x)
        if den == 0:
            raise DerivativeZero(f"locator derivative vanishes at position {i}")
        out.append((i, fld.neg(fld.div(evaluator(x), den))))
    return out


def _finish(spec: CodeSpec, u, sol: KeyEqSolution, algo: str, forney) -> DecodeResult:
    fld, n = spec.field, spec.n

    def failure():
        return DecodeResult(Status.FAILURE, None, None, sol.locator, sol.evaluator, algo,
                            sol.iterations, sol.mu_sequence, sol)

    if sol.locator.is_zero():
        return failure()
    positions = find_error_positions(spec, sol.locator)
    if len(positions) != sol.locator.deg:
        return failure()
    try:
        values = forney(sol.locator, sol.evaluator, positions)
    except DerivativeZero:
        return failure()
    error = [0] * n
    for i, v in values:
        error[i] = v
    if any(v == 0 for _, v in values):
        return failure()
    codeword = sub_words(fld, u, error)
    if not is_codeword(spec, codeword):
        return failure()
    return DecodeResult(Status.CORRECTED, codeword, error, sol.locator, sol.evaluator,
                        algo, sol.iterations, sol.mu_sequence, sol)


def _clean(spec: CodeSpec, u, algo: str) -> DecodeResult:
    fld = spec.field
    return DecodeResult(Status.CORRECTED, list(u), [0] * spec.n, Poly.one(fld),
                        Poly.zero(fld), algo, 0, [])


def decode_dual(spec: CodeSpec, u: Sequence[int], algo: str = "bm",
                trace: bool = False) -> DecodeResult:
    if spec.variant is not Variant.DUAL:
        raise VariantMismatch("decode_dual needs a dual code")
    if algo not in DUAL_SOLVERS:
        raise ValueError(f"unknown dual algorithm {algo!r}; choose from {sorted(DUAL_SOLVERS)}")
    u = list(u)
    sbar = syndrome_dual(spec, u)
    if sbar.is_zero():
        return _clean(spec, u, algo)
    sol = DUAL_SOLVERS[algo](spec, sbar, trace=trace)
    return _finish(spec, u, sol, algo, forney_dual)


def _dual_to_primal_polys(locator: Poly, evaluator: Poly) -> tuple[Poly, Poly]:
    """Map (L, W) to (L*, W*) via L* = x^t L(1/x), W* = x^(t-1) W(1/x)."""
    t = max(locator.deg, 0)
    ev_t = max(t - 1, evaluator.deg, 0)
    return locator.reverse(t), evaluator.reverse(ev_t)


def decode_primal(spec: CodeSpec, u_star: Sequence[int], algo: str = "sugiyama",
                  trace: bool = False) -> DecodeResult:
    if spec.variant is not Variant.PRIMAL:
        raise VariantMismatch("decode_primal needs a primal code")
    fld = spec.field
    u_star = list(u_star)
    if algo == "via_star":
        res = decode_dual(spec.with_variant(Variant.DUAL), star_inv(fld, u_star), "bm", trace)
        loc, ev = _dual_to_primal_polys(res.locator, res.evaluator)
        if not res.ok:
            return DecodeResult(Status.FAILURE, None, None, loc, ev, algo,
                                res.iterations, res.mu, res.solution)
        return DecodeResult(Status.CORRECTED, star_map(fld, res.codeword),
                            star_map(fld, res.error), loc, ev, algo,
                            res.iterations, res.mu, res.solution)
    if algo != "sugiyama":
        raise ValueError(f"unknown primal algorithm {algo!r}; choose from {PRIMAL_ALGOS}")
    sbar = syndrome_primal(spec, u_star)
    if sbar.is_zero():
        return _clean(spec, u_star, algo)
    try:
        sol = solve_primal_sugiyama(spec, sbar, trace=trace)
    except SingularNormalization:
        return DecodeResult(Status.FAILURE, None, None, Poly.zero(fld), Poly.zero(fld), algo)
    return _finish(spec, u_star, sol, algo, forney_primal)


def decode(spec: CodeSpec, u: Sequence[int], algo: str | None = None,
           trace: bool = False) -> DecodeResult:
    """Dispatch on the code variant; ``algo`` defaults to bm / sugiyama."""
    if spec.variant is Variant.DUAL:
        return decode_dual(spec, u, algo or "bm", trace)
    return decode_primal(spec, u, algo or "sugiyama", trace)
