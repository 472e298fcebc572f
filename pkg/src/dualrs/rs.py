"""Primal and dual Reed-Solomon codes of full length n = q - 1.

The primal code ``C*(k)`` has generator roots alpha, ..., alpha^(n-k); the
dual code ``C(k)`` has parity checks ``c(alpha^j) = 0`` for
``j = 0 .. n-k-1``. Componentwise scaling by ``alpha^-i`` (:func:`star_map`)
carries ``C(k)`` onto ``C*(k)``.

Words are plain lists of field elements (ints) of length n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import LengthMismatch, VariantMismatch
from .gf import Field
from .poly import Poly


class Variant(str, enum.Enum):
    PRIMAL = "primal"
    DUAL = "dual"


@dataclass(frozen=True)
class CodeSpec:
    field: Field
    k: int
    variant: Variant = Variant.DUAL

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        if not 1 <= self.k < self.n:
            raise ValueError(f"need 1 <= k < n = {self.n}, got k = {self.k}")

    @property
    def n(self) -> int:
        return self.field.n

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    @property
    def t_max(self) -> int:
        return (self.d - 1) // 2

    def with_variant(self, variant) -> CodeSpec:
        return CodeSpec(self.field, self.k, variant)


def _require(spec: CodeSpec, variant: Variant):
    if spec.variant is not variant:
        raise VariantMismatch(f"expected a {variant.value} code, got {spec.variant.value}")


def _check_len(word: Sequence[int], n: int, what: str = "word"):
    if len(word) != n:
        raise LengthMismatch(f"{what} has length {len(word)}, expected {n}")


def weight(word: Sequence[int]) -> int:
    return sum(1 for c in word if c)


def _power_rows(field: Field, exponents) -> np.ndarray:
    """Row j holds (alpha^(e_j * 0), ..., alpha^(e_j * (n-1)))."""
    n = field.n
    exps = np.outer(np.asarray(list(exponents), dtype=np.int64), np.arange(n)) % n
    return np.asarray(field.exp_table, dtype=np.int64)[exps]


def generator_poly(spec: CodeSpec) -> Poly:
    fld, n, k = spec.field, spec.n, spec.k
    if spec.variant is Variant.PRIMAL:
        roots = [fld.exp(j) for j in range(1, n - k + 1)]
    else:
        roots = [fld.exp(-j) for j in range(k + 1, n)] + [1]
    return Poly.from_roots(fld, roots)


def generator_matrix(spec: CodeSpec) -> np.ndarray:
    """k x n generator matrix: rows alpha^(0..k-1) (primal) or alpha^(1..k) (dual)."""
    if spec.variant is Variant.PRIMAL:
        return _power_rows(spec.field, range(0, spec.k))
    return _power_rows(spec.field, range(1, spec.k + 1))


def parity_matrix(spec: CodeSpec) -> np.ndarray:
    """(n-k) x n parity-check matrix: rows alpha^(1..n-k) (primal) or alpha^(0..n-k-1) (dual)."""
    r = spec.n - spec.k
    if spec.variant is Variant.PRIMAL:
        return _power_rows(spec.field, range(1, r + 1))
    return _power_rows(spec.field, range(0, r))


def encode(spec: CodeSpec, info: Sequence[int]) -> list[int]:
    """Codeword ``info @ G`` for the spec's variant."""
    _check_len(info, spec.k, "information word")
    row = np.asarray(info, dtype=np.int64)[None, :]
    return spec.field.matmul(row, generator_matrix(spec))[0].tolist()


def parity_checks(spec: CodeSpec, word: Sequence[int]) -> list[int]:
    """``H @ word``: the evaluations of the word at the parity-check points."""
    _check_len(word, spec.n)
    col = np.asarray(word, dtype=np.int64)[:, None]
    return spec.field.matmul(parity_matrix(spec), col)[:, 0].tolist()


def is_codeword(spec: CodeSpec, word: Sequence[int]) -> bool:
    return not any(parity_checks(spec, word))


def star_map(field: Field, u: Sequence[int]) -> list[int]:
    """Scale component i by alpha^-i (dual word to primal word)."""
    return [field.mul(c, field.exp(-i)) for i, c in enumerate(u)]


def star_inv(field: Field, u: Sequence[int]) -> list[int]:
    """Scale component i by alpha^i (primal word to dual word)."""
    return [field.mul(c, field.exp(i)) for i, c in enumerate(u)]


def syndrome_dual(spec: CodeSpec, u: Sequence[int]) -> Poly:
    """Truncated syndrome: coefficient of x^(k+j) is u(alpha^(n-k-1-j))."""
    _require(spec, Variant.DUAL)
    evals = parity_checks(spec, u)  # u(alpha^0), ..., u(alpha^(n-k-1))
    return Poly(spec.field, [0] * spec.k + evals[::-1])


def syndrome_primal(spec: CodeSpec, u: Sequence[int]) -> Poly:
    """Truncated syndrome: coefficient of x^i is u(alpha^(i+1))."""
    _require(spec, Variant.PRIMAL)
    return Poly(spec.field, parity_checks(spec, u))


def full_syndrome(spec: CodeSpec, e: Sequence[int]) -> Poly:
    """Untruncated S (dual) or S* (primal) of a known error vector."""
    _check_len(e, spec.n, "error")
    fld, n = spec.field, spec.n
    col = np.asarray(e, dtype=np.int64)[:, None]
    if spec.variant is Variant.PRIMAL:
        evals = fld.matmul(_power_rows(fld, range(1, n + 1)), col)[:, 0]
        return Poly(fld, evals.tolist())
    evals = fld.matmul(_power_rows(fld, range(n - 1, -1, -1)), col)[:, 0]
    return Poly(fld, evals.tolist())


def locator_evaluator(spec: CodeSpec, e: Sequence[int]) -> tuple[Poly, Poly]:
    """The locator/evaluator pair straight from their definitions.

    Dual: ``prod (x - alpha^i)`` and ``sum e_i prod_{j != i} (x - alpha^j)``.
    Primal: ``prod (1 - alpha^i x)`` and
    ``sum e_i alpha^i prod_{j != i} (1 - alpha^j x)``.
    """
    _check_len(e, spec.n, "error")
    fld = spec.field
    support = [i for i, c in enumerate(e) if c]
    one = Poly.one(fld)
    if spec.variant is Variant.DUAL:
        factors = {i: Poly(fld, (fld.neg(fld.exp(i)), 1)) for i in support}
    else:
        factors = {i: Poly(fld, (1, fld.neg(fld.exp(i)))) for i in support}
    locator = one
    for f in factors.values():
        locator = locator * f
    evaluator = Poly.zero(fld)
    for i in support:
        term = Poly.const(fld, e[i] if spec.variant is Variant.DUAL
                          else fld.mul(e[i], fld.exp(i)))
        for j in support:
            if j != i:
                term = term * factors[j]
        evaluator = evaluator + term
    return locator, evaluator


def random_info(spec: CodeSpec, rng: np.random.Generator) -> list[int]:
    return rng.integers(0, spec.field.q, size=spec.k).tolist()


def random_error(spec: CodeSpec, t: int, rng: np.random.Generator) -> list[int]:
    """Error vector of exact weight ``t`` with uniform positions and nonzero values."""
    e = [0] * spec.n
    positions = rng.choice(spec.n, size=t, replace=False)
    values = rng.integers(1, spec.field.q, size=t)
    for i, v in zip(positions.tolist(), values.tolist()):
        e[i] = v
    return e


def add_words(field: Field, a: Sequence[int], b: Sequence[int]) -> list[int]:
    return [field.add(x, y) for x, y in zip(a, b)]


def sub_words(field: Field, a: Sequence[int], b: Sequence[int]) -> list[int]:
    return [field.sub(x, y) for x, y in zip(a, b)]
