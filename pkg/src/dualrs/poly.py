"""Dense univariate polynomials over a :class:`~dualrs.gf.Field`."""

from __future__ import annotations

import math
from typing import Iterable

from .errors import (
    BothZero,
    DegreeTooLarge,
    DivisionByZero,
    FieldMismatch,
    LeadingCoeffOfZero,
    NegativeShift,
)
from .gf import Field

#: Degree of the zero polynomial. Compares below every integer.
MINUS_INF = -math.inf


def _normalize(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of ``x**i``.

    The coefficient tuple never has trailing zeros, so the zero polynomial
    is ``()`` and ``deg`` is :data:`MINUS_INF` for it.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] = ()):
        self.field = field
        self.coeffs = _normalize(coeffs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> Poly:
        return cls(field)

    @classmethod
    def one(cls, field: Field) -> Poly:
        return cls(field, (1,))

    @classmethod
    def const(cls, field: Field, c: int) -> Poly:
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field: Field, degree: int, c: int = 1) -> Poly:
        return cls(field, (0,) * degree + (c,))

    @classmethod
    def x_n_minus_1(cls, field: Field, n: int) -> Poly:
        return cls(field, (field.neg(1),) + (0,) * (n - 1) + (1,))

    @classmethod
    def from_roots(cls, field: Field, roots: Iterable[int]) -> Poly:
        """Monic polynomial with the given roots, prod (x - r)."""
        out = cls.one(field)
        for r in roots:
            out = out * cls(field, (field.neg(r), 1))
        return out

    @classmethod
    def parse(cls, field: Field, text: str) -> Poly:
        """Parse the text form ``c0,c1,...`` (low degree first)."""
        text = text.strip()
        if not text:
            return cls(field)
        coeffs = [int(tok) for tok in text.split(",")]
        if any(not 0 <= c < field.q for c in coeffs):
            raise ValueError(f"coefficient out of range for GF({field.q})")
        return cls(field, coeffs)

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs) or "0"

    # -- inspection ---------------------------------------------------------

    @property
    def deg(self):
        """Degree, or :data:`MINUS_INF` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INF

    def lc(self) -> int:
        if not self.coeffs:
            raise LeadingCoeffOfZero("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, d) -> int:
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs and self.field == other.field
        if isinstance(other, int):
            return self.coeffs == _normalize((other,))
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return "Poly(" + " + ".join(reversed(terms)) + ")"

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: Poly) -> Field:
        if self.field is not other.field and self.field != other.field:
            raise FieldMismatch("polynomials over different fields")
        return self.field

    def __add__(self, other: Poly) -> Poly:
        f = self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        add = f.add
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly(f, out)

    def __neg__(self) -> Poly:
        neg = self.field.neg
        return Poly(self.field, [neg(c) for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        f = self._check(other)
        if f.p == 2:
            return self + other
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if isinstance(other, int):
            return self.scale(other)
        f = self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(f)
        mul, add = f.mul, f.add
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
        return Poly(f, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> Poly:
        """Multiply every coefficient by the field element ``c``."""
        if c == 0:
            return Poly(self.field)
        mul = self.field.mul
        return Poly(self.field, [mul(c, x) for x in self.coeffs])

    def shift(self, p: int) -> Poly:
        """Return ``x**p * self``."""
        if p < 0:
            raise NegativeShift(f"cannot shift by {p}")
        if not self.coeffs:
            return self
        return Poly(self.field, (0,) * p + self.coeffs)

    def sub_scaled_shift(self, c: int, p: int, other: Poly) -> Poly:
        """Return ``self - c * x**p * other`` in one pass."""
        f = self._check(other)
        if c == 0 or not other.coeffs:
            return self
        if p < 0:
            raise NegativeShift(f"cannot shift by {p}")
        out = list(self.coeffs)
        need = p + len(other.coeffs)
        if len(out) < need:
            out.extend([0] * (need - len(out)))
        log, exp2 = f.log_table, f._exp2
        lc = log[f.neg(c)]
        add = f.add
        for j, y in enumerate(other.coeffs):
            if y:
                out[p + j] = add(out[p + j], exp2[lc + log[y]])
        return Poly(f, out)

    def monic(self) -> Poly:
        return self.scale(self.field.inv(self.lc()))

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        f = self._check(other)
        if not other.coeffs:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        if len(rem) - 1 < db:
            return Poly(f), self
        inv_lc = f.inv(other.coeffs[-1])
        quot = [0] * (len(rem) - db)
        mul, sub = f.mul, f.sub
        for i in range(len(rem) - 1, db - 1, -1):
            c = mul(rem[i], inv_lc)
            if c == 0:
                continue
            quot[i - db] = c
            for j, y in enumerate(other.coeffs):
                rem[i - db + j] = sub(rem[i - db + j], mul(c, y))
        return Poly(f, quot), Poly(f, rem[:db])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def __call__(self, x0: int) -> int:
        """Horner evaluation at the field element ``x0``."""
        f = self.field
        mul, add = f.mul, f.add
        acc = 0
        for c in reversed(self.coeffs):
            acc = add(mul(acc, x0), c)
        return acc

    eval = __call__

    def derivative(self) -> Poly:
        f = self.field
        return Poly(f, [f.mul(f.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def reverse(self, t: int) -> Poly:
        """Return ``x**t * self(1/x)``; requires ``t >= deg``."""
        if self.deg > t:
            raise DegreeTooLarge(f"cannot reverse degree {self.deg} polynomial within {t}")
        if not self.coeffs:
            return self
        padded = self.coeffs + (0,) * (t + 1 - len(self.coeffs))
        return Poly(self.field, padded[::-1])

    def truncate(self, n: int) -> Poly:
        """Return ``self mod x**n``."""
        return Poly(self.field, self.coeffs[:n])


def monic_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor of ``a`` and ``b``."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a.monic()
