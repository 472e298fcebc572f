"""Finite fields GF(p^m) with log/antilog tables.

Elements are plain ``int`` values in ``[0, q)``. The base-``p`` digits of an
element are the coefficients of its polynomial representation modulo the
field's modulus, so for ``p == 2`` this is the usual bit-packed form and
addition is XOR.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DivisionByZero,
    LogOfZero,
    NotPrimitive,
    NotPrime,
    ReducibleModulus,
)

#: x^8 + x^4 + x^3 + x^2 + 1, the usual Reed-Solomon modulus for GF(2^8).
DEFAULT_GF256_MODULUS = 0x11D


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in ascending order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomials over GF(p), lists of ints low degree first ------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _digits(value: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        value, r = divmod(value, p)
        out.append(r)
    return out


def _undigits(digits, p: int) -> int:
    value = 0
    for c in reversed(digits):
        value = value * p + c
    return value


def _pmod(a: list[int], mod: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(mod) - 1
    inv_lc = pow(mod[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lc % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(mod):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _pmod(prod, mod, p)


def _ppowmod(a: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, mod, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, mod, p)
        base = _pmulmod(base, base, mod, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(mod: list[int], p: int) -> bool:
    """Rabin's irreducibility test for a polynomial over GF(p)."""
    mod = _trim(list(mod))
    m = len(mod) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    if _ppowmod(x, p**m, mod, p) != _pmod(x, mod, p):
        return False
    for r in prime_factors(m):
        h = _ppowmod(x, p ** (m // r), mod, p)
        h = h + [0] * (2 - len(h))
        h[1] = (h[1] - 1) % p
        g = _pgcd(mod, _trim(h), p)
        if len(g) > 1:
            return False
    return True


def default_modulus(p: int, m: int) -> int:
    """Integer encoding of the default degree-``m`` modulus over GF(p).

    GF(2^8) uses 0x11D. Otherwise the smallest monic polynomial (by integer
    encoding) that is irreducible and has ``x`` as a primitive root.
    """
    if (p, m) == (2, 8):
        return DEFAULT_GF256_MODULUS
    q = p**m
    factors = prime_factors(q - 1)
    for low in range(p**m):
        mod = _digits(low, p, m) + [1]
        if mod[0] == 0 or not is_irreducible(mod, p):
            continue
        x = [0, 1]
        if all(_ppowmod(x, (q - 1) // r, mod, p) != [1] for r in factors):
            return _undigits(mod, p)
    raise ReducibleModulus(f"no primitive polynomial of degree {m} over GF({p})")


class Field:
    """GF(p^m) with a fixed primitive element and exp/log tables.

    Build instances with :func:`make_field`. A field is immutable after
    construction and can be shared freely.
    """

    __slots__ = (
        "p", "m", "q", "n", "modulus", "alpha",
        "exp_table", "log_table", "_exp2", "_np_exp", "_np_log",
    )

    def __init__(self, p: int, m: int, modulus: tuple[int, ...], alpha: int,
                 exp_table: list[int]):
        self.p = p
        self.m = m
        self.q = p**m
        self.n = self.q - 1
        self.modulus = modulus
        self.alpha = alpha
        self.exp_table = tuple(exp_table)
        log = [-1] * self.q
        for i, v in enumerate(exp_table):
            log[v] = i
        self.log_table = tuple(log)
        # doubled so that exp[log a + log b] needs no reduction
        self._exp2 = self.exp_table + self.exp_table
        self._np_exp = np.array(self._exp2, dtype=np.int64)
        np_log = np.array(log, dtype=np.int64)
        np_log[0] = 0
        self._np_log = np_log

    # -- identity / serialization -------------------------------------------

    @property
    def modulus_int(self) -> int:
        return _undigits(self.modulus, self.p) if self.modulus else 0

    def _key(self):
        return (self.p, self.m, self.modulus, self.alpha)

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Field({self})"

    def __str__(self):
        return f"{self.p},{self.m},{self.modulus_int},{self.alpha}"

    @classmethod
    def from_string(cls, text: str) -> Field:
        """Parse ``p,m,modulus,alpha`` (modulus and alpha as integers)."""
        try:
            p, m, mod, alpha = (int(tok) for tok in text.split(","))
        except ValueError:
            raise ValueError(f"field spec must be 'p,m,modulus,alpha', got {text!r}") from None
        return make_field(p, m, modulus=mod if m > 1 else None, alpha=alpha)

    # -- scalar arithmetic --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % p
        da, db = _digits(a, p, self.m), _digits(b, p, self.m)
        return _undigits([(x + y) % p for x, y in zip(da, db)], p)

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.m == 1:
            return -a % p
        return _undigits([-x % p for x in _digits(a, p, self.m)], p)

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        log = self.log_table
        return self._exp2[log[a] + log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.exp_table[-self.log_table[a] % self.n]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by zero")
        if a == 0:
            return 0
        log = self.log_table
        return self._exp2[log[a] - log[b] + self.n]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if e == 0 else 0
        return self.exp_table[self.log_table[a] * e % self.n]

    def exp(self, i: int) -> int:
        """alpha**i, with ``i`` reduced modulo q-1."""
        return self.exp_table[i % self.n]

    def log(self, a: int) -> int:
        if a == 0:
            raise LogOfZero("log of zero")
        return self.log_table[a]

    def from_int(self, i: int) -> int:
        """Image of the integer ``i`` in the prime subfield."""
        return i % self.p

    # -- vectorized helpers for matrix work ---------------------------------

    def mul_array(self, a, b) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64),
                                   np.asarray(b, dtype=np.int64))
        out = self._np_exp[self._np_log[a] + self._np_log[b]]
        out[(a == 0) | (b == 0)] = 0
        return out

    def add_array(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        return self.sum_array(np.stack(np.broadcast_arrays(a, b)), axis=0)

    def sum_array(self, a, axis: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        p = self.p
        total = None
        for j in range(self.m):
            digit = (a // p**j) % p
            s = (digit.sum(axis=axis) % p) * p**j
            total = s if total is None else total + s
        return total

    def matmul(self, a, b) -> np.ndarray:
        """Matrix product over the field (2-d by 2-d)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        return self.sum_array(self.mul_array(a[:, :, None], b[None, :, :]), axis=1)


def _element_mul_naive(a: int, b: int, p: int, m: int, mod: list[int]) -> int:
    if m == 1:
        return a * b % p
    if p == 2:
        mod_int = _undigits(mod, 2)
        result = 0
        while b:
            if b & 1:
                result ^= a
            b >>= 1
            a <<= 1
            if a >> m:
                a ^= mod_int
        return result
    return _undigits(_pmulmod(_digits(a, p, m), _digits(b, p, m), mod, p), p)


def _order_is_full(a: int, p: int, m: int, mod: list[int]) -> bool:
    q = p**m

    def power(e):
        result, base = 1, a
        while e:
            if e & 1:
                result = _element_mul_naive(result, base, p, m, mod)
            base = _element_mul_naive(base, base, p, m, mod)
            e >>= 1
        return result

    if power(q - 1) != 1:
        return False
    return all(power((q - 1) // r) != 1 for r in prime_factors(q - 1))


def make_field(p: int, m: int = 1, modulus=None, alpha: int | None = None) -> Field:
    """Build and validate GF(p^m).

    ``modulus`` is either a coefficient list (low degree first, length m+1)
    or its integer encoding with base-``p`` digits; it is ignored for
    ``m == 1``. When omitted, :func:`default_modulus` is used. When
    ``alpha`` is omitted the smallest primitive element is chosen.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    q = p**m
    if m == 1:
        mod: list[int] = []
    else:
        if modulus is None:
            modulus = default_modulus(p, m)
        if isinstance(modulus, int):
            mod = _trim(_digits(modulus, p, m + 1))
        else:
            mod = _trim([int(c) % p for c in modulus])
        if len(mod) != m + 1:
            raise ReducibleModulus(f"modulus must have degree {m}")
        if mod[-1] != 1:
            raise ReducibleModulus("modulus must be monic")
        if not is_irreducible(mod, p):
            raise ReducibleModulus(f"modulus {mod} is reducible over GF({p})")

    if alpha is None:
        alpha = next((a for a in range(1, q) if _order_is_full(a, p, m, mod)), None)
        if alpha is None:  # only reachable for q == 2 with no candidates
            raise NotPrimitive("no primitive element found")
    elif not 0 < alpha < q or not _order_is_full(alpha, p, m, mod):
        raise NotPrimitive(f"{alpha} is not a primitive element of GF({q})")

    exp_table = []
    x = 1
    for _ in range(q - 1):
        exp_table.append(x)
        x = _element_mul_naive(x, alpha, p, m, mod)
    return Field(p, m, tuple(mod), alpha, exp_table)
