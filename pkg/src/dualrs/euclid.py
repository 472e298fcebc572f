"""Extended Euclidean algorithms over F[x].

Three variants share this module:

* :func:`ext_euclid`, the textbook remainder sequence with Bezout
  coefficients ``f_i * b + g_i * a = r_i``;
* :func:`monic_euclid`, which keeps one row monic and multiplies by
  ``[[q, -mu], [1/mu, 0]]`` each round;
* the step-wise engine (:func:`stepwise_init`, :func:`stepwise_step`,
  :func:`stepwise_run`), which splits every quotient into one elementary
  update per coefficient. The key-equation solvers are built on it.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Callable, Iterator, NamedTuple

from .errors import BothZero, DegreeOrder, NotMonic
from .poly import MINUS_INF, Poly


class EuclidRow(NamedTuple):
    r: Poly
    f: Poly
    g: Poly
    q: Poly


def euclid_rows(a: Poly, b: Poly) -> Iterator[EuclidRow]:
    """Yield ``(r_i, f_i, g_i, q_i)`` for i = 0, 1, ... until ``r_i == 0``.

    Initialization is ``r_-2 = a, r_-1 = b`` with ``(f, g) = (0, 1)`` and
    ``(1, 0)`` respectively, so every row satisfies ``f*b + g*a = r``.
    """
    fld = a.field
    zero, one = Poly.zero(fld), Poly.one(fld)
    r2, f2, g2 = a, zero, one
    r1, f1, g1 = b, one, zero
    while r1:
        q, r = divmod(r2, r1)
        f = f2 - q * f1
        g = g2 - q * g1
        yield EuclidRow(r, f, g, q)
        r2, f2, g2 = r1, f1, g1
        r1, f1, g1 = r, f, g


def ext_euclid(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly, list[EuclidRow]]:
    """Classic extended Euclid.

    Returns ``(gcd, f, g, rows)`` with ``f*b + g*a == gcd``. The gcd is the
    last nonzero remainder and is not normalized.
    """
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    fld = a.field
    gcd, f, g = a, Poly.zero(fld), Poly.one(fld)
    if b:
        gcd, f, g = b, Poly.one(fld), Poly.zero(fld)
    rows = []
    for row in euclid_rows(a, b):
        rows.append(row)
        if row.r:
            gcd, f, g = row.r, row.f, row.g
    return gcd, f, g, rows


class MonicEuclid(NamedTuple):
    rt: Poly
    ft: Poly
    gt: Poly
    quotients: list[Poly]
    fs: list[Poly]


def monic_euclid(a: Poly, b: Poly) -> MonicEuclid:
    """Monic variant: ``rt`` stays monic and ends as the monic gcd.

    ``fs`` lists the successive ``f_i`` of the lower row (starting with
    ``f_0 = 1``); they are monic with strictly increasing degree when
    ``deg b < deg a``.
    """
    a._check(b)
    if not a.is_monic() or a.deg < 1:
        raise NotMonic("monic_euclid needs a monic a of degree >= 1")
    fld = a.field
    r, f, g = b, Poly.one(fld), Poly.zero(fld)
    rt, ft, gt = a, Poly.zero(fld), Poly.one(fld)
    quotients, fs = [], [f]
    while r:
        mu = r.lc()
        q = rt.scale(mu) // r
        inv = fld.inv(mu)
        r, rt = q * r - rt.scale(mu), r.scale(inv)
        f, ft = q * f - ft.scale(mu), f.scale(inv)
        g, gt = q * g - gt.scale(mu), g.scale(inv)
        quotients.append(q)
        fs.append(f)
    return MonicEuclid(rt, ft, gt, quotients, fs)


# -- step-wise engine --------------------------------------------------------

class Branch(str, enum.Enum):
    FIRST = "FIRST"    # (1, -mu x^p; 0, 1): d drops by one
    SECOND = "SECOND"  # (x^-p, -mu; 1/mu, 0): rows swap roles


@dataclass(frozen=True)
class SolverState:
    """The six polynomials and two counters of the step-wise algorithm.

    ``d`` bounds ``deg R`` from above (it is :data:`MINUS_INF` only when
    the algorithm starts from ``b == 0``); ``dt`` is the exact degree of the
    monic ``Rt``. ``R`` is ``None`` in states produced by the
    remainder-free solver.
    """

    R: Poly | None
    F: Poly
    G: Poly
    Rt: Poly | None
    Ft: Poly
    Gt: Poly
    d: int | float
    dt: int
    iter: int = 0

    def to_record(self) -> dict:
        def text(p):
            return None if p is None else p.to_text()

        return {
            "i": self.iter,
            "d": None if self.d == MINUS_INF else self.d,
            "dt": self.dt,
            "R": text(self.R), "F": text(self.F), "G": text(self.G),
            "Rt": text(self.Rt), "Ft": text(self.Ft), "Gt": text(self.Gt),
        }


def stepwise_init(a: Poly, b: Poly) -> SolverState:
    a._check(b)
    if not a.is_monic():
        raise NotMonic("a must be monic")
    if b.deg >= a.deg:
        raise DegreeOrder(f"need deg b < deg a, got {b.deg} >= {a.deg}")
    fld = a.field
    one, zero = Poly.one(fld), Poly.zero(fld)
    return SolverState(R=b, F=one, G=zero, Rt=a, Ft=zero, Gt=one,
                       d=b.deg, dt=a.deg, iter=0)


def choose_branch(mu: int, p: int) -> Branch:
    return Branch.FIRST if p >= 0 or mu == 0 else Branch.SECOND


def stepwise_step(s: SolverState) -> SolverState:
    """Apply one elementary update; requires ``s.d >= 0``."""
    mu = s.R.coeff(s.d)
    p = s.d - s.dt
    if choose_branch(mu, p) is Branch.FIRST:
        if mu == 0:
            return SolverState(s.R, s.F, s.G, s.Rt, s.Ft, s.Gt, s.d - 1, s.dt, s.iter + 1)
        return SolverState(
            R=s.R.sub_scaled_shift(mu, p, s.Rt),
            F=s.F.sub_scaled_shift(mu, p, s.Ft),
            G=s.G.sub_scaled_shift(mu, p, s.Gt),
            Rt=s.Rt, Ft=s.Ft, Gt=s.Gt,
            d=s.d - 1, dt=s.dt, iter=s.iter + 1,
        )
    inv = s.R.field.inv(mu)
    return SolverState(
        R=s.R.shift(-p).sub_scaled_shift(mu, 0, s.Rt),
        F=s.F.shift(-p).sub_scaled_shift(mu, 0, s.Ft),
        G=s.G.shift(-p).sub_scaled_shift(mu, 0, s.Gt),
        Rt=s.R.scale(inv), Ft=s.F.scale(inv), Gt=s.G.scale(inv),
        d=s.dt - 1, dt=s.d, iter=s.iter + 1,
    )


@dataclass
class EuclidTrace:
    """Run record of the step-wise algorithm.

    ``states`` holds every state when tracing was requested, otherwise just
    the initial and final ones. ``mus``/``branches`` are recorded only when
    tracing. ``remainder_updates`` counts recomputed ``R``/``Rt`` rows.
    """

    states: list[SolverState]
    mus: list[int] = field(default_factory=list)
    branches: list[Branch] = field(default_factory=list)
    remainder_updates: int = 0

    @property
    def final(self) -> SolverState:
        return self.states[-1]

    @property
    def iterations(self) -> int:
        return self.final.iter

    def records(self) -> list[dict]:
        """Per-iteration JSON-ready records, plus a closing record for the final state."""
        out = []
        for s, mu, br in zip(self.states, self.mus, self.branches):
            rec = s.to_record()
            rec.update(branch=br.value, mu=mu, p=s.d - s.dt)
            out.append(rec)
        last = self.final.to_record()
        last.update(branch=None, mu=None, p=None)
        out.append(last)
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.records(), **kwargs)


def full_run(d, _iter) -> bool:
    return d >= 0


def stepwise_run(a: Poly, b: Poly,
                 condition: Callable[[int | float, int], bool] = full_run,
                 trace: bool = False) -> EuclidTrace:
    """Step while ``condition(d, iter)`` holds (default: until ``d < 0``).

    With the default condition the final ``Rt`` is the monic gcd of
    ``a`` and ``b`` and the final ``R`` is zero.
    """
    s = stepwise_init(a, b)
    out = EuclidTrace(states=[s])
    while s.d != MINUS_INF and condition(s.d, s.iter):
        mu = s.R.coeff(s.d)
        br = choose_branch(mu, s.d - s.dt)
        if trace:
            out.mus.append(mu)
            out.branches.append(br)
        out.remainder_updates += 2 if br is Branch.SECOND else int(mu != 0)
        s = stepwise_step(s)
        if trace:
            out.states.append(s)
    if not trace and s is not out.states[0]:
        out.states.append(s)
    return out
