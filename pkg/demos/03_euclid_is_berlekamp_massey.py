"""
Dropping the remainders: Euclid becomes Berlekamp-Massey
========================================================

Truncating the step-wise run on (x^n - 1, Sbar) yields the locator and
evaluator of a dual Reed-Solomon code. The only use of the remainder R is
its coefficient at d, and that equals the coefficient of F * Sbar at d.
So the remainder rows can go: what is left is Berlekamp-Massey, and both
solvers take exactly the same steps.
"""

import numpy as np

from dualrs import CodeSpec, encode, make_field, solve_dual_bm, solve_dual_euclid, syndrome_dual
from dualrs.rs import add_words, random_error, random_info

gf256 = make_field(2, 8)
spec = CodeSpec(gf256, 223)
rng = np.random.default_rng(2024)

c = encode(spec, random_info(spec, rng))
e = random_error(spec, 9, rng)
sbar = syndrome_dual(spec, add_words(gf256, c, e))

euclid = solve_dual_euclid(spec, sbar, trace=True)
bm = solve_dual_bm(spec, sbar, trace=True)

print("iterations:", euclid.iterations, bm.iterations)
print("branches identical:", euclid.branches == bm.branches)
print("discrepancies identical:", euclid.mu_sequence == bm.mu_sequence)
print("locator identical:", euclid.locator == bm.locator)
print("R/Rt rows recomputed  euclid:", euclid.remainder_updates, " bm:", bm.remainder_updates)

for s in euclid.trace[:-1]:
    assert s.R.coeff(s.d) == (s.F * sbar).coeff(s.d)
print("leading coefficient of R_i == coefficient of F_i*Sbar at d_i on every step")
print("error positions:", sorted(i for i, v in enumerate(e) if v))
print("locator roots:  ", [i for i in range(spec.n) if euclid.locator(gf256.exp(i)) == 0])
