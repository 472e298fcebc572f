"""
Decoding primal and dual codes
==============================

Dual decoding finds errors at the roots of the locator and gets their
values from W(alpha^i) / L'(alpha^i), with no minus sign. A primal word is
decoded either by the classical Sugiyama solver or by mapping it to the
dual code, decoding there and mapping back.
"""

import numpy as np

from dualrs import CodeSpec, decode_dual, decode_primal, encode, make_field
from dualrs.rs import add_words, random_error, random_info

gf7 = make_field(7, 1, alpha=3)
dual = CodeSpec(gf7, 2)

u = [1, 4, 2, 6, 4, 5]            # codeword (1,3,2,6,4,5) with +1 at position 1
res = decode_dual(dual, u, "euclid")
print(res.status.value, res.codeword, "error:", res.error)
print("locator:", res.locator, " evaluator:", res.evaluator)

gf256 = make_field(2, 8)
primal = CodeSpec(gf256, 223, "primal")
rng = np.random.default_rng(7)
c = encode(primal, random_info(primal, rng))
e = random_error(primal, primal.t_max, rng)
received = add_words(gf256, c, e)

a = decode_primal(primal, received, "sugiyama")
b = decode_primal(primal, received, "via_star")
print("sugiyama recovered:", a.ok and a.codeword == c)
print("via_star recovered:", b.ok and b.codeword == c)
print("same locator/evaluator:", a.locator == b.locator and a.evaluator == b.evaluator)

# one error past capacity: either FAILURE or a valid (wrong) codeword, never garbage
e = random_error(primal, primal.t_max + 1, rng)
r = decode_primal(primal, add_words(gf256, c, e), "sugiyama")
print("beyond capacity:", r.status.value)
