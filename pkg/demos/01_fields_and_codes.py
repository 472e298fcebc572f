"""
Fields, codes and the star bijection
====================================

Build GF(7) and the conventional GF(2^8), then the primal and dual
Reed-Solomon codes of dimension 2 over GF(7).
"""

from dualrs import CodeSpec, encode, generator_matrix, generator_poly, is_codeword, make_field
from dualrs import parity_matrix, star_map

# GF(7) with primitive element 3: the exp table lists 3^0 .. 3^5
gf7 = make_field(7, 1, alpha=3)
print("GF(7) exp table:", gf7.exp_table)

# GF(256) with modulus x^8 + x^4 + x^3 + x^2 + 1; serialized as p,m,modulus,alpha
gf256 = make_field(2, 8)
print("GF(256):", gf256, " 0x53 * 0xCA =", hex(gf256.mul(0x53, 0xCA)))

dual = CodeSpec(gf7, 2, "dual")
primal = CodeSpec(gf7, 2, "primal")
print("n, k, d, t_max:", dual.n, dual.k, dual.d, dual.t_max)

# The dual code evaluates at alpha^1..alpha^k, the primal one at alpha^0..alpha^(k-1)
print("G(2) =\n", generator_matrix(dual))
print("H(2) =\n", parity_matrix(dual))
print("dual generator polynomial:", generator_poly(dual))
print("primal generator polynomial:", generator_poly(primal))

c = encode(dual, [1, 0])
print("dual codeword for info (1, 0):", c)

# Scaling position i by alpha^-i moves the word into the primal code
c_star = star_map(gf7, c)
print("star image:", c_star, " in C*(2):", is_codeword(primal, c_star))
