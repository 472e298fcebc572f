"""Reed-Solomon decoding through the dual-code key equation.

The locator and evaluator of a dual Reed-Solomon code are the two Bezout
coefficients of a truncated extended Euclidean run on ``x^n - 1`` and the
truncated syndrome. Dropping the remainders from that run gives the
Berlekamp-Massey algorithm.
"""

from .decode import (
    DecodeResult,
    Status,
    decode,
    decode_dual,
    decode_primal,
    find_error_positions,
    forney_dual,
    forney_primal,
)
from .euclid import (
    Branch,
    EuclidTrace,
    SolverState,
    ext_euclid,
    monic_euclid,
    stepwise_init,
    stepwise_run,
    stepwise_step,
)
from .gf import Field, make_field
from .keyeq import KeyEqSolution, solve_dual_bm, solve_dual_euclid, solve_primal_sugiyama
from .poly import MINUS_INF, Poly, monic_gcd
from .rs import (
    CodeSpec,
    Variant,
    encode,
    full_syndrome,
    generator_matrix,
    generator_poly,
    is_codeword,
    locator_evaluator,
    parity_matrix,
    star_inv,
    star_map,
    syndrome_dual,
    syndrome_primal,
)

__version__ = "0.1.0"
