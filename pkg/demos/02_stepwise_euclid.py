"""
The step-wise extended Euclidean algorithm
==========================================

Every quotient of Euclid's algorithm is split into one elementary update
per coefficient. Two counters drive the run: ``d`` (a bound on deg R) and
``dt`` (the degree of the monic row Rt). Every state satisfies a fixed
list of identities, and the run ends with the monic gcd.
"""

from dualrs import Poly, make_field, monic_gcd, stepwise_run
from dualrs.checks import stepwise_invariant_violations

gf7 = make_field(7, 1, alpha=3)
a = Poly.x_n_minus_1(gf7, 6)          # x^6 - 1, monic
b = Poly(gf7, [2, 0, 1, 5, 3])        # anything of lower degree

run = stepwise_run(a, b, trace=True)
print(f"{'i':>2} {'branch':>6} {'mu':>2} {'d':>3} {'dt':>3}  F")
for s, mu, br in zip(run.states, run.mus, run.branches):
    print(f"{s.iter:>2} {br.value:>6} {mu:>2} {s.d:>3} {s.dt:>3}  {s.F}")

final = run.final
print("final Rt:", final.Rt, " monic gcd:", monic_gcd(a, b))
print("F*b + G*a =", final.F * b + final.G * a)

violations = [v for s in run.states for v in stepwise_invariant_violations(s, a, b)]
print("invariant violations over the whole run:", violations or "none")
