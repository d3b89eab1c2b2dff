"""Degree-2 coefficients two ways: curve point counts and ideal counts.

Counting points on y^2 + y = x^3 - x over small prime fields gives the
a_p of a degree-2 L-function; counting Gaussian integers of each norm
gives the coefficients of the zeta function of Q(i).  Both expansions run
through the same Euler-product machinery.
"""

from lfuncdb.arith import ec_ap, make_curve, sieve_primes
from lfuncdb.lfunc import dedekind_quadratic, ec_lfunction, prime_race

# the conductor-37 curve of rank 1
curve = make_curve([0, 0, 1, -1, 0], 37)
print("y^2 + y = x^3 - x   (conductor 37, discriminant", curve.discriminant, ")")
print("\n p   kind                     a_p   Hasse bound 2*sqrt(p)")
for p in sieve_primes(40):
    red = ec_ap(curve, p)
    print(f"{p:3d}  {red.kind:24s} {red.ap:4d}   {2 * p ** 0.5:.2f}")

lf = ec_lfunction(curve, 50)
print("\nDirichlet coefficients a_1..a_20:")
print(" ", list(lf.coefficients[1:21]))

# Q(i): a_n counts ideals of norm n, i.e. lattice points on circles / 4
zk = dedekind_quadratic(-4, 50)
print("\nideal counts in Z[i] for n = 1..20:")
print(" ", list(zk.coefficients[1:21]))
print("(5 splits: two ideals of norm 5; 3 is inert: none of norm 3)")

# Dirichlet's theorem in action: primes split evenly between 1, 3 mod 4
for bound in (10**3, 10**4, 10**5, 10**6):
    counts = prime_race(4, bound)
    print(f"primes to {bound:>8}: {counts[1]:6d} are 1 mod 4, "
          f"{counts[3]:6d} are 3 mod 4")
