"""Dirichlet characters: exact values, Gauss sums, and their L-functions.

All character arithmetic is exact (roots of unity as rational turns), so
multiplicativity and orthogonality hold on the nose, not up to epsilon.
"""

import math

from lfuncdb.arith import char_eval, character_group, conductor_of, gauss_sum
from lfuncdb.labels import character_label
from lfuncdb.lfunc import character_lfunction, dirichlet_L, find_zeros

# the four characters mod 5
for chi in character_group(5):
    label = character_label(chi)
    values = [char_eval(chi, n) for n in range(1, 6)]
    shown = ", ".join("0" if v == 0 else v.display() for v in values)
    print(f"chi_{label.modulus}.{label.index}: order {chi.order}, "
          f"parity {'even' if chi.parity == 0 else 'odd'},  "
          f"chi(1..5) = {shown}")

# conductors: the mod-8 lift of the mod-4 character still has conductor 4
lifted = next(c for c in character_group(8) if c.order == 2 and c.conductor == 4)
f, primitive = conductor_of(lifted)
print(f"\nmod-8 character with exponents {lifted.exponents} is induced from "
      f"modulus {f} (exponents {primitive.exponents})")

# Gauss sums of primitive characters have |tau|^2 = N exactly
print("\nGauss sums:")
for n in (3, 4, 5, 7, 8):
    for chi in character_group(n):
        if chi.primitive:
            tau = gauss_sum(chi)
            print(f"  N={n} j={character_label(chi).index}: "
                  f"|tau|^2 = {abs(tau) ** 2:.12f}")

# the alternating character mod 4 gives Leibniz's series at s = 1
chi4 = next(c for c in character_group(4) if c.order == 2)
print(f"\nL(1, chi_4) = {dirichlet_L(chi4, 1).real:.12f}")
print(f"pi/4        = {math.pi / 4:.12f}")

# its first critical-line zero sits near t = 6.02
lf = character_lfunction(chi4, 50)
zeros = find_zeros(lf, 0, 15, 0.05)
print(f"\nfirst zeros of L(s, chi_4): "
      f"{', '.join(f'{t:.6f}' for t in zeros.ordinates)}")
