"""A walk along the critical line.

Evaluate zeta on Re(s) = 1/2, rotate it into the real function Z(t), scan
for sign changes, and save a plot of the first few zeros.
"""

import numpy as np

from lfuncdb.lfunc import (
    critical_line_samples,
    find_zeros,
    riemann_zeta_lfunction,
    z_function,
    zero_count_estimate,
    zeta_em,
)

zeta = riemann_zeta_lfunction(50)

# Z(0) is just zeta(1/2): the rotation vanishes at t = 0
print("zeta(1/2)  =", zeta_em(0.5).real)
print("Z(0)       =", z_function(zeta, 0.0))

# |Z(t)| always equals |zeta(1/2 + it)|; the phase only makes it real
for t in (5.0, 14.0, 21.0):
    print(f"|Z({t})| - |zeta(1/2+{t}i)| =",
          abs(z_function(zeta, t)) - abs(zeta_em(0.5 + 1j * t)))

# scan the first 100 units of the line
zeros = find_zeros(zeta, 0, 100, step=0.05)
print(f"\nfound {len(zeros.ordinates)} zeros up to height 100:")
for t in zeros.ordinates[:10]:
    print(f"  t = {t:.8f}   |zeta(1/2+it)| = {abs(zeta_em(0.5 + 1j * t)):.2e}")
print("  ...")

# the smooth counting estimate should agree within one zero
for ceiling in (30, 50, 100):
    found = sum(1 for t in zeros.ordinates if t <= ceiling)
    print(f"N({ceiling}) found = {found},  estimate = "
          f"{zero_count_estimate(zeta, ceiling):.2f}")

# plot data: this is exactly what the /api/L/Riemann homepage serves
samples = critical_line_samples(zeta, 50, 1200)
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ts = [t for t, _ in samples]
    zs = [z for _, z in samples]
    plt.figure(figsize=(10, 4))
    plt.plot(ts, zs, lw=0.8)
    plt.axhline(0, color="k", lw=0.5)
    inside = [t for t in zeros.ordinates if t <= 50]
    plt.plot(inside, np.zeros(len(inside)), "r.", ms=8)
    plt.xlabel("t")
    plt.ylabel("Z(t)")
    plt.title("zeta on the critical line, zeros marked")
    plt.tight_layout()
    plt.savefig("critical_line.png", dpi=120)
    print("\nwrote critical_line.png")
except ImportError:
    print("\nmatplotlib not installed; skipped the plot")
