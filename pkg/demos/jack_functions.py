"""Jack functions, the Jack-Plancherel measure, characters and zonal spherical values."""

from fractions import Fraction

from oddjm.jack import character, jack_function, jack_plancherel, jack_table, zonal_spherical
from oddjm.partition import partitions

print("power-sum coefficients of J_lam at alpha = 2, n = 3:")
print(jack_table(3, 2).tsv())

print("\nJ_(2,1) at alpha = 1/2:", jack_function((2, 1), Fraction(1, 2)))

print("\nJack-Plancherel measure for n = 4 at alpha = 2 (sums to 1):")
total = 0
for lam in partitions(4):
    p = jack_plancherel(lam, 2)
    total += p
    print(f"  {lam}\t{p}")
print("  total", total)

print("\ncharacter table of S_4 (rows lam, columns rho):")
for lam in partitions(4):
    print(" ", lam, [character(lam, rho) for rho in partitions(4)])

print("\nzonal spherical values omega^lam on coset types, n = 3:")
for lam in partitions(3):
    print(" ", lam, [str(zonal_spherical(lam, rho)) for rho in partitions(3)])
