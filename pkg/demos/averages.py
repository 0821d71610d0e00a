"""Averages of symmetric functions of contents, as polynomials in n.

At alpha = 1 these are class-sum coefficients of F(J_1, ..., J_n); at
alpha = 2 they are double-coset coefficients of F(J_1, J_3, ..., J_{2n-1}) P_n.
"""

from fractions import Fraction

from oddjm.averages import average_poly
from oddjm.group_algebra import eval_symfunc_at_odd_jm, m_coefficients_fast
from oddjm.partition import Partition
from oddjm.symfunc import parse

h3 = parse("h[3]")
print("h_3 at alpha = 2, coefficient of each psi_mu as a polynomial in n:")
for mu in [(3,), (2, 1), (1, 1, 1), (2,), (1, 1), (1,), ()]:
    print(f"  mu={Partition(mu)}:\t{average_poly(h3, mu, 2)}")

print("\nthe same coefficients read off the group algebra at n = 4:")
for mu, c in m_coefficients_fast(eval_symfunc_at_odd_jm(h3, 4)).items():
    print(f"  mu={mu}:\t{c}")

print("\nm_(2,1) on mu = (1) for several alphas:")
for alpha in (Fraction(1, 2), 1, 2, 3):
    print(f"  alpha={alpha}:\t{average_poly(parse('m[2,1]'), (1,), alpha)}")
