"""Orthogonal Weingarten function: exact values, large-N expansion, integrals, Monte Carlo."""

from oddjm.haar_mc import mc_moment
from oddjm.partition import Partition
from oddjm.weingarten import integrate_monomial, wg_exact, wg_series

print("Wg for n = 3, N = 7, by reduced coset type:")
print(wg_exact(3, 7).tsv())

print("\nlarge-N expansions:")
for n, mu in [(3, ()), (4, (1,)), (4, (2,)), (4, (1, 1)), (4, (3,))]:
    print(f"  Wg({Partition(mu)};{n}) =", wg_series(n, mu, 5))

print("\nexact integrals against Monte Carlo (10^5 samples):")
for i, j, N in [((1, 1), (1, 1), 4), ((1, 1, 2, 2), (1, 1, 2, 2), 4), ((1, 1, 1, 1), (1, 1, 2, 2), 6)]:
    exact = integrate_monomial(i, j, N)
    mean, err = mc_moment(i, j, N, 100_000, seed=1)
    print(f"  i={i} j={j} N={N}: exact {exact} = {float(exact):.6f}, MC {mean:.6f} +- {err:.6f}")
