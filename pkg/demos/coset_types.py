"""Coset types, matchings and the products e_k(J_1, J_3, ...) P_n.

Run with ``python3 demos/coset_types.py``.
"""

from oddjm.group_algebra import coset_expansion, eval_symfunc_at_odd_jm, hyperoctahedral_sum
from oddjm.permutation import (
    canonical_matching,
    coset_type,
    enumerate_matchings,
    matching_to_permutation,
    parse_permutation,
)
from oddjm.symfunc import SymFunc

sigma = parse_permutation("5 1 4 10 3 9 7 6 2 8")
print("coset type of", " ".join(map(str, sigma)), "is", coset_type(sigma))

print("\nmatchings of {1..6} grouped by coset type against {1,2}{3,4}{5,6}:")
groups = {}
for m in enumerate_matchings(3):
    groups.setdefault(coset_type(matching_to_permutation(m)), []).append(str(m))
for rho, ms in sorted(groups.items()):
    print(f"  {rho}: {len(ms)} matchings, e.g. {ms[0]}")

print("\nreference matching of reduced type (2,1) inside {1..10}:", canonical_matching((2, 1), 5))

print("\nelementary functions at the odd JM elements, times P_n:")
for n in (2, 3, 4):
    P = hyperoctahedral_sum(n)
    for k in range(n):
        coeffs = coset_expansion(eval_symfunc_at_odd_jm(SymFunc.e(k), n) * P)
        print(f"  n={n} k={k}:", {str(mu) if mu else "(0)": c for mu, c in coeffs.items()})
