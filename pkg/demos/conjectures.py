"""Numerical evidence for four open questions about the alpha = 2 averages."""

from oddjm import conjectures as conj
from oddjm.symfunc import SymFunc

for n in (2, 3, 4):
    obs = conj.hecke_generation_rank(n)
    print(obs.label, "holds" if obs.holds else "FAILS", "-", obs.detail)

print()
for k in range(5):
    obs = conj.area_of_catalan_paths(k)
    print(obs.label, "holds" if obs.holds else "FAILS", "-", obs.detail)

print()
bad = [o for k in range(1, 4) for o in conj.alpha_independence(k) if not o.holds]
print("top-degree averages independent of n and alpha for k <= 3:", not bad)
bad = [o for k in range(1, 4) for o in conj.n_independence(SymFunc.h(k)) if not o.holds]
print("h_k one step below top degree independent of n for k <= 3:", not bad)
