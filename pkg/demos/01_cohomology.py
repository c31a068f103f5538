"""Cochains, coboundaries and H^n for the bundled fixtures."""

# %% modules
from isgcoh.fixtures import two_chain_module, z2_chain_module, z2_module
from isgcoh.tmodule_cohomology import (cochain_from_entries, coboundary, cohomology,
                                       is_strongly_normalized, normalize_cocycle)

z2, chain, z2c = z2_module(), two_chain_module(), z2_chain_module()
print(z2.T.names, z2.A.names)
print(chain.T.names, chain.A.names)

# %% H^3 over the group Z2 acting trivially on Z2
res = cohomology(z2, 3)
print(f"|Z^3| = {res.order_z}, |B^3| = {res.order_b}, |H^3| = {res.order_h}")

# %% the semilattice e > f has no third cohomology with these coefficients
print("|H^3(2-chain)| =", cohomology(chain, 3).order_h)

# %% on the product fixture the full C^3 is too big, so use order-preserving cochains
res = cohomology(z2c, 3, order_preserving=True)
print(f"|H^3_<=| = {res.order_h}")
for c in res.representatives:
    print("  ", c.entries())

# %% a cocycle that is not strongly normalized, and its normalization
c = cochain_from_entries(z2, 3, {(1, 1, 1): 1}) * coboundary(
    cochain_from_entries(z2, 2, {(0, 0): 1}))
print(c.entries(), is_strongly_normalized(c))
ct, d = normalize_cocycle(c)
print(ct.entries(), is_strongly_normalized(ct), ct / c == coboundary(d))
