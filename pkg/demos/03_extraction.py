"""Reading a cocycle back off an extension through a pair of transversals."""

# %%
from isgcoh.cover_construction import build_extension_from_cocycle
from isgcoh.crossed_modules import Sampler, check_admissible
from isgcoh.extension_to_cocycle import canonical_cover_transversals, extract_cocycle, factor_data
from isgcoh.fixtures import z2_chain_module
from isgcoh.tmodule_cohomology import cohomology, normalize_cocycle

M = z2_chain_module()
T = M.T
c = normalize_cocycle(cohomology(M, 3, True).representatives[-1])[0]
ext = build_extension_from_cocycle(M, c)

# %% plain transversal rho(t) = (t, [t]); the factor set and its lift
tr = canonical_cover_transversals(T, M, "plain")
data = factor_data(ext, tr.rho, tr.sigma)
for (x, y), f in list(data.f.items())[:4]:
    print(T.names[x], T.names[y], ext.S.render(f))
print("recovered:", extract_cocycle(ext, tr.rho, tr.sigma) == c)

# %% the F-inverse transversal sends t to (t, [max t]) and idempotents to (e, eps)
fi = canonical_cover_transversals(T, M, "f_inverse")
print([ext.S.render(fi.rho(t)) for t in T.elements()])
report = check_admissible(ext, fi.rho, fi.sigma, Sampler(count=2000))
print("admissible:", report.ok)
print("remarks:", sorted({r.axiom for r in report.remarks}))
print("recovered:", extract_cocycle(ext, fi.rho, fi.sigma) == c)
