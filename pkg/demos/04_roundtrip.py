"""End to end: cocycle -> extension -> cocycle, with both equivalence witnesses."""

# %%
from isgcoh.correspondence import theorem_harness
from isgcoh.crossed_modules import Sampler
from isgcoh.fixtures import z2_chain_module
from isgcoh.tmodule_cohomology import cohomology

M = z2_chain_module()
sampler = Sampler(count=2000, seed=1)

# %% one report per cohomology class
for c in cohomology(M, 3, True).representatives:
    rep = theorem_harness(M, c, sampler)
    print(c.entries() or "trivial class")
    for stage in rep.stages:
        print(f"  {'ok  ' if stage.ok else 'FAIL'} {stage.name}")
    print("  witness route:", rep.witnesses["cohomology_d"]["route"])

# %% reports serialize deterministically
print(rep.dumps()[:300])
