"""The cover S of T and the crossed module built from a cocycle."""

# %%
import random

from isgcoh.cover_construction import CocycleAction, CoverElement, NElement, build_cover, \
    build_extension_from_cocycle
from isgcoh.crossed_modules import Sampler, check_extension, induced_tmodule
from isgcoh.fixtures import z2_module
from isgcoh.free_words import word
from isgcoh.tmodule_cohomology import cochain_from_entries

M = z2_module()
T = M.T
S = build_cover(T)

# %% elements are (t, w) with t below the value of the reduced word w
g = T.index("g")
s = CoverElement(g, word(g))
print(S.render(s), S.render(S.mul(s, s)), S.render(S.mul(S.inv(s), s)))
rng = random.Random(0)
print([S.render(S.sample(rng, 3)) for _ in range(4)])

# %% the nontrivial class of H^3(Z2, Z2)
c = cochain_from_entries(M, 3, {(g, g, g): M.A.index("a")})
act = CocycleAction(M, c)
print("zeta_g([g][g]) =", M.A.names[act.zeta(g, word(g, g))])
# N holds (a, e, w) with e below the value of w
n = NElement(M.A.index("a"), T.index("1"), word(g, g))
print("lambda_(g,[g]) (a, 1, [g][g]) =", act.lambda_action(s, n))

# %% the extension 1 -> A -> N -> S -> T -> 1 and its axioms
ext = build_extension_from_cocycle(M, c)
ok, violations = check_extension(ext, Sampler(count=2000))
print("extension axioms:", ok)
print("induced module matches:", induced_tmodule(ext).same_structure(M))
