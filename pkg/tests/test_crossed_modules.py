import pytest

from isgcoh.cover_construction import CoverElement, build_extension_from_cocycle
from isgcoh.crossed_modules import (CrossedSModule, EquivalenceWitness, Sampler,
                                    check_admissible, check_crossed_module,
                                    check_equivalence_witness, check_extension,
                                    finite_extension, identity_witness, induced_tmodule,
                                    kernel_system_crossed_module, module_as_extension)
from isgcoh.errors import NotTransversal
from isgcoh.extension_to_cocycle import canonical_cover_transversals
from isgcoh.free_words import Letter
from isgcoh.semigroup_core import GroupKernelNormalSystem, cyclic_group, symmetric_inverse_monoid
from isgcoh.tmodule_cohomology import build_tmodule, cochain_from_entries, validate_tmodule

SMALL = Sampler(count=1500)


def axioms(vs):
    return {v.axiom for v in vs}


def test_module_as_crossed_module(any_mod):
    ext = module_as_extension(any_mod)
    assert check_crossed_module(ext.crossed)[0]
    ok, vs = check_extension(ext)
    assert ok, vs
    assert induced_tmodule(ext).same_structure(any_mod)


def test_kernel_system_crossed_modules():
    S = symmetric_inverse_monoid(2)
    cm = kernel_system_crossed_module(GroupKernelNormalSystem(S, frozenset(S.idempotents)))
    assert check_crossed_module(cm)[0]
    Z4 = cyclic_group(4)
    cm = kernel_system_crossed_module(GroupKernelNormalSystem(Z4, frozenset({0, 2})))
    assert check_crossed_module(cm)[0]


def test_corrupted_lambda_breaks_cm3(z2_mod):
    ext = module_as_extension(z2_mod)
    cm = ext.crossed
    a = z2_mod.A.index("a")

    def bad(s, n):
        return z2_mod.A.index("0") if (s, n) == (1, a) else cm.lam(s, n)

    ok, vs = check_crossed_module(CrossedSModule(cm.S, cm.N, cm.alpha, bad, cm.beta))
    assert not ok
    assert "CM3" in axioms(vs) or "lambda-homomorphism" in axioms(vs)
    assert all(v.witness for v in vs if v.axiom == "CM3")


def test_violation_json(z2_mod):
    ext = module_as_extension(z2_mod)
    cm = ext.crossed
    ok, vs = check_crossed_module(CrossedSModule(cm.S, cm.N, cm.alpha,
                                                 lambda s, n: 0, cm.beta))
    js = vs[0].to_json()
    assert set(js) == {"axiom", "witness"} and all(isinstance(w, str) for w in js["witness"])


def test_non_injective_i_is_cme2(z2_mod):
    A = z2_mod.A
    T = z2_mod.T
    good = module_as_extension(z2_mod)
    ext = finite_extension(A, A.carrier, T, T, [0, 0], [0, 0], [0, 1],
                           {0: 0}, [[n for n in range(A.size)] for _ in T.elements()])
    ok, vs = check_extension(ext)
    assert not ok and "CME2-i-injective" in axioms(vs)
    assert check_extension(good)[0]


def test_beta_image_too_small_is_cme3():
    Z4, Z2 = cyclic_group(4), cyclic_group(2)
    M = build_tmodule(Z2, {0: (["0"], [[0]])}, {0: "0"}, {t: {"0": "0"} for t in Z2.elements()})
    N = M.A.carrier
    ext = finite_extension(M.A, N, Z4, Z2, [0], [0], [0, 1, 0, 1], {0: 0},
                           [[0] for _ in Z4.elements()])
    ok, vs = check_extension(ext)
    assert not ok and "CME3-pi-fibre-in-beta(N)" in axioms(vs)


def test_identity_and_perturbed_witness(z2_chain_mod):
    ext = module_as_extension(z2_chain_mod)
    assert check_equivalence_witness(ext, ext, identity_witness())[0]
    T = z2_chain_mod.T
    ge, gf = T.index("ge"), T.index("gf")
    bad = EquivalenceWitness(lambda n: n, lambda s: gf if s == ge else s)
    ok, vs = check_equivalence_witness(ext, ext, bad)
    assert not ok and "CMEE1-pi" in axioms(vs)


def test_kernel_elements_are_central(z2_mod):
    c = cochain_from_entries(z2_mod, 3, {(1, 1, 1): 1})
    ext = build_extension_from_cocycle(z2_mod, c)
    ok, vs = check_crossed_module(ext.crossed, SMALL)
    assert ok and "kernel-central" not in axioms(vs)


def test_induced_module_is_valid_and_preimage_independent(z2_chain_mod):
    c = cochain_from_entries(z2_chain_mod, 3, {})
    ext = build_extension_from_cocycle(z2_chain_mod, c)
    M = induced_tmodule(ext, preimage_count=12)
    assert validate_tmodule(M)[0]
    assert M.same_structure(z2_chain_mod)


def test_admissible_f_inverse_cover(z2_chain_mod):
    c = cochain_from_entries(z2_chain_mod, 3, {})
    ext = build_extension_from_cocycle(z2_chain_mod, c)
    tr = canonical_cover_transversals(z2_chain_mod.T, z2_chain_mod, "f_inverse")
    rep = check_admissible(ext, tr.rho, tr.sigma, SMALL)
    assert rep.ok, rep.violations


def test_plain_transversal_over_a_chain_is_not_order_preserving(chain_mod):
    c = cochain_from_entries(chain_mod, 3, {})
    ext = build_extension_from_cocycle(chain_mod, c)
    T = chain_mod.T
    e, f = T.index("e"), T.index("f")

    def rho(t):
        return CoverElement(t, ()) if t == e else CoverElement(t, (Letter(t, 1),))

    tr = canonical_cover_transversals(T, chain_mod, "plain")
    rep = check_admissible(ext, rho, tr.sigma, SMALL)
    assert not rep.ok
    assert any(v.axiom == "rho-order-preserving" and v.witness == ("f", "e") for v in rep.violations)
    S = ext.S
    assert not S.leq(tr.rho(f), tr.rho(e))


def test_not_a_transversal(z2_mod):
    c = cochain_from_entries(z2_mod, 3, {})
    ext = build_extension_from_cocycle(z2_mod, c)
    tr = canonical_cover_transversals(z2_mod.T, z2_mod, "plain")
    with pytest.raises(NotTransversal):
        check_admissible(ext, lambda t: CoverElement(0, ()), tr.sigma, SMALL)


def test_rho_inverse_remark_fails_on_the_cover(z2_mod):
    """rho(g^-1) = (g, [g]) but rho(g)^-1 = (g, [g]^-1); recorded as a remark only."""
    c = cochain_from_entries(z2_mod, 3, {})
    ext = build_extension_from_cocycle(z2_mod, c)
    tr = canonical_cover_transversals(z2_mod.T, z2_mod, "f_inverse")
    rep = check_admissible(ext, tr.rho, tr.sigma, SMALL)
    assert rep.ok
    assert {r.axiom for r in rep.remarks} == {"rho(x^-1)=rho(x)^-1", "rho(t)rho(t^-1)=rho(tt^-1)"}
