from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from isgcoh.errors import (BudgetExceeded, DegreeOutOfRange, NotOrderPreservingCocycle,
                           ParseError, ValidationError, WitnessMismatch)
from isgcoh.fixtures import Z2_TABLE, two_chain
from isgcoh.semigroup_core import cyclic_group
from isgcoh.tmodule_cohomology import (Cochain, build_tmodule, coboundary, cochain_from_entries,
                                       cochain_from_json, cochain_space, cocycle_values,
                                       cohomology, enumerate_cochains, find_cohomologous_witness,
                                       is_cocycle, is_normalized, is_order_preserving,
                                       is_strongly_normalized, module_from_json,
                                       normalize_cocycle, normalized_degree3_criterion,
                                       strongly_normalize_witness, trivial_cochain,
                                       validate_cochain, validate_tmodule)


def as_dict(c):
    T = c.module.T
    return {xs: c(*xs) for xs in product(T.elements(), repeat=c.degree)}


def z3_le(M):
    return [Cochain(M, 3, v) for v in cocycle_values(M, 3, True)]


def random_cochain(M, n, seed):
    rng = np.random.default_rng(seed)
    T, A = M.T, M.A
    vals = {}
    for xs in product(T.elements(), repeat=n):
        comp = A.members[M.th_r(T.product(*xs))]
        vals[xs] = comp[rng.integers(len(comp))]
    return cochain_from_entries(M, n, vals)


# -- modules -----------------------------------------------------------------

def test_fixture_modules_are_valid(any_mod):
    ok, vs = validate_tmodule(any_mod)
    assert ok, vs


def test_trivial_module_over_a_group():
    G = cyclic_group(3)
    M = build_tmodule(G, {0: (["0"], [[0]])}, {0: "0"}, {t: {"0": "0"} for t in G.elements()})
    assert validate_tmodule(M)[0]


def test_tm1_violation_has_witness():
    T = two_chain()
    e, f = T.index("e"), T.index("f")
    comps = {e: (["0e", "a"], Z2_TABLE), f: (["0f"], [[0]])}
    transport = {(e, f): {"0e": "0f", "a": "0f"}}
    eta = {e: {"0e": "0e", "a": "a", "0f": "0f"},
           f: {"0e": "0e", "a": "a", "0f": "0f"}}  # eta_f should kill A_e
    M = build_tmodule(T, comps, {e: "0e", f: "0f"}, eta, transport)
    ok, vs = validate_tmodule(M)
    assert not ok
    assert any(v.axiom == "TM1" and v.witness == ("f", "a") for v in vs)


def test_eta_leaving_its_component_without_transport():
    T = two_chain()
    e, f = T.index("e"), T.index("f")
    comps = {e: (["0e", "a"], Z2_TABLE), f: (["0f"], [[0]])}
    eta = {t: {"0e": "0e", "a": "a", "0f": "0f"} for t in (e, f)}
    with pytest.raises(ValidationError) as exc:
        build_tmodule(T, comps, {e: "0e", f: "0f"}, eta)
    assert exc.value.violations[0].axiom == "TM1"


def test_module_json_roundtrip(any_mod):
    M2 = module_from_json(any_mod.T, any_mod.to_json())
    assert M2.same_structure(any_mod)


def test_module_json_malformed(z2_mod):
    with pytest.raises(ParseError):
        module_from_json(z2_mod.T, {"theta": {}})


# -- cochains and coboundary -------------------------------------------------

def test_cochain_json_and_defaults(z2_mod):
    c = cochain_from_json(z2_mod, {"degree": 3, "entries": {"g,g,g": "a"}})
    assert c.to_json() == {"degree": 3, "entries": {"g,g,g": "a"}}
    assert c(0, 0, 0) == z2_mod.th(0)
    with pytest.raises(ParseError):
        cochain_from_json(z2_mod, {"degree": 2, "entries": {"g": "a"}})
    with pytest.raises(DegreeOutOfRange):
        cochain_from_json(z2_mod, {"degree": 0})


def test_component_violation_is_reported(chain_mod):
    T, A = chain_mod.T, chain_mod.A
    f = T.index("f")
    c = cochain_from_entries(chain_mod, 2, {(f, f): A.index("a")})
    ok, vs = validate_cochain(c)
    assert not ok and vs[0].witness == ("f", "f")


def test_coboundary_of_trivial_is_trivial(any_mod):
    for n in (1, 2, 3):
        assert coboundary(trivial_cochain(any_mod, n)).is_trivial()


def test_coboundary_matches_loop_oracle(any_mod):
    for n in (1, 2, 3):
        for seed in range(5):
            f = random_cochain(any_mod, n, seed)
            assert as_dict(coboundary(f)) == oracles.coboundary(any_mod, as_dict(f), n)


def test_z2_coboundary_of_single_entry(z2_mod):
    g = 1
    d = cochain_from_entries(z2_mod, 2, {(g, g): 1})
    dd = coboundary(d)
    for xs in product((0, 1), repeat=3):
        x, y, z = xs
        # terms d(y,z), d(xy,z), d(x,yz), d(x,y): count how many are (g,g)
        pairs = [(y, z), (x ^ y, z), (x, y ^ z), (x, y)]
        odd = sum(p == (g, g) for p in pairs) % 2
        assert dd(*xs) == (1 if odd else 0)


def test_complex_property_exhaustive():
    from isgcoh.fixtures import two_chain_module, z2_module
    for M in (z2_module(), two_chain_module()):
        for n in (1, 2, 3):
            space = cochain_space(M, n)
            if space.bound > 2 ** 16:
                continue
            for f in enumerate_cochains(M, n):
                assert coboundary(coboundary(f)).is_trivial()


def test_complex_property_sampled(z2_chain_mod):
    for n in (1, 2, 3):
        for seed in range(10):
            f = random_cochain(z2_chain_mod, n, seed)
            assert coboundary(coboundary(f)).is_trivial()


def test_coboundary_output_respects_components(any_mod):
    for n in (1, 2):
        for seed in range(5):
            assert validate_cochain(coboundary(random_cochain(any_mod, n, seed)))[0]


def test_coboundary_preserves_order_preserving(any_mod):
    for n in (1, 2):
        for f in enumerate_cochains(any_mod, n, order_preserving=True):
            assert is_order_preserving(coboundary(f))


@given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
def test_cochains_form_an_abelian_group(s1, s2):
    from isgcoh.fixtures import z2_chain_module
    M = z2_chain_module()
    f, g = random_cochain(M, 2, s1), random_cochain(M, 2, s2)
    assert validate_cochain(f * g)[0] and validate_cochain(f.inverse())[0]
    assert f * g == g * f
    assert (f / f).is_trivial()
    assert coboundary(f * g) == coboundary(f) * coboundary(g)


# -- cohomology --------------------------------------------------------------

def test_cohomology_oracles(z2_mod, chain_mod):
    assert cohomology(z2_mod, 3).order_h == 2
    assert cohomology(z2_mod, 3).order_h == oracles.cyclic_group_cohomology_order(2, 2, 3)
    assert cohomology(chain_mod, 3).order_h == 1
    for M in (z2_mod, chain_mod):
        for n in (2, 3):
            for op in (False, True):
                r = cohomology(M, n, op)
                assert (r.order_z, r.order_b, r.order_h) == oracles.cohomology_orders(M, n, op)


def test_order_preserving_variant_equals_full_on_a_group(z2_mod):
    for n in (1, 2, 3):
        a, b = cohomology(z2_mod, n), cohomology(z2_mod, n, True)
        assert (a.order_z, a.order_b, a.order_h) == (b.order_z, b.order_b, b.order_h)


def test_z_is_a_union_of_b_cosets(any_mod):
    for n in (2, 3):
        try:
            r = cohomology(any_mod, n, True)
        except BudgetExceeded:
            continue
        assert r.order_z % r.order_b == 0


def test_degree_one_has_no_coboundaries(z2_mod):
    r = cohomology(z2_mod, 1)
    assert r.order_b is None and r.order_h == r.order_z == 2 and r.note


def test_budget_is_enforced(z2_chain_mod):
    with pytest.raises(BudgetExceeded) as exc:
        cohomology(z2_chain_mod, 3)
    assert exc.value.size == 2 ** 64


def test_representatives_are_cocycles_in_distinct_classes(z2_mod):
    r = cohomology(z2_mod, 3)
    for c in r.representatives:
        assert is_cocycle(c)
    a, b = r.representatives
    assert find_cohomologous_witness(a, b, order_preserving=False) is None


# -- order-preserving and normalized ----------------------------------------

def test_order_preserving_examples(z2_mod, chain_mod):
    assert is_order_preserving(trivial_cochain(chain_mod, 2))
    for seed in range(5):
        assert is_order_preserving(random_cochain(z2_mod, 2, seed))
    T, A = chain_mod.T, chain_mod.A
    u = cochain_from_entries(chain_mod, 1, {T.index("e"): A.index("a")})
    assert A.op(A.index("a"), chain_mod.th(T.index("f"))) == chain_mod.th(T.index("f"))
    assert is_order_preserving(u)


def test_order_preserving_matches_definition(any_mod):
    for n in (1, 2):
        for seed in range(8):
            f = random_cochain(any_mod, n, seed)
            assert is_order_preserving(f) == oracles.order_preserving(any_mod, as_dict(f), n)


def test_normalization_examples(z2_mod):
    triv = trivial_cochain(z2_mod, 3)
    assert is_normalized(triv) and is_strongly_normalized(triv)
    c = cochain_from_entries(z2_mod, 3, {(1, 1, 1): 1})
    assert is_normalized(c) and is_strongly_normalized(c)


def test_strongly_normalized_iff_normalized_and_order_preserving(any_mod):
    try:
        Z = [Cochain(any_mod, 3, v) for v in cocycle_values(any_mod, 3)]
    except BudgetExceeded:
        Z = z3_le(any_mod)
    for c in Z:
        strong = is_strongly_normalized(c)
        assert strong == (is_normalized(c) and is_order_preserving(c))
        if is_order_preserving(c):
            assert is_normalized(c) == normalized_degree3_criterion(c)


def test_order_preserving_cocycles_are_trivial_at_idempotent_ends(any_mod):
    T, M = any_mod.T, any_mod
    for c in z3_le(any_mod):
        for e, t, f in product(T.idempotents, T.elements(), T.idempotents):
            assert c(e, t, f) == M.th(T.product(e, t, f, T.inverse(t)))


def test_normalize_cocycle(any_mod):
    for c in z3_le(any_mod):
        ct, d = normalize_cocycle(c)
        assert is_normalized(ct) and is_order_preserving(ct)
        assert ct / c == coboundary(d)
        if is_strongly_normalized(c):
            assert ct == c


def test_normalize_trivial_and_z2(z2_mod):
    ct, d = normalize_cocycle(trivial_cochain(z2_mod, 3))
    assert ct.is_trivial() and d.is_trivial()
    c = cochain_from_entries(z2_mod, 3, {(1, 1, 1): 1})
    ct, d = normalize_cocycle(c)
    assert ct == c and d.is_trivial()


def test_normalize_rejects_non_cocycles(z2_mod):
    with pytest.raises(NotOrderPreservingCocycle):
        normalize_cocycle(cochain_from_entries(z2_mod, 3, {(0, 1, 1): 1}))


def test_strongly_normalize_witness_examples(z2_mod):
    triv = trivial_cochain(z2_mod, 2)
    assert strongly_normalize_witness(trivial_cochain(z2_mod, 3), triv).is_trivial()
    d = cochain_from_entries(z2_mod, 2, {(1, 1): 1})
    c = coboundary(d)
    assert is_normalized(c)
    dt = strongly_normalize_witness(c, d)
    assert coboundary(dt) == c
    assert dt(0, 1) == dt(1, 0) == dt(0, 0) == 0
    # d(g, g) = a is a 2-cocycle over Z2, so pair a non-cocycle with the trivial target
    assert coboundary(d).is_trivial()
    bad = cochain_from_entries(z2_mod, 2, {(0, 1): 1})
    with pytest.raises(WitnessMismatch):
        strongly_normalize_witness(trivial_cochain(z2_mod, 3), bad)


def test_strongly_normalize_witness_over_a_group():
    G = cyclic_group(4)
    M = build_tmodule(G, {0: (["0", "1"], Z2_TABLE)}, {0: "0"},
                      {t: {"0": "0", "1": "1"} for t in G.elements()})
    for seed in range(6):
        d = random_cochain(M, 2, seed)
        c = coboundary(d)
        if not is_normalized(c):
            continue
        dt = strongly_normalize_witness(c, d)
        assert all(dt(0, t) == 0 and dt(t, 0) == 0 for t in G.elements())


def test_cohomologous_witness_routes(any_mod):
    Z = z3_le(any_mod)
    for c in Z[:6]:
        for c2 in Z[:6]:
            w = find_cohomologous_witness(c, c2)
            if w is not None:
                assert coboundary(w.d) * c2 == c
                assert is_order_preserving(w.d)
