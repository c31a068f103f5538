"""Small instances used by the tests, the demos and the CLI examples."""

from .semigroup_core import (FiniteInverseSemigroup, chain_semilattice, cyclic_group,
                             direct_product)
from .tmodule_cohomology import TModule, build_tmodule

Z2_TABLE = [[0, 1], [1, 0]]


def z2() -> FiniteInverseSemigroup:
    return cyclic_group(2, ["1", "g"])


def two_chain() -> FiniteInverseSemigroup:
    """The semilattice e > f."""
    return chain_semilattice(["e", "f"])


def z2_chain() -> FiniteInverseSemigroup:
    """Z2 x {e > f}; elements 1e, 1f, ge, gf. An F-inverse Clifford monoid."""
    return direct_product(z2(), two_chain(), sep="")


def range_action_module(T: FiniteInverseSemigroup, components: dict, transport: dict) -> TModule:
    """Module with eta_t(a) = theta(r(t)) a; a T-module whenever T is Clifford.

    components: T-idempotent id -> (names, table); transport: (e, f) -> name map.
    """
    names = {e: comps[0] for e, comps in components.items()}
    theta = {e: names[e][0] for e in components}
    dummy = {t: {a: a for e in components for a in names[e]} for t in T.elements()}
    base = build_tmodule(T, components, theta, dummy, transport)
    A = base.A
    eta = {t: {A.names[a]: A.names[A.op(base.th_r(t), a)] for a in range(A.size)}
           for t in T.elements()}
    return build_tmodule(T, components, theta, eta, transport)


def z2_module() -> TModule:
    """Z2 acting trivially on Z2 = {0, a}."""
    T = z2()
    return build_tmodule(T, {0: (["0", "a"], Z2_TABLE)}, {0: "0"},
                         {t: {"0": "0", "a": "a"} for t in T.elements()})


def two_chain_module() -> TModule:
    """A_e = Z2 = {0e, a}, A_f trivial = {0f}; eta_t(x) = theta(t) x."""
    T = two_chain()
    e, f = T.index("e"), T.index("f")
    return range_action_module(
        T, {e: (["0e", "a"], Z2_TABLE), f: (["0f"], [[0]])},
        {(e, f): {"0e": "0f", "a": "0f"}})


def z2_chain_module() -> TModule:
    """A_{1e} = {0e, a}, A_{1f} = {0f, b}, a restricts to b; eta_t(x) = theta(r(t)) x."""
    T = z2_chain()
    e, f = T.index("1e"), T.index("1f")
    return range_action_module(
        T, {e: (["0e", "a"], Z2_TABLE), f: (["0f", "b"], Z2_TABLE)},
        {(e, f): {"0e": "0f", "a": "b"}})
