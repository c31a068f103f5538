"""
Crossed S-modules, crossed module extensions and their equivalences.

Finite tables and the symbolic cover share one axiom checker through the
`Carrier` interface.  Checkers never raise on an axiom failure: they return
`(ok, violations)` with one witness per failing axiom.
"""

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Optional

from .errors import NotTransversal, PreimageUnavailable, ValidationError, Violation
from .semigroup_core import FiniteInverseSemigroup, GroupKernelNormalSystem
from .tmodule_cohomology import SemilatticeOfAbelianGroups, TModule


class Carrier:
    """An inverse semigroup we can multiply in, invert in and sample from."""

    finite = False

    def mul(self, x, y):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def idempotents(self) -> list:
        raise NotImplementedError

    def sample(self, rng: random.Random, max_len: int):
        raise NotImplementedError

    def elements(self) -> Optional[list]:
        return None

    def render(self, x) -> str:
        return str(x)

    def is_idempotent(self, x) -> bool:
        return self.mul(x, x) == x

    def leq(self, x, y) -> bool:
        return self.mul(self.mul(x, self.inv(x)), y) == x

    def prod(self, *xs):
        acc = xs[0]
        for x in xs[1:]:
            acc = self.mul(acc, x)
        return acc


class FiniteCarrier(Carrier):
    finite = True

    def __init__(self, S: FiniteInverseSemigroup):
        self.S = S

    def mul(self, x, y):
        return self.S.op(x, y)

    def inv(self, x):
        return self.S.inverse(x)

    def contains(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < self.S.size

    def idempotents(self) -> list:
        return list(self.S.idempotents)

    def sample(self, rng, max_len):
        return rng.randrange(self.S.size)

    def elements(self):
        return list(self.S.elements())

    def render(self, x) -> str:
        return self.S.names[x]

    def is_idempotent(self, x) -> bool:
        return self.S.is_idempotent(x)

    def leq(self, x, y) -> bool:
        return self.S.leq(x, y)


class SubsetCarrier(FiniteCarrier):
    """An inverse subsemigroup of a finite table, given by its elements."""

    def __init__(self, S: FiniteInverseSemigroup, members):
        super().__init__(S)
        self.members = sorted(members)
        self._set = frozenset(self.members)

    def contains(self, x) -> bool:
        return x in self._set

    def idempotents(self) -> list:
        return [e for e in self.members if self.S.is_idempotent(e)]

    def sample(self, rng, max_len):
        return rng.choice(self.members)

    def elements(self):
        return list(self.members)


@dataclass
class Sampler:
    """Seeded source of test points; exhaustive when the carriers are small enough."""

    count: int = 10_000
    seed: int = 0
    max_word_len: int = 3

    def rng(self, salt: str = "") -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


def _draw(carrier: Carrier, rng, sampler: Sampler):
    return carrier.sample(rng, sampler.max_word_len)


def _tuples(sampler: Sampler, salt: str, *carriers):
    """Up to sampler.count tuples, one coordinate per carrier."""
    if all(c.finite for c in carriers):
        total = 1
        for c in carriers:
            total *= len(c.elements())
        if total <= sampler.count:
            yield from product(*(c.elements() for c in carriers))
            return
    rng = sampler.rng(salt)
    for _ in range(sampler.count):
        yield tuple(_draw(c, rng, sampler) for c in carriers)


class _Report:
    def __init__(self):
        self.found = {}

    def fail(self, axiom: str, *witness):
        self.found.setdefault(axiom, Violation(axiom, tuple(witness)))

    def result(self):
        vs = list(self.found.values())
        return (not vs, vs)


# ---------------------------------------------------------------------------
# crossed modules

@dataclass
class CrossedSModule:
    S: Carrier
    N: Carrier
    alpha: Callable          # E(S) -> E(N)
    lam: Callable            # (s, n) -> lambda_s(n)
    beta: Callable           # N -> S


def check_crossed_module(cm: CrossedSModule, sampler: Optional[Sampler] = None) -> tuple:
    sampler = sampler or Sampler()
    S, N = cm.S, cm.N
    rs, rn = S.render, N.render
    rep = _Report()
    ES = S.idempotents()
    for e in ES:
        a = cm.alpha(e)
        if not N.is_idempotent(a):
            rep.fail("alpha-idempotent", rs(e))
        if cm.beta(a) != e:
            rep.fail("beta-alpha-identity", rs(e))
    alpha_images = [cm.alpha(e) for e in ES]
    if len(set(alpha_images)) != len(alpha_images):
        rep.fail("alpha-injective")
    rng = sampler.rng("cm-idem")
    for s, n, m, s2 in _tuples(sampler, "cm", S, N, N, S):
        e = ES[rng.randrange(len(ES))]
        ln = cm.lam(s, n)
        if cm.lam(e, n) != N.mul(cm.alpha(e), n):
            rep.fail("CM1", rs(e), rn(n))
        if cm.lam(s, cm.alpha(e)) != cm.alpha(S.prod(s, e, S.inv(s))):
            rep.fail("CM2", rs(s), rs(e))
        bn = cm.beta(n)
        if cm.lam(bn, m) != N.prod(n, m, N.inv(n)):
            rep.fail("CM3", rn(n), rn(m))
        if cm.beta(ln) != S.prod(s, bn, S.inv(s)):
            rep.fail("CM4", rs(s), rn(n))
        if cm.lam(s, N.mul(n, m)) != N.mul(ln, cm.lam(s, m)):
            rep.fail("lambda-endomorphism", rs(s), rn(n), rn(m))
        if cm.lam(S.mul(s, s2), n) != cm.lam(s, cm.lam(s2, n)):
            rep.fail("lambda-homomorphism", rs(s), rs(s2), rn(n))
        if cm.beta(N.mul(n, m)) != S.mul(bn, cm.beta(m)):
            rep.fail("beta-homomorphism", rn(n), rn(m))
        if S.is_idempotent(bn) and N.mul(n, m) != N.mul(m, n):
            rep.fail("kernel-central", rn(n), rn(m))
    return rep.result()


def kernel_system_crossed_module(K: GroupKernelNormalSystem) -> CrossedSModule:
    """K inside S, acted on by conjugation, with beta the inclusion."""
    S = K.ambient
    return CrossedSModule(FiniteCarrier(S), SubsetCarrier(S, K.carrier), alpha=lambda e: e,
                          lam=lambda s, k: S.product(s, k, S.inverse(s)), beta=lambda k: k)


# ---------------------------------------------------------------------------
# extensions

@dataclass
class ExtensionHandle:
    """A -i-> N -beta-> S -pi-> T with the crossed structure (alpha, lambda).

    i_inv returns None off i(A); beta_section(s) returns some n with
    beta(n) = s, or None when s is not in beta(N); pi_preimages(t, rng, k)
    returns up to k elements of S over t.
    """

    A: SemilatticeOfAbelianGroups
    N: Carrier
    S: Carrier
    T: FiniteInverseSemigroup
    i: Callable
    i_inv: Callable
    beta: Callable
    pi: Callable
    alpha: Callable
    lam: Callable
    beta_section: Callable
    pi_preimages: Callable
    label: str = ""
    extras: dict = field(default_factory=dict)

    @property
    def crossed(self) -> CrossedSModule:
        return CrossedSModule(self.S, self.N, self.alpha, self.lam, self.beta)


def check_extension(ext: ExtensionHandle, sampler: Optional[Sampler] = None) -> tuple:
    sampler = sampler or Sampler()
    A, T, S, N = ext.A, ext.T, ext.S, ext.N
    rep = _Report()
    an, tn = A.names, T.names
    seen = {}
    for a in range(A.size):
        ia = ext.i(a)
        if ia in seen:
            rep.fail("CME2-i-injective", an[seen[ia]], an[a])
        seen[ia] = a
        if ext.i_inv(ia) != a:
            rep.fail("i-inverse", an[a])
        if not S.is_idempotent(ext.beta(ia)):
            rep.fail("CME3-i(A)-in-kernel", an[a])
    for a, b in product(range(A.size), range(A.size)):
        if ext.i(A.op(a, b)) != N.mul(ext.i(a), ext.i(b)):
            rep.fail("CME2-i-homomorphism", an[a], an[b])
    rng = sampler.rng("ext-pre")
    for t in T.elements():
        pre = ext.pi_preimages(t, rng, 1)
        if not pre or ext.pi(pre[0]) != t:
            rep.fail("CME2-pi-surjective", tn[t])
    ES = S.idempotents()
    images = {}
    for e in ES:
        pe = ext.pi(e)
        if not T.is_idempotent(pe):
            rep.fail("pi-idempotents", S.render(e))
        if pe in images:
            rep.fail("CME2-pi-idempotent-separating", S.render(images[pe]), S.render(e))
        images[pe] = e
    for s, s2, n in _tuples(sampler, "ext", S, S, N):
        if ext.pi(S.mul(s, s2)) != T.op(ext.pi(s), ext.pi(s2)):
            rep.fail("pi-homomorphism", S.render(s), S.render(s2))
        bn = ext.beta(n)
        if S.is_idempotent(bn):
            a = ext.i_inv(n)
            if a is None or ext.i(a) != n:
                rep.fail("CME3-kernel-in-i(A)", N.render(n))
        if not T.is_idempotent(ext.pi(bn)):
            rep.fail("CME3-beta(N)-in-pi-fibre", N.render(n))
        for x in (s, S.mul(s, S.inv(s2)), S.mul(S.inv(s), s)):
            if T.is_idempotent(ext.pi(x)):
                m = ext.beta_section(x)
                if m is None or ext.beta(m) != x:
                    rep.fail("CME3-pi-fibre-in-beta(N)", S.render(x))
    ok, vs = check_crossed_module(ext.crossed, sampler)
    for v in vs:
        rep.found.setdefault("CME1-" + v.axiom, Violation("CME1-" + v.axiom, v.witness))
    return rep.result()


def induced_tmodule(ext: ExtensionHandle, preimage_count: int = 8, seed: int = 0) -> TModule:
    """(theta, eta) read off the extension; eta must not depend on the preimage."""
    A, T = ext.A, ext.T
    rng = random.Random(f"{seed}:induced")
    theta = {}
    for s in ext.S.idempotents():
        e = ext.pi(s)
        theta[e] = ext.i_inv(ext.alpha(s))
    if sorted(theta) != list(T.idempotents):
        raise PreimageUnavailable("some idempotent of T has no idempotent preimage")
    eta = [[0] * A.size for _ in T.elements()]
    for t in T.elements():
        pre = ext.pi_preimages(t, rng, preimage_count)
        if not pre:
            raise PreimageUnavailable(f"no preimage of {T.names[t]} found", witness=(T.names[t],))
        for a in range(A.size):
            vals = {ext.i_inv(ext.lam(s, ext.i(a))) for s in pre}
            if len(vals) != 1 or None in vals:
                raise ValidationError(
                    f"eta_{T.names[t]}({A.names[a]}) depends on the preimage",
                    [Violation("eta-well-defined", (T.names[t], A.names[a]))])
            eta[t][a] = vals.pop()
    return TModule(T, A, theta, eta)


# ---------------------------------------------------------------------------
# equivalences

@dataclass
class EquivalenceWitness:
    phi1: Callable   # N -> N'
    phi2: Callable   # S -> S'


def identity_witness() -> EquivalenceWitness:
    return EquivalenceWitness(lambda n: n, lambda s: s)


def check_equivalence_witness(ext: ExtensionHandle, ext2: ExtensionHandle,
                              w: EquivalenceWitness, sampler: Optional[Sampler] = None) -> tuple:
    sampler = sampler or Sampler()
    S, N, S2, N2 = ext.S, ext.N, ext2.S, ext2.N
    rep = _Report()
    A = ext.A
    for a in range(A.size):
        if w.phi1(ext.i(a)) != ext2.i(a):
            rep.fail("CMEE1-i", A.names[a])
    for e in S.idempotents():
        if w.phi1(ext.alpha(e)) != ext2.alpha(w.phi2(e)):
            rep.fail("CMEE1-alpha", S.render(e))
    for s, s2, n, m in _tuples(sampler, "equiv", S, S, N, N):
        p1n = w.phi1(n)
        if not N2.contains(p1n):
            rep.fail("phi1-codomain", N.render(n))
            continue
        if w.phi1(N.mul(n, m)) != N2.mul(p1n, w.phi1(m)):
            rep.fail("phi1-homomorphism", N.render(n), N.render(m))
        p2s = w.phi2(s)
        if w.phi2(S.mul(s, s2)) != S2.mul(p2s, w.phi2(s2)):
            rep.fail("phi2-homomorphism", S.render(s), S.render(s2))
        if ext2.beta(p1n) != w.phi2(ext.beta(n)):
            rep.fail("CMEE1-beta", N.render(n))
        if ext2.pi(p2s) != ext.pi(s):
            rep.fail("CMEE1-pi", S.render(s))
        if w.phi1(ext.lam(s, n)) != ext2.lam(p2s, p1n):
            rep.fail("CMEE2", S.render(s), N.render(n))
    if not induced_tmodule(ext).same_structure(induced_tmodule(ext2)):
        rep.fail("induced-module")
    return rep.result()


# ---------------------------------------------------------------------------
# admissibility

@dataclass
class AdmissibilityReport:
    ok: bool
    violations: list
    remarks: list   # identities evaluated but not part of the verdict


def check_admissible(ext: ExtensionHandle, rho: Callable, sigma: Callable,
                     sampler: Optional[Sampler] = None) -> AdmissibilityReport:
    """Order-preserving idempotent-respecting transversals of pi and beta.

    Raises NotTransversal when pi(rho(t)) != t or beta(sigma(s)) != s.
    """
    sampler = sampler or Sampler()
    T, S, N = ext.T, ext.S, ext.N
    tn = T.names
    for t in T.elements():
        if ext.pi(rho(t)) != t:
            raise NotTransversal(f"pi(rho({tn[t]})) != {tn[t]}", witness=("rho", tn[t]))
    rep = _Report()
    remarks = _Report()
    for e in T.idempotents:
        if not S.is_idempotent(rho(e)):
            rep.fail("rho-respects-idempotents", tn[e])
    for s, t in product(T.elements(), T.elements()):
        if T.leq(s, t) and not S.leq(rho(s), rho(t)):
            rep.fail("rho-order-preserving", tn[s], tn[t])
    for t in T.elements():
        rt, ti = rho(t), T.inverse(t)
        if S.mul(rt, S.inv(rt)) != rho(T.r(t)):
            rep.fail("rho(t)rho(t)^-1=rho(tt^-1)", tn[t])
        for e in T.idempotents:
            if S.prod(rt, rho(e), S.inv(rt)) != rho(T.product(t, e, ti)):
                rep.fail("rho(t)rho(e)rho(t)^-1=rho(tet^-1)", tn[t], tn[e])
            if rho(T.op(e, t)) != S.mul(rho(e), rt):
                rep.fail("rho(ex)=rho(e)rho(x)", tn[e], tn[t])
            if rho(T.op(t, e)) != S.mul(rt, rho(e)):
                rep.fail("rho(xe)=rho(x)rho(e)", tn[t], tn[e])
            for x in (rt, S.inv(rt)):
                tx = ext.pi(x)
                conj = rho(T.product(tx, e, T.inverse(tx)))
                if S.mul(x, rho(e)) != S.mul(conj, x):
                    rep.fail("rho(x)^eps-commutes-with-rho(e)", S.render(x), tn[e])
        if rho(ti) != S.inv(rt):
            remarks.fail("rho(x^-1)=rho(x)^-1", tn[t])
        if S.mul(rt, rho(ti)) != rho(T.r(t)):
            remarks.fail("rho(t)rho(t^-1)=rho(tt^-1)", tn[t])
    rng = sampler.rng("adm-idem")
    ES = S.idempotents()
    for e in ES:
        if not N.is_idempotent(sigma(e)):
            rep.fail("sigma-respects-idempotents", S.render(e))
    for (s,) in _tuples(sampler, "adm", S):
        if not T.is_idempotent(ext.pi(s)):
            continue
        n = sigma(s)
        if ext.beta(n) != s:
            raise NotTransversal(f"beta(sigma({S.render(s)})) != {S.render(s)}",
                                 witness=("sigma", S.render(s)))
        e = ES[rng.randrange(len(ES))]
        lower = S.mul(e, s)
        if not N.leq(sigma(lower), n):
            rep.fail("sigma-order-preserving", S.render(lower), S.render(s))
    ok, vs = rep.result()
    return AdmissibilityReport(ok, vs, remarks.result()[1])


# ---------------------------------------------------------------------------
# finite extensions

def finite_extension(module_A: SemilatticeOfAbelianGroups, N: FiniteInverseSemigroup,
                     S: FiniteInverseSemigroup, T: FiniteInverseSemigroup,
                     i_map, beta_map, pi_map, alpha_map: dict, lam_table,
                     label: str = "finite") -> ExtensionHandle:
    """Table-backed extension; lam_table[s][n] = lambda_s(n)."""
    i_map, beta_map, pi_map = list(i_map), list(beta_map), list(pi_map)
    inv_i = {}
    for a, n in enumerate(i_map):
        inv_i.setdefault(n, a)
    beta_pre = {}
    for n in N.elements():
        beta_pre.setdefault(beta_map[n], n)
    pi_pre = {}
    for s in S.elements():
        pi_pre.setdefault(pi_map[s], []).append(s)

    return ExtensionHandle(
        A=module_A, N=FiniteCarrier(N), S=FiniteCarrier(S), T=T,
        i=lambda a: i_map[a], i_inv=lambda n: inv_i.get(n),
        beta=lambda n: beta_map[n], pi=lambda s: pi_map[s],
        alpha=lambda e: alpha_map[e], lam=lambda s, n: lam_table[s][n],
        beta_section=lambda s: beta_pre.get(s),
        pi_preimages=lambda t, rng, k: pi_pre.get(t, [])[:k],
        label=label)


def module_as_extension(M: TModule) -> ExtensionHandle:
    """A -id-> A -beta-> T -id-> T with beta(a) = theta^-1(aa^-1) and lambda = eta."""
    A, T = M.A, M.T
    beta_map = [M.theta_inv[A.idem_of(a)] for a in range(A.size)]
    alpha_map = {e: M.th(e) for e in T.idempotents}
    lam = [[M.act(t, a) for a in range(A.size)] for t in T.elements()]
    return finite_extension(A, A.carrier, T, T, range(A.size), beta_map, range(T.size),
                            alpha_map, lam, label="module")
