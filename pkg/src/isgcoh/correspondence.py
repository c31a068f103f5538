"""
Equivalences between extensions, the extension -> cocycle -> extension round
trip, and the end-to-end harness for an F-inverse monoid.
"""

import json
from dataclasses import dataclass, field
from typing import Callable, Optional

from .cover_construction import CoverElement, NElement, build_extension_from_cocycle
from .crossed_modules import (EquivalenceWitness, ExtensionHandle, Sampler, check_admissible,
                              check_equivalence_witness, check_extension)
from .errors import (CohomologyWitnessNotFound, EmptyWord, NotAdmissible, NotFInverse,
                     WitnessPreconditionFailed)
from .free_words import Letter
from .semigroup_core import FiniteInverseSemigroup, is_f_inverse_monoid
from .tmodule_cohomology import (DEFAULT_BUDGET, Cochain, TModule, coboundary,
                                 find_cohomologous_witness, is_strongly_normalized,
                                 normalize_cocycle, strongly_normalize_witness)
from .extension_to_cocycle import canonical_cover_transversals, extract_cocycle, factor_data


class TauContext:
    """The word map tau built from (theta_map, d_map) over a semilattice of groups.

    The carrier need not be commutative, so products keep their order.
    """

    def __init__(self, T: FiniteInverseSemigroup, theta_map: Callable, d_map: Callable,
                 mul: Callable, inv: Callable):
        self.T = T
        self.theta_map = theta_map
        self.d_map = d_map
        self.mul = mul
        self.inv = inv
        self._memo = {}

    def __call__(self, w) -> object:
        if not w:
            raise EmptyWord("tau of the empty word")
        w = tuple(w)
        hit = self._memo.get(w)
        if hit is not None:
            return hit
        T, d = self.T, self.d_map
        x = w[0]
        if x.sign < 0:
            xi = T.inverse(x.base)
            val = self.mul(self.inv(d(xi, x.base)), self((Letter(xi, 1),) + w[1:]))
        elif len(w) == 1:
            val = self.theta_map(T.r(x.base))
        else:
            y = w[1]
            if y.sign > 0:
                val = self.mul(d(x.base, y.base), self((Letter(T.op(x.base, y.base), 1),) + w[2:]))
            else:
                z = T.op(x.base, T.inverse(y.base))
                val = self.mul(self.inv(d(z, y.base)), self((Letter(z, 1),) + w[2:]))
        self._memo[w] = val
        return val


def tau(ctx: TauContext, w) -> object:
    return ctx(w)


def tau_from_cochain(d: Cochain) -> TauContext:
    M = d.module
    return TauContext(M.T, M.th, d, M.A.op, M.A.inverse)


def tau_from_extension(ext: ExtensionHandle, rho: Callable, F: dict) -> TauContext:
    return TauContext(ext.T, lambda e: ext.alpha(rho(e)), lambda x, y: F[x, y],
                      ext.N.mul, ext.N.inv)


def chi(ext: ExtensionHandle, rho: Callable, w) -> object:
    if not w:
        raise EmptyWord("chi of the empty word")
    S = ext.S
    parts = [rho(x.base) if x.sign > 0 else S.inv(rho(x.base)) for x in w]
    return S.prod(*parts)


def equivalence_from_cohomologous(c: Cochain, c2: Cochain, d: Cochain) -> EquivalenceWitness:
    """Witness from the extension of c to the extension of c2, where c = (delta^2 d) c2."""
    if coboundary(d) * c2 != c:
        raise WitnessPreconditionFailed("c differs from (delta^2 d) c2", witness=d.entries())
    if not is_strongly_normalized(d):
        d = strongly_normalize_witness(c / c2, d)
        assert is_strongly_normalized(d) and coboundary(d) * c2 == c
    A = d.module.A
    td = tau_from_cochain(d)

    def phi1(n):
        if not n.w:
            return n
        return NElement(A.op(td(n.w), n.a), n.e, n.w)

    return EquivalenceWitness(phi1, lambda s: s)


@dataclass
class Stage:
    name: str
    ok: bool
    detail: object = None

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class RoundTripReport:
    descriptor: dict
    stages: list = field(default_factory=list)
    cochains: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    # live objects for callers; not serialized
    objects: dict = field(default_factory=dict, repr=False)

    @property
    def ok(self) -> bool:
        return bool(self.stages) and all(s.ok for s in self.stages)

    def add(self, name: str, ok: bool, detail=None) -> bool:
        self.stages.append(Stage(name, bool(ok), detail))
        return bool(ok)

    def to_json(self) -> dict:
        return {"descriptor": self.descriptor, "ok": self.ok,
                "stages": [s.to_json() for s in self.stages],
                "cochains": {k: v.to_json() for k, v in self.cochains.items()},
                "witnesses": self.witnesses}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def _violations(vs) -> list:
    return [v.to_json() for v in vs]


def reverse_witness(ext: ExtensionHandle, rho: Callable, F: dict) -> EquivalenceWitness:
    """From the cover extension of the extracted cocycle back to ext."""
    T = ext.T
    tf = tau_from_extension(ext, rho, F)

    def phi2(s: CoverElement):
        if not s.w:
            return rho(s.t)
        return ext.S.mul(rho(T.r(s.t)), chi(ext, rho, s.w))

    def phi1(n: NElement):
        if not n.w:
            return ext.i(n.a)
        return ext.N.mul(tf(n.w), ext.i(n.a))

    return EquivalenceWitness(phi1, phi2)


def roundtrip_extension(ext: ExtensionHandle, rho: Callable, sigma: Callable,
                        module: Optional[TModule] = None, sampler: Optional[Sampler] = None,
                        checked: bool = True, report: Optional[RoundTripReport] = None) -> RoundTripReport:
    sampler = sampler or Sampler()
    report = report or RoundTripReport({"mode": "extension", "extension": ext.label})
    adm = check_admissible(ext, rho, sigma, sampler)
    if not adm.ok:
        raise NotAdmissible("transversals are not admissible", witness=_violations(adm.violations))
    report.add("admissible", True, {"remarks": _violations(adm.remarks)})
    M = module or ext.extras.get("module")
    data = factor_data(ext, rho, sigma)
    c = extract_cocycle(ext, rho, sigma, M, data)
    M = c.module
    report.cochains["extracted"] = c
    report.add("extract", True)
    if not report.add("extracted-strongly-normalized", is_strongly_normalized(c)):
        return report
    ext2 = build_extension_from_cocycle(M, c, checked)
    report.objects["rebuilt"] = ext2
    w = reverse_witness(ext, rho, data.F)
    report.objects["reverse_witness"] = w
    ok, vs = check_equivalence_witness(ext2, ext, w, sampler)
    report.add("reverse-equivalence", ok, _violations(vs))
    return report


def theorem_harness(M: TModule, c: Cochain, sampler: Optional[Sampler] = None,
                    budget: Optional[int] = DEFAULT_BUDGET, checked: bool = True,
                    check_axioms: bool = True) -> RoundTripReport:
    T = M.T
    if not is_f_inverse_monoid(T).is_f_inverse:
        raise NotFInverse("T is not an F-inverse monoid")
    sampler = sampler or Sampler()
    report = RoundTripReport({"mode": "theorem", "input": c.to_json()})
    report.cochains["input"] = c
    ct, d0 = normalize_cocycle(c)
    report.cochains["normalized"] = ct
    report.witnesses["normalizing_d"] = d0.to_json()
    if not report.add("normalize", is_strongly_normalized(ct) and coboundary(d0) * c == ct):
        return report
    ext = build_extension_from_cocycle(M, ct, checked)
    report.objects["extension"] = ext
    if check_axioms:
        ok, vs = check_extension(ext, sampler)
        if not report.add("extension-axioms", ok, _violations(vs)):
            return report
    tr = canonical_cover_transversals(T, M, "f_inverse")
    roundtrip_extension(ext, tr.rho, tr.sigma, M, sampler, checked, report)
    if not report.ok:
        return report
    c2 = report.cochains["extracted"]
    found = find_cohomologous_witness(c, c2, True, budget)
    if found is None:
        raise CohomologyWitnessNotFound("no order-preserving witness for c ~ c'")
    report.witnesses["cohomology_d"] = {"route": found.route, "d": found.d.to_json()}
    report.add("cohomologous", coboundary(found.d) * c2 == c, found.route)
    found2 = find_cohomologous_witness(ct, c2, True, budget)
    if found2 is None:
        raise CohomologyWitnessNotFound("no order-preserving witness for normalized c ~ c'")
    d = found2.d
    if not is_strongly_normalized(d):
        d = strongly_normalize_witness(ct / c2, d)
    report.witnesses["strong_d"] = d.to_json()
    report.add("strong-witness", is_strongly_normalized(d) and coboundary(d) * c2 == ct)
    w = equivalence_from_cohomologous(ct, c2, d)
    ext2 = report.objects["rebuilt"]
    ok, vs = check_equivalence_witness(ext, ext2, w, sampler)
    report.add("forward-equivalence", ok, _violations(vs))
    return report
