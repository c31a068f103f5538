"""
From a crossed module extension and a pair of transversals to a 3-cocycle.

The factor set is f(x, y) = rho(x) rho(y) rho(xy)^-1, lifted to N through
sigma, and c(x, y, z) is read off through i^-1.
"""

from dataclasses import dataclass
from typing import Callable, Optional

from .cover_construction import CoverElement, NElement
from .crossed_modules import ExtensionHandle, induced_tmodule
from .errors import CocycleViolation, ExactnessViolation, FactorSetViolation, NotFInverse
from .free_words import Letter
from .semigroup_core import FiniteInverseSemigroup, is_f_inverse_monoid
from .tmodule_cohomology import Cochain, TModule, is_cocycle


@dataclass
class Transversal:
    """rho: T -> S with pi rho = id, sigma: beta(N) -> N with beta sigma = id."""

    rho: Callable
    sigma: Callable
    respects_idempotents: Optional[bool] = None
    order_preserving: Optional[bool] = None
    label: str = ""


@dataclass
class FactorData:
    f: dict  # (x, y) -> element of beta(N)
    F: dict  # (x, y) -> element of N


def derive_factor_set(ext: ExtensionHandle, rho: Callable) -> dict:
    T, S = ext.T, ext.S
    out = {}
    for x in T.elements():
        rx = rho(x)
        for y in T.elements():
            xy = T.op(x, y)
            lhs = S.mul(rx, rho(y))
            fxy = S.mul(lhs, S.inv(rho(xy)))
            if S.mul(fxy, rho(xy)) != lhs:
                raise FactorSetViolation("f(x,y) rho(xy) != rho(x) rho(y)",
                                         witness=(T.names[x], T.names[y]))
            if not T.is_idempotent(ext.pi(fxy)):
                raise FactorSetViolation("pi(f(x,y)) is not idempotent",
                                         witness=(T.names[x], T.names[y]))
            out[x, y] = fxy
    return out


def lift_factor_set(ext: ExtensionHandle, f: dict, sigma: Callable) -> dict:
    out = {}
    for key, s in f.items():
        n = sigma(s)
        if n is None or ext.beta(n) != s:
            raise FactorSetViolation("sigma does not lift f", witness=key)
        out[key] = n
    return out


def factor_data(ext: ExtensionHandle, rho: Callable, sigma: Callable) -> FactorData:
    f = derive_factor_set(ext, rho)
    return FactorData(f, lift_factor_set(ext, f, sigma))


def _module_of(ext: ExtensionHandle) -> TModule:
    M = ext.extras.get("module")
    return M if M is not None else induced_tmodule(ext)


def extract_cocycle(ext: ExtensionHandle, rho: Callable, sigma: Callable,
                    module: Optional[TModule] = None,
                    data: Optional[FactorData] = None) -> Cochain:
    M = module or _module_of(ext)
    T, A, N = ext.T, M.A, ext.N
    F = (data or factor_data(ext, rho, sigma)).F
    vals = [[[0] * T.size for _ in T.elements()] for _ in T.elements()]
    for x in T.elements():
        rx = rho(x)
        for y in T.elements():
            xy = T.op(x, y)
            for z in T.elements():
                yz = T.op(y, z)
                k = N.prod(ext.lam(rx, F[y, z]), F[x, yz],
                           N.inv(N.mul(F[x, y], F[xy, z])))
                a = ext.i_inv(k)
                names = (T.names[x], T.names[y], T.names[z])
                if a is None:
                    raise ExactnessViolation("k is not in i(A)", witness=names)
                comp = M.th_r(T.op(xy, z))
                val = A.op(comp, a)
                if A.idem_of(val) != comp:
                    raise ExactnessViolation("k lies below the expected component",
                                             witness=names)
                vals[x][y][z] = val
    c = Cochain(M, 3, vals)
    if not is_cocycle(c):
        raise CocycleViolation("extracted cochain is not a cocycle")
    return c


def canonical_cover_transversals(T: FiniteInverseSemigroup, module: TModule,
                                 mode: str = "plain") -> Transversal:
    """rho(t) = (t, [t]) in plain mode; (t, [max t]) or (t, eps) in f_inverse mode."""

    def sigma(s):
        return NElement(module.th(s.t), s.t, s.w)

    if mode == "plain":
        return Transversal(lambda t: CoverElement(t, (Letter(t, 1),)), sigma,
                           respects_idempotents=False, label="plain")
    if mode != "f_inverse":
        raise ValueError(f"unknown transversal mode {mode!r}")
    verdict = is_f_inverse_monoid(T)
    if not verdict.is_f_inverse:
        raise NotFInverse("T is not an F-inverse monoid")
    top = verdict.max_map
    table = [CoverElement(t, ()) if T.is_idempotent(t) else CoverElement(t, (Letter(top[t], 1),))
             for t in T.elements()]
    return Transversal(table.__getitem__, sigma, respects_idempotents=True,
                       order_preserving=True, label="f_inverse")
