"""
The E-unitary cover of T through FG(T) and the extension built from a 3-cocycle.

Elements of the cover are pairs (t, w) with w a reduced word and t <= nu(w);
elements of N are triples (a, e, w) with a in A_theta(e) and e <= nu(w).
Both carriers are infinite, so they are represented lazily and sampled by
word length.
"""

from typing import NamedTuple, Optional

from .crossed_modules import Carrier, ExtensionHandle
from .errors import CocycleViolation, EmptyWord, NotStronglyNormalized
from .free_words import (Letter, concat, cover_member, format_word, involution, leq1, nu,
                         phi, reduce)
from .semigroup_core import FiniteInverseSemigroup
from .tmodule_cohomology import Cochain, TModule, is_cocycle, is_strongly_normalized


class CoverElement(NamedTuple):
    t: int
    w: tuple


class NElement(NamedTuple):
    a: int
    e: int
    w: tuple


def random_reduced_word(T: FiniteInverseSemigroup, rng, max_len: int) -> tuple:
    n = rng.randint(0, max_len)
    return reduce(tuple(Letter(rng.randrange(T.size), rng.choice((1, -1))) for _ in range(n)))


class CoverCarrier(Carrier):
    """S = {(t, w) : t <= nu(w)} with the coordinatewise product."""

    def __init__(self, T: FiniteInverseSemigroup):
        self.T = T

    def element(self, t: int, w) -> CoverElement:
        w = tuple(w)
        if not cover_member(t, w, self.T):
            raise ValueError(f"({self.T.names[t]}, {format_word(w, self.T)}) is not in the cover")
        return CoverElement(t, w)

    def mul(self, x, y):
        return CoverElement(self.T.op(x.t, y.t), concat(x.w, y.w))

    def inv(self, x):
        return CoverElement(self.T.inverse(x.t), involution(x.w))

    def contains(self, x) -> bool:
        return (isinstance(x, CoverElement) and 0 <= x.t < self.T.size
                and tuple(x.w) == reduce(x.w) and cover_member(x.t, x.w, self.T))

    def is_idempotent(self, x) -> bool:
        return not x.w and self.T.is_idempotent(x.t)

    def idempotents(self) -> list:
        return [CoverElement(e, ()) for e in self.T.idempotents]

    def sample(self, rng, max_len):
        T = self.T
        w = random_reduced_word(T, rng, max_len)
        top = nu(w, T)
        below = [t for t in T.elements() if leq1(T, t, top)]
        return CoverElement(rng.choice(below), w)

    def render(self, x) -> str:
        return f"({self.T.names[x.t]}, {format_word(x.w, self.T)})"


class NCarrier(Carrier):
    """N = {(a, e, w) : a in A_theta(e), e <= nu(w)}, coordinatewise."""

    def __init__(self, M: TModule):
        self.M = M
        self.T = M.T
        self.A = M.A

    def mul(self, x, y):
        return NElement(self.A.op(x.a, y.a), self.T.op(x.e, y.e), concat(x.w, y.w))

    def inv(self, x):
        return NElement(self.A.inverse(x.a), x.e, involution(x.w))

    def contains(self, x) -> bool:
        if not isinstance(x, NElement) or not self.T.is_idempotent(x.e):
            return False
        return (self.A.idem_of(x.a) == self.M.th(x.e) and tuple(x.w) == reduce(x.w)
                and leq1(self.T, x.e, nu(x.w, self.T)))

    def is_idempotent(self, x) -> bool:
        return not x.w and x.a == self.M.th(x.e)

    def idempotents(self) -> list:
        return [NElement(self.M.th(e), e, ()) for e in self.T.idempotents]

    def sample(self, rng, max_len):
        T, M = self.T, self.M
        w = random_reduced_word(T, rng, max_len)
        top = nu(w, T)
        es = [e for e in T.idempotents if leq1(T, e, top)]
        while not es:
            w = random_reduced_word(T, rng, max_len)
            top = nu(w, T)
            es = [e for e in T.idempotents if leq1(T, e, top)]
        e = rng.choice(es)
        return NElement(rng.choice(self.A.members[M.th(e)]), e, w)

    def render(self, x) -> str:
        return f"({self.A.names[x.a]}, {self.T.names[x.e]}, {format_word(x.w, self.T)})"


def build_cover(T: FiniteInverseSemigroup) -> CoverCarrier:
    return CoverCarrier(T)


class CocycleAction:
    """xi, zeta, gamma and lambda driven by a strongly normalized 3-cocycle.

    checked=True re-verifies the component law of xi, the N-invariant after
    every gamma, and agreement of the recursive and closed forms of lambda.
    """

    def __init__(self, M: TModule, c: Cochain, checked: bool = True):
        self.M = M
        self.T = M.T
        self.A = M.A
        self.c = c
        self.checked = checked
        self._xi = {}

    # measure used to justify termination of the xi recursion
    @staticmethod
    def _measure(w) -> tuple:
        return (len(w), 1 if w[0].sign < 0 else 0)

    def xi(self, t: int, w) -> int:
        if not w:
            raise EmptyWord("xi of the empty word")
        w = tuple(w)
        key = (t, w)
        hit = self._xi.get(key)
        if hit is not None:
            return hit
        T, A, c = self.T, self.A, self.c
        x = w[0]
        if x.sign < 0:
            xi_ = T.inverse(x.base)
            nxt = (Letter(xi_, 1),) + w[1:]
            val = A.op(A.inverse(c(t, xi_, x.base)), self._step(t, w, nxt))
        elif len(w) == 1:
            val = self.M.th_r(T.op(t, x.base))
        else:
            y = w[1]
            if y.sign > 0:
                nxt = (Letter(T.op(x.base, y.base), 1),) + w[2:]
                val = A.op(c(t, x.base, y.base), self._step(t, w, nxt))
            else:
                z = T.op(x.base, T.inverse(y.base))
                nxt = (Letter(z, 1),) + w[2:]
                val = A.op(A.inverse(c(t, z, y.base)), self._step(t, w, nxt))
        if self.checked:
            assert A.idem_of(val) == self.M.th_r(T.op(t, phi(w, T))), "xi left its component"
        self._xi[key] = val
        return val

    def _step(self, t, w, nxt):
        assert self._measure(nxt) < self._measure(w)
        return self.xi(t, nxt)

    def zeta(self, t: int, w) -> int:
        w = tuple(w)
        return self.M.th_r(t) if not w else self.xi(t, w)

    def gamma(self, t: int, sign: int, n: NElement) -> NElement:
        T, A, M = self.T, self.A, self.M
        if sign > 0:
            out = NElement(A.op(self.zeta(t, n.w), M.act(t, n.a)),
                           T.product(t, n.e, T.inverse(t)),
                           reduce((Letter(t, 1),) + n.w + (Letter(t, -1),)))
        else:
            ti = T.inverse(t)
            out = NElement(A.op(self.zeta(ti, n.w), M.act(ti, n.a)),
                           T.product(ti, n.e, t),
                           reduce((Letter(t, -1),) + n.w + (Letter(t, 1),)))
        if self.checked:
            assert self._valid(out), "gamma left N"
        return out

    def _valid(self, n: NElement) -> bool:
        return (self.A.idem_of(n.a) == self.M.th(n.e)
                and leq1(self.T, n.e, nu(n.w, self.T)))

    def alpha(self, e: int) -> NElement:
        return NElement(self.M.th(e), e, ())

    def _nmul(self, x: NElement, y: NElement) -> NElement:
        return NElement(self.A.op(x.a, y.a), self.T.op(x.e, y.e), concat(x.w, y.w))

    def lambda_recursive(self, s: CoverElement, n: NElement) -> NElement:
        if not s.w:
            return self._nmul(self.alpha(s.t), n)
        out = n
        for x in reversed(s.w):
            out = self.gamma(x.base, x.sign, out)
        return self._nmul(self.alpha(self.T.r(s.t)), out)

    def lambda_closed(self, s: CoverElement, n: NElement) -> NElement:
        T, A, M = self.T, self.A, self.M
        t, u = s.t, s.w
        return NElement(A.op(self.zeta(t, n.w), M.act(t, n.a)),
                        T.product(t, n.e, T.inverse(t)),
                        reduce(u + n.w + involution(u)))

    def lambda_action(self, s: CoverElement, n: NElement) -> NElement:
        if self.checked:
            if not self._valid(n):
                raise ValueError(f"{n} is not an element of N")
            if not leq1(self.T, s.t, nu(s.w, self.T)):
                raise ValueError(f"{s} is not an element of the cover")
        closed = self.lambda_closed(s, n)
        if self.checked:
            rec = self.lambda_recursive(s, n)
            assert rec == closed, f"lambda forms disagree at {s}, {n}"
        return closed


def xi(action: CocycleAction, t: int, w) -> int:
    return action.xi(t, w)


def zeta(action: CocycleAction, t: int, w) -> int:
    return action.zeta(t, w)


def gamma(action: CocycleAction, t: int, sign: int, n: NElement) -> NElement:
    return action.gamma(t, sign, n)


def lambda_action(action: CocycleAction, s: CoverElement, n: NElement) -> NElement:
    return action.lambda_action(s, n)


def cover_pi_preimages(T: FiniteInverseSemigroup, t: int, rng, k: int) -> list:
    """(t, [t]) first, then (t, eps) for idempotent t, then random words over t."""
    out = [CoverElement(t, (Letter(t, 1),))]
    if T.is_idempotent(t):
        out.append(CoverElement(t, ()))
    tries = 0
    while len(out) < k and tries < 50 * k:
        tries += 1
        v = tuple(Letter(rng.randrange(T.size), rng.choice((1, -1)))
                  for _ in range(rng.randint(1, 3)))
        w = reduce((Letter(t, 1),) + v)
        cand = CoverElement(t, w)
        if cover_member(t, w, T) and cand not in out:
            out.append(cand)
    return out[:k] if k else []


def build_extension_from_cocycle(M: TModule, c: Cochain, checked: bool = True) -> ExtensionHandle:
    if c.degree != 3 or not is_cocycle(c):
        raise CocycleViolation("input is not a 3-cocycle")
    if not is_strongly_normalized(c):
        raise NotStronglyNormalized("cocycle is not strongly normalized; normalize it first")
    T, A = M.T, M.A
    action = CocycleAction(M, c, checked)
    S, N = CoverCarrier(T), NCarrier(M)

    def i(a):
        return NElement(a, M.theta_inv[A.idem_of(a)], ())

    def i_inv(n) -> Optional[int]:
        if n.w or A.idem_of(n.a) != M.th(n.e):
            return None
        return n.a

    def alpha(s):
        return NElement(M.th(s.t), s.t, ())

    def beta_section(s):
        return NElement(M.th(s.t), s.t, s.w) if T.is_idempotent(s.t) else None

    return ExtensionHandle(
        A=A, N=N, S=S, T=T, i=i, i_inv=i_inv,
        beta=lambda n: CoverElement(n.e, n.w), pi=lambda s: s.t,
        alpha=alpha, lam=action.lambda_action, beta_section=beta_section,
        pi_preimages=lambda t, rng, k: cover_pi_preimages(T, t, rng, k),
        label="cover", extras={"module": M, "cocycle": c, "action": action})
