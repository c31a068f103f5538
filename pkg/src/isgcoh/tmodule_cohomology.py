"""
T-modules over semilattices of finite abelian groups and their cochain complex.

A cochain of degree n is stored as an integer array of shape (|T|,)*n whose
entries are element ids of A.  The coboundary is vectorized and also accepts
a leading batch axis, which is what makes exhaustive enumeration of C^n
cheap at desk scale.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional

import numpy as np

from .errors import (BudgetExceeded, DegreeOutOfRange, NotOrderPreservingCocycle,
                     ParseError, ValidationError, Violation, WitnessMismatch)
from .semigroup_core import FiniteInverseSemigroup, build_semigroup

DEFAULT_BUDGET = 2 ** 20
BATCH = 1 << 13


# ---------------------------------------------------------------------------
# coefficients

class SemilatticeOfAbelianGroups:
    """A commutative inverse semigroup A with its group components A_e.

    `component[a]` is the identity of the component containing a, so
    a <= b in A iff a == component[a] * b.
    """

    def __init__(self, carrier: FiniteInverseSemigroup):
        self.carrier = carrier
        self.names = carrier.names
        self.size = carrier.size
        self.mul = carrier.mul
        self.inv = carrier.inv
        self.component = np.asarray([carrier.r(a) for a in range(carrier.size)], dtype=np.int64)
        self.idempotents = carrier.idempotents
        self.members = {e: tuple(a for a in range(self.size) if self.component[a] == e)
                        for e in self.idempotents}
        self._rows = carrier._rows
        self._inv = carrier._inv
        self._comp = tuple(int(x) for x in self.component)

    def op(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def inverse(self, a: int) -> int:
        return self._inv[a]

    def idem_of(self, a: int) -> int:
        return self._comp[a]

    def leq(self, a: int, b: int) -> bool:
        return self._rows[self._comp[a]][b] == a

    def index(self, name: str) -> int:
        return self.carrier.index(name)


def build_semilattice_of_groups(lattice: FiniteInverseSemigroup, components: dict,
                                transport) -> SemilatticeOfAbelianGroups:
    """Glue finite abelian groups along a semilattice.

    components: lattice element -> (element names, local table, local ids).
    transport(e, f, local) -> local index in component f, for f < e.
    A product a*b with a in A_e, b in A_f is computed in A_{ef} after
    transporting both factors there.
    """
    order = sorted(components)
    offset, names = {}, []
    for e in order:
        offset[e] = len(names)
        names.extend(components[e][0])
    home = []
    for e in order:
        home.extend([(e, i) for i in range(len(components[e][0]))])

    def move(e, m, i):
        return i if e == m else transport(e, m, i)

    n = len(names)
    table = np.zeros((n, n), dtype=np.int64)
    for a, (e, i) in enumerate(home):
        for b, (f, j) in enumerate(home):
            m = lattice.op(e, f)
            tab = components[m][1]
            table[a, b] = offset[m] + tab[move(e, m, i)][move(f, m, j)]
    carrier = build_semigroup(names, table)
    if not (carrier.mul == carrier.mul.T).all():
        raise ValidationError("coefficients are not commutative",
                              [Violation("commutative")])
    A = SemilatticeOfAbelianGroups(carrier)
    for e in order:
        ids = set(range(offset[e], offset[e] + len(components[e][0])))
        idem = [a for a in ids if carrier.is_idempotent(a)]
        if len(idem) != 1 or any(A.idem_of(a) != idem[0] for a in ids):
            raise ValidationError(f"component over {lattice.names[e]} is not a group",
                                  [Violation("component-group", (lattice.names[e],))])
    return A


# ---------------------------------------------------------------------------
# modules

class TModule:
    """(theta, eta) for T acting on A.

    theta is stored as an array over T (-1 off E(T)); eta as a |T| x |A| table.
    """

    def __init__(self, T: FiniteInverseSemigroup, A: SemilatticeOfAbelianGroups,
                 theta: dict, eta):
        self.T = T
        self.A = A
        th = np.full(T.size, -1, dtype=np.int64)
        for e, a in theta.items():
            th[e] = a
        self.theta = th
        self.theta.setflags(write=False)
        self.eta = np.asarray(eta, dtype=np.int64)
        self.eta.setflags(write=False)
        self._eta = tuple(tuple(int(v) for v in row) for row in self.eta)
        r = np.asarray([T.r(t) for t in T.elements()], dtype=np.int64)
        # theta(r(t)) for every t; -1 only if theta is broken
        self.theta_r = th[r]
        self._theta_r = tuple(int(x) for x in self.theta_r)
        self.theta_inv = {int(a): e for e, a in theta.items()}

    def act(self, t: int, a: int) -> int:
        return self._eta[t][a]

    def th(self, e: int) -> int:
        return int(self.theta[e])

    def th_r(self, t: int) -> int:
        return self._theta_r[t]

    def same_structure(self, other: "TModule") -> bool:
        return (np.array_equal(self.theta, other.theta)
                and np.array_equal(self.eta, other.eta))

    def to_json(self) -> dict:
        T, A = self.T, self.A
        comps = {}
        for e in T.idempotents:
            ids = A.members[self.th(e)]
            local = {a: i for i, a in enumerate(ids)}
            comps[T.names[e]] = {
                "elements": [A.names[a] for a in ids],
                "table": [[local[A.op(a, b)] for b in ids] for a in ids],
            }
        return {
            "theta": {T.names[e]: A.names[self.th(e)] for e in T.idempotents},
            "components": comps,
            "eta": {T.names[t]: {A.names[a]: A.names[self._eta[t][a]] for a in range(A.size)}
                    for t in T.elements()},
        }


def build_tmodule(T: FiniteInverseSemigroup, components: dict, theta: dict, eta: dict,
                  transport: Optional[dict] = None) -> TModule:
    """Build a module from named data.

    components: T-idempotent id -> (element names, local table);
    theta: T-idempotent id -> name of the component identity;
    eta: t -> {a name: b name};
    transport: optional (e, f) -> {a name: b name} for f < e.  When absent,
    transport into A_f is read off eta_f, which is what TM1 demands.
    """
    lattice_names = [T.names[e] for e in T.idempotents]
    pos = {e: i for i, e in enumerate(T.idempotents)}
    lat = build_semigroup(lattice_names,
                          [[pos[T.op(e, f)] for f in T.idempotents] for e in T.idempotents])
    comps = {}
    for e, (names, table) in components.items():
        comps[pos[e]] = (list(names), [list(row) for row in table])
    missing = [T.names[e] for e in T.idempotents if pos[e] not in comps]
    if missing:
        raise ValidationError(f"no component for {missing}", [Violation("components", tuple(missing))])
    local = {}
    for le, (names, _) in comps.items():
        for i, nm in enumerate(names):
            if nm in local:
                raise ValidationError(f"duplicate coefficient name {nm}",
                                      [Violation("names", (nm,))])
            local[nm] = (le, i)
    emb = list(T.idempotents)

    def move(le, lf, i):
        src = comps[le][0][i]
        e, f = emb[le], emb[lf]
        if transport is not None and (e, f) in transport:
            tgt = transport[(e, f)][src]
        else:
            tgt = eta[f][src]
        if tgt not in local or local[tgt][0] != lf:
            raise ValidationError(
                f"eta_{T.names[f]}({src}) = {tgt} is not in the component of {T.names[f]}",
                [Violation("TM1", (T.names[f], src))])
        return local[tgt][1]

    A = build_semilattice_of_groups(lat, comps, move)
    th = {}
    for e in T.idempotents:
        name = theta[e]
        a = A.index(name)
        if not A.carrier.is_idempotent(a) or local[name][0] != pos[e]:
            raise ValidationError(f"theta({T.names[e]}) = {name} is not the identity of its component",
                                  [Violation("theta", (T.names[e], name))])
        th[e] = a
    table = np.zeros((T.size, A.size), dtype=np.int64)
    for t in T.elements():
        for a in range(A.size):
            try:
                table[t, a] = A.index(eta[t][A.names[a]])
            except KeyError:
                raise ValidationError(f"eta_{T.names[t]} undefined at {A.names[a]}",
                                      [Violation("eta-total", (T.names[t], A.names[a]))]) from None
    return TModule(T, A, th, table)


def module_from_json(T: FiniteInverseSemigroup, data: dict) -> TModule:
    try:
        comps = {T.index(k): (v["elements"], v["table"]) for k, v in data["components"].items()}
        theta = {T.index(k): v for k, v in data["theta"].items()}
        eta = {T.index(k): dict(v) for k, v in data["eta"].items()}
        transport = None
        if "transport" in data:
            transport = {}
            for key, mp in data["transport"].items():
                e, f = key.split(">")
                transport[(T.index(e.strip()), T.index(f.strip()))] = dict(mp)
    except (KeyError, AttributeError, ValueError) as exc:
        raise ParseError(f"malformed module: {exc}") from None
    return build_tmodule(T, comps, theta, eta, transport)


def validate_tmodule(M: TModule) -> tuple:
    """Exhaustive check of every module axiom. Returns (ok, [Violation])."""
    T, A = M.T, M.A
    tn, an = T.names, A.names
    out = []
    idemA = set(A.idempotents)
    images = [M.th(e) for e in T.idempotents]
    if sorted(images) != sorted(idemA):
        out.append(Violation("theta-bijective", tuple(an[a] for a in images if a >= 0)))
    for e, f in product(T.idempotents, T.idempotents):
        if M.th(T.op(e, f)) != A.op(M.th(e), M.th(f)):
            out.append(Violation("theta-hom", (tn[e], tn[f])))
    for t in T.elements():
        for a, b in product(range(A.size), range(A.size)):
            if M.act(t, A.op(a, b)) != A.op(M.act(t, a), M.act(t, b)):
                out.append(Violation("eta-endomorphism", (tn[t], an[a], an[b])))
                break
    for s, t in product(T.elements(), T.elements()):
        for a in range(A.size):
            if M.act(T.op(s, t), a) != M.act(s, M.act(t, a)):
                out.append(Violation("eta-homomorphism", (tn[s], tn[t], an[a])))
                break
    for e in T.idempotents:
        for a in range(A.size):
            if M.act(e, a) != A.op(M.th(e), a):
                out.append(Violation("TM1", (tn[e], an[a])))
    for s in T.elements():
        for e in T.idempotents:
            if M.act(s, M.th(e)) != M.th(T.product(s, e, T.inverse(s))):
                out.append(Violation("TM2", (tn[s], tn[e])))
    for s in T.elements():
        si = T.inverse(s)
        for a in range(A.size):
            if M.act(si, M.act(s, a)) != A.op(M.th(T.d(s)), a):
                out.append(Violation("relatively-invertible", (tn[s], an[a])))
            if M.act(s, M.act(si, a)) != A.op(M.th(T.r(s)), a):
                out.append(Violation("relatively-invertible", (tn[si], an[a])))
    return (not out, out)


# ---------------------------------------------------------------------------
# cochains

def tuple_products(T: FiniteInverseSemigroup, n: int) -> np.ndarray:
    """P[s1,...,sn] = s1...sn as an n-dimensional array."""
    k = T.size
    P = np.arange(k, dtype=np.int64)
    for _ in range(n - 1):
        P = T.mul[P[..., None], np.arange(k)]
    return P


class Cochain:
    """An element of C^n(T^1, A^1); immutable."""

    def __init__(self, module: TModule, degree: int, values):
        if degree < 1:
            raise DegreeOutOfRange(f"degree {degree} < 1", witness=degree)
        self.module = module
        self.degree = degree
        vals = np.array(values, dtype=np.int64)
        if vals.shape != (module.T.size,) * degree:
            raise ValueError(f"cochain values have shape {vals.shape}")
        vals.setflags(write=False)
        self.values = vals
        self._flat = tuple(int(x) for x in vals.ravel())
        self._k = module.T.size

    def __call__(self, *xs: int) -> int:
        i = 0
        for x in xs:
            i = i * self._k + x
        return self._flat[i]

    def key(self) -> bytes:
        return self.values.tobytes()

    def __eq__(self, other) -> bool:
        return (isinstance(other, Cochain) and self.degree == other.degree
                and np.array_equal(self.values, other.values))

    def __hash__(self) -> int:
        return hash((self.degree, self.key()))

    def __mul__(self, other: "Cochain") -> "Cochain":
        if other.degree != self.degree:
            raise ValueError("degrees differ")
        return Cochain(self.module, self.degree, self.module.A.mul[self.values, other.values])

    def inverse(self) -> "Cochain":
        return Cochain(self.module, self.degree, self.module.A.inv[self.values])

    def __truediv__(self, other: "Cochain") -> "Cochain":
        return self * other.inverse()

    def is_trivial(self) -> bool:
        return self == trivial_cochain(self.module, self.degree)

    def entries(self) -> dict:
        """Non-identity entries keyed by argument tuples."""
        triv = trivial_cochain(self.module, self.degree).values
        out = {}
        for idx in zip(*np.nonzero(self.values != triv)):
            out[tuple(int(i) for i in idx)] = int(self.values[idx])
        return out

    def to_json(self) -> dict:
        T, A = self.module.T, self.module.A
        return {"degree": self.degree,
                "entries": {",".join(T.names[x] for x in k): A.names[v]
                            for k, v in sorted(self.entries().items())}}

    def __repr__(self) -> str:
        return f"Cochain({self.to_json()})"


def trivial_cochain(M: TModule, n: int) -> Cochain:
    return Cochain(M, n, M.theta_r[tuple_products(M.T, n)])


def cochain_from_entries(M: TModule, n: int, entries: dict) -> Cochain:
    """Entries keyed by id tuples; the rest default to the component identity."""
    vals = M.theta_r[tuple_products(M.T, n)].copy()
    for k, v in entries.items():
        vals[tuple(k) if isinstance(k, tuple) else (k,)] = v
    return Cochain(M, n, vals)


def cochain_from_function(M: TModule, n: int, fn) -> Cochain:
    k = M.T.size
    vals = np.zeros((k,) * n, dtype=np.int64)
    for xs in product(range(k), repeat=n):
        vals[xs] = fn(*xs)
    return Cochain(M, n, vals)


def cochain_from_json(M: TModule, data: dict) -> Cochain:
    T, A = M.T, M.A
    try:
        n = int(data["degree"])
        raw = data.get("entries", {})
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed cochain: {exc}") from None
    if n < 1:
        raise DegreeOutOfRange(f"degree {n} < 1", witness=n)
    entries = {}
    for key, val in raw.items():
        parts = [p.strip() for p in key.split(",")] if key else []
        if len(parts) != n:
            raise ParseError(f"entry {key!r} does not have {n} arguments")
        try:
            entries[tuple(T.index(p) for p in parts)] = A.index(val)
        except KeyError as exc:
            raise ParseError(f"unknown name {exc} in entry {key!r}") from None
    return cochain_from_entries(M, n, entries)


def validate_cochain(c: Cochain) -> tuple:
    M = c.module
    want = M.theta_r[tuple_products(M.T, c.degree)]
    have = M.A.component[c.values]
    out = [Violation("component", tuple(M.T.names[i] for i in idx))
           for idx in zip(*np.nonzero(want != have))]
    return (not out, out)


# ---------------------------------------------------------------------------
# coboundary

def coboundary_values(M: TModule, vals: np.ndarray, n: int) -> np.ndarray:
    """delta^n on raw arrays; vals may carry leading batch axes."""
    k = M.T.size
    Amul, Ainv, Tmul = M.A.mul, M.A.inv, M.T.mul
    batch = vals.shape[:vals.ndim - n]
    lead = (slice(None),) * len(batch)
    s = list(np.indices((k,) * (n + 1), dtype=np.int64))
    acc = M.eta[s[0], vals[lead + tuple(s[1:])]]
    for i in range(1, n + 1):
        args = s[:i - 1] + [Tmul[s[i - 1], s[i]]] + s[i + 1:]
        term = vals[lead + tuple(args)]
        if i % 2:
            term = Ainv[term]
        acc = Amul[acc, term]
    last = vals[lead + tuple(s[:n])]
    if (n + 1) % 2:
        last = Ainv[last]
    return Amul[acc, last]


def coboundary(f: Cochain) -> Cochain:
    if f.degree < 1:
        raise DegreeOutOfRange(f"degree {f.degree} < 1", witness=f.degree)
    return Cochain(f.module, f.degree + 1, coboundary_values(f.module, f.values, f.degree))


def is_cocycle(c: Cochain) -> bool:
    return coboundary(c).is_trivial()


# ---------------------------------------------------------------------------
# enumeration

@dataclass
class CochainSpace:
    """Enumeration plan for C^n or C^n_<=, in lexicographic order of free entries."""

    module: TModule
    degree: int
    order_preserving: bool
    free: np.ndarray            # flat tuple indices chosen freely
    choices: list               # per free index, sorted admissible element ids
    forced: list = field(default_factory=list)  # (flat index, identity id, [upper flat indices])

    @property
    def bound(self) -> int:
        out = 1
        for ch in self.choices:
            out *= len(ch)
        return out


def cochain_space(M: TModule, n: int, order_preserving: bool = False) -> CochainSpace:
    T, A = M.T, M.A
    k = T.size
    comp = M.theta_r[tuple_products(T, n)].ravel()
    tuples = list(product(range(k), repeat=n))
    if not order_preserving:
        free = np.arange(k ** n)
        return CochainSpace(M, n, False, free, [A.members[int(comp[i])] for i in free])
    tops = set(T.maximal_elements())
    flat = {t: i for i, t in enumerate(tuples)}
    free, forced = [], []
    for i, xs in enumerate(tuples):
        if all(x in tops for x in xs):
            free.append(i)
            continue
        uppers = [[m for m in tops if T.leq(x, m)] for x in xs]
        above = [flat[ms] for ms in product(*uppers)]
        forced.append((i, int(comp[i]), above))
    return CochainSpace(M, n, True, np.asarray(free),
                        [A.members[int(comp[i])] for i in free], forced)


def iter_cochain_batches(space: CochainSpace, budget: Optional[int] = DEFAULT_BUDGET,
                         batch: int = BATCH) -> Iterator[np.ndarray]:
    """Yield arrays of shape (B, |T|,...,|T|) covering the space exactly once."""
    M, n = space.module, space.degree
    k = M.T.size
    total = space.bound
    if budget is not None and total > budget:
        raise BudgetExceeded(f"|C^{n}| = {total} exceeds budget {budget}", size=total, budget=budget)
    radices = [len(ch) for ch in space.choices]
    lookup = [np.asarray(ch, dtype=np.int64) for ch in space.choices]
    Amul = M.A.mul
    for lo in range(0, total, batch):
        hi = min(total, lo + batch)
        digits = np.unravel_index(np.arange(lo, hi), radices) if radices else ()
        flat = np.zeros((hi - lo, k ** n), dtype=np.int64)
        for j, idx in enumerate(space.free):
            flat[:, idx] = lookup[j][digits[j]]
        keep = np.ones(hi - lo, dtype=bool)
        for idx, ident, above in space.forced:
            cand = Amul[ident, flat[:, above[0]]]
            for u in above[1:]:
                keep &= Amul[ident, flat[:, u]] == cand
            flat[:, idx] = cand
        flat = flat[keep]
        if len(flat):
            yield flat.reshape((len(flat),) + (k,) * n)


def enumerate_cochains(M: TModule, n: int, order_preserving: bool = False,
                       budget: Optional[int] = DEFAULT_BUDGET) -> Iterator[Cochain]:
    for block in iter_cochain_batches(cochain_space(M, n, order_preserving), budget):
        for vals in block:
            yield Cochain(M, n, vals)


def cocycle_values(M: TModule, n: int, order_preserving: bool = False,
                   budget: Optional[int] = DEFAULT_BUDGET) -> np.ndarray:
    triv = trivial_cochain(M, n + 1).values
    found = []
    for block in iter_cochain_batches(cochain_space(M, n, order_preserving), budget):
        img = coboundary_values(M, block, n)
        ok = (img == triv).reshape(len(block), -1).all(axis=1)
        found.append(block[ok])
    k = M.T.size
    return np.concatenate(found) if found else np.zeros((0,) + (k,) * n, dtype=np.int64)


def coboundary_image_values(M: TModule, n: int, order_preserving: bool = False,
                            budget: Optional[int] = DEFAULT_BUDGET) -> np.ndarray:
    """Distinct elements of delta^{n-1}(C^{n-1}), as rows of degree-n arrays."""
    seen = {}
    for block in iter_cochain_batches(cochain_space(M, n - 1, order_preserving), budget):
        img = coboundary_values(M, block, n - 1)
        for row in img:
            seen.setdefault(row.tobytes(), row)
    rows = [seen[key] for key in sorted(seen, key=lambda b: tuple(np.frombuffer(b, dtype=np.int64)))]
    return np.stack(rows)


@dataclass
class CohomologyResult:
    degree: int
    order_preserving: bool
    order_z: int
    order_b: Optional[int]      # None when B^n is not defined (n = 1)
    order_h: int
    representatives: list       # [Cochain], least lexicographic per coset
    note: str = ""

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "order_preserving": self.order_preserving,
            "Z": self.order_z,
            "B": self.order_b,
            "H": self.order_h,
            "representatives": [c.to_json() for c in self.representatives],
            "note": self.note,
        }


def cohomology(M: TModule, n: int, order_preserving: bool = False,
               budget: Optional[int] = DEFAULT_BUDGET) -> CohomologyResult:
    if n < 1:
        raise DegreeOutOfRange(f"degree {n} < 1", witness=n)
    Z = cocycle_values(M, n, order_preserving, budget)
    zrows = sorted({z.tobytes(): z for z in Z}.items(),
                   key=lambda kv: tuple(kv[1].ravel()))
    note = ""
    if n == 1:
        B = trivial_cochain(M, 1).values[None]
        order_b = None
        note = "degree-0 cochains are not defined here; H^1 is reported as Z^1"
    else:
        B = coboundary_image_values(M, n, order_preserving, budget)
        order_b = len(B)
    covered, reps = set(), []
    Amul = M.A.mul
    for key, z in zrows:
        if key in covered:
            continue
        reps.append(Cochain(M, n, z))
        for row in Amul[z[None], B]:
            covered.add(row.tobytes())
    order_h = len(reps)
    if order_b is not None:
        assert len(zrows) == order_h * order_b, "Z^n is not a union of B^n cosets"
    return CohomologyResult(n, order_preserving, len(zrows), order_b, order_h, reps, note)


def find_coboundary_witness(target: Cochain, order_preserving: bool = True,
                            budget: Optional[int] = DEFAULT_BUDGET) -> Optional[Cochain]:
    """Least lexicographic d (in the enumeration order) with delta d == target."""
    M, n = target.module, target.degree
    if n < 2:
        raise DegreeOutOfRange("a coboundary witness needs degree >= 2", witness=n)
    want = target.values
    for block in iter_cochain_batches(cochain_space(M, n - 1, order_preserving), budget):
        img = coboundary_values(M, block, n - 1)
        hit = np.nonzero((img == want).reshape(len(block), -1).all(axis=1))[0]
        if len(hit):
            return Cochain(M, n - 1, block[hit[0]])
    return None


# ---------------------------------------------------------------------------
# order-preserving and normalized cochains

def is_order_preserving(f: Cochain, cross_check: bool = True) -> bool:
    """Monotonicity in each argument; optionally cross-checked against the idempotent-pattern test."""
    M = f.module
    T, A = M.T, M.A
    pairs = [(s, t) for s in T.elements() for t in T.elements() if s != t and T.leq(s, t)]
    ok = True
    vals = f.values
    for axis in range(f.degree):
        for s, t in pairs:
            lo = np.take(vals, s, axis=axis)
            hi = np.take(vals, t, axis=axis)
            if not (A.mul[A.component[lo], hi] == lo).all():
                ok = False
                break
        if not ok:
            break
    if cross_check:
        assert ok == _order_preserving_by_idempotents(f), "order-preserving characterizations disagree"
    return ok


def _order_preserving_by_idempotents(f: Cochain) -> bool:
    """f(.., e x_i, ..) == theta(r(x_1...x_{i-1} e)) f(x) for all x, i, e."""
    M = f.module
    T, A = M.T, M.A
    n = f.degree
    for xs in product(T.elements(), repeat=n):
        base = f(*xs)
        for i in range(n):
            for e in T.idempotents:
                ys = list(xs)
                ys[i] = T.op(e, xs[i])
                pre = T.product(*xs[:i], e) if i else e
                if f(*ys) != A.op(M.th_r(pre), base):
                    return False
    return True


def _idempotent_patterns(T: FiniteInverseSemigroup, n: int):
    """Yield (args, product) for the three normalization patterns."""
    E = T.idempotents
    for e in E:
        for xs in product(T.elements(), repeat=n - 1):
            args = (e, T.op(e, xs[0])) + xs[1:] if n > 1 else (e,)
            yield "left", args
    for i in range(1, n - 1):
        for e in E:
            for xs in product(T.elements(), repeat=n):
                args = xs[:i - 1] + (T.op(xs[i - 1], e), e, T.op(e, xs[i + 1])) + xs[i + 2:]
                yield "middle", args
    if n > 1:
        for e in E:
            for xs in product(T.elements(), repeat=n - 1):
                args = xs[:n - 2] + (T.op(xs[n - 2], e), e)
                yield "right", args


def normalization_violations(c: Cochain) -> list:
    """Instances of the three normalization equations that fail.

    Each pattern's right-hand side is theta(r(product of its arguments)),
    which coincides with the stated product since e is idempotent.
    """
    M = c.module
    out = []
    for kind, args in _idempotent_patterns(M.T, c.degree):
        if c(*args) != M.th_r(M.T.product(*args)):
            out.append(Violation(f"normalized-{kind}", tuple(M.T.names[a] for a in args)))
    return out


def is_normalized(c: Cochain) -> bool:
    return not normalization_violations(c)


def is_strongly_normalized(c: Cochain) -> bool:
    M = c.module
    T = M.T
    triv = trivial_cochain(M, c.degree).values
    vals = c.values
    for axis in range(c.degree):
        for e in T.idempotents:
            if not (np.take(vals, e, axis=axis) == np.take(triv, e, axis=axis)).all():
                return False
    return True


def normalized_degree3_criterion(c: Cochain) -> bool:
    """c(t,e,e) = theta(tet^-1) and c(e,e,t) = theta(ett^-1); valid on Z^3_<=."""
    if c.degree != 3:
        raise DegreeOutOfRange("criterion is stated for degree 3", witness=c.degree)
    M = c.module
    T = M.T
    for t in T.elements():
        for e in T.idempotents:
            if c(t, e, e) != M.th(T.product(t, e, T.inverse(t))):
                return False
            if c(e, e, t) != M.th(T.product(e, t, T.inverse(t))):
                return False
    return True


def normalize_cocycle(c: Cochain) -> tuple:
    """Return (c~, d) with c~ = c * delta^2 d normalized and order-preserving."""
    if c.degree != 3 or not is_cocycle(c) or not is_order_preserving(c):
        raise NotOrderPreservingCocycle("input is not an order-preserving 3-cocycle")
    M = c.module
    T, A = M.T, M.A

    def d_entry(x, y):
        return A.op(A.inverse(c(T.r(x), x, y)), c(x, y, T.d(y)))

    d = cochain_from_function(M, 2, d_entry)
    ct = c * coboundary(d)
    return ct, d


def strongly_normalize_witness(c: Cochain, d: Cochain) -> Cochain:
    """Given delta^2 d = c with c normalized, return a strongly normalized witness."""
    if not coboundary(d) == c:
        raise WitnessMismatch("delta^2 d differs from c")
    M = d.module
    T, A = M.T, M.A
    u = Cochain(M, 1, [A.inverse(d(t, T.inverse(t))) for t in T.elements()])
    dt = d * coboundary(u)
    if not coboundary(dt) == c:
        raise WitnessMismatch("delta^2 of the adjusted witness differs from c")
    if not is_strongly_normalized(dt):
        raise WitnessMismatch("adjusted witness is not strongly normalized; "
                              "is c normalized and d order-preserving?")
    return dt


@dataclass
class CohomologousWitness:
    d: Cochain
    route: str  # "constructive" or "search"


def find_cohomologous_witness(c: Cochain, c2: Cochain, order_preserving: bool = True,
                              budget: Optional[int] = DEFAULT_BUDGET) -> Optional[CohomologousWitness]:
    """Find d with c = (delta^2 d) c2; None when none exists in the searched space."""
    if order_preserving:
        n1, d1 = normalize_cocycle(c)
        n2, d2 = normalize_cocycle(c2)
        if n1 == n2:
            d = d2 / d1
            if coboundary(d) * c2 == c:
                return CohomologousWitness(d, "constructive")
    d = find_coboundary_witness(c / c2, order_preserving, budget)
    return None if d is None else CohomologousWitness(d, "search")
