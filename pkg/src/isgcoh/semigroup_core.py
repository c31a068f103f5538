"""
Finite inverse semigroups given by multiplication tables.

Elements are dense integer ids 0..n-1; the names live in a sidecar tuple and
are used only for I/O.  Everything derived from the table (inverses,
idempotents, d/r, the natural partial order) is computed once on
construction and never mutated afterwards.

>>> S = chain_semilattice(["e", "f"])
>>> [S.names[x] for x in S.idempotents]
['e', 'f']
>>> S.leq(1, 0), S.leq(0, 1)
(True, False)
"""

from dataclasses import dataclass
from itertools import product
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import InvalidKernelSystem, NotAssociative, NotInverse


class FiniteInverseSemigroup:
    """An inverse semigroup on elements 0..n-1 with a validated table.

    Use `build_semigroup` rather than calling this directly.
    """

    def __init__(self, names: Sequence[str], table, inv, identity: Optional[int]):
        self.names = tuple(str(x) for x in names)
        self.mul = np.asarray(table, dtype=np.int64)
        self.mul.setflags(write=False)
        self._rows = tuple(tuple(int(v) for v in row) for row in self.mul)
        self.inv = np.asarray(inv, dtype=np.int64)
        self.inv.setflags(write=False)
        self._inv = tuple(int(v) for v in self.inv)
        n = len(self.names)
        self.size = n
        self.identity = identity
        diag = self.mul[np.arange(n), np.arange(n)]
        self.is_idem = diag == np.arange(n)
        self.idempotents = tuple(int(x) for x in np.nonzero(self.is_idem)[0])
        idx = np.arange(n)
        self._r = tuple(int(v) for v in self.mul[idx, self.inv])
        self._d = tuple(int(v) for v in self.mul[self.inv, idx])
        # s <= t  iff  s = r(s) t
        r = np.asarray(self._r)
        self.order = self.mul[r[:, None], idx[None, :]] == idx[:, None]
        self.order.setflags(write=False)
        self._index = {name: i for i, name in enumerate(self.names)}

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"FiniteInverseSemigroup({list(self.names)})"

    def op(self, x: int, y: int) -> int:
        return self._rows[x][y]

    def product(self, *xs: int) -> int:
        acc = xs[0]
        for x in xs[1:]:
            acc = self._rows[acc][x]
        return acc

    def inverse(self, x: int) -> int:
        return self._inv[x]

    def r(self, x: int) -> int:
        return self._r[x]

    def d(self, x: int) -> int:
        return self._d[x]

    def is_idempotent(self, x: int) -> bool:
        return bool(self.is_idem[x])

    def leq(self, s: int, t: int) -> bool:
        return bool(self.order[s, t])

    def index(self, name: str) -> int:
        return self._index[name]

    def elements(self) -> range:
        return range(self.size)

    def maximal_elements(self) -> tuple:
        n = self.size
        return tuple(t for t in range(n)
                     if not any(self.order[t, u] and u != t for u in range(n)))

    def to_json(self) -> dict:
        return {"elements": list(self.names), "table": self.mul.tolist()}


def build_semigroup(elems: Sequence[str], mul_table) -> FiniteInverseSemigroup:
    """Validate a multiplication table and return the inverse semigroup.

    Raises NotAssociative with the first failing triple and NotInverse with
    the first element lacking a unique inverse.
    """
    n = len(elems)
    table = np.asarray(mul_table, dtype=np.int64)
    if table.shape != (n, n):
        raise ValueError(f"table must be {n}x{n}, got {table.shape}")
    if n == 0:
        raise ValueError("empty semigroup")
    if table.min() < 0 or table.max() >= n:
        raise ValueError("table entries out of range")
    # (xy)z == x(yz) for all triples, vectorized
    left = table[table[:, :, None], np.arange(n)[None, None, :]]
    right = table[np.arange(n)[:, None, None], table[None, :, :]]
    bad = np.argwhere(left != right)
    if len(bad):
        x, y, z = (int(v) for v in bad[0])
        raise NotAssociative(
            f"({elems[x]}{elems[y]}){elems[z]} != {elems[x]}({elems[y]}{elems[z]})",
            witness=(elems[x], elems[y], elems[z]))
    inv = []
    for s in range(n):
        cands = [t for t in range(n)
                 if table[table[s, t], s] == s and table[table[t, s], t] == t]
        if len(cands) != 1:
            raise NotInverse(f"{elems[s]} has {len(cands)} inverses", witness=(elems[s],))
        inv.append(cands[0])
    idem = [e for e in range(n) if table[e, e] == e]
    for e, f in product(idem, idem):
        if table[e, f] != table[f, e]:
            raise NotInverse(f"idempotents {elems[e]}, {elems[f]} do not commute",
                             witness=(elems[e], elems[f]))
    identity = None
    for u in range(n):
        if all(table[u, x] == x and table[x, u] == x for x in range(n)):
            identity = u
            break
    return FiniteInverseSemigroup(elems, table, inv, identity)


# ---------------------------------------------------------------------------
# constructors used by fixtures, tests and demos

def table_from_function(elements: Sequence, op) -> list:
    index = {x: i for i, x in enumerate(elements)}
    return [[index[op(x, y)] for y in elements] for x in elements]


def cyclic_group(n: int, names: Optional[Sequence[str]] = None) -> FiniteInverseSemigroup:
    names = list(names) if names is not None else [str(i) for i in range(n)]
    return build_semigroup(names, [[(i + j) % n for j in range(n)] for i in range(n)])


def chain_semilattice(names: Sequence[str]) -> FiniteInverseSemigroup:
    """Chain names[0] > names[1] > ...; the product is the minimum."""
    k = len(names)
    return build_semigroup(names, [[max(i, j) for j in range(k)] for i in range(k)])


def direct_product(S: FiniteInverseSemigroup, T: FiniteInverseSemigroup,
                   sep: str = ":") -> FiniteInverseSemigroup:
    pairs = [(s, t) for s in S.elements() for t in T.elements()]
    names = [f"{S.names[s]}{sep}{T.names[t]}" for s, t in pairs]
    table = table_from_function(pairs, lambda a, b: (S.op(a[0], b[0]), T.op(a[1], b[1])))
    return build_semigroup(names, table)


def symmetric_inverse_monoid(n: int) -> FiniteInverseSemigroup:
    """All partial injections of {0..n-1}, composed right to left (x*y = x after y)."""
    points = range(n)
    maps = []
    for images in product(*([[None, *points]] * n)):
        vals = [v for v in images if v is not None]
        if len(vals) == len(set(vals)):
            maps.append(images)

    def compose(f, g):
        return tuple(None if g[i] is None else f[g[i]] for i in points)

    def show(f):
        return "{" + ",".join(f"{i}>{f[i]}" for i in points if f[i] is not None) + "}"

    return build_semigroup([show(f) for f in maps], table_from_function(maps, compose))


def adjoin_identity(S: FiniteInverseSemigroup, name: str = "1") -> FiniteInverseSemigroup:
    n = S.size
    table = [list(row) + [i] for i, row in enumerate(S.mul.tolist())]
    table.append(list(range(n + 1)))
    return build_semigroup(list(S.names) + [name], table)


def idempotent_semilattice(S: FiniteInverseSemigroup):
    """E(S) as a semilattice in its own right, plus the embedding list."""
    emb = list(S.idempotents)
    pos = {e: i for i, e in enumerate(emb)}
    table = [[pos[S.op(e, f)] for f in emb] for e in emb]
    return build_semigroup([S.names[e] for e in emb], table), emb


# ---------------------------------------------------------------------------
# morphisms, components, kernel systems

@dataclass(frozen=True)
class SemigroupMorphism:
    source: FiniteInverseSemigroup
    target: FiniteInverseSemigroup
    map: tuple

    def __post_init__(self):
        S, T, m = self.source, self.target, self.map
        if len(m) != S.size:
            raise ValueError("morphism table has the wrong length")
        for s, t in product(S.elements(), S.elements()):
            if m[S.op(s, t)] != T.op(m[s], m[t]):
                raise ValueError(f"not a homomorphism at ({S.names[s]}, {S.names[t]})")
        for s in S.elements():
            assert m[S.inverse(s)] == T.inverse(m[s])

    def __call__(self, s: int) -> int:
        return self.map[s]


def clifford_components(S: FiniteInverseSemigroup) -> Optional[dict]:
    """Group components {e: [s with ss^-1 = s^-1s = e]} when idempotents are central."""
    for e in S.idempotents:
        for s in S.elements():
            if S.op(e, s) != S.op(s, e):
                return None
    comps = {e: [] for e in S.idempotents}
    for s in S.elements():
        comps[S.r(s)].append(s)
    return comps


@dataclass(frozen=True)
class GroupKernelNormalSystem:
    """A conjugation-closed subsemigroup K that is a disjoint union of groups over E(S)."""

    ambient: FiniteInverseSemigroup
    carrier: frozenset

    def __post_init__(self):
        S, K = self.ambient, self.carrier
        for e in S.idempotents:
            if e not in K:
                raise InvalidKernelSystem(f"idempotent {S.names[e]} missing",
                                          witness=("contains E(S)", S.names[e]))
        for k in K:
            if S.r(k) != S.d(k):
                raise InvalidKernelSystem(f"{S.names[k]} is not in a group component",
                                          witness=("group components", S.names[k]))
        for a, b in product(K, K):
            if S.op(a, b) not in K:
                raise InvalidKernelSystem("not a subsemigroup",
                                          witness=("subsemigroup", S.names[a], S.names[b]))
        for s, k in product(S.elements(), K):
            if S.product(s, k, S.inverse(s)) not in K:
                raise InvalidKernelSystem("not closed under conjugation",
                                          witness=("conjugation", S.names[s], S.names[k]))


def quotient_by_kernel_system(S: FiniteInverseSemigroup, K: GroupKernelNormalSystem):
    """Quotient by the idempotent-separating congruence with kernel K.

    s ~ t iff d(s) = d(t) and s t^-1 in K.  The class representative is the
    least element id; the quotient reuses the representatives' names.
    """
    carrier = K.carrier
    n = S.size
    rel = np.zeros((n, n), dtype=bool)
    for s, t in product(S.elements(), S.elements()):
        rel[s, t] = S.d(s) == S.d(t) and S.op(s, S.inverse(t)) in carrier
    if not (rel == rel.T).all() or not rel[np.arange(n), np.arange(n)].all():
        raise InvalidKernelSystem("induced relation is not an equivalence", witness=("equivalence",))
    if ((rel.astype(int) @ rel.astype(int) > 0) & ~rel).any():
        raise InvalidKernelSystem("induced relation is not transitive", witness=("equivalence",))
    rep = [int(np.nonzero(rel[s])[0].min()) for s in range(n)]
    for s, t, u in product(S.elements(), S.elements(), S.elements()):
        if rel[s, t] and (not rel[S.op(s, u), S.op(t, u)] or not rel[S.op(u, s), S.op(u, t)]):
            raise InvalidKernelSystem("induced relation is not a congruence",
                                      witness=("congruence", S.names[s], S.names[t], S.names[u]))
    reps = sorted(set(rep))
    pos = {r: i for i, r in enumerate(reps)}
    table = [[pos[rep[S.op(a, b)]] for b in reps] for a in reps]
    T = build_semigroup([S.names[r] for r in reps], table)
    pi = SemigroupMorphism(S, T, tuple(pos[rep[s]] for s in range(n)))
    fibre = frozenset(s for s in S.elements() if T.is_idempotent(pi(s)))
    if fibre != frozenset(carrier):
        raise InvalidKernelSystem("preimage of E(T) differs from K", witness=("fibres",))
    return T, pi


class FInverseVerdict(NamedTuple):
    is_f_inverse: bool
    max_map: Optional[tuple]


def sigma_classes(T: FiniteInverseSemigroup) -> list:
    """Connected components of 'has a common lower bound'; each sorted by id."""
    parent = list(T.elements())

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in T.elements():
        above = [s for s in T.elements() if T.order[u, s]]
        for s in above[1:]:
            parent[find(s)] = find(above[0])
    groups = {}
    for t in T.elements():
        groups.setdefault(find(t), []).append(t)
    return sorted(groups.values())


def is_f_inverse_monoid(T: FiniteInverseSemigroup) -> FInverseVerdict:
    if T.identity is None:
        return FInverseVerdict(False, None)
    max_map = [None] * T.size
    for cls in sigma_classes(T):
        tops = [m for m in cls if all(T.order[x, m] for x in cls)]
        if not tops:
            return FInverseVerdict(False, None)
        for x in cls:
            max_map[x] = tops[0]
    return FInverseVerdict(True, tuple(max_map))


def check_idempotent_separating(pi: SemigroupMorphism) -> bool:
    images = [pi(e) for e in pi.source.idempotents]
    return len(images) == len(set(images))
