"""Words over T and its formal inverses, free reduction, and evaluation in T."""

from typing import NamedTuple, Sequence

from .errors import EmptyWord, ParseError
from .semigroup_core import FiniteInverseSemigroup

# the adjoined identity of T^1; never a valid element id
ONE = -1


class Letter(NamedTuple):
    base: int
    sign: int  # +1 for [t], -1 for [t]^-1

    def inverse(self) -> "Letter":
        return Letter(self.base, -self.sign)


Word = tuple  # tuple[Letter, ...]; the empty tuple is epsilon
ReducedWord = tuple

EPSILON: tuple = ()


def letter(base: int, sign: int = 1) -> Letter:
    return Letter(base, sign)


def word(*pairs) -> Word:
    """word(x, (y, -1), z) builds [x][y]^-1[z]."""
    out = []
    for p in pairs:
        if isinstance(p, tuple):
            out.append(Letter(p[0], p[1]))
        else:
            out.append(Letter(p, 1))
    return tuple(out)


def involution(w: Word) -> Word:
    return tuple(Letter(x.base, -x.sign) for x in reversed(w))


def reduce(w: Sequence[Letter]) -> ReducedWord:
    stack = []
    for x in w:
        if stack and stack[-1].base == x.base and stack[-1].sign == -x.sign:
            stack.pop()
        else:
            stack.append(Letter(x.base, x.sign))
    return tuple(stack)


def is_reduced(w: Sequence[Letter]) -> bool:
    return all(not (a.base == b.base and a.sign == -b.sign) for a, b in zip(w, w[1:]))


def concat(u: ReducedWord, v: ReducedWord) -> ReducedWord:
    """Product in FG(T): concatenate and reduce."""
    return reduce(tuple(u) + tuple(v))


def phi(w: Sequence[Letter], T: FiniteInverseSemigroup) -> int:
    if not w:
        raise EmptyWord("phi of the empty word")
    acc = None
    for x in w:
        t = x.base if x.sign > 0 else T.inverse(x.base)
        acc = t if acc is None else T.op(acc, t)
    return acc


def nu(w: ReducedWord, T: FiniteInverseSemigroup) -> int:
    """Value in T^1; ONE for the empty word."""
    return ONE if not w else phi(w, T)


def mul1(T: FiniteInverseSemigroup, x: int, y: int) -> int:
    if x == ONE:
        return y
    if y == ONE:
        return x
    return T.op(x, y)


def leq1(T: FiniteInverseSemigroup, s: int, t: int) -> bool:
    """Natural order on T^1, with t <= 1 iff t is idempotent."""
    if t == ONE:
        return s == ONE or T.is_idempotent(s)
    if s == ONE:
        return False
    return T.leq(s, t)


def cover_member(t: int, w: ReducedWord, T: FiniteInverseSemigroup) -> bool:
    return leq1(T, t, nu(w, T))


def format_word(w: Sequence[Letter], T: FiniteInverseSemigroup) -> str:
    return ",".join(T.names[x.base] + ("" if x.sign > 0 else "^-1") for x in w)


def parse_word(text: str, T: FiniteInverseSemigroup) -> Word:
    """Parse `g,g^-1,h`; the empty string is epsilon."""
    text = text.strip()
    if not text:
        return EPSILON
    out = []
    col = 1
    for tok in text.split(","):
        raw = tok.strip()
        sign = 1
        if raw.endswith("^-1"):
            raw, sign = raw[:-3].strip(), -1
        try:
            out.append(Letter(T.index(raw), sign))
        except KeyError:
            raise ParseError(f"unknown element {raw!r} in word", line=1, column=col) from None
        col += len(tok) + 1
    return tuple(out)
