"""Ordinal notations below Gamma_0 built from the binary Veblen function.

A notation is either zero or a weakly decreasing sum of principal terms
``Phi(a, b)``.  Every constructor returns a normal form, so structural
equality coincides with ordinal equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key, lru_cache, total_ordering
from itertools import combinations_with_replacement
from typing import Iterable

LT, EQ, GT = -1, 0, 1


class OrdinalError(ValueError):
    pass


@total_ordering
@dataclass(frozen=True)
class Ord:
    terms: tuple["Phi", ...] = ()

    def is_zero(self) -> bool:
        return not self.terms

    def is_principal(self) -> bool:
        return len(self.terms) == 1

    def head(self) -> "Phi":
        return self.terms[0]

    def __lt__(self, other):
        if isinstance(other, _Gamma0):
            return True
        if not isinstance(other, Ord):
            return NotImplemented
        return compare(self, other) == LT

    def __add__(self, other: "Ord") -> "Ord":
        return add(self, other)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Ord({to_text(self)})"


@dataclass(frozen=True)
class Phi:
    a: Ord
    b: Ord


class _Gamma0:
    """Exclusive upper bound; never enters arithmetic."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __repr__(self):
        return "G0"

    __str__ = __repr__


G0 = _Gamma0()
ZERO = Ord()


def _cmp_term(s: Phi, t: Phi) -> int:
    if s == t:
        return EQ
    c = compare(s.a, t.a)
    if c == EQ:
        return compare(s.b, t.b)
    if c == LT:
        # phi_a b < phi_c d  iff  b < phi_c d
        return LT if compare(s.b, Ord((t,))) == LT else GT
    # a > c: phi_a b < phi_c d iff phi_a b <= d
    return LT if compare(Ord((s,)), t.b) != GT else GT


@lru_cache(maxsize=None)
def compare(x, y) -> int:
    """Three-way comparison of normal forms (G0 is above everything)."""
    if isinstance(x, _Gamma0) or isinstance(y, _Gamma0):
        if x is y:
            return EQ
        return GT if isinstance(x, _Gamma0) else LT
    for s, t in zip(x.terms, y.terms):
        c = _cmp_term(s, t)
        if c != EQ:
            return c
    n, m = len(x.terms), len(y.terms)
    return EQ if n == m else (LT if n < m else GT)


def _check(x):
    if isinstance(x, _Gamma0):
        raise OrdinalError("G0 is only a bound and cannot enter arithmetic")
    return x


def veblen(a: Ord, b: Ord) -> Ord:
    _check(a), _check(b)
    if b.is_principal() and compare(b.head().a, a) == GT:
        return b  # b is already a fixed point of phi_a
    return Ord((Phi(a, b),))


def add(x: Ord, y: Ord) -> Ord:
    _check(x), _check(y)
    if y.is_zero():
        return x
    lead = y.terms[0]
    keep = [t for t in x.terms if _cmp_term(t, lead) != LT]
    return Ord(tuple(keep) + y.terms)


def natural_sum(x: Ord, y: Ord) -> Ord:
    _check(x), _check(y)
    out: list[Phi] = []
    i = j = 0
    xs, ys = x.terms, y.terms
    while i < len(xs) and j < len(ys):
        if _cmp_term(xs[i], ys[j]) != LT:
            out.append(xs[i])
            i += 1
        else:
            out.append(ys[j])
            j += 1
    out.extend(xs[i:])
    out.extend(ys[j:])
    return Ord(tuple(out))


def finite(n: int) -> Ord:
    if n < 0:
        raise OrdinalError("negative ordinal")
    return Ord((ONE_TERM,) * n)


ONE_TERM = Phi(ZERO, ZERO)
ONE = Ord((ONE_TERM,))
TWO = finite(2)
OMEGA = veblen(ZERO, ONE)
EPS0 = veblen(ONE, ZERO)


def omega_exp(x: Ord) -> Ord:
    return veblen(ZERO, x)


def omega_tower(n: int, x: Ord) -> Ord:
    for _ in range(n):
        x = omega_exp(x)
    return x


def epsilon(x: Ord) -> Ord:
    return veblen(ONE, x)


def succ(x: Ord) -> Ord:
    return add(x, ONE)


def omega_times(n: int) -> Ord:
    return Ord((OMEGA.head(),) * n)


def hat(x: Ord) -> Ord:
    """Least epsilon fixed point strictly above ``x``.

    The fixed points of ``epsilon`` are exactly the values of ``phi_2``.  If
    the leading term of ``x`` is such a value ``phi_2(g)`` the answer is
    ``phi_2(g + 1)``; otherwise it is determined by the argument of the
    leading term alone.
    """
    _check(x)
    while True:
        if x.is_zero():
            return veblen(TWO, ZERO)
        t = x.head()
        if compare(t.a, ONE) == GT:
            g = t.b if t.a == TWO else Ord((t,))
            return veblen(TWO, succ(g))
        x = t.b


def beta_sequence(n: int) -> Ord:
    if n < 0:
        raise OrdinalError("negative index")
    if n > 8:
        raise OrdinalError("depth overflow: beta_sequence supports n <= 8")
    b = EPS0
    for _ in range(n):
        b = veblen(b, ZERO)
    return b


def is_normal(x: Ord) -> bool:
    for t in x.terms:
        if not (is_normal(t.a) and is_normal(t.b)):
            return False
        if t.b.is_principal() and compare(t.b.head().a, t.a) == GT:
            return False
    return all(_cmp_term(s, t) != LT for s, t in zip(x.terms, x.terms[1:]))


def depth(x: Ord) -> int:
    if x.is_zero():
        return 0
    if len(x.terms) == 1:
        t = x.head()
        return 1 + max(depth(t.a), depth(t.b))
    return 1 + max(depth(Ord((t,))) for t in x.terms)


def enumerate_notations(max_depth: int, width: int = 2) -> list[Ord]:
    """All normal forms whose depth is at most ``max_depth``.

    A principal term adds one level over its arguments and a sum of two or
    more terms adds one level over its summands; sums use at most ``width``
    summands.
    """
    levels: list[set[Ord]] = [{ZERO}]
    for _ in range(max_depth):
        prev = sorted(levels[-1], key=_sort_key)
        new = set(prev)
        for a in prev:
            for b in prev:
                new.add(veblen(a, b))
        principals = sorted({x for x in prev if x.is_principal()}, key=_sort_key)
        for k in range(2, width + 1):
            for combo in combinations_with_replacement(principals, k):
                s = ZERO
                for p in sorted(combo, key=_sort_key, reverse=True):
                    s = natural_sum(s, p)
                new.add(s)
        levels.append(new)
    return sorted(levels[-1], key=_sort_key)


_sort_key = cmp_to_key(lambda x, y: compare(x, y))


def max_ord(xs: Iterable[Ord]) -> Ord:
    best = ZERO
    for x in xs:
        if compare(x, best) == GT:
            best = x
    return best


# ---------------------------------------------------------------- text syntax

def to_text(x) -> str:
    """Machine syntax accepted by :func:`parse_ord`."""
    if isinstance(x, _Gamma0):
        return "G0"
    if x.is_zero():
        return "0"
    n = _finite_value(x)
    if n is not None:
        return str(n)
    if x == OMEGA:
        return "w"
    if x == EPS0:
        return "e0"
    if len(x.terms) == 1:
        t = x.head()
        return f"(phi {to_text(t.a)} {to_text(t.b)})"
    parts = [to_text(Ord((t,))) for t in x.terms]
    return "(+ " + " ".join(parts) + ")"


def _finite_value(x: Ord):
    if all(t == ONE_TERM for t in x.terms):
        return len(x.terms)
    return None


_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def render(x) -> str:
    """Human-readable rendering, e.g. ``φ₁0 + ω``."""
    if isinstance(x, _Gamma0):
        return "Γ₀"
    if x.is_zero():
        return "0"
    groups: list[tuple[Phi, int]] = []
    for t in x.terms:
        if groups and groups[-1][0] == t:
            groups[-1] = (t, groups[-1][1] + 1)
        else:
            groups.append((t, 1))
    out = []
    for t, n in groups:
        if t == ONE_TERM:
            out.append(str(n))
            continue
        s = _render_term(t)
        out.append(s if n == 1 else f"{s}·{n}")
    return " + ".join(out)


def _wrap(x: Ord) -> str:
    s = render(x)
    return s if s.isdigit() or s == "ω" else f"({s})"


def _render_term(t: Phi) -> str:
    if t.a.is_zero():
        if t.b == ONE:
            return "ω"
        return f"ω^{_wrap(t.b)}"
    n = _finite_value(t.a)
    sub = str(n).translate(_SUB) if n is not None else "_" + _wrap(t.a)
    return f"φ{sub}{_wrap(t.b)}"


def _tokens(text: str) -> list[str]:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def parse_ord(text):
    """Parse ``0``, digits, ``w``, ``eN``, ``(phi a b)``, ``(+ ...)``, ``(nsum a b)``, ``G0``.

    Also accepts an already tokenized nested list (used by the formula parser).
    """
    if isinstance(text, str):
        toks = _tokens(text)
        if not toks:
            raise OrdinalError("empty ordinal")
        tree, rest = _read(toks, 0)
        if rest != len(toks):
            raise OrdinalError(f"trailing input in ordinal: {text!r}")
    else:
        tree = text
    return _build(tree)


def _read(toks, i):
    if toks[i] == "(":
        out = []
        i += 1
        while i < len(toks) and toks[i] != ")":
            node, i = _read(toks, i)
            out.append(node)
        if i >= len(toks):
            raise OrdinalError("unbalanced parentheses in ordinal")
        return out, i + 1
    if toks[i] == ")":
        raise OrdinalError("unexpected ')' in ordinal")
    return toks[i], i + 1


def _build(tree):
    if isinstance(tree, str):
        if tree == "G0":
            return G0
        if tree.isdigit():
            return finite(int(tree))
        if tree in ("w", "ω"):
            return OMEGA
        if tree[0] == "e" and tree[1:].isdigit():
            return epsilon(finite(int(tree[1:])))
        raise OrdinalError(f"unknown ordinal atom {tree!r}")
    if not tree:
        raise OrdinalError("empty ordinal form")
    head, args = tree[0], [_build(a) for a in tree[1:]]
    if any(isinstance(a, _Gamma0) for a in args):
        raise OrdinalError("G0 is only a bound and cannot enter arithmetic")
    if head == "phi" and len(args) == 2:
        return veblen(*args)
    if head == "+":
        out = ZERO
        for a in args:
            out = add(out, a)
        return out
    if head in ("nsum", "#"):
        out = ZERO
        for a in args:
            out = natural_sum(out, a)
        return out
    if head == "w" and len(args) == 1:
        return omega_exp(args[0])
    if head == "eps" and len(args) == 1:
        return epsilon(args[0])
    raise OrdinalError(f"bad ordinal form {head!r} with {len(args)} arguments")
