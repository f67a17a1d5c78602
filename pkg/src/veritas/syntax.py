"""Terms, formulas, Goedel coding and the S-expression front end.

Codes are built by iterated pairing of a constructor tag with the codes of
the children, shifted by one so that 0 is never a code.
Self-reference is handled by a ``Fix`` node: ``diag(T)`` returns ``Fix(T)``
whose hole ``(self)`` evaluates to the code of the ``Fix`` node itself.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from . import ordinals as O
from .ordinals import Ord


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class OpenTermError(ValueError):
    pass


class NotACode:
    """Returned by :func:`decode` when a number codes no formula."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __bool__(self):
        return False

    def __repr__(self):
        return "NOT_A_CODE"


NOT_A_CODE = NotACode()


# ------------------------------------------------------------------ terms

class Term:
    __slots__ = ()

    def __str__(self):
        return show_term(self)


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class Succ(Term):
    t: Term


@dataclass(frozen=True)
class Num(Term):
    n: int


@dataclass(frozen=True)
class Quote(Term):
    f: "Formula"


@dataclass(frozen=True)
class CodeOp(Term):
    op: str
    args: tuple
    var: str | None = None


@dataclass(frozen=True)
class Subst(Term):
    """``x(t/v)``: substitute the numeral of ``t``'s value for ``v`` in code ``x``."""

    x: Term
    t: Term
    v: str


@dataclass(frozen=True)
class NumOf(Term):
    t: Term


@dataclass(frozen=True)
class SelfQuote(Term):
    pass


# --------------------------------------------------------------- formulas

class Formula:
    __slots__ = ()

    def __str__(self):
        return show(self)


@dataclass(frozen=True)
class Eq(Formula):
    l: Term
    r: Term


@dataclass(frozen=True)
class Tr(Formula):
    t: Term


@dataclass(frozen=True)
class TrRam(Formula):
    level: Ord
    t: Term


@dataclass(frozen=True)
class P(Formula):
    t: Term


@dataclass(frozen=True)
class Not(Formula):
    f: Formula


@dataclass(frozen=True)
class Or(Formula):
    a: Formula
    b: Formula


@dataclass(frozen=True)
class And(Formula):
    a: Formula
    b: Formula


@dataclass(frozen=True)
class Forall(Formula):
    v: str
    f: Formula


@dataclass(frozen=True)
class Exists(Formula):
    v: str
    f: Formula


@dataclass(frozen=True)
class Fix(Formula):
    """Diagonal sentence; ``template`` holds exactly one ``SelfQuote``."""

    template: Formula


ATOMS = (Eq, Tr, TrRam, P, Fix)

# op -> (arity, takes a bound variable)
CODE_OPS = {
    "neg": (1, False), "or": (2, False), "and": (2, False),
    "forall": (1, True), "exists": (1, True), "tr": (1, False),
    "eq": (2, False), "p": (1, False),
    "sent": (1, False), "ct": (1, False), "val": (1, False),
    # the translation k and k∘h_β of the ramified-truth interpretation;
    # kh takes the code of the level β as its first argument
    "k": (1, False), "kh": (2, False),
}
_OP_INDEX = {op: i for i, op in enumerate(CODE_OPS)}
_OP_NAMES = list(CODE_OPS)


def implies(a: Formula, b: Formula) -> Formula:
    return Or(Not(a), b)


def iff(a: Formula, b: Formula) -> Formula:
    return And(implies(a, b), implies(b, a))


def numeral(n: int) -> Num:
    return Num(n)


def zero_eq_one() -> Formula:
    return Eq(Zero(), Num(1))


# ----------------------------------------------------------------- pairing

def pair(a: int, b: int) -> int:
    """Length-prefixed pairing; the code length is additive in the arguments.

    Bit layout from the least significant end: ``m`` ones and a zero, the
    bit length ``L`` of ``a`` in ``m`` bits, ``a`` in ``L`` bits, then ``b``.
    """
    L = a.bit_length()
    m = L.bit_length()
    z = (b << L) | a
    z = (z << m) | L
    return (z << (m + 1)) | ((1 << m) - 1)


def unpair(z: int) -> tuple[int, int]:
    """Inverse of :func:`pair`; raises ``ValueError`` outside its range."""
    if z < 0:
        raise ValueError("negative")
    m = (z ^ (z + 1)).bit_length() - 1
    y = z >> (m + 1)
    L = y & ((1 << m) - 1)
    y >>= m
    a = y & ((1 << L) - 1)
    b = y >> L
    if pair(a, b) != z:
        raise ValueError(f"{z} is not a pair code")
    return a, b


def _node(tag: int, payload: int) -> int:
    return 1 + pair(tag, payload)


def _seq(*xs: int) -> int:
    out = xs[-1]
    for x in reversed(xs[:-1]):
        out = pair(x, out)
    return out


def _unseq(z: int, n: int) -> list[int]:
    out = []
    for _ in range(n - 1):
        a, z = unpair(z)
        out.append(a)
    out.append(z)
    return out


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")


def _name_code(name: str) -> int:
    return int.from_bytes(name.encode("utf-8"), "big")


def _name_decode(n: int):
    if n <= 0:
        return None
    raw = n.to_bytes((n.bit_length() + 7) // 8, "big")
    try:
        s = raw.decode("utf-8")
    except UnicodeDecodeError:
        return None
    return s if _NAME_RE.match(s) else None


def ord_code(x: Ord) -> int:
    out = 0
    for t in reversed(x.terms):
        out = 1 + pair(pair(ord_code(t.a), ord_code(t.b)), out)
    return out


def _ord_decode(n: int, budget: int = 64):
    try:
        return _ord_decode_raw(n, budget)
    except ValueError:
        return None


def _ord_decode_raw(n: int, budget: int):
    if n == 0:
        return O.ZERO
    if budget <= 0:
        return None
    h, rest = unpair(n - 1)
    a, b = unpair(h)
    a, b, tail = (_ord_decode_raw(a, budget - 1), _ord_decode_raw(b, budget - 1),
                  _ord_decode_raw(rest, budget - 1))
    if a is None or b is None or tail is None:
        return None
    x = O.Ord((O.Phi(a, b),) + tail.terms)
    return x if O.is_normal(x) else None


# Tags.  Formula and term tags live in separate namespaces because the
# sort of every child position is fixed by its parent.
F_EQ, F_TR, F_TRR, F_P, F_NOT, F_OR, F_AND, F_ALL, F_EX, F_FIX = range(10)
T_VAR, T_ZERO, T_SUCC, T_NUM, T_QUOTE, T_OP, T_SUBST, T_NUMOF, T_SELF = range(9)


@lru_cache(maxsize=None)
def encode_term(t: Term) -> int:
    if isinstance(t, Var):
        return _node(T_VAR, _name_code(t.name))
    if isinstance(t, Zero):
        return _node(T_ZERO, 0)
    if isinstance(t, Succ):
        return _node(T_SUCC, encode_term(t.t))
    if isinstance(t, Num):
        return _node(T_NUM, t.n)
    if isinstance(t, Quote):
        return _node(T_QUOTE, encode(t.f))
    if isinstance(t, CodeOp):
        args = 0
        for a in reversed(t.args):
            args = 1 + pair(encode_term(a), args)
        v = _name_code(t.var) if t.var else 0
        return _node(T_OP, _seq(_OP_INDEX[t.op], v, args))
    if isinstance(t, Subst):
        return _node(T_SUBST, _seq(encode_term(t.x), encode_term(t.t), _name_code(t.v)))
    if isinstance(t, NumOf):
        return _node(T_NUMOF, encode_term(t.t))
    if isinstance(t, SelfQuote):
        return _node(T_SELF, 0)
    raise TypeError(f"not a term: {t!r}")


@lru_cache(maxsize=None)
def encode(f: Formula) -> int:
    """Goedel number of a formula (a plain Python int)."""
    if isinstance(f, Eq):
        return _node(F_EQ, pair(encode_term(f.l), encode_term(f.r)))
    if isinstance(f, Tr):
        return _node(F_TR, encode_term(f.t))
    if isinstance(f, TrRam):
        return _node(F_TRR, pair(ord_code(f.level), encode_term(f.t)))
    if isinstance(f, P):
        return _node(F_P, encode_term(f.t))
    if isinstance(f, Not):
        return _node(F_NOT, encode(f.f))
    if isinstance(f, Or):
        return _node(F_OR, pair(encode(f.a), encode(f.b)))
    if isinstance(f, And):
        return _node(F_AND, pair(encode(f.a), encode(f.b)))
    if isinstance(f, Forall):
        return _node(F_ALL, pair(_name_code(f.v), encode(f.f)))
    if isinstance(f, Exists):
        return _node(F_EX, pair(_name_code(f.v), encode(f.f)))
    if isinstance(f, Fix):
        return _node(F_FIX, encode(f.template))
    raise TypeError(f"not a formula: {f!r}")


class _Bad(Exception):
    pass


def _dt(n: int, in_fix: bool) -> Term:
    if n <= 0:
        raise _Bad
    tag, p = unpair(n - 1)
    if tag == T_VAR:
        name = _name_decode(p)
        if name is None:
            raise _Bad
        return Var(name)
    if tag == T_ZERO:
        if p:
            raise _Bad
        return Zero()
    if tag == T_SUCC:
        return Succ(_dt(p, in_fix))
    if tag == T_NUM:
        return Num(p)
    if tag == T_QUOTE:
        return Quote(_df(p, False))
    if tag == T_OP:
        i, v, args = _unseq(p, 3)
        if i >= len(_OP_NAMES):
            raise _Bad
        op = _OP_NAMES[i]
        arity, binds = CODE_OPS[op]
        var = None
        if binds:
            var = _name_decode(v)
            if var is None:
                raise _Bad
        elif v:
            raise _Bad
        out = []
        while args:
            h, args = unpair(args - 1)
            out.append(_dt(h, in_fix))
        if len(out) != arity:
            raise _Bad
        return CodeOp(op, tuple(out), var)
    if tag == T_SUBST:
        x, t, v = _unseq(p, 3)
        name = _name_decode(v)
        if name is None:
            raise _Bad
        return Subst(_dt(x, in_fix), _dt(t, in_fix), name)
    if tag == T_NUMOF:
        return NumOf(_dt(p, in_fix))
    if tag == T_SELF:
        if p or not in_fix:
            raise _Bad
        return SelfQuote()
    raise _Bad


def _df(n: int, in_fix: bool) -> Formula:
    if n <= 0:
        raise _Bad
    tag, p = unpair(n - 1)
    if tag == F_EQ:
        a, b = unpair(p)
        return Eq(_dt(a, in_fix), _dt(b, in_fix))
    if tag == F_TR:
        return Tr(_dt(p, in_fix))
    if tag == F_TRR:
        a, b = unpair(p)
        lvl = _ord_decode(a)
        if lvl is None:
            raise _Bad
        return TrRam(lvl, _dt(b, in_fix))
    if tag == F_P:
        return P(_dt(p, in_fix))
    if tag == F_NOT:
        return Not(_df(p, in_fix))
    if tag in (F_OR, F_AND):
        a, b = unpair(p)
        return (Or if tag == F_OR else And)(_df(a, in_fix), _df(b, in_fix))
    if tag in (F_ALL, F_EX):
        v, b = unpair(p)
        name = _name_decode(v)
        if name is None:
            raise _Bad
        return (Forall if tag == F_ALL else Exists)(name, _df(b, in_fix))
    if tag == F_FIX:
        body = _df(p, True)
        if count_holes(body) != 1:
            raise _Bad
        return Fix(body)
    raise _Bad


@lru_cache(maxsize=65536)
def decode(n: int):
    """Inverse of :func:`encode`; ``NOT_A_CODE`` when ``n`` codes no formula."""
    try:
        return _df(n, False)
    except (_Bad, ValueError, RecursionError):
        return NOT_A_CODE


@lru_cache(maxsize=65536)
def decode_term(n: int):
    try:
        return _dt(n, False)
    except (_Bad, ValueError, RecursionError):
        return NOT_A_CODE


# --------------------------------------------------------------- structure

def count_holes(f) -> int:
    """Number of ``(self)`` holes bound by the nearest enclosing ``Fix``."""
    if isinstance(f, SelfQuote):
        return 1
    if isinstance(f, (Var, Zero, Num, Quote, Fix)):
        return 0
    if isinstance(f, (Succ, NumOf)):
        return count_holes(f.t)
    if isinstance(f, CodeOp):
        return sum(count_holes(a) for a in f.args)
    if isinstance(f, Subst):
        return count_holes(f.x) + count_holes(f.t)
    if isinstance(f, Eq):
        return count_holes(f.l) + count_holes(f.r)
    if isinstance(f, (Tr, TrRam, P)):
        return count_holes(f.t)
    if isinstance(f, Not):
        return count_holes(f.f)
    if isinstance(f, (Or, And)):
        return count_holes(f.a) + count_holes(f.b)
    if isinstance(f, (Forall, Exists)):
        return count_holes(f.f)
    raise TypeError(repr(f))


def diag(template: Formula) -> Fix:
    """Close a one-hole template: the result ``d`` satisfies ``d = template(#d)``."""
    n = count_holes(template)
    if n > 1:
        raise ValueError("multiple holes in diag template")
    if n == 0:
        raise ValueError("diag template has no (self) hole")
    return Fix(template)


def unfold(f: Fix) -> Formula:
    """One-step unfolding: the template with its hole filled by ``Quote(f)``."""
    return _fill(f.template, Quote(f))


def _fill(x, q: Term):
    if isinstance(x, SelfQuote):
        return q
    if isinstance(x, (Var, Zero, Num, Quote, Fix)):
        return x
    if isinstance(x, Succ):
        return Succ(_fill(x.t, q))
    if isinstance(x, NumOf):
        return NumOf(_fill(x.t, q))
    if isinstance(x, CodeOp):
        return CodeOp(x.op, tuple(_fill(a, q) for a in x.args), x.var)
    if isinstance(x, Subst):
        return Subst(_fill(x.x, q), _fill(x.t, q), x.v)
    if isinstance(x, Eq):
        return Eq(_fill(x.l, q), _fill(x.r, q))
    if isinstance(x, Tr):
        return Tr(_fill(x.t, q))
    if isinstance(x, TrRam):
        return TrRam(x.level, _fill(x.t, q))
    if isinstance(x, P):
        return P(_fill(x.t, q))
    if isinstance(x, Not):
        return Not(_fill(x.f, q))
    if isinstance(x, (Or, And)):
        return type(x)(_fill(x.a, q), _fill(x.b, q))
    if isinstance(x, (Forall, Exists)):
        return type(x)(x.v, _fill(x.f, q))
    raise TypeError(repr(x))


def liar() -> Fix:
    return diag(Not(Tr(SelfQuote())))


def truth_teller() -> Fix:
    return diag(Tr(SelfQuote()))


def term_vars(t: Term) -> frozenset[str]:
    if isinstance(t, Var):
        return frozenset((t.name,))
    if isinstance(t, (Zero, Num, Quote, SelfQuote)):
        return frozenset()
    if isinstance(t, (Succ, NumOf)):
        return term_vars(t.t)
    if isinstance(t, CodeOp):
        return frozenset().union(*(term_vars(a) for a in t.args))
    if isinstance(t, Subst):
        return term_vars(t.x) | term_vars(t.t)
    raise TypeError(repr(t))


@lru_cache(maxsize=None)
def free_vars(f: Formula) -> frozenset[str]:
    if isinstance(f, Eq):
        return term_vars(f.l) | term_vars(f.r)
    if isinstance(f, (Tr, TrRam, P)):
        return term_vars(f.t)
    if isinstance(f, Not):
        return free_vars(f.f)
    if isinstance(f, (Or, And)):
        return free_vars(f.a) | free_vars(f.b)
    if isinstance(f, (Forall, Exists)):
        return free_vars(f.f) - {f.v}
    if isinstance(f, Fix):
        return free_vars(f.template)
    raise TypeError(repr(f))


def is_closed_term(t: Term) -> bool:
    return not term_vars(t) and count_holes(t) == 0


def subst_term(t: Term, v: str, s: Term) -> Term:
    if isinstance(t, Var):
        return s if t.name == v else t
    if isinstance(t, (Zero, Num, Quote, SelfQuote)):
        return t
    if isinstance(t, Succ):
        return Succ(subst_term(t.t, v, s))
    if isinstance(t, NumOf):
        return NumOf(subst_term(t.t, v, s))
    if isinstance(t, CodeOp):
        return CodeOp(t.op, tuple(subst_term(a, v, s) for a in t.args), t.var)
    if isinstance(t, Subst):
        return Subst(subst_term(t.x, v, s), subst_term(t.t, v, s), t.v)
    raise TypeError(repr(t))


@lru_cache(maxsize=200000)
def subst(f: Formula, v: str, s: Term) -> Formula:
    """Replace free occurrences of ``v`` in ``f`` by the closed term ``s``."""
    if isinstance(f, Eq):
        return Eq(subst_term(f.l, v, s), subst_term(f.r, v, s))
    if isinstance(f, Tr):
        return Tr(subst_term(f.t, v, s))
    if isinstance(f, TrRam):
        return TrRam(f.level, subst_term(f.t, v, s))
    if isinstance(f, P):
        return P(subst_term(f.t, v, s))
    if isinstance(f, Not):
        return Not(subst(f.f, v, s))
    if isinstance(f, (Or, And)):
        return type(f)(subst(f.a, v, s), subst(f.b, v, s))
    if isinstance(f, (Forall, Exists)):
        return f if f.v == v else type(f)(f.v, subst(f.f, v, s))
    if isinstance(f, Fix):
        return Fix(subst(f.template, v, s)) if v in free_vars(f) else f
    raise TypeError(repr(f))


def substitute(x: int, t: Term, v: str) -> int:
    """Code-level ``x(t/v)``."""
    f = decode(x)
    if f is NOT_A_CODE:
        raise ValueError(f"{x} is not a formula code")
    return encode(subst(f, v, t))


# --------------------------------------------------------------- evaluation

def _op_value(op: str, vals: list[int], var: str | None) -> int:
    if op == "neg":
        return _node(F_NOT, vals[0])
    if op == "or":
        return _node(F_OR, pair(vals[0], vals[1]))
    if op == "and":
        return _node(F_AND, pair(vals[0], vals[1]))
    if op == "forall":
        return _node(F_ALL, pair(_name_code(var), vals[0]))
    if op == "exists":
        return _node(F_EX, pair(_name_code(var), vals[0]))
    if op == "tr":
        return _node(F_TR, _node(T_NUM, vals[0]))
    if op == "eq":
        return _node(F_EQ, pair(vals[0], vals[1]))
    if op == "p":
        return _node(F_P, vals[0])
    if op == "sent":
        return int(is_sentence(vals[0], LPT))
    if op == "ct":
        t = decode_term(vals[0])
        return int(t is not NOT_A_CODE and is_closed_term(t))
    if op == "val":
        t = decode_term(vals[0])
        if t is NOT_A_CODE or not is_closed_term(t):
            return 0
        return eval_term(t)
    if op in ("k", "kh"):
        from . import interpret
        if op == "k":
            return interpret.k_translate(vals[0])
        lvl = _ord_decode(vals[0])
        if lvl is None:
            return encode(zero_eq_one())
        return interpret.k_translate(interpret.h(vals[1], lvl))
    raise ValueError(f"unknown code operation {op!r}")


@lru_cache(maxsize=200000)
def eval_term(t: Term) -> int:
    """Value of a closed term."""
    if isinstance(t, Var):
        raise OpenTermError(f"open term: variable {t.name!r}")
    if isinstance(t, Zero):
        return 0
    if isinstance(t, Succ):
        return eval_term(t.t) + 1
    if isinstance(t, Num):
        return t.n
    if isinstance(t, Quote):
        return encode(t.f)
    if isinstance(t, CodeOp):
        return _op_value(t.op, [eval_term(a) for a in t.args], t.var)
    if isinstance(t, Subst):
        return substitute(eval_term(t.x), Num(eval_term(t.t)), t.v)
    if isinstance(t, NumOf):
        return encode_term(Num(eval_term(t.t)))
    if isinstance(t, SelfQuote):
        raise OpenTermError("open term: (self) outside a diag template")
    raise TypeError(repr(t))


# -------------------------------------------------------------- normal form

def is_atom(f: Formula) -> bool:
    return isinstance(f, ATOMS)


def is_literal(f: Formula) -> bool:
    return is_atom(f) or (isinstance(f, Not) and is_atom(f.f))


@lru_cache(maxsize=200000)
def nnf(f: Formula) -> Formula:
    if is_atom(f):
        return f
    if isinstance(f, (Or, And)):
        return type(f)(nnf(f.a), nnf(f.b))
    if isinstance(f, (Forall, Exists)):
        return type(f)(f.v, nnf(f.f))
    g = f.f
    if is_atom(g):
        return f
    if isinstance(g, Not):
        return nnf(g.f)
    if isinstance(g, Or):
        return And(nnf(Not(g.a)), nnf(Not(g.b)))
    if isinstance(g, And):
        return Or(nnf(Not(g.a)), nnf(Not(g.b)))
    if isinstance(g, Forall):
        return Exists(g.v, nnf(Not(g.f)))
    if isinstance(g, Exists):
        return Forall(g.v, nnf(Not(g.f)))
    raise TypeError(repr(f))


def neg(f: Formula) -> Formula:
    """NNF negation; an involution on NNF formulas."""
    return nnf(Not(f))


def complexity(f: Formula) -> int:
    f = nnf(f)
    if is_literal(f):
        return 0
    if isinstance(f, (Or, And)):
        return max(complexity(f.a), complexity(f.b)) + 1
    if isinstance(f, (Forall, Exists)):
        return complexity(subst(f.f, f.v, Zero())) + 1
    raise TypeError(repr(f))


def size(f) -> int:
    if isinstance(f, (Var, Zero, Num, SelfQuote)):
        return 1
    if isinstance(f, Quote):
        return 1
    if isinstance(f, (Succ, NumOf)):
        return 1 + size(f.t)
    if isinstance(f, CodeOp):
        return 1 + sum(size(a) for a in f.args)
    if isinstance(f, Subst):
        return 1 + size(f.x) + size(f.t)
    if isinstance(f, Eq):
        return 1 + size(f.l) + size(f.r)
    if isinstance(f, (Tr, TrRam, P)):
        return 1 + size(f.t)
    if isinstance(f, Not):
        return 1 + size(f.f)
    if isinstance(f, (Or, And)):
        return 1 + size(f.a) + size(f.b)
    if isinstance(f, (Forall, Exists)):
        return 1 + size(f.f)
    if isinstance(f, Fix):
        return 1 + size(f.template)
    raise TypeError(repr(f))


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Not):
        yield from subformulas(f.f)
    elif isinstance(f, (Or, And)):
        yield from subformulas(f.a)
        yield from subformulas(f.b)
    elif isinstance(f, (Forall, Exists)):
        yield from subformulas(f.f)


def atoms(f: Formula) -> Iterator[Formula]:
    for g in subformulas(f):
        if is_atom(g):
            yield g


def closed_terms(f: Formula) -> set[Term]:
    """Closed terms occurring as arguments of atoms of ``f``."""
    out: set[Term] = set()
    for a in atoms(f):
        ts = (a.l, a.r) if isinstance(a, Eq) else () if isinstance(a, Fix) else (a.t,)
        out.update(t for t in ts if is_closed_term(t))
    return out


# ---------------------------------------------------------------- languages

@dataclass(frozen=True)
class LanguageTag:
    kind: str
    below: Ord | None = None

    def __str__(self):
        return f"LRam({O.render(self.below)})" if self.kind == "LRam" else self.kind


LN = LanguageTag("LN")
LT = LanguageTag("LT")
LPT = LanguageTag("LPT")


def LRam(gamma: Ord) -> LanguageTag:
    return LanguageTag("LRam", gamma)


def _atom_ok(a: Formula, L: LanguageTag) -> bool:
    if isinstance(a, Eq):
        return True
    if isinstance(a, Fix):
        return all(_atom_ok(b, L) for b in atoms(a.template))
    if L.kind == "LRam":
        return isinstance(a, TrRam) and O.compare(a.level, L.below) == O.LT
    if isinstance(a, Tr):
        return L.kind in ("LT", "LPT")
    if isinstance(a, P):
        return L.kind == "LPT"
    return False


def in_language(f: Formula, L: LanguageTag) -> bool:
    return all(_atom_ok(a, L) for a in atoms(f))


@lru_cache(maxsize=65536)
def _is_sentence(x: int, L: LanguageTag) -> bool:
    f = decode(x)
    if f is NOT_A_CODE or free_vars(f):
        return False
    return in_language(f, L)


def is_sentence(x: int, L: LanguageTag = LT) -> bool:
    if x <= 0:
        return False
    return _is_sentence(x, L)


def ti_formula(alpha: Ord, A: Formula, var: str = "x") -> str:
    """Display form of TI(alpha, A) with ``<`` the notation order (not parseable)."""
    b, c = "b", "c"
    Ab, Ac = show(subst(A, var, Var(b))), show(subst(A, var, Var(c)))
    prog = f"(forall {b} (-> (forall {c} (-> (< {c} {b}) {Ac})) {Ab}))"
    return f"(-> {prog} (forall {b} (-> (< {b} {O.to_text(alpha)}) {Ab})))"


# ------------------------------------------------------------------ printer

def show_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Succ):
        return f"(S {show_term(t.t)})"
    if isinstance(t, Num):
        return f"(num {t.n})"
    if isinstance(t, Quote):
        return f"(quote {show(t.f)})"
    if isinstance(t, SelfQuote):
        return "(self)"
    if isinstance(t, CodeOp):
        inner = " ".join(show_term(a) for a in t.args)
        if t.var:
            inner = f"{t.var} {inner}"
        return f"({t.op}. {inner})"
    if isinstance(t, Subst):
        return f"(subst {show_term(t.x)} {show_term(t.t)} {t.v})"
    if isinstance(t, NumOf):
        return f"(num. {show_term(t.t)})"
    raise TypeError(repr(t))


def show(f: Formula) -> str:
    """S-expression text; ``parse(show(f)) == f``."""
    if isinstance(f, Eq):
        return f"(= {show_term(f.l)} {show_term(f.r)})"
    if isinstance(f, Tr):
        return f"(Tr {show_term(f.t)})"
    if isinstance(f, TrRam):
        return f"(TrR {O.to_text(f.level)} {show_term(f.t)})"
    if isinstance(f, P):
        return f"(P {show_term(f.t)})"
    if isinstance(f, Not):
        return f"(not {show(f.f)})"
    if isinstance(f, Or):
        return f"(or {show(f.a)} {show(f.b)})"
    if isinstance(f, And):
        return f"(and {show(f.a)} {show(f.b)})"
    if isinstance(f, Forall):
        return f"(forall {f.v} {show(f.f)})"
    if isinstance(f, Exists):
        return f"(exists {f.v} {show(f.f)})"
    if isinstance(f, Fix):
        return f"(diag {show(f.template)})"
    raise TypeError(repr(f))


# ------------------------------------------------------------------- parser

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    out, i = [], 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m or m.end() == i:
            break
        tok = m.group(1) or m.group(2) or m.group(3)
        if tok is None:
            break
        out.append((tok, m.start(m.lastindex)))
        i = m.end()
    return out


class _Reader:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0
        self.end = len(text)

    def read(self):
        if self.i >= len(self.toks):
            raise ParseError("unexpected end of input", self.end)
        tok, pos = self.toks[self.i]
        self.i += 1
        if tok == "(":
            items = []
            while True:
                if self.i >= len(self.toks):
                    raise ParseError("unclosed '('", pos)
                if self.toks[self.i][0] == ")":
                    self.i += 1
                    return _SList(items, pos)
                items.append(self.read())
        if tok == ")":
            raise ParseError("unexpected ')'", pos)
        return _Sym(tok, pos)


@dataclass
class _Sym:
    s: str
    pos: int


@dataclass
class _SList:
    items: list
    pos: int


def _plain(node):
    return node.s if isinstance(node, _Sym) else [_plain(x) for x in node.items]


_FORMULA_HEADS = {"=", "Tr", "TrR", "P", "not", "or", "and", "->", "<->", "forall", "exists", "diag"}


def _head(node: _SList, what: str) -> str:
    if not node.items or not isinstance(node.items[0], _Sym):
        raise ParseError(f"empty or malformed {what}", node.pos)
    return node.items[0].s


def _arity(node: _SList, n: int, what: str):
    if len(node.items) != n + 1:
        raise ParseError(f"{what} expects {n} argument(s), got {len(node.items) - 1}", node.pos)


def _varname(node) -> str:
    if not isinstance(node, _Sym) or not _NAME_RE.match(node.s):
        raise ParseError("expected a variable name", node.pos)
    return node.s


def _term(node) -> Term:
    if isinstance(node, _Sym):
        s = node.s
        if s == "0":
            return Zero()
        if s.isdigit():
            return Num(int(s))
        if _NAME_RE.match(s):
            return Var(s)
        raise ParseError(f"bad term {s!r}", node.pos)
    h = _head(node, "term")
    a = node.items[1:]
    if h == "S":
        _arity(node, 1, h)
        return Succ(_term(a[0]))
    if h == "num":
        _arity(node, 1, h)
        if not isinstance(a[0], _Sym) or not a[0].s.isdigit():
            raise ParseError("(num n) needs a natural number literal", node.pos)
        return Num(int(a[0].s))
    if h == "quote":
        _arity(node, 1, h)
        return Quote(_formula(a[0]))
    if h == "self":
        _arity(node, 0, h)
        return SelfQuote()
    if h == "subst":
        _arity(node, 3, h)
        return Subst(_term(a[0]), _term(a[1]), _varname(a[2]))
    if h == "num.":
        _arity(node, 1, h)
        return NumOf(_term(a[0]))
    if h.endswith(".") and h[:-1] in CODE_OPS:
        op = h[:-1]
        arity, binds = CODE_OPS[op]
        _arity(node, arity + binds, h)
        var = _varname(a[0]) if binds else None
        args = tuple(_term(x) for x in a[int(binds):])
        return CodeOp(op, args, var)
    raise ParseError(f"unknown term constructor {h!r}", node.pos)


def _formula(node) -> Formula:
    if isinstance(node, _Sym):
        raise ParseError(f"expected a formula, found {node.s!r}", node.pos)
    h = _head(node, "formula")
    a = node.items[1:]
    if h not in _FORMULA_HEADS:
        raise ParseError(f"unknown formula constructor {h!r}", node.pos)
    if h == "=":
        _arity(node, 2, h)
        return Eq(_term(a[0]), _term(a[1]))
    if h in ("Tr", "P"):
        _arity(node, 1, h)
        return (Tr if h == "Tr" else P)(_term(a[0]))
    if h == "TrR":
        _arity(node, 2, h)
        try:
            lvl = O.parse_ord(_plain(a[0]))
        except O.OrdinalError as e:
            raise ParseError(str(e), a[0].pos) from None
        if isinstance(lvl, O._Gamma0):
            raise ParseError("G0 cannot be a truth level", a[0].pos)
        return TrRam(lvl, _term(a[1]))
    if h == "not":
        _arity(node, 1, h)
        return Not(_formula(a[0]))
    if h in ("or", "and"):
        _arity(node, 2, h)
        return (Or if h == "or" else And)(_formula(a[0]), _formula(a[1]))
    if h == "->":
        _arity(node, 2, h)
        return implies(_formula(a[0]), _formula(a[1]))
    if h == "<->":
        _arity(node, 2, h)
        return iff(_formula(a[0]), _formula(a[1]))
    if h in ("forall", "exists"):
        _arity(node, 2, h)
        return (Forall if h == "forall" else Exists)(_varname(a[0]), _formula(a[1]))
    _arity(node, 1, h)
    body = _formula(a[0])
    try:
        return diag(body)
    except ValueError as e:
        raise ParseError(str(e), node.pos) from None


def _check_holes(f: Formula, pos: int):
    if count_holes(f):
        raise ParseError("(self) outside a diag template", pos)


def parse(text: str) -> Formula:
    r = _Reader(text)
    node = r.read()
    if r.i != len(r.toks):
        raise ParseError("trailing input", r.toks[r.i][1])
    f = _formula(node)
    _check_holes(f, node.pos)
    return f


def parse_term(text: str) -> Term:
    r = _Reader(text)
    node = r.read()
    if r.i != len(r.toks):
        raise ParseError("trailing input", r.toks[r.i][1])
    t = _term(node)
    if count_holes(t):
        raise ParseError("(self) outside a diag template", node.pos)
    return t


Syntax = Union[Term, Formula]


ord_decode = _ord_decode
