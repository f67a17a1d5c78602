"""Strong Kleene jump formula, its symmetrization, and the ramified-truth translation.

``xi`` reads a code structurally (no NNF), exactly clause by clause; membership
``y ∈ X`` of a raw code means that its canonical code lies in ``X``.  The
functions ``h`` and ``k_translate`` act on raw codes, ``sigma`` on trees.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from . import ordinals as O
from . import semantics as M
from . import syntax as S
from .ordinals import Ord
from .syntax import (And, CodeOp, Eq, Exists, Fix, Forall, Formula, Not, Num, Or, P,
                     Tr, TrRam, Var, iff, implies)

FALSUM = S.zero_eq_one()


def falsum_code() -> int:
    return S.encode(FALSUM)


def neg_code(x: int) -> int:
    return S._op_value("neg", [x], None)


def or_code(x: int, y: int) -> int:
    return S._op_value("or", [x, y], None)


def imp_code(x: int, y: int) -> int:
    return or_code(neg_code(x), y)


def tr_code(x: int) -> int:
    return S._op_value("tr", [x], None)


# ------------------------------------------------------------------------ xi

class _Membership:
    """``y ∈ X`` on raw codes, remembering sentences the pool cannot decide."""

    def __init__(self, U: M.Universe, X):
        self.U, self.X = U, frozenset(X)
        self.outside: set[int] = set()

    def __call__(self, y: int) -> bool:
        c = self.U.lookup(y)
        if c is None:
            if M.canon_code(y) is not None:
                self.outside.add(y)
            return False
        return c in self.X


def _structure(x: int):
    f = S.decode(x)
    if isinstance(f, Fix):
        f = S.unfold(f)
    return f


def _true0(f) -> bool:
    try:
        if isinstance(f, Eq) and S.is_closed_term(f.l) and S.is_closed_term(f.r):
            return S.eval_term(f.l) == S.eval_term(f.r)
        if isinstance(f, Not) and isinstance(f.f, Eq):
            g = f.f
            if S.is_closed_term(g.l) and S.is_closed_term(g.r):
                return S.eval_term(g.l) != S.eval_term(g.r)
    except ValueError:
        return False
    return False


def _xi(x: int, mem: _Membership, N: int) -> bool:
    f = _structure(x)
    if f is S.NOT_A_CODE or S.free_vars(f):
        return False
    enc = S.encode
    if _true0(f):
        return True
    if isinstance(f, Not):
        g = f.f
        if isinstance(g, Not):
            return mem(enc(g.f))
        if isinstance(g, Or):
            return mem(enc(Not(g.a))) and mem(enc(Not(g.b)))
        if isinstance(g, And):
            return mem(enc(Not(g.a))) or mem(enc(Not(g.b)))
        if isinstance(g, Forall):
            return any(mem(enc(Not(S.subst(g.f, g.v, Num(i))))) for i in range(N + 1))
        if isinstance(g, Exists):
            return all(mem(enc(Not(S.subst(g.f, g.v, Num(i))))) for i in range(N + 1))
        if isinstance(g, Tr):
            v = S.eval_term(g.t)
            return mem(neg_code(v)) or not S.is_sentence(v, S.LPT)
        return False
    if isinstance(f, Or):
        return mem(enc(f.a)) or mem(enc(f.b))
    if isinstance(f, And):
        return mem(enc(f.a)) and mem(enc(f.b))
    if isinstance(f, Forall):
        return all(mem(enc(S.subst(f.f, f.v, Num(i)))) for i in range(N + 1))
    if isinstance(f, Exists):
        return any(mem(enc(S.subst(f.f, f.v, Num(i)))) for i in range(N + 1))
    if isinstance(f, Tr):
        return mem(S.eval_term(f.t))
    return False


def xi(x: int, X, U: M.Universe) -> bool:
    return _xi(x, _Membership(U, X), U.N)


def xi_star(x: int, X, U: M.Universe) -> bool:
    mem = _Membership(U, X)
    return _xi(x, mem, U.N) or _xi(neg_code(x), mem, U.N)


def sk_jump(X, U: M.Universe) -> frozenset[int]:
    mem = _Membership(U, X)
    return frozenset(c for c in U.codes if _xi(c, mem, U.N))


def sk_lfp(U: M.Universe) -> M.LfpResult:
    X, stages = frozenset(), []
    for _ in range(len(U) + 2):
        Y = sk_jump(X, U)
        if not X <= Y:
            raise M.InvariantError("strong Kleene jump not monotone")
        if Y == X:
            return M.LfpResult(X, stages)
        stages.append(Y)
        X = Y
    raise M.InvariantError("strong Kleene iteration did not stabilize")


# ------------------------------------------------------ xi* property checks

@dataclass
class PropertyReport:
    checked: dict[str, int] = field(default_factory=dict)
    skipped: dict[str, int] = field(default_factory=dict)
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def count(self, name: str, in_scope: bool):
        d = self.checked if in_scope else self.skipped
        d[name] = d.get(name, 0) + 1

    def to_record(self) -> dict:
        return {"checked": self.checked, "skipped": self.skipped,
                "failures": [{"item": a, "instance": b} for a, b in self.failures]}


def _forall_bodies(U: M.Universe):
    for c in U.codes:
        f = U.formula[c]
        if isinstance(f, Forall):
            yield c, S.encode(f.f), f.v


def check_xi_star_properties(U: M.Universe, X) -> PropertyReport:
    """Items i-viii as implications over pool codes, ``Tr`` read as membership in X.

    Instances whose evaluation consults a sentence outside the pool are
    skipped and counted, never judged.
    """
    X = frozenset(X)
    rep = PropertyReport()
    N = U.N

    def run(name: str, desc: str, claim: Callable[[_Membership], bool]):
        mem = _Membership(U, X)
        ok = claim(mem)
        in_scope = not mem.outside
        rep.count(name, in_scope)
        if in_scope and not ok:
            rep.failures.append((name, desc))

    def xs(mem, x):
        return _xi(x, mem, N) or _xi(neg_code(x), mem, N)

    codes = U.codes
    for x in codes:
        nm = U.name(x)
        run("i", nm, lambda m, x=x: not xs(m, x) or xs(m, neg_code(x)))
        run("iv", nm, lambda m, x=x: not xs(m, x) or (m(neg_code(x)) == (not m(x))))
        run("viii", nm, lambda m, x=x: not xs(m, x) or (m(x) == m(tr_code(x))))
    _pair_items(U, X, rep, xs)
    for c, body, v in _forall_bodies(U):
        nm = U.name(c)
        inst = [S.substitute(body, Num(i), v) for i in range(N + 1)]
        run("iii", nm, lambda m, c=c, inst=inst: not all(xs(m, y) for y in inst) or xs(m, c))
        # xi* of an open body is always false, so vii is read with the
        # closed quantified sentence in the antecedent
        run("vii", nm, lambda m, c=c, inst=inst: not xs(m, c)
            or (m(c) == all(m(y) for y in inst)))
    return rep


def _pair_items(U: M.Universe, X: frozenset, rep: PropertyReport, xs):
    """Items ii, v, vi over pairs of pool codes.

    For canonical pool codes the clauses of xi on ``x ∨̇ y`` and its negation
    only consult ``x``, ``y`` and their negations, all pool members, so they
    are evaluated by table lookup.  A pair is in scope when xi* of both
    arguments is decidable in the pool and, for v and vi, the compound
    sentence is itself a pool member.
    """
    neg = U.neg
    base = {}
    for x in U.codes:
        mem = _Membership(U, X)
        base[x] = (xs(mem, x), not mem.outside)

    def xs_or(a, b):
        return a in X or b in X or (neg[a] in X and neg[b] in X)

    n = len(U.codes)
    for x in U.codes:
        vx, sx = base[x]
        for y in U.codes:
            vy, sy = base[y]
            ok = not (vx and vy) or (xs_or(x, y) and xs_or(neg[x], y))
            rep.count("ii", sx and sy)
            if sx and sy and not ok:
                rep.failures.append(("ii", f"{U.name(x)}, {U.name(y)}"))
    ors = [(c, S.encode(f.a), S.encode(f.b)) for c, f in U.formula.items() if isinstance(f, Or)]
    for c, a, b in ors:
        d = U.name(c)
        if a not in U or b not in U:
            rep.count("v", False)
            rep.count("vi", False)
            continue
        ok_v = not xs_or(a, b) or ((c in X) == (a in X or b in X))
        # the same pool sentence read as x →̇ y with x = ¬a
        x = neg[a]
        ok_vi = not xs_or(a, b) or ((c in X) == ((x not in X) or b in X))
        for name, ok in (("v", ok_v), ("vi", ok_vi)):
            rep.count(name, True)
            if not ok:
                rep.failures.append((name, d))
    for name in ("v", "vi"):
        rep.skipped[name] = n * n - rep.checked.get(name, 0)
        if not rep.skipped[name]:
            del rep.skipped[name]


# ------------------------------------------------------------------ h, k

def h(x: int, beta: Ord) -> int:
    return x if S.is_sentence(x, S.LRam(beta)) else falsum_code()


@lru_cache(maxsize=65536)
def k_translate(x: int) -> int:
    f = S.decode(x)
    if f is S.NOT_A_CODE:
        return falsum_code()
    enc = S.encode
    if isinstance(f, Eq):
        return x
    if isinstance(f, TrRam) and S.is_closed_term(f.t):
        return enc(Tr(Num(k_translate(h(S.eval_term(f.t), f.level)))))
    if isinstance(f, Not):
        return enc(Not(Tr(Num(k_translate(enc(f.f))))))
    if isinstance(f, (Or, And)):
        return enc(type(f)(Tr(Num(k_translate(enc(f.a)))), Tr(Num(k_translate(enc(f.b))))))
    if isinstance(f, Forall):
        z = f.v
        inner = CodeOp("k", (S.Subst(Num(enc(f.f)), Var(z), z),))
        return enc(Forall(z, Tr(inner)))
    return falsum_code()


def _kh_term(beta: Ord, t) -> CodeOp:
    return CodeOp("kh", (Num(S.ord_code(beta)), t))


def sigma(alpha: Ord, phi: Formula) -> Formula:
    """Translate an L_{<alpha} formula into L_T."""
    if isinstance(phi, Eq):
        return phi
    if isinstance(phi, TrRam):
        if O.compare(phi.level, alpha) != O.LT:
            raise ValueError(f"truth level {O.render(phi.level)} is not below {O.render(alpha)}")
        return Tr(_kh_term(phi.level, phi.t))
    if isinstance(phi, (Tr, P, Fix)):
        raise ValueError(f"not an L_<α formula: {S.show(phi)}")
    if isinstance(phi, Not):
        return Not(sigma(alpha, phi.f))
    if isinstance(phi, (Or, And)):
        return type(phi)(sigma(alpha, phi.a), sigma(alpha, phi.b))
    return type(phi)(phi.v, sigma(alpha, phi.f))


# --------------------------------------------------------- ramified pools

def _subformula_closure(sentences: Iterable[Formula], N: int, limit: int) -> list[Formula]:
    """Close under canonical subformulas, quantifier instances and Tr-references."""
    out: list[Formula] = []
    seen: set[int] = set()
    todo = list(sentences)
    while todo:
        f = todo.pop()
        c = M.canonical(f)
        code = S.encode(c)
        if code in seen:
            continue
        seen.add(code)
        out.append(f)
        if len(out) > limit:
            raise ValueError(f"pool closure exceeds {limit} sentences")
        todo.extend(_children(c, N))
    return out


def _children(f: Formula, N: int) -> list[Formula]:
    if isinstance(f, Not):
        f = f.f
    if isinstance(f, (Or, And)):
        return [f.a, f.b]
    if isinstance(f, (Forall, Exists)):
        return [S.subst(f.f, f.v, Num(i)) for i in range(N + 1)]
    if isinstance(f, Fix):
        return [S.unfold(f)]
    out = []
    if isinstance(f, (Tr, TrRam)):
        try:
            v = S.eval_term(f.t)
        except ValueError:
            return []
        g = S.decode(v)
        if g is not S.NOT_A_CODE and M.canon_code(v) is not None:
            out.append(g)
    return out


@dataclass
class RamifiedPool:
    sentences: list[Formula]
    gamma: Ord
    N: int = 1

    def __post_init__(self):
        for f in self.sentences:
            if not S.in_language(f, S.LRam(self.gamma)) or S.free_vars(f):
                raise ValueError(f"not an L_<γ sentence: {S.show(f)}")

    def level_sentences(self, beta: Ord) -> list[int]:
        """Codes of pool sentences (and their subformulas) in Sent_{<beta}."""
        subs = _subformula_closure(self.sentences, self.N, 10_000)
        out = []
        for f in subs:
            if S.free_vars(f) or not S.in_language(f, S.LRam(beta)):
                continue
            out.append(S.encode(f))
        return sorted(set(out))


def rt_instances(R: RamifiedPool, beta: Ord) -> list[tuple[str, str, Formula]]:
    """RT axiom instances at level ``beta`` over Sent_{<beta} codes of the pool."""
    xs = R.level_sentences(beta)
    T = lambda t: TrRam(beta, t)  # noqa: E731
    out = []
    for x in xs:
        f = S.decode(x)
        nm = S.show(f)
        if isinstance(f, Eq):
            out.append(("atom", nm, iff(T(Num(x)), f)))
            out.append(("atom-neg", nm, iff(T(Num(neg_code(x))), Not(f))))
        if isinstance(f, TrRam) and O.compare(f.level, beta) == O.LT:
            out.append(("tr", nm, iff(T(Num(x)), f)))
        out.append(("neg", nm, iff(T(Num(neg_code(x))), Not(T(Num(x))))))
        out.append(("dneg", nm, iff(T(Num(neg_code(neg_code(x)))), T(Num(x)))))
        if isinstance(f, Or):
            a, b = S.encode(f.a), S.encode(f.b)
            out.append(("or", nm, iff(T(Num(x)), Or(T(Num(a)), T(Num(b))))))
        if isinstance(f, And):
            a, b = S.encode(f.a), S.encode(f.b)
            out.append(("and", nm, iff(T(Num(x)), And(T(Num(a)), T(Num(b))))))
        if isinstance(f, Forall):
            body = Num(S.encode(f.f))
            out.append(("forall", nm, iff(T(Num(x)), Forall("y_", T(S.Subst(body, Var("y_"), f.v))))))
    return out


def ramified_universe(R: RamifiedPool, levels: Iterable[Ord], limit: int = 2000) -> M.Universe:
    """L_T pool holding the σ-images of R and of its RT instances, closed for evaluation."""
    seeds: list[Formula] = [FALSUM]
    for f in R.sentences:
        seeds.append(sigma(R.gamma, f))
    for beta in levels:
        top = O.succ(beta)
        for _, _, inst in rt_instances(R, beta):
            seeds.append(sigma(top, inst))
    return M.Universe(_subformula_closure(seeds, R.N, limit), N=R.N)


def check_rt_translation(U: M.Universe, X, beta: Ord, R: RamifiedPool) -> PropertyReport:
    X = frozenset(X)
    rep = PropertyReport()
    top = O.succ(beta)
    for name, desc, inst in rt_instances(R, beta):
        phi = sigma(top, inst)
        _, outside = M.tr_references(U, phi)
        rep.count(name, not outside)
        if not outside and not M.classical_sat(U, X, phi):
            rep.failures.append((name, desc))
    return rep


def standard_ramified_pool() -> RamifiedPool:
    zero = O.ZERO
    zz, zo = Eq(S.Zero(), S.Zero()), FALSUM
    t0 = TrRam(zero, S.Quote(zz))
    f0 = TrRam(zero, S.Quote(zo))
    sentences = [
        zz,
        zo,
        t0,
        Not(f0),
        Or(f0, zz),
        And(t0, Not(f0)),
        Forall("x", Eq(Var("x"), Var("x"))),
        TrRam(O.ONE, S.Quote(t0)),
        TrRam(O.ONE, S.Quote(Or(t0, zo))),
        Not(TrRam(O.ONE, S.Quote(f0))),
    ]
    return RamifiedPool(sentences, O.TWO, N=1)


def h_agrees(x: int, beta: Ord, beta2: Ord) -> bool:
    """For beta <= beta2, h_beta2 agrees with h_beta on Sent_{<beta}."""
    if not S.is_sentence(x, S.LRam(beta)):
        return True
    return h(x, beta) == h(x, beta2) == x


__all__ = [
    "xi", "xi_star", "sk_jump", "sk_lfp", "check_xi_star_properties", "h", "k_translate",
    "sigma", "RamifiedPool", "ramified_universe", "rt_instances", "check_rt_translation",
    "standard_ramified_pool", "PropertyReport", "implies",
]
