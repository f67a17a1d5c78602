"""Finite-universe supervaluation: satisfaction schemes, Kripke jumps, fixed points.

A universe is a finite pool of sentences closed under NNF negation.  Sentences
are identified by a canonical code: the NNF of the sentence with every closed
atom argument replaced by the numeral of its value.  Arguments of ``Tr`` that
code sentences are themselves replaced by canonical codes.  A truth set is a
frozenset of canonical codes.

Supervaluation over all admissible ``X' ⊆ U`` is computed per sentence through
its *support*: the pool codes its ``Tr`` atoms can look up.  Only the trace of
``X'`` on the support matters, so we enumerate the traces realizable by some
admissible extension instead of the extensions themselves.  ``sv_sat_brute``
keeps the literal definition and serves as the test oracle.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import chain, combinations, product
from typing import Iterable, Sequence

from . import syntax as S
from .syntax import (And, CodeOp, Eq, Exists, Fix, Forall, Formula, Not, Num, Or, P,
                     Quote, Tr, TrRam, Var, implies, iff)

SCHEMES = ("sv", "vb", "vc", "mc")
THEORIES = ("VF", "VFminus", "VFM", "VFMminus", "VFW", "VFMP")

TruthSet = frozenset


class InvariantError(RuntimeError):
    pass


# ------------------------------------------------------------ canonical form

def _canon_term(t):
    if S.is_closed_term(t):
        try:
            return Num(S.eval_term(t))
        except (ValueError, RecursionError):
            return t
    return t


def _canon_code_term(t):
    t = _canon_term(t)
    if isinstance(t, Num):
        c = canon_code(t.n)
        return t if c is None else Num(c)
    return t


def _canon_atom(a: Formula) -> Formula:
    if isinstance(a, Eq):
        return Eq(_canon_term(a.l), _canon_term(a.r))
    if isinstance(a, Tr):
        return Tr(_canon_code_term(a.t))
    if isinstance(a, TrRam):
        return TrRam(a.level, _canon_code_term(a.t))
    if isinstance(a, P):
        return P(_canon_term(a.t))
    return a


@lru_cache(maxsize=None)
def canonical(f: Formula) -> Formula:
    return _canon(S.nnf(f))


def _canon(f: Formula) -> Formula:
    if S.is_atom(f):
        return _canon_atom(f)
    if isinstance(f, Not):
        return Not(_canon_atom(f.f))
    if isinstance(f, (Or, And)):
        return type(f)(_canon(f.a), _canon(f.b))
    return type(f)(f.v, _canon(f.f))


@lru_cache(maxsize=65536)
def canon_code(x: int):
    """Canonical code of the sentence coded by ``x``; ``None`` for non-sentences."""
    if not S.is_sentence(x, S.LPT) and not _is_ram_sentence(x):
        return None
    return S.encode(canonical(S.decode(x)))


def _is_ram_sentence(x: int) -> bool:
    f = S.decode(x)
    if f is S.NOT_A_CODE or S.free_vars(f):
        return False
    return any(isinstance(a, TrRam) for a in S.atoms(f))


# ----------------------------------------------------------------- universe

class Universe:
    """Negation-closed sentence pool with quantifier bound ``N``."""

    def __init__(self, sentences: Iterable[Formula], N: int = 1, P_ext: Iterable[int] | None = None):
        self.N = N
        self.P_ext = None if P_ext is None else frozenset(P_ext)
        self.formula: dict[int, Formula] = {}
        self.display: dict[int, Formula] = {}
        self.neg: dict[int, int] = {}
        order: list[int] = []
        for f in sentences:
            if S.free_vars(f) or S.count_holes(f):
                raise ValueError(f"pool member is not a sentence: {S.show(f)}")
            c = canonical(f)
            d = canonical(Not(f))
            cc, dc = S.encode(c), S.encode(d)
            for code, tree, disp in ((cc, c, f), (dc, d, Not(f))):
                if code not in self.formula:
                    self.formula[code] = tree
                    self.display[code] = disp
                    order.append(code)
            self.neg[cc], self.neg[dc] = dc, cc
        self.codes: tuple[int, ...] = tuple(order)
        self.code_set = frozenset(order)
        seen, pairs = set(), []
        for c in order:
            if c not in seen:
                pairs.append((c, self.neg[c]))
                seen.update((c, self.neg[c]))
        self.pairs: list[tuple[int, int]] = pairs
        self._support: dict[int, frozenset[int]] = {}
        self._table: dict[tuple[int, frozenset], bool] = {}

    def __len__(self):
        return len(self.codes)

    def __contains__(self, code):
        return code in self.code_set

    def name(self, code: int) -> str:
        return S.show(self.display[code]) if code in self.display else str(code)

    def code_of(self, f: Formula) -> int:
        return S.encode(canonical(f))

    def antiextension(self, X: Iterable[int]) -> frozenset[int]:
        return frozenset(self.neg[c] for c in X if c in self.neg)

    def consistent(self, X: Iterable[int]) -> bool:
        X = frozenset(X)
        return not (X & self.antiextension(X))

    def support(self, code: int) -> frozenset[int]:
        s = self._support.get(code)
        if s is None:
            s = frozenset(_support(self, self.formula[code]))
            self._support[code] = s
        return s

    def lookup(self, x: int):
        c = canon_code(x)
        return c if c in self.code_set else None


def make_universe(texts: Sequence[str], N: int = 1, P_ext=None) -> Universe:
    return Universe([S.parse(t) for t in texts], N=N, P_ext=P_ext)


def read_universe(path: str) -> Universe:
    """Universe file: one formula per line, ``#`` comments, ``numeral_bound N``, ``P n ...``."""
    N, P_ext, sentences = 1, None, []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("numeral_bound"):
                N = int(line.split()[1])
            elif line.startswith("P_ext"):
                P_ext = [int(x) for x in line.split()[1:]]
            else:
                sentences.append(S.parse(line))
    return Universe(sentences, N=N, P_ext=P_ext)


def read_extension(path: str, U: Universe) -> frozenset[int]:
    out = set()
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            c = U.code_of(S.parse(line)) if line.startswith("(") else int(line)
            if c not in U:
                raise ValueError(f"extension member not in pool: {line}")
            out.add(c)
    return frozenset(out)


# ---------------------------------------------------------------- classical

class _Eval:
    def __init__(self, U: Universe, X, P_ext, record: set | None = None):
        self.U, self.X, self.P_ext, self.record = U, X, P_ext, record

    def tr(self, t, level=None) -> bool:
        v = S.eval_term(t)
        if level is not None and not S.is_sentence(v, S.LRam(level)):
            return False
        c = self.U.lookup(v)
        if c is None:
            return False
        if self.record is not None:
            self.record.add(c)
        return c in self.X

    def sat(self, f: Formula) -> bool:
        if isinstance(f, Eq):
            return S.eval_term(f.l) == S.eval_term(f.r)
        if isinstance(f, Tr):
            return self.tr(f.t)
        if isinstance(f, TrRam):
            return self.tr(f.t, f.level)
        if isinstance(f, P):
            if self.P_ext is None:
                raise ValueError("P atom evaluated without a P extension")
            return S.eval_term(f.t) in self.P_ext
        if isinstance(f, Not):
            return not self.sat(f.f)
        if isinstance(f, Fix):
            return self.sat(S.unfold(f))
        full = self.record is not None
        if isinstance(f, (Or, And)):
            a = self.sat(f.a)
            if full:
                b = self.sat(f.b)
                return (a or b) if isinstance(f, Or) else (a and b)
            if isinstance(f, Or):
                return a or self.sat(f.b)
            return a and self.sat(f.b)
        if isinstance(f, (Forall, Exists)):
            vals = (self.sat(S.subst(f.f, f.v, Num(i))) for i in range(self.U.N + 1))
            if full:
                vals = list(vals)
            return all(vals) if isinstance(f, Forall) else any(vals)
        raise TypeError(repr(f))


def classical_sat(U: Universe, X, phi: Formula, P_ext=None) -> bool:
    """Classical truth in (N restricted to 0..U.N, X)."""
    if S.free_vars(phi):
        raise ValueError(f"open formula: {S.show(phi)}")
    return _Eval(U, X, U.P_ext if P_ext is None else P_ext).sat(phi)


def _support(U: Universe, phi: Formula) -> set[int]:
    rec: set[int] = set()
    _Eval(U, frozenset(), U.P_ext, rec).sat(phi)
    return rec


def tr_references(U: Universe, phi: Formula) -> tuple[set[int], set[int]]:
    """Codes looked up by ``Tr`` atoms of ``phi``: (in the pool, sentences outside the pool)."""
    inside, outside = set(), set()

    def visit(f):
        if isinstance(f, (Tr, TrRam)):
            v = S.eval_term(f.t)
            c = U.lookup(v)
            if c is not None:
                inside.add(c)
            elif canon_code(v) is not None:
                outside.add(v)
        elif isinstance(f, Not):
            visit(f.f)
        elif isinstance(f, Fix):
            visit(S.unfold(f))
        elif isinstance(f, (Or, And)):
            visit(f.a)
            visit(f.b)
        elif isinstance(f, (Forall, Exists)):
            for i in range(U.N + 1):
                visit(S.subst(f.f, f.v, Num(i)))

    visit(phi)
    return inside, outside


# ------------------------------------------------------------ admissibility

def admissible(e: str, U: Universe, X, Xp) -> bool:
    X, Xp = frozenset(X), frozenset(Xp)
    if e == "sv":
        return True
    if e == "vb":
        return not (Xp & U.antiextension(X))
    if e == "vc":
        return U.consistent(Xp)
    if e == "mc":
        return all((a in Xp) != (b in Xp) for a, b in U.pairs)
    raise ValueError(f"unknown scheme {e!r}")


def _subsets(items: Sequence[int]):
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def _traces(e: str, U: Universe, X: frozenset, supp: frozenset):
    """Traces ``X' ∩ supp`` of admissible ``X' ⊇ X`` (``X' ⊆ U``)."""
    forced = X & supp
    free = sorted(supp - forced)
    anti = U.antiextension(X)
    for extra in _subsets(free):
        A = forced | frozenset(extra)
        if e == "sv":
            yield A
            continue
        if e == "vb":
            if not (A & anti):
                yield A
            continue
        if A & anti or A & U.antiextension(A):
            continue
        if e == "vc":
            yield A
            continue
        # mc: every false support code needs its negation true
        if all(U.neg[c] in A if U.neg[c] in supp else U.neg[c] not in anti
               for c in supp - A):
            yield A


def sv_sat(e: str, U: Universe, X, phi) -> bool:
    """Supervaluational satisfaction ``X ⊨_e phi`` (phi a pool code or sentence)."""
    X = frozenset(X)
    if e in ("vb", "vc", "mc") and not U.consistent(X):
        return True  # no admissible extension at all
    if isinstance(phi, int):
        code, f = phi, U.formula[phi]
        supp = U.support(code)
    else:
        code, f = None, phi
        supp = frozenset(_support(U, phi))
    for A in _traces(e, U, X, supp):
        key = (code, A)
        v = U._table.get(key) if code is not None else None
        if v is None:
            v = _Eval(U, A, U.P_ext).sat(f)
            if code is not None:
                U._table[key] = v
        if not v:
            return False
    return True


def sv_sat_brute(e: str, U: Universe, X, phi: Formula) -> bool:
    """Literal definition: quantify over every ``X' ⊆ U`` (exponential)."""
    X = frozenset(X)
    rest = [c for c in U.codes if c not in X]
    for extra in _subsets(rest):
        Xp = X | frozenset(extra)
        if admissible(e, U, X, Xp) and not classical_sat(U, Xp, phi):
            return False
    return True


def jump(e: str, U: Universe, X) -> frozenset[int]:
    X = frozenset(X)
    return frozenset(c for c in U.codes if sv_sat(e, U, X, c))


def jump_brute(e: str, U: Universe, X) -> frozenset[int]:
    return frozenset(c for c in U.codes if sv_sat_brute(e, U, X, U.formula[c]))


@dataclass
class LfpResult:
    fixed_point: frozenset[int]
    stages: list[frozenset[int]]

    @property
    def deltas(self) -> list[frozenset[int]]:
        prev, out = frozenset(), []
        for s in self.stages:
            out.append(s - prev)
            prev = s
        return out


def lfp_trace(e: str, U: Universe, start=frozenset()) -> LfpResult:
    X = frozenset(start)
    stages = []
    for _ in range(len(U) + 2):
        Y = jump(e, U, X)
        if not X <= Y:
            raise InvariantError(f"jump_{e} not monotone along the iteration")
        if Y == X:
            return LfpResult(X, stages)
        stages.append(Y)
        X = Y
    raise InvariantError("iteration did not stabilize within |U| steps")


def lfp(e: str, U: Universe) -> frozenset[int]:
    return lfp_trace(e, U).fixed_point


def mcx_enumerate(U: Universe, X) -> list[frozenset[int]]:
    X = frozenset(X)
    choices = []
    for a, b in U.pairs:
        if a in X and b in X:
            return []
        choices.append((a,) if a in X else (b,) if b in X else (a, b))
    return [frozenset(pick) for pick in product(*choices)]


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("VERITAS_THREADS", "0")) or (os.cpu_count() or 1))
    except ValueError:
        return 1


@dataclass
class MonotonicityReport:
    scheme: str
    pairs_checked: int
    violations: list[tuple[frozenset, frozenset, int]]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_monotone(e: str, U: Universe, jump_fn=None) -> MonotonicityReport:
    """Exhaustive ``X ⊆ X' ⇒ J(X) ⊆ J(X')`` over all subsets of U."""
    jump_fn = jump_fn or jump
    subsets = [frozenset(s) for s in _subsets(U.codes)]
    with ThreadPoolExecutor(max_workers=_threads()) as ex:
        images = dict(zip(subsets, ex.map(lambda s: jump_fn(e, U, s), subsets)))
    bad, n = [], 0
    for X in subsets:
        for Xp in subsets:
            if X <= Xp:
                n += 1
                lost = images[X] - images[Xp]
                if lost:
                    bad.append((X, Xp, min(lost)))
    return MonotonicityReport(e, n, bad)


# ------------------------------------------------------------------- pools

def liar_family_pools() -> list[Universe]:
    """Pools of at most six sentences, each containing the Liar pair."""
    lam, tau = S.liar(), S.truth_teller()
    zz = Eq(S.Zero(), S.Zero())
    cands = [
        zz,
        S.zero_eq_one(),
        tau,
        Tr(Quote(lam)),
        Tr(CodeOp("neg", (Quote(lam),))),
        Or(lam, tau),
        Tr(Quote(zz)),
    ]
    pools = [Universe([lam], N=0)]
    for k in (1, 2):
        for extra in combinations(cands, k):
            pools.append(Universe([lam, *extra], N=0))
    return pools


def standard_sentences() -> list[Formula]:
    lam, tau = S.liar(), S.truth_teller()
    zz = Eq(S.Zero(), S.Zero())
    zo = S.zero_eq_one()
    ql = Quote(lam)
    neg_ql = CodeOp("neg", (ql,))
    qzz = Quote(zz)
    return [
        zz,
        zo,
        Eq(Num(1), Num(1)),
        Forall("x", Eq(Var("x"), Var("x"))),
        lam,
        tau,
        Tr(qzz),
        Tr(Quote(Tr(qzz))),
        Not(Tr(Quote(zo))),
        # the sentence under Tr in the VF7 instance at the Liar
        iff(Not(Tr(ql)), Tr(neg_ql)),
        # the sentence under Tr in the V7 instance at the Liar
        Not(And(Tr(ql), Tr(neg_ql))),
        # the sentence under Tr in the VF⁻7 instance at 0=0
        Not(Tr(CodeOp("neg", (qzz,)))),
        # the sentence under Tr in the V8 instance at 0=0
        implies(Tr(qzz), Eq(CodeOp("sent", (qzz,)), Num(1))),
        implies(Tr(qzz), zz),
    ]


def standard_universe(N: int = 1) -> Universe:
    """Arithmetic atoms, Liar, truth-teller, nested Tr sentences and axiom companions."""
    return Universe(standard_sentences(), N=N)


# ------------------------------------------------------------------ axioms

def _n(c: int) -> Num:
    return Num(c)


def _op(name, *args, var=None):
    return CodeOp(name, tuple(args), var)


def _sent(t) -> Formula:
    return Eq(_op("sent", t), Num(1))


def _ct(t) -> Formula:
    return Eq(_op("ct", t), Num(1))


def _ax1(x: int, y: int) -> Formula:
    tx, ty = _n(x), _n(y)
    same = Eq(_op("val", tx), _op("val", ty))
    e = _op("eq", tx, ty)
    return implies(And(_ct(tx), _ct(ty)),
                   And(iff(Tr(e), same), iff(Tr(_op("neg", e)), Not(same))))


def _ax_pat(x: int) -> Formula:
    return Tr(_n(x))


def _ax3(body_code: int, v: str) -> Formula:
    q = _n(body_code)
    return implies(Forall("z_", Tr(S.Subst(q, Var("z_"), v))), Tr(_op("forall", q, var=v)))


def _ax4_fwd(x: int) -> Formula:
    return implies(Tr(_n(x)), Tr(_op("tr", _n(x))))


def _ax4_iff(x: int) -> Formula:
    return iff(Tr(_n(x)), Tr(_op("tr", _n(x))))


def _v5(x: int) -> Formula:
    t = _n(x)
    return implies(And(_sent(t), Tr(_op("neg", _op("tr", t)))), Tr(_op("neg", t)))


def _ax5_iff(x: int) -> Formula:
    t = _n(x)
    return implies(_sent(t), iff(Tr(_op("neg", _op("tr", t))), Tr(_op("neg", t))))


def _ax6(x: int, y: int) -> Formula:
    tx, ty = _n(x), _n(y)
    return implies(Tr(_op("or", _op("neg", tx), ty)), implies(Tr(tx), Tr(ty)))


def _v7(x: int) -> Formula:
    t = _n(x)
    return Tr(Quote(Not(And(Tr(t), Tr(_op("neg", t))))))


def _vfminus7(x: int) -> Formula:
    t = _n(x)
    return implies(Tr(t), Tr(Quote(Not(Tr(_op("neg", t))))))


def _vf7(x: int) -> Formula:
    t = _n(x)
    return Tr(Quote(iff(Not(Tr(t)), Tr(_op("neg", t)))))


def _vf7_left(x: int) -> Formula:
    t = _n(x)
    return Tr(Quote(implies(Tr(_op("neg", t)), Not(Tr(t)))))


def _ax8(x: int) -> Formula:
    t = _n(x)
    return Tr(Quote(implies(Tr(t), _sent(t))))


def _vf4_star(x: int) -> Formula:
    return _ax4_fwd(x)


def _t_out(phi: Formula) -> Formula:
    return implies(Tr(Quote(phi)), phi)


def _p_disq(n: int) -> Formula:
    return iff(Tr(_op("p", S.NumOf(Num(n)))), P(Num(n)))


# axiom id -> (instance builder, argument kind)
_BASE = {
    "1": (_ax1, "terms2"), "2": (_ax_pat, "pat"), "3": (_ax3, "forall"),
    "6": (_ax6, "codes2"), "8": (_ax8, "codes"),
}

AXIOMS: dict[str, dict[str, tuple]] = {
    "VF": {
        **{f"V{k}": v for k, v in _BASE.items()},
        "V4": (_ax4_fwd, "codes"), "V5": (_v5, "codes"), "V7": (_v7, "codes"),
        "V9": (_t_out, "sentences"),
    },
    "VFminus": {
        **{f"VF-{k}": v for k, v in _BASE.items()},
        "VF-4": (_ax4_fwd, "codes"), "VF-5": (_ax5_iff, "codes"),
        "VF-7": (_vfminus7, "codes"), "VF-9": (_t_out, "sentences"),
    },
    "VFM": {
        **{f"VF{k}": v for k, v in _BASE.items()},
        "VF4": (_ax4_iff, "codes"), "VF5": (_ax5_iff, "codes"), "VF7": (_vf7, "codes"),
    },
    "VFMminus": {
        **{f"VF{k}": v for k, v in _BASE.items()},
        "VF4*": (_vf4_star, "codes"), "VF5": (_ax5_iff, "codes"), "VF7": (_vf7, "codes"),
    },
    "VFW": {
        **{f"VF{k}": v for k, v in _BASE.items()},
        "VF4": (_ax4_iff, "codes"), "VF5": (_ax5_iff, "codes"), "VF7<-": (_vf7_left, "codes"),
    },
}
AXIOMS["VFMP"] = {**AXIOMS["VFM"], "P-Disq": (_p_disq, "numerals")}

RULES_NOT_CHECKED = {"VFW": ["Tr-Elim"], "VFMP": ["P-Subst"]}


def axiom_names(theory: str) -> list[str]:
    return sorted(AXIOMS[theory], key=lambda s: (len(s), s))


def _is_pat_axiom(f: Formula) -> bool:
    if isinstance(f, Eq):
        return f.l == f.r
    if isinstance(f, Forall) and isinstance(f.f, Eq):
        return f.f.l == f.f.r
    return False


def _pool_terms(U: Universe) -> list[int]:
    terms = set()
    for f in U.display.values():
        for t in S.closed_terms(S.nnf(f)):
            terms.add(S.encode_term(t))
    for i in range(U.N + 1):
        terms.add(S.encode_term(Num(i)))
    return sorted(terms)


def axiom_arguments(U: Universe, kind: str) -> list[tuple]:
    if kind == "codes":
        return [(c,) for c in U.codes]
    if kind == "codes2":
        return [(a, b) for a in U.codes for b in U.codes]
    if kind == "terms2":
        ts = _pool_terms(U)
        return [(a, b) for a in ts for b in ts]
    if kind == "pat":
        return [(c,) for c in U.codes if _is_pat_axiom(U.formula[c])]
    if kind == "forall":
        return [(S.encode(f.f), f.v) for f in U.formula.values() if isinstance(f, Forall)]
    if kind == "sentences":
        return [(f,) for f in U.formula.values()]
    if kind == "numerals":
        return [(i,) for i in range(U.N + 1)]
    raise ValueError(kind)


def _arg_text(U: Universe, args: tuple) -> str:
    out = []
    for a in args:
        if isinstance(a, Formula):
            out.append(S.show(a))
        elif isinstance(a, int) and a in U:
            out.append(U.name(a))
        else:
            out.append(str(a))
    return ", ".join(out)


@dataclass
class AxiomReport:
    theory: str
    checked: dict[str, int] = field(default_factory=dict)
    skipped: dict[str, int] = field(default_factory=dict)
    failures: list[tuple[str, str]] = field(default_factory=list)
    unchecked_rules: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_record(self) -> dict:
        return {
            "theory": self.theory,
            "checked": self.checked,
            "skipped": self.skipped,
            "failures": [{"axiom": a, "instance": i} for a, i in self.failures],
            "unchecked_rules": self.unchecked_rules,
        }


def axiom_instances(theory: str, U: Universe, names: Iterable[str] | None = None):
    """Yield ``(axiom, argument text, instance, in_scope)``.

    An instance is in scope when every sentence its ``Tr`` atoms refer to is a
    pool member; otherwise its truth value would depend on sentences the
    finite model cannot see.
    """
    table = AXIOMS[theory]
    for name in names or axiom_names(theory):
        build, kind = table[name]
        for args in axiom_arguments(U, kind):
            inst = build(*args)
            _, outside = tr_references(U, inst)
            yield name, _arg_text(U, args), inst, not outside


def check_axioms(theory: str, U: Universe, X) -> AxiomReport:
    if theory not in AXIOMS:
        raise ValueError(f"unknown theory {theory!r}")
    X = frozenset(X)
    rep = AxiomReport(theory, unchecked_rules=list(RULES_NOT_CHECKED.get(theory, [])))
    for name, args, inst, in_scope in axiom_instances(theory, U):
        if not in_scope:
            rep.skipped[name] = rep.skipped.get(name, 0) + 1
            continue
        rep.checked[name] = rep.checked.get(name, 0) + 1
        if not classical_sat(U, X, inst):
            rep.failures.append((name, args))
    return rep


SCHEME_FOR = {"VF": "vc", "VFminus": "vb", "VFM": "mc", "VFMminus": "mc", "VFW": "mc", "VFMP": "mc"}
