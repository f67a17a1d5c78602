"""Ordinal-labelled Tait calculi and their admissible-rule transformations.

Two families share one node type.  In the infinitary systems (``VFMinf``,
``VFWinf``, ``PAPinfT``, ``VFMPinf``) a node carries a derivation length
``label`` and a cut rank ``rank``.  In the interpretation calculi (``I``,
``Iprime``, ``Istar``) it carries the judgment ``I(i; alpha; label; Γ)``:
``i`` records use of (Cons)/(Norm), ``alpha`` bounds nested (Tr-Intro)
applications and ``label`` is the height.

Sequents are finite sets of sentences taken up to negation normal form and up
to the values of closed terms, so ``Tr(quote A)`` and ``Tr(num #A)`` are the
same sentence.  A premise may omit context formulas, which builds weakening
into every rule.  The omega-rule is finitized: a universal node stores the
instances ``0..omega_bound``.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from . import ordinals as O
from . import syntax as S
from .ordinals import Ord, ZERO, natural_sum, omega_tower, epsilon, succ, max_ord
from .syntax import (And, CodeOp, Eq, Exists, Fix, Forall, Formula, Not, Num, Or, P,
                     Quote, Subst, Succ, NumOf, Term, Tr, TrRam, implies)

LEQ = lambda a, b: O.compare(a, b) != O.GT  # noqa: E731
LT_ = lambda a, b: O.compare(a, b) == O.LT  # noqa: E731


class CalculusError(ValueError):
    pass


# ------------------------------------------------------------ sentence keys

def _nt(t: Term) -> Term:
    if S.is_closed_term(t):
        try:
            return Num(S.eval_term(t))
        except (ValueError, RecursionError):
            return t
    if isinstance(t, Succ):
        return Succ(_nt(t.t))
    if isinstance(t, NumOf):
        return NumOf(_nt(t.t))
    if isinstance(t, CodeOp):
        return CodeOp(t.op, tuple(_nt(a) for a in t.args), t.var)
    if isinstance(t, Subst):
        return Subst(_nt(t.x), _nt(t.t), t.v)
    return t


def _unfix(f: Formula) -> Formula:
    if isinstance(f, Fix):
        return _unfix(S.unfold(f))
    if isinstance(f, Not):
        return Not(_unfix(f.f))
    if isinstance(f, (Or, And)):
        return type(f)(_unfix(f.a), _unfix(f.b))
    if isinstance(f, (Forall, Exists)):
        return type(f)(f.v, _unfix(f.f))
    return f


def _numeralize(f: Formula) -> Formula:
    if isinstance(f, Eq):
        return Eq(_nt(f.l), _nt(f.r))
    if isinstance(f, Tr):
        return Tr(_nt(f.t))
    if isinstance(f, P):
        return P(_nt(f.t))
    if isinstance(f, TrRam):
        return TrRam(f.level, _nt(f.t))
    if isinstance(f, Not):
        return Not(_numeralize(f.f))
    if isinstance(f, (Or, And)):
        return type(f)(_numeralize(f.a), _numeralize(f.b))
    if isinstance(f, (Forall, Exists)):
        return type(f)(f.v, _numeralize(f.f))
    return f


@lru_cache(maxsize=200000)
def key(f: Formula) -> Formula:
    """Identity of a sentence inside a sequent."""
    return _numeralize(S.nnf(_unfix(f)))


def keys(fs: Iterable[Formula]) -> frozenset:
    return frozenset(key(f) for f in fs)


def co(f: Formula) -> int:
    """Logical complexity; literals have complexity 0."""
    return S.complexity(key(f))


def dual(f: Formula) -> Formula:
    return key(Not(f))


def value(t: Term):
    try:
        return S.eval_term(t)
    except (ValueError, RecursionError):
        return None


def tr_value(f: Formula):
    """Value of ``t`` when the key of ``f`` is ``Tr(t)``."""
    f = key(f)
    if isinstance(f, Tr) and isinstance(f.t, Num):
        return f.t.n
    return None


def neg_tr_value(f: Formula):
    f = key(f)
    if isinstance(f, Not) and isinstance(f.f, Tr) and isinstance(f.f.t, Num):
        return f.f.t.n
    return None


def _p_value(f: Formula, negated: bool):
    f = key(f)
    if negated:
        if not isinstance(f, Not):
            return None
        f = f.f
    if isinstance(f, P) and isinstance(f.t, Num):
        return f.t.n
    return None


def true_arith_literal(f: Formula) -> bool:
    f = key(f)
    pos = f.f if isinstance(f, Not) else f
    if not isinstance(pos, Eq) or not (isinstance(pos.l, Num) and isinstance(pos.r, Num)):
        return False
    return (pos.l.n == pos.r.n) != isinstance(f, Not)


def _decoded(n):
    if n is None:
        return None
    f = S.decode(n)
    return None if f is S.NOT_A_CODE else f


# ------------------------------------------------------------- code helpers

def _op(name, *args, var=None) -> CodeOp:
    return CodeOp(name, tuple(args), var)


def neg_code(n: int) -> int:
    return S._op_value("neg", [n], None)


def imp_code(n: int, m: int) -> int:
    return S._op_value("or", [neg_code(n), m], None)


def sent_atom(t: Term) -> Formula:
    return Eq(_op("sent", t), Num(1))


def ct_atom(t: Term) -> Formula:
    return Eq(_op("ct", t), Num(1))


def conj(*fs: Formula) -> Formula:
    out = fs[0]
    for f in fs[1:]:
        out = And(out, f)
    return out


def tr_cons_body(n: int) -> Formula:
    t = Num(n)
    return Not(And(Tr(t), Tr(_op("neg", t))))


def tr_comp_body(n: int) -> Formula:
    t = Num(n)
    return implies(sent_atom(t), Or(Tr(t), Tr(_op("neg", t))))


def tr_norm_body(n: int) -> Formula:
    t = Num(n)
    return implies(Tr(t), sent_atom(t))


def tr_eq_minor(n: int, m: int) -> Formula:
    a, b = Num(n), Num(m)
    return conj(ct_atom(a), ct_atom(b), Eq(_op("val", a), _op("val", b)))


def tr_neq_minor(n: int, m: int) -> Formula:
    a, b = Num(n), Num(m)
    return conj(ct_atom(a), ct_atom(b), Tr(_op("eq", a, b)), Not(Eq(_op("val", a), _op("val", b))))


def _first_tr_num(f: Formula):
    """The value ``n`` in templates whose first atom is ``Tr(ṅ)``."""
    for a in S.atoms(f):
        if isinstance(a, Tr):
            return value(a.t)
        if isinstance(a, Eq) and isinstance(a.l, CodeOp) and a.l.op == "sent":
            return value(a.l.args[0])
    return None


def _matches_template(code, build) -> bool:
    f = _decoded(code)
    if f is None:
        return False
    n = _first_tr_num(f)
    return n is not None and key(f) == key(build(n))


# --------------------------------------------------------- PAT whitelist

def _prop_atoms(f: Formula, out: list):
    if isinstance(f, (Or, And)):
        _prop_atoms(f.a, out)
        _prop_atoms(f.b, out)
    elif isinstance(f, Not):
        _prop_atoms(f.f, out)
    elif f not in out:
        out.append(f)


def _prop_eval(f: Formula, v: dict) -> bool:
    if isinstance(f, Or):
        return _prop_eval(f.a, v) or _prop_eval(f.b, v)
    if isinstance(f, And):
        return _prop_eval(f.a, v) and _prop_eval(f.b, v)
    if isinstance(f, Not):
        return not _prop_eval(f.f, v)
    return v[f]


def is_tautology(f: Formula, max_atoms: int = 12) -> bool:
    """Propositional tautology over opaque atoms and quantified subformulas."""
    f = key(f)
    atoms: list = []
    _prop_atoms(f, atoms)
    if len(atoms) > max_atoms:
        return False
    for bits in product((False, True), repeat=len(atoms)):
        if not _prop_eval(f, dict(zip(atoms, bits))):
            return False
    return True


def _closed_arith_true(f: Formula):
    """Truth of a quantifier-free arithmetical sentence, else ``None``."""
    if isinstance(f, Eq):
        return f.l == f.r if isinstance(f.l, Num) and isinstance(f.r, Num) else None
    if isinstance(f, Not):
        r = _closed_arith_true(f.f)
        return None if r is None else not r
    if isinstance(f, (Or, And)):
        a, b = _closed_arith_true(f.a), _closed_arith_true(f.b)
        if a is None or b is None:
            return None
        return (a or b) if isinstance(f, Or) else (a and b)
    return None


_PA_AXIOMS = (
    "(forall x (= x x))",
    "(forall x (not (= (S x) 0)))",
    "(forall x (forall y (-> (= (S x) (S y)) (= x y))))",
)


@lru_cache(maxsize=None)
def _pa_keys() -> frozenset:
    return frozenset(key(S.parse(t)) for t in _PA_AXIOMS)


def is_pat_axiom(code: int) -> bool:
    """Decidable whitelist standing in for ``Ax_PAT``."""
    f = _decoded(code)
    if f is None or not S.is_sentence(code, S.LPT):
        return False
    k = key(f)
    if k in _pa_keys():
        return True
    if _closed_arith_true(k):
        return True
    return is_tautology(k)


# ------------------------------------------------------------------ systems

@dataclass(frozen=True)
class System:
    name: str
    X: frozenset | None = None

    def __str__(self):
        return self.name


def Istar(X: Iterable[int]) -> System:
    return System("Istar", frozenset(X))


INF_FAMILY = ("VFMinf", "VFWinf", "PAPinfT", "VFMPinf")
I_FAMILY = ("I", "Iprime", "Istar")

_BASIC = {"Ax1", "Ax2", "Or", "And", "Exists", "Forall", "Cut"}
_TRUTH = {"TrEq", "TrNeq", "TrImp", "TrForall", "Rep", "Del", "TrCons", "TrComp",
          "TrNorm", "TrPAT", "Cons"}
_ILOGIC = {"Ax1", "Ax3", "Or", "And", "Exists", "Forall", "TrIntro", "Cons", "Norm"}

RULES = {
    "VFMinf": _BASIC | _TRUTH,
    "VFWinf": (_BASIC | _TRUTH | {"AxIprime", "Norm"}) - {"TrComp"},
    "PAPinfT": _BASIC | {"Ax3"},
    "VFMPinf": _BASIC | _TRUTH | {"Ax3", "PDisq1", "PDisq2"},
    "I": _ILOGIC | {"Comp"},
    "Iprime": _ILOGIC,
    "Istar": _ILOGIC | {"Comp", "Ax4P", "Ax5P"},
}

ALL_RULES = sorted(set().union(*RULES.values()))


def as_system(sys) -> System:
    if isinstance(sys, System):
        return sys
    if sys == "Istar":
        return Istar(())
    if sys not in RULES:
        raise CalculusError(f"unknown system {sys!r}")
    return System(sys)


def sentence_language(sys: System):
    return S.LPT if sys.name in ("PAPinfT", "VFMPinf", "Istar") else S.LT


def is_i_family(sys) -> bool:
    return as_system(sys).name in I_FAMILY


# --------------------------------------------------------------- derivations

@dataclass(frozen=True, eq=False)
class Derivation:
    rule: str
    conclusion: frozenset
    label: Ord = ZERO
    premises: tuple = ()
    rank: int = 0
    omega_bound: int | None = None
    side: dict = field(default_factory=dict)
    i: int = 0
    alpha: Ord = ZERO

    @property
    def keys(self) -> frozenset:
        return keys(self.conclusion)

    def nodes(self) -> Iterator["Derivation"]:
        stack = [self]
        while stack:
            d = stack.pop()
            yield d
            stack.extend(reversed(d.premises))

    def size(self) -> int:
        return sum(1 for _ in self.nodes())

    def height(self) -> int:
        return 1 + max((p.height() for p in self.premises), default=0)

    def max_rank(self) -> int:
        return max(d.rank for d in self.nodes())

    def rules_used(self) -> set[str]:
        return {d.rule for d in self.nodes()}

    def __repr__(self):
        conc = ", ".join(sorted(S.show(f) for f in self.conclusion))
        return f"Derivation({self.rule}, [{conc}], label={O.to_text(self.label)})"


def node(rule: str, conclusion: Iterable[Formula], premises: Sequence[Derivation] = (),
         label: Ord | None = None, **kw) -> Derivation:
    """Build a node; the default label is one above the largest premise label."""
    premises = tuple(premises)
    if label is None:
        label = succ(max_ord(p.label for p in premises)) if premises else ZERO
    if "rank" not in kw:
        kw["rank"] = max((p.rank for p in premises), default=0)
    return Derivation(rule, frozenset(conclusion), label, premises, **kw)


# ------------------------------------------------------------------ checking

@dataclass
class Violation:
    path: tuple
    rule: str
    condition: str
    actual: str

    def to_record(self) -> dict:
        return {"path": list(self.path), "rule": self.rule,
                "condition": self.condition, "actual": self.actual}

    def __str__(self):
        where = "/".join(map(str, self.path)) or "root"
        return f"{where}: {self.rule}: {self.condition} (actual: {self.actual})"


@dataclass
class CheckResult:
    system: str
    nodes: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_record(self) -> dict:
        return {"system": self.system, "nodes": self.nodes, "ok": self.ok,
                "violations": [v.to_record() for v in self.violations]}


class _Fail(Exception):
    def __init__(self, condition, actual=""):
        super().__init__(condition)
        self.condition, self.actual = condition, str(actual)


def _need(cond: bool, condition: str, actual=""):
    if not cond:
        raise _Fail(condition, actual)


def _principal(d: Derivation) -> Formula:
    f = d.side.get("principal")
    _need(f is not None, "side data names the principal formula", "missing")
    _need(key(f) in d.keys, "principal formula occurs in the conclusion", S.show(f))
    return key(f)


def _principal_tr(d: Derivation) -> int:
    n = tr_value(_principal(d))
    _need(n is not None, "principal formula has the form Tr(t)", S.show(d.side["principal"]))
    return n


def _tr(n: int) -> Formula:
    return Tr(Num(n))


def minors(d: Derivation, sys: System) -> list[frozenset]:
    """The formulas premise ``j`` may add to the conclusion, per premise."""
    r, sd = d.rule, d.side
    n_prem = len(d.premises)
    if r == "Or":
        f = _principal(d)
        _need(isinstance(f, Or), "principal formula is a disjunction", S.show(f))
        return [keys([f.a, f.b])]
    if r == "And":
        f = _principal(d)
        _need(isinstance(f, And), "principal formula is a conjunction", S.show(f))
        return [keys([f.a]), keys([f.b])]
    if r == "Exists":
        f = _principal(d)
        _need(isinstance(f, Exists), "principal formula is existential", S.show(f))
        w = sd.get("witness")
        _need(isinstance(w, int) and w >= 0, "side data gives a numeral witness", w)
        return [keys([S.subst(f.f, f.v, Num(w))])]
    if r == "Forall":
        f = _principal(d)
        _need(isinstance(f, Forall), "principal formula is universal", S.show(f))
        return [keys([S.subst(f.f, f.v, Num(i))]) for i in range(n_prem)]
    if r == "Cut":
        a = sd.get("cut")
        _need(a is not None, "side data names the cut formula", "missing")
        return [keys([a]), keys([Not(a)])]
    if r == "TrEq":
        g = _decoded(_principal_tr(d))
        _need(isinstance(g, Eq), "principal is Tr(t ≃ n =̇ m)", g)
        return [keys([tr_eq_minor(S.encode_term(g.l), S.encode_term(g.r))])]
    if r == "TrNeq":
        n, m = sd.get("n"), sd.get("m")
        _need(isinstance(n, int) and isinstance(m, int), "side data gives codes n, m", (n, m))
        return [keys([tr_neq_minor(n, m)])]
    if r == "TrImp":
        m = _principal_tr(d)
        n = sd.get("antecedent")
        _need(isinstance(n, int), "side data gives the antecedent code", n)
        return [keys([_tr(n)]), keys([_tr(imp_code(n, m))])]
    if r == "TrForall":
        g = _decoded(_principal_tr(d))
        _need(isinstance(g, Forall), "principal is Tr(t ≃ ∀̇ v n)", g)
        return [keys([_tr(S.encode(S.subst(g.f, g.v, Num(i))))]) for i in range(n_prem)]
    if r == "Rep":
        g = _decoded(_principal_tr(d))
        _need(isinstance(g, Tr) and S.is_closed_term(g.t), "principal is Tr(t ≃ ⌜Tr(ṅ)⌝)", g)
        return [keys([_tr(S.eval_term(g.t))])]
    if r == "Del":
        n = _principal_tr(d)
        inner = sd.get("inner")
        if inner is None and d.premises:
            # take ⌜Tr(s)⌝ with s = n from the premise when it is there
            for f in sorted(d.premises[0].keys - d.keys, key=S.show):
                g = _decoded(tr_value(f)) if tr_value(f) is not None else None
                if isinstance(g, Tr) and S.is_closed_term(g.t) and S.eval_term(g.t) == n:
                    inner = tr_value(f)
                    break
        if inner is None:
            return [keys([_tr(S.encode(Tr(Num(n))))])]
        # ⌜Tr(ṅ)⌝ read up to the value of the inner term
        g = _decoded(inner)
        _need(isinstance(g, Tr) and S.is_closed_term(g.t) and S.eval_term(g.t) == n,
              "inner code is ⌜Tr(s)⌝ with s = n", g)
        return [keys([_tr(inner)])]
    if r in ("Cons",):
        n = sd.get("n")
        _need(isinstance(n, int), "side data gives the code n", n)
        return [keys([_tr(n)]), keys([_tr(neg_code(n))])]
    if r == "Norm":
        n = sd.get("n")
        _need(isinstance(n, int), "side data gives the code n", n)
        _need(not S.is_sentence(n, sentence_language(sys)), "¬Sent(n)", n)
        return [keys([_tr(n)])]
    if r == "TrIntro":
        g = _decoded(_principal_tr(d))
        _need(g is not None and S.is_sentence(S.encode(g), sentence_language(sys)),
              "principal is Tr(t ≃ ⌜A⌝) for a sentence A", g)
        return [keys([g])]
    if r in ("PDisq1", "PDisq2"):
        g = _decoded(_principal_tr(d))
        if r == "PDisq2":
            _need(isinstance(g, Not), "principal is Tr(s ≃ ¬̇ṗ t)", g)
            g = g.f
        _need(isinstance(g, P) and S.is_closed_term(g.t), "principal is Tr(s ≃ ṗ t)", g)
        # the decoded atom is P(t) for the coded term t; the minor is P(t°)
        lit = P(Num(S.eval_term(g.t)))
        return [keys([lit if r == "PDisq1" else Not(lit)])]
    return [frozenset()] * n_prem


_ARITY = {"Or": 1, "And": 2, "Exists": 1, "Cut": 2, "TrEq": 1, "TrNeq": 1, "TrImp": 2,
          "Rep": 1, "Del": 1, "Cons": 2, "Norm": 1, "TrIntro": 1, "PDisq1": 1, "PDisq2": 1}
_LEAVES = {"Ax1", "Ax2", "Ax3", "TrCons", "TrComp", "TrNorm", "TrPAT", "Comp",
           "AxIprime", "Ax4P", "Ax5P"}


def _leaf_ok(d: Derivation, sys: System):
    r, ks = d.rule, d.keys
    if r == "Ax1":
        _need(any(true_arith_literal(f) for f in ks), "a true arithmetical literal occurs")
    elif r in ("Ax2",) or (r == "Ax3" and sys.name in I_FAMILY):
        pos = {tr_value(f) for f in ks} - {None}
        negs = {neg_tr_value(f) for f in ks} - {None}
        _need(bool(pos & negs), "¬Tr(s) and Tr(t ≃ s) both occur")
    elif r == "Ax3":
        pos = {_p_value(f, False) for f in ks} - {None}
        negs = {_p_value(f, True) for f in ks} - {None}
        _need(bool(pos & negs), "¬P(s) and P(t ≃ s) both occur")
    elif r == "TrCons":
        _need(_matches_template(_principal_tr(d), tr_cons_body),
              "principal is Tr(t ≃ ⌜¬(Tr(ṅ) ∧ Tr(¬̇ṅ))⌝)", S.show(d.side["principal"]))
    elif r == "TrComp":
        _need(_matches_template(_principal_tr(d), tr_comp_body),
              "principal is Tr(t ≃ ⌜Sent(ṅ) → Tr(ṅ) ∨ Tr(¬̇ṅ)⌝)", S.show(d.side["principal"]))
    elif r == "TrNorm":
        _need(_matches_template(_principal_tr(d), tr_norm_body),
              "principal is Tr(t ≃ ⌜Tr(ṅ) → Sent(ṅ)⌝)", S.show(d.side["principal"]))
    elif r == "TrPAT":
        n = _principal_tr(d)
        _need(is_pat_axiom(n), "Ax_PAT(n): the coded sentence is a listed PAT axiom",
              _decoded(n))
    elif r == "Comp":
        L = sentence_language(sys)
        vals = {tr_value(f) for f in ks} - {None}
        found = False
        for v in vals:
            g = _decoded(v)
            if g is not None and S.is_sentence(v, L) and S.encode(Not(g)) in vals:
                found = True
                break
        _need(found, "Tr(s ≃ ⌜A⌝) and Tr(t ≃ ⌜¬A⌝) both occur")
    elif r in ("Ax4P", "Ax5P"):
        X = sys.X or frozenset()
        vals = {_p_value(f, r == "Ax5P") for f in ks} - {None}
        if r == "Ax4P":
            _need(any(v in X for v in vals), "P(t) occurs with t ∈ X", sorted(vals))
        else:
            _need(any(v not in X for v in vals), "¬P(t) occurs with t ∉ X", sorted(vals))
    elif r == "AxIprime":
        n = _principal_tr(d)
        sub = d.side.get("iprime")
        _need(isinstance(sub, Derivation), "side data holds the I′ derivation", "missing")
        g = _decoded(n)
        _need(g is not None and sub.keys <= keys([g]), "the I′ derivation concludes A", sub)
        res = check(sub, "Iprime")
        _need(res.ok, "the I′ derivation checks", "; ".join(map(str, res.violations[:3])))
        _need(LEQ(sub.label, d.label), "I′ height β ≤ label", O.to_text(sub.label))


def _check_node(d: Derivation, sys: System):
    allowed = RULES[sys.name]
    _need(d.rule in allowed, f"rule available in {sys.name}", d.rule)
    for f in d.conclusion:
        _need(not S.free_vars(f), "conclusion formulas are closed", S.show(f))
    if d.rule in _LEAVES:
        _need(not d.premises, "axioms have no premises", len(d.premises))
        _leaf_ok(d, sys)
    elif d.rule in ("Forall", "TrForall"):
        B = d.omega_bound
        _need(isinstance(B, int) and B >= 0, "ω-rule node records its instance bound B", B)
        _need(len(d.premises) == B + 1, "premises cover instances 0..B", len(d.premises))
    else:
        _need(len(d.premises) == _ARITY[d.rule], f"{_ARITY[d.rule]} premise(s)", len(d.premises))
    ms = minors(d, sys)
    ks = d.keys
    for j, p in enumerate(d.premises):
        extra = p.keys - ms[j] if d.rule == "TrIntro" else p.keys - ks - ms[j]
        _need(not extra, f"premise {j} concludes Γ plus its minor formulas",
              ", ".join(sorted(S.show(f) for f in extra)))
        _need(LT_(p.label, d.label), f"premise {j} label < α",
              f"{O.to_text(p.label)} vs {O.to_text(d.label)}")
    if sys.name in INF_FAMILY:
        for j, p in enumerate(d.premises):
            _need(p.rank <= d.rank, f"premise {j} cut rank ≤ k", f"{p.rank} vs {d.rank}")
        if d.rule == "Cut":
            c = co(d.side["cut"])
            _need(c < d.rank, "co(A) < k", f"co(A) = {c}, k = {d.rank}")
    else:
        _need(d.i in (0, 1), "i ∈ {0, 1}", d.i)
        if d.rule in ("Cons", "Norm"):
            _need(d.i == 1, "(Cons)/(Norm) conclude with i = 1", d.i)
        for j, p in enumerate(d.premises):
            _need(p.i <= d.i, f"premise {j} index i not above the conclusion's", f"{p.i} vs {d.i}")
            if d.rule == "TrIntro":
                _need(LT_(p.alpha, d.alpha), "(Tr-Intro) premise α₀ < α",
                      f"{O.to_text(p.alpha)} vs {O.to_text(d.alpha)}")
            else:
                _need(LEQ(p.alpha, d.alpha), f"premise {j} Tr-Intro rank ≤ α",
                      f"{O.to_text(p.alpha)} vs {O.to_text(d.alpha)}")
        if sys.name == "Iprime":
            _need(LEQ(d.alpha, d.label), "α ≤ β", f"{O.to_text(d.alpha)} vs {O.to_text(d.label)}")


def check(d: Derivation, sys) -> CheckResult:
    """Verify every node; each violation names the node path and side condition."""
    sys = as_system(sys)
    res = CheckResult(str(sys))
    stack = [(d, ())]
    while stack:
        x, path = stack.pop()
        res.nodes += 1
        try:
            _check_node(x, sys)
        except _Fail as e:
            res.violations.append(Violation(path, x.rule, e.condition, e.actual))
        except (ValueError, RecursionError, TypeError) as e:
            res.violations.append(Violation(path, x.rule, "well-formed node", repr(e)))
        for j, p in reversed(list(enumerate(x.premises))):
            stack.append((p, path + (j,)))
    res.violations.sort(key=lambda v: v.path)
    return res


# ------------------------------------------------------ structural lemmas

def weaken(d: Derivation, extra: Iterable[Formula] = (), rank: int | None = None,
           label: Ord | None = None, i: int | None = None, alpha: Ord | None = None) -> Derivation:
    """Enlarge the conclusion and raise rank, label or the I-indices."""
    rank = d.rank if rank is None else rank
    label = d.label if label is None else label
    i = d.i if i is None else i
    alpha = d.alpha if alpha is None else alpha
    if rank < d.rank or O.compare(label, d.label) == O.LT or i < d.i \
            or O.compare(alpha, d.alpha) == O.LT:
        raise CalculusError("weakening may not lower rank, label, i or alpha")
    if i > 1:
        raise CalculusError("i ranges over {0, 1}")
    return replace(d, conclusion=d.conclusion | frozenset(extra), rank=rank, label=label,
                   i=i, alpha=alpha)


def _replace_term(t: Term, s: Term, r: Term) -> Term:
    if t == s:
        return r
    if isinstance(t, Succ):
        return Succ(_replace_term(t.t, s, r))
    if isinstance(t, NumOf):
        return NumOf(_replace_term(t.t, s, r))
    if isinstance(t, CodeOp):
        return CodeOp(t.op, tuple(_replace_term(a, s, r) for a in t.args), t.var)
    if isinstance(t, Subst):
        return Subst(_replace_term(t.x, s, r), _replace_term(t.t, s, r), t.v)
    return t


def replace_in_formula(f: Formula, s: Term, r: Term) -> Formula:
    if isinstance(f, Eq):
        return Eq(_replace_term(f.l, s, r), _replace_term(f.r, s, r))
    if isinstance(f, (Tr, P)):
        return type(f)(_replace_term(f.t, s, r))
    if isinstance(f, TrRam):
        return TrRam(f.level, _replace_term(f.t, s, r))
    if isinstance(f, Not):
        return Not(replace_in_formula(f.f, s, r))
    if isinstance(f, (Or, And)):
        return type(f)(replace_in_formula(f.a, s, r), replace_in_formula(f.b, s, r))
    if isinstance(f, (Forall, Exists)):
        return type(f)(f.v, replace_in_formula(f.f, s, r))
    return f


def substitute_derivation(d: Derivation, s: Term, t: Term) -> Derivation:
    """Replace the closed term ``s`` by ``t`` of equal value throughout ``d``."""
    if not (S.is_closed_term(s) and S.is_closed_term(t)):
        raise CalculusError("substitution needs closed terms")
    if S.eval_term(s) != S.eval_term(t):
        raise CalculusError(f"value mismatch: {S.show_term(s)} vs {S.show_term(t)}")

    def go(x: Derivation) -> Derivation:
        side = {k: (replace_in_formula(v, s, t) if isinstance(v, Formula) else v)
                for k, v in x.side.items()}
        return replace(x, conclusion=frozenset(replace_in_formula(f, s, t) for f in x.conclusion),
                       premises=tuple(go(p) for p in x.premises), side=side)
    return go(d)


def relabel(d: Derivation) -> Derivation:
    """Tight labels: axioms get 0, other nodes one above their premises."""
    ps = tuple(relabel(p) for p in d.premises)
    label = succ(max_ord(p.label for p in ps)) if ps else ZERO
    return replace(d, premises=ps, label=label)


def _local_ok(d: Derivation, sys: System) -> bool:
    try:
        _check_node(d, sys)
        return True
    except (_Fail, ValueError, RecursionError, TypeError):
        return False


# ------------------------------------------------------------- proof search

_PRINCIPAL_LEAVES = ("TrCons", "TrComp", "TrNorm", "TrPAT")


class Prover:
    """Bounded backward search used to fill in the "by logic" parts of templates.

    Leaves are tried first, then the invertible rules, then the caller's hints,
    then existential witnesses ``0..B``.  ``lemmas`` are derivations that close
    any sequent containing their conclusion.
    """

    def __init__(self, sys="VFMinf", B: int = 2, depth: int = 14, i: int = 0,
                 alpha: Ord = ZERO, lemmas: Sequence[Derivation] = (), hints: Sequence = ()):
        self.sys = as_system(sys)
        self.B, self.depth, self.i, self.alpha = B, depth, i, alpha
        self.lemmas = list(lemmas)
        self.hints = list(hints)
        self._fail: dict = {}

    def mk(self, rule, conc, premises=(), **kw) -> Derivation:
        if is_i_family(self.sys):
            kw.setdefault("i", max([self.i] + [p.i for p in premises]))
            kw.setdefault("alpha", max_ord([self.alpha] + [p.alpha for p in premises]))
        d = node(rule, conc, premises, **kw)
        if self.sys.name == "Iprime" and O.compare(d.alpha, d.label) == O.GT:
            d = replace(d, label=d.alpha)
        return d

    def prove(self, seq: Iterable[Formula]) -> Derivation | None:
        return self._prove(keys(seq), self.depth)

    def _leaf(self, seq):
        rules = RULES[self.sys.name]
        for r in ("Ax1", "Ax2", "Ax3", "Comp", "Ax4P", "Ax5P"):
            if r in rules:
                d = self.mk(r, seq)
                if _local_ok(d, self.sys):
                    return d
        for r in _PRINCIPAL_LEAVES:
            if r not in rules:
                continue
            for f in sorted(seq, key=S.show):
                if tr_value(f) is not None:
                    d = self.mk(r, seq, side={"principal": f})
                    if _local_ok(d, self.sys):
                        return d
        for lem in self.lemmas:
            if lem.keys <= seq:
                return weaken(lem, seq)
        return None

    def _prove(self, seq: frozenset, depth: int):
        d = self._leaf(seq)
        if d is not None or depth <= 0:
            return d
        if self._fail.get(seq, -1) >= depth:
            return None
        order = sorted(seq, key=S.show)
        for f in order:
            if isinstance(f, Or):
                p = self._prove((seq - {f}) | {f.a, f.b}, depth - 1)
                return self._done(seq, depth, p and self.mk("Or", seq, [p], side={"principal": f}))
            if isinstance(f, And):
                p0 = self._prove((seq - {f}) | {f.a}, depth - 1)
                p1 = p0 and self._prove((seq - {f}) | {f.b}, depth - 1)
                return self._done(seq, depth,
                                  p1 and self.mk("And", seq, [p0, p1], side={"principal": f}))
            if isinstance(f, Forall):
                ps = []
                for n in range(self.B + 1):
                    p = self._prove((seq - {f}) | {key(S.subst(f.f, f.v, Num(n)))}, depth - 1)
                    if p is None:
                        return self._done(seq, depth, None)
                    ps.append(p)
                return self._done(seq, depth, self.mk("Forall", seq, ps, omega_bound=self.B,
                                                      side={"principal": f}))
        for h in self.hints:
            d = h(self, seq, depth)
            if d is not None:
                return d
        for f in order:
            if isinstance(f, Exists):
                for n in range(self.B + 1):
                    inst = key(S.subst(f.f, f.v, Num(n)))
                    if inst in seq:
                        continue
                    p = self._prove(seq | {inst}, depth - 1)
                    if p is not None:
                        return self.mk("Exists", seq, [p], side={"principal": f, "witness": n})
        return self._done(seq, depth, None)

    def _done(self, seq, depth, d):
        if d is None:
            self._fail[seq] = max(depth, self._fail.get(seq, -1))
        return d


def prove(seq: Iterable[Formula], sys="VFMinf", **kw) -> Derivation | None:
    return Prover(sys, **kw).prove(seq)


def hint_one_premise(pr: Prover, seq: frozenset, depth: int):
    """Close a positive ``Tr`` atom by a one-premise truth rule whose minor is an axiom."""
    rules = RULES[pr.sys.name]
    for f in sorted(seq, key=S.show):
        if tr_value(f) is None:
            continue
        for r in ("Rep", "Del", "PDisq1", "PDisq2", "TrEq", "TrIntro"):
            if r not in rules:
                continue
            probe = pr.mk(r, seq, [pr.mk("Ax1", seq)], side={"principal": f})
            try:
                ms = minors(probe, pr.sys)[0]
            except (_Fail, ValueError, TypeError):
                continue
            prem_seq = ms if r == "TrIntro" else seq | ms
            if r == "TrIntro" and pr.alpha.is_zero():
                continue
            sub = pr if r != "TrIntro" else _lowered(pr)
            if r in ("TrEq", "TrIntro"):
                p = sub._prove(frozenset(prem_seq), depth - 1)
            else:
                p = sub._leaf(frozenset(prem_seq))
            if p is not None:
                return pr.mk(r, seq, [p], side={"principal": f})
    return None


def _lowered(pr: Prover) -> Prover:
    # Tr-Intro premises need a strictly smaller Tr-Intro rank
    a = pr.alpha
    lower = Ord(a.terms[:-1]) if a.terms and a.terms[-1] == O.ONE_TERM else ZERO
    return Prover(pr.sys, B=pr.B, depth=pr.depth, i=pr.i, alpha=lower, hints=pr.hints)


def hint_tr_imp(pr: Prover, seq: frozenset, depth: int):
    """(Tr_→) when both minors close against negated Tr atoms of the sequent."""
    if "TrImp" not in RULES[pr.sys.name]:
        return None
    negs = {neg_tr_value(f) for f in seq} - {None}
    for f in sorted(seq, key=S.show):
        m = tr_value(f)
        if m is None:
            continue
        for n in sorted(negs):
            if imp_code(n, m) in negs:
                a = pr.mk("Ax2", seq | {_tr(n)})
                b = pr.mk("Ax2", seq | {_tr(imp_code(n, m))})
                return pr.mk("TrImp", seq, [a, b], side={"principal": f, "antecedent": n})
    return None


def hint_eq_rules(pr: Prover, seq: frozenset, depth: int):
    """(Tr_≠) and (Cons) moves used by the equality axiom."""
    rules = RULES[pr.sys.name]
    for f in sorted(seq, key=S.show):
        v = neg_tr_value(f)
        g = _decoded(v)
        if g is None:
            continue
        if isinstance(g, Eq) and "TrNeq" in rules:
            n, m = S.encode_term(g.l), S.encode_term(g.r)
            minor = key(tr_neq_minor(n, m))
            p = pr._prove(seq | {minor}, depth - 1)
            if p is not None:
                return pr.mk("TrNeq", seq, [p], side={"n": n, "m": m})
        if "Cons" in rules and not isinstance(g, Not):
            # Tr(v) closes against ¬Tr(v); the other premise carries Tr(¬̇v)
            p1 = hint_one_premise(pr, seq | {_tr(neg_code(v))}, depth - 1)
            if p1 is not None:
                p0 = pr.mk("Ax2", seq | {_tr(v)})
                return pr.mk("Cons", seq, [p0, p1], side={"n": v},
                             i=1 if is_i_family(pr.sys) else 0)
        if isinstance(g, Not) and "Cons" in rules:
            n = S.encode(g.f)
            if neg_code(n) != v:
                continue
            p0 = hint_one_premise(pr, seq | {_tr(n)}, depth - 1) or pr._prove(seq | {_tr(n)}, depth - 1)
            if p0 is None:
                continue
            p1 = pr._prove(seq | {_tr(neg_code(n))}, depth - 1)
            if p1 is not None:
                return pr.mk("Cons", seq, [p0, p1], side={"n": n}, i=1 if is_i_family(pr.sys) else 0)
    return None


def hint_tr_forall(pr: Prover, seq: frozenset, depth: int):
    """(Tr_∀) on a positive ``Tr`` atom coding a universal sentence."""
    if "TrForall" not in RULES[pr.sys.name]:
        return None
    for f in sorted(seq, key=S.show):
        g = _decoded(tr_value(f))
        if not isinstance(g, Forall):
            continue
        ps = []
        for n in range(pr.B + 1):
            inst = _tr(S.encode(S.subst(g.f, g.v, Num(n))))
            p = pr._prove(seq | {inst}, depth - 1)
            if p is None:
                break
            ps.append(p)
        else:
            return pr.mk("TrForall", seq, ps, omega_bound=pr.B, side={"principal": f})
    return None


DEFAULT_HINTS = (hint_one_premise, hint_tr_imp, hint_tr_forall, hint_eq_rules)


# -------------------------------------------------------- truth templates

def _tq(f: Formula) -> Formula:
    return Tr(Quote(f))


def pat_leaf(f: Formula, ctx: Iterable[Formula] = ()) -> Derivation:
    p = _tq(f)
    return node("TrPAT", [p, *ctx], side={"principal": p})


def tr_mp(d: Derivation, a: Formula, b: Formula, d_imp: Derivation | None = None) -> Derivation:
    """From ``⊢ Tr⌜A⌝`` conclude ``⊢ Tr⌜B⌝`` by (Tr_→).

    Without ``d_imp`` the implication must be a tautology, taken by (Tr_PAT).
    """
    d_imp = d_imp or pat_leaf(implies(a, b))
    p = _tq(b)
    return node("TrImp", [p], [d, d_imp], side={"principal": p, "antecedent": S.encode(a)})


def tr_and(d1: Derivation, a: Formula, d2: Derivation, b: Formula) -> Derivation:
    step = tr_mp(d1, a, implies(b, And(a, b)))
    return tr_mp(d2, b, And(a, b), d_imp=step)


def vf7_halves(n: int) -> tuple[Derivation, Derivation]:
    """``Tr⌜¬Tr ṅ → Tr ¬̇ṅ⌝`` (needs ``Sent(n)``) and ``Tr⌜Tr ¬̇ṅ → ¬Tr ṅ⌝``."""
    t = Num(n)
    a, b = Tr(t), Tr(_op("neg", t))
    cons_body = tr_cons_body(n)
    cons = node("TrCons", [_tq(cons_body)], side={"principal": _tq(cons_body)})
    half2 = tr_mp(cons, cons_body, implies(b, Not(a)))
    if not S.is_sentence(n, S.LT):
        return None, half2
    comp_body = tr_comp_body(n)
    comp = node("TrComp", [_tq(comp_body)], side={"principal": _tq(comp_body)})
    either = tr_mp(pat_leaf(sent_atom(t)), sent_atom(t), Or(a, b), d_imp=comp)
    half1 = tr_mp(either, Or(a, b), implies(Not(a), b))
    return half1, half2


def vf7_derivation(n: int) -> Derivation:
    half1, half2 = vf7_halves(n)
    if half1 is None:
        raise CalculusError("VF7 is embedded at sentence codes only: (Tr_Comp) carries a Sent guard")
    t = Num(n)
    a, b = Tr(t), Tr(_op("neg", t))
    return tr_and(half1, implies(Not(a), b), half2, implies(b, Not(a)))


def vf5_lemmas(n: int, sys: str) -> list[Derivation]:
    """The two directions of ``Tr(¬̇⌜Tr ṅ⌝) ↔ Tr(¬̇ n)`` for a sentence code ``n``."""
    t = Num(n)
    a, b = Tr(t), Tr(_op("neg", t))
    c_not_tr = S.encode(Not(a))          # ⌜¬Tr ṅ⌝
    c_tr_neg = S.encode(b)               # ⌜Tr ¬̇ṅ⌝
    neg_n = neg_code(n)
    half1, half2 = vf7_halves(n)
    out = []
    # backward: Tr(¬̇n) → Tr⌜¬Tr ṅ⌝
    rep = node("Rep", [_tr(c_tr_neg), Not(_tr(neg_n))],
               [node("Ax2", [_tr(neg_n), Not(_tr(neg_n))])], side={"principal": _tr(c_tr_neg)})
    out.append(node("TrImp", [Not(_tr(neg_n)), _tr(c_not_tr)], [rep, half2],
                    side={"principal": _tr(c_not_tr), "antecedent": c_tr_neg}))
    # forward: Tr⌜¬Tr ṅ⌝ → Tr(¬̇n)
    ctx = Not(_tr(c_not_tr))
    if half1 is not None and "TrComp" in RULES[sys]:
        imp = node("TrImp", [ctx, _tr(c_tr_neg)],
                   [node("Ax2", [ctx, _tr(c_not_tr)]), half1],
                   side={"principal": _tr(c_tr_neg), "antecedent": c_not_tr})
        out.append(node("Del", [ctx, _tr(neg_n)], [imp],
                        side={"principal": _tr(neg_n), "inner": c_tr_neg}))
    elif is_pat_axiom(neg_n):
        out.append(node("TrPAT", [ctx, _tr(neg_n)], side={"principal": _tr(neg_n)}))
    elif is_pat_axiom(n):
        c_tr = S.encode(a)
        rep_n = node("Rep", [_tr(c_tr)], [node("TrPAT", [_tr(n)], side={"principal": _tr(n)})],
                     side={"principal": _tr(c_tr)})
        out.append(node("Cons", [ctx], [rep_n, node("Ax2", [ctx, _tr(neg_code(c_tr))])],
                        side={"principal": None, "n": c_tr}))
    return out


def vf1_converse(m: int, n: int) -> Derivation:
    """The five-step tree for ``Tr(m ≠̇ n) → m° ≠ n°`` under ``¬CT(m), ¬CT(n)``."""
    if S.decode_term(m) is S.NOT_A_CODE or S.decode_term(n) is S.NOT_A_CODE:
        raise CalculusError("m and n must be codes of closed terms")
    tm, tn = Num(m), Num(n)
    e = _op("eq", tm, tn)
    ne = _op("neg", e)
    same = Eq(_op("val", tm), _op("val", tn))
    ctx = [Not(ct_atom(tm)), Not(ct_atom(tn))]
    base = ctx + [Not(Tr(ne)), Not(same)]
    logic = prove(base + [tr_eq_minor(m, n)], "VFMinf")
    if logic is None:
        raise CalculusError("propositional part not found")
    treq = node("TrEq", base + [Tr(e)], [logic], side={"principal": Tr(e)})
    ax2 = node("Ax2", base + [Tr(ne)])
    cons = node("Cons", base, [treq, ax2], side={"n": S.eval_term(e)})
    goal = implies(Tr(ne), Not(same))
    return node("Or", ctx + [goal], [cons], side={"principal": key(goal)})


THEORY_SYSTEM = {"VFM": "VFMinf", "VFMminus": "VFMinf", "VFW": "VFWinf", "VFMP": "VFMPinf"}


def embed_axiom(theory: str, axiom: str, *args, B: int = 2) -> Derivation:
    """A checking infinitary derivation of one axiom instance."""
    from . import semantics as M
    if theory not in THEORY_SYSTEM:
        raise CalculusError(f"no infinitary system for theory {theory!r}")
    table = M.AXIOMS[theory]
    if axiom not in table:
        raise CalculusError(f"unknown axiom {axiom!r} for {theory}")
    sys = THEORY_SYSTEM[theory]
    inst = table[axiom][0](*args)
    lemmas: list[Derivation] = []
    if axiom == "VF7":
        lemmas.append(vf7_derivation(args[0]))
    elif axiom == "VF7<-":
        lemmas.append(vf7_halves(args[0])[1])
    elif axiom == "VF5" and S.is_sentence(args[0], S.LT):
        lemmas.extend(vf5_lemmas(args[0], sys))
    pr = Prover(sys, B=B, lemmas=lemmas, hints=DEFAULT_HINTS)
    d = pr.prove([inst])
    if d is None:
        raise CalculusError(f"no template derivation for {axiom} at {args}")
    return replace(d, conclusion=frozenset([inst]))


def embed_instances(theory: str) -> list[tuple[str, tuple]]:
    """Three instantiations per axiom, as exercised by the acceptance suite."""
    from . import semantics as M
    p = S.parse
    c = lambda s: S.encode(p(s))  # noqa: E731
    codes = [c("(= 0 0)"), c("(= 0 1)"), c("(forall x (= x x))")]
    terms = [S.encode_term(Num(0)), S.encode_term(Num(1)), S.encode_term(S.parse_term("(S 0)"))]
    pats = [c("(= 0 0)"), c("(forall x (= x x))"), c("(or (= 0 1) (not (= 0 1)))")]
    foralls = [(c("(= x x)"), "x"), (c("(= (S x) (S x))"), "x"), (c("(or (= x 0) (not (= x 0)))"), "x")]
    lam = S.encode(S.liar())
    out = []
    for name in M.axiom_names(theory):
        kind = M.AXIOMS[theory][name][1]
        if kind == "terms2":
            args = [(terms[0], terms[0]), (terms[0], terms[1]), (terms[2], terms[1])]
        elif kind == "pat":
            args = [(x,) for x in pats]
        elif kind == "forall":
            args = foralls
        elif kind == "codes2":
            args = [(codes[0], codes[0]), (codes[1], codes[0]), (lam, codes[1])]
        elif kind == "numerals":
            args = [(0,), (1,), (2,)]
        elif name == "VF5" and theory == "VFW":
            args = [(x,) for x in codes]
        else:
            args = [(codes[0],), (codes[1],), (lam,)]
        out.extend((name, a) for a in args)
    return out


# --------------------------------------------------------- cut elimination

def _set_ranks(d: Derivation, r: int) -> Derivation:
    return replace(d, rank=r, premises=tuple(_set_ranks(p, r) for p in d.premises))


def _is_leaf_rule(d: Derivation) -> bool:
    return d.rule in _LEAVES


def _principal_key(d: Derivation):
    f = d.side.get("principal")
    return None if f is None else key(f)


def _push(x: Derivation, N, gamma: frozenset, sys: System, on_leaf, on_principal, lab):
    """Remove ``N`` from the context of ``x`` and add ``gamma`` along the way."""
    if N not in x.keys:
        return x
    if on_principal is not None and _principal_key(x) == N and x.rule in ("Or", "Exists"):
        return on_principal(x)
    if _is_leaf_rule(x):
        y = replace(x, conclusion=(x.keys - {N}) | gamma)
        if _local_ok(y, sys):
            return y
        return on_leaf(x)
    ms = minors(x, sys)
    ps = tuple(_push(p, N, gamma, sys, on_leaf, on_principal, lab)
               if N in p.keys and N not in ms[j] and x.rule != "TrIntro" else p
               for j, p in enumerate(x.premises))
    y = replace(x, conclusion=(x.keys - {N}) | gamma, premises=ps, label=lab(x, ps))
    return _raise_indices(y)


def _raise_indices(y: Derivation) -> Derivation:
    """Grafting may bring in larger I-indices; lift the node to match."""
    if not y.premises or y.rule == "TrIntro":
        return y
    i = max([y.i] + [p.i for p in y.premises])
    alpha = max_ord([y.alpha] + [p.alpha for p in y.premises])
    return replace(y, i=i, alpha=alpha)


def _above(label: Ord, ps) -> Ord:
    top = max_ord(p.label for p in ps)
    return label if ps == () or O.compare(top, label) == O.LT else succ(top)


def remove_false_literal(d: Derivation, L, sys) -> Derivation:
    """A false arithmetical literal is never principal, so it can be dropped."""
    sys = as_system(sys)
    L = key(L)

    def never(x):
        raise CalculusError(f"false literal {S.show(L)} was needed by {x.rule}")
    return _push(d, L, frozenset(), sys, never, None, lambda x, ps: _above(x.label, ps))


def invert(d: Derivation, A, j: int, sys) -> Derivation:
    """(∧)/(∀)-inversion: from ``Γ, A`` derive ``Γ, A_j`` with no larger labels."""
    sys = as_system(sys)
    A = key(A)
    if isinstance(A, And):
        Aj = key(A.a if j == 0 else A.b)
    elif isinstance(A, Forall):
        Aj = key(S.subst(A.f, A.v, Num(j)))
    else:
        raise CalculusError("inversion applies to conjunctions and universals")

    def go(x: Derivation) -> Derivation:
        if A not in x.keys:
            return x
        conc = (x.keys - {A}) | {Aj}
        if _principal_key(x) == A and x.rule in ("And", "Forall"):
            if j >= len(x.premises):
                raise CalculusError(f"instance {j} lies beyond the ω-bound {x.omega_bound}")
            p = go(x.premises[j])
            return replace(p, conclusion=p.keys | conc, label=x.label, i=x.i, alpha=x.alpha)
        if _is_leaf_rule(x):
            return replace(x, conclusion=conc)
        ms = minors(x, sys)
        ps = tuple(go(p) if A in p.keys and A not in ms[k] else p
                   for k, p in enumerate(x.premises))
        return replace(x, conclusion=conc, premises=ps)
    return go(d)


def _cut(a, p0: Derivation, p1: Derivation, conc) -> Derivation:
    r = max(p0.rank, p1.rank, co(a) + 1)
    return node("Cut", conc, [p0, p1], side={"cut": key(a)}, rank=r)


def reduce_cut(d0: Derivation, d1: Derivation, A, sys) -> Derivation:
    """Derive ``Γ, Δ`` from ``Γ, A`` and ``Δ, ¬A`` using cuts on proper subformulas only.

    The label is at most ``α # β # β`` for premise labels ``α`` and ``β``.
    """
    sys = as_system(sys)
    A = key(A)
    N = dual(A)
    if isinstance(A, (Or, Exists)) or (isinstance(A, Not) and not isinstance(N, Not)):
        d0, d1, A, N = d1, d0, N, A
    gamma = d0.keys - {A}
    alpha = d0.label

    def lab(x, ps):
        return _above(natural_sum(alpha, natural_sum(x.label, x.label)), ps)

    if S.is_literal(A):
        pos = A.f if isinstance(A, Not) else A
        if isinstance(pos, Eq):
            if true_arith_literal(A):
                r = remove_false_literal(d1, N, sys)
                return replace(r, conclusion=r.keys | gamma)
            r = remove_false_literal(d0, A, sys)
            return replace(r, conclusion=r.keys | (d1.keys - {N}))

        def on_leaf(x):
            return replace(d0, conclusion=gamma | (x.keys - {N}))
        return _push(d1, N, gamma, sys, on_leaf, None, lab)

    def on_principal(x):
        p = x.premises[0]
        if N in p.keys:
            p = _push(p, N, gamma, sys, None, on_principal, lab)
        conc = (x.keys - {N}) | gamma
        if isinstance(N, Or):
            e0, e1 = invert(d0, A, 0, sys), invert(d0, A, 1, sys)
            a0, a1 = key(A.a), key(A.b)
            c1 = _cut(a0, e0, p, (p.keys - {dual(a0)}) | (e0.keys - {a0}))
            c2 = _cut(a1, e1, c1, (c1.keys - {dual(a1)}) | (e1.keys - {a1}))
        else:
            w = x.side["witness"]
            e = invert(d0, A, w, sys)
            aw = key(S.subst(A.f, A.v, Num(w)))
            c2 = _cut(aw, e, p, (p.keys - {dual(aw)}) | (e.keys - {aw}))
        return replace(c2, conclusion=conc, label=lab(x, c2.premises))

    return _push(d1, N, gamma, sys, lambda x: x, on_principal, lab)


def _elim_pass(x: Derivation, k: int, sys: System) -> Derivation:
    ps = tuple(_elim_pass(p, k, sys) for p in x.premises)
    top = O.omega_exp(x.label)
    if x.rule == "Cut" and co(x.side["cut"]) == k - 1:
        r = reduce_cut(ps[0], ps[1], x.side["cut"], sys)
        if O.compare(r.label, top) == O.GT:
            raise CalculusError("reduction exceeded the ω^α bound")
        return replace(r, conclusion=r.keys | x.keys, label=top)
    return replace(x, premises=ps, label=top)


def cut_eliminate(d: Derivation, sys="VFMinf") -> Derivation:
    """Rank-0 derivation of the same conclusion, labelled ``ω_k(α)``."""
    sys = as_system(sys)
    if sys.name not in INF_FAMILY:
        raise CalculusError("cut elimination is for the infinitary systems; use cut_admit_I")
    k = d.max_rank()
    out = d
    while k > 0:
        out = _set_ranks(_elim_pass(out, k, sys), k - 1)
        k -= 1
    return replace(out, conclusion=d.conclusion)


# ------------------------------------------------------------- the I family

def identity(A: Formula, sys="I", B: int = 2) -> Derivation:
    """Cut-free derivation of ``A, ¬A`` with Tr-Intro rank 0 and i = 0."""
    sys = as_system(sys)
    A = key(A)
    N = dual(A)
    both = frozenset({A, N})
    if S.is_literal(A):
        pos = A.f if isinstance(A, Not) else A
        if isinstance(pos, Eq):
            return node("Ax1", both)
        if isinstance(pos, Tr):
            return node("Ax3" if is_i_family(sys) else "Ax2", both)
        if isinstance(pos, P):
            if sys.name == "Istar":
                return node("Ax4P" if value(pos.t) in (sys.X or ()) else "Ax5P", both)
            return node("Ax3", both)
        raise CalculusError(f"no identity axiom for {S.show(A)}")
    if isinstance(A, (Or, Exists)):
        return identity(N, sys, B)
    if isinstance(A, And):
        a, b = key(A.a), key(A.b)
        p0 = identity(a, sys, B)
        p1 = identity(b, sys, B)
        inner = node("And", both | {dual(a), dual(b)} - {N},
                     [replace(p0, conclusion=p0.keys | {dual(b)}),
                      replace(p1, conclusion=p1.keys | {dual(a)})], side={"principal": A})
        return node("Or", both, [inner], side={"principal": N})
    ps = []
    for n in range(B + 1):
        inst = key(S.subst(A.f, A.v, Num(n)))
        p = identity(inst, sys, B)
        ps.append(node("Exists", {inst, N}, [p], side={"principal": N, "witness": n}))
    return node("Forall", both, ps, omega_bound=B, side={"principal": A})


def _lift_labels(d: Derivation, iprime: bool = False) -> Derivation:
    """Make every label exceed its premises; under I′ also dominate α."""
    ps = tuple(_lift_labels(p, iprime) for p in d.premises)
    lab = d.label
    if ps:
        lab = _above(lab, ps)
    if iprime and O.compare(d.alpha, lab) == O.GT:
        lab = d.alpha
    return replace(d, premises=ps, label=lab)


def _drop_literal(d: Derivation, L, sys: System) -> Derivation:
    def never(x):
        raise CalculusError(f"literal {S.show(L)} was needed by {x.rule}")
    return _push(d, L, frozenset(), sys, never, None, lambda x, ps: _above(x.label, ps))


def _admit(d0: Derivation, d1: Derivation, A, sys: System) -> Derivation:
    A = key(A)
    N = dual(A)
    if isinstance(A, (Or, Exists)) or (isinstance(A, Not) and not isinstance(N, Not)):
        d0, d1, A, N = d1, d0, N, A
    gamma = d0.keys - {A}
    b0 = d0.label

    def lab(x, ps):
        return _above(natural_sum(b0, x.label), ps)

    if S.is_literal(A):
        if isinstance(A, Eq) or isinstance(A, P):
            keep_A = true_arith_literal(A) if isinstance(A, Eq) else value(A.t) in (sys.X or ())
            if keep_A:
                r = _drop_literal(d1, N, sys)
                return _raise_indices(replace(r, conclusion=r.keys | gamma))
            r = _drop_literal(d0, A, sys)
            return replace(r, conclusion=r.keys | (d1.keys - {N}))

        def on_leaf(x):
            return replace(d0, conclusion=gamma | (x.keys - {N}))
        return _push(d1, N, gamma, sys, on_leaf, None, lab)

    def on_principal(x):
        p = x.premises[0]
        if N in p.keys:
            p = _push(p, N, gamma, sys, None, on_principal, lab)
        if isinstance(N, Or):
            r = _admit(invert(d0, A, 0, sys), p, A.a, sys)
            r = _admit(invert(d0, A, 1, sys), r, A.b, sys)
        else:
            w = x.side["witness"]
            r = _admit(invert(d0, A, w, sys), p, S.subst(A.f, A.v, Num(w)), sys)
        return replace(r, conclusion=(x.keys - {N}) | gamma, label=_above(lab(x, ()), (r,)),
                       i=max(r.i, x.i), alpha=max_ord([r.alpha, x.alpha]))

    return _push(d1, N, gamma, sys, lambda x: x, on_principal, lab)


def cut_admit_I(d0: Derivation, d1: Derivation, A, sys="I") -> Derivation:
    """From ``I(i;α;β₀;Γ,A)`` and ``I(i;α;β₁;Δ,¬A)`` build ``I(i;α;ω_co(A)(β₀ # β₁);Γ,Δ)``."""
    sys = as_system(sys)
    if not is_i_family(sys):
        raise CalculusError("cut admissibility is stated for I, I′ and I*_X")
    if d0.i != d1.i or d0.alpha != d1.alpha:
        raise CalculusError("both premises need the same index i and Tr-Intro rank α")
    A = key(A)
    if A not in d0.keys or dual(A) not in d1.keys:
        raise CalculusError("premises must conclude Γ, A and Δ, ¬A")
    bound = omega_tower(co(A), natural_sum(d0.label, d1.label))
    r = _lift_labels(_admit(d0, d1, A, sys), sys.name == "Iprime")
    if O.compare(r.label, bound) == O.GT:
        raise CalculusError(f"label {O.to_text(r.label)} exceeds {O.to_text(bound)}")
    if r.i > d0.i or O.compare(r.alpha, d0.alpha) == O.GT:
        raise CalculusError("cut admission raised i or α")
    conc = (d0.keys - {A}) | (d1.keys - {dual(A)})
    return replace(r, conclusion=conc, label=bound, i=d0.i, alpha=d0.alpha)


def is_atomic_sequent(seq: Iterable[Formula]) -> bool:
    return all(isinstance(key(f), (Eq, Tr)) for f in seq)


def disq(seq: Iterable[Formula], lang=S.LT) -> frozenset:
    """Equations stay; ``Tr(t)`` becomes ``A`` when ``t`` denotes ``⌜A⌝``; other Tr atoms vanish."""
    out = set()
    for f in seq:
        g = key(f)
        if isinstance(g, Eq):
            out.add(g)
        elif isinstance(g, Tr):
            n = value(g.t)
            if n is not None and S.is_sentence(n, lang):
                out.add(S.decode(n))
        else:
            raise CalculusError(f"disquotation needs an atomic sequent, got {S.show(f)}")
    return frozenset(out)


def _disq_node(x: Derivation, sys: System, zero_i: bool, B: int):
    """Returns ``(derivation of Disq(Γ), n)`` with label at most ``ω_n(β)``."""
    lang = sentence_language(sys)
    D = disq(x.keys, lang)
    beta = x.label
    i = 0 if zero_i else x.i
    r = x.rule
    if r == "Ax1":
        return node("Ax1", D, label=beta, i=i), 0
    if r == "TrIntro":
        p = x.premises[0]
        return replace(p, conclusion=p.keys | D, label=beta), 0
    if r == "Comp":
        for v in sorted({tr_value(f) for f in x.keys} - {None}):
            if S.is_sentence(v, lang) and S.encode(Not(S.decode(v))) in {tr_value(f) for f in x.keys}:
                idn = identity(S.decode(v), sys, B)
                lab = omega_tower(2, beta)
                return replace(idn, conclusion=idn.keys | D, label=lab, i=i), 2
        raise CalculusError("Comp node without a complementary pair")
    if r == "Norm":
        p, n = _disq_node(x.premises[0], sys, zero_i, B)
        return replace(p, conclusion=p.keys | D, label=omega_tower(n, beta),
                       i=max(i, p.i)), n
    if r == "Cons":
        m = x.side["n"]
        (p0, k), (p1, l) = (_disq_node(q, sys, zero_i, B) for q in x.premises)
        if not S.is_sentence(m, lang):
            return replace(p0, conclusion=p0.keys | D, label=omega_tower(k, beta)), k
        A = S.decode(m)
        ii = max(p0.i, p1.i)
        al = max_ord([p0.alpha, p1.alpha])
        p0 = weaken(p0, i=ii, alpha=al)
        p1 = weaken(p1, i=ii, alpha=al)
        if key(A) not in p0.keys:
            return replace(p0, conclusion=p0.keys | D, label=omega_tower(k, beta)), k
        if dual(key(A)) not in p1.keys:
            return replace(p1, conclusion=p1.keys | D, label=omega_tower(l, beta)), l
        c = cut_admit_I(p0, p1, A, sys)
        n = co(A) + max(k, l) + 1
        lab = omega_tower(n, beta)
        if O.compare(c.label, lab) != O.LT:
            raise CalculusError("cut admission outgrew the ω_n(β) bound")
        return replace(c, conclusion=c.keys | D, label=lab), n
    raise CalculusError(f"rule {r} cannot end a derivation of an atomic sequent")


def disq_transform(d: Derivation, sys="I", B: int = 2):
    """Disquotation: ``I(i;α;β;Γ)`` with α > 0 gives ``I(i;α₀;ω_n(β);Disq(Γ))`` with α₀ < α.

    Returns the derivation and ``n``.
    """
    sys = as_system(sys)
    if not is_atomic_sequent(d.conclusion):
        raise CalculusError("disquotation needs an atomic conclusion")
    if d.alpha.is_zero():
        raise CalculusError("disquotation needs Tr-Intro rank α > 0")
    r, n = _disq_node(d, sys, False, B)
    r = _lift_labels(r, sys.name == "Iprime")
    if O.compare(r.alpha, d.alpha) != O.LT:
        raise CalculusError("Tr-Intro rank did not drop")
    lab = omega_tower(n, d.label)
    if O.compare(r.label, lab) == O.GT:
        raise CalculusError("label exceeds ω_n(β)")
    return replace(r, label=lab), n


def disq_equations(d: Derivation, sys="I", B: int = 2) -> Derivation:
    """Equation-only conclusion: iterate disquotation down to Tr-Intro rank 0, label ε_β."""
    sys = as_system(sys)
    if not all(isinstance(key(f), Eq) for f in d.conclusion):
        raise CalculusError("the conclusion must contain only equations")
    bound = epsilon(d.label)
    out = d
    while not out.alpha.is_zero():
        out, _ = disq_transform(out, sys, B)
        if O.compare(out.label, bound) == O.GT:
            raise CalculusError("label exceeds ε_β")
    return replace(out, conclusion=d.conclusion | out.conclusion, label=bound)


def eliminate_cons_norm(d: Derivation, sys="I", B: int = 2):
    """``I(i;0;β;Γ)`` for atomic Γ gives ``I(0;0;ω_n(β);Disq(Γ))``; returns it and ``n``."""
    sys = as_system(sys)
    if not d.alpha.is_zero():
        raise CalculusError("elimination of (Cons)/(Norm) needs Tr-Intro rank 0")
    if not is_atomic_sequent(d.conclusion):
        raise CalculusError("elimination of (Cons)/(Norm) needs an atomic conclusion")
    r, n = _disq_node(d, sys, True, B)
    r = _lift_labels(r, sys.name == "Iprime")
    lab = omega_tower(n, d.label)
    if O.compare(r.label, lab) == O.GT:
        raise CalculusError("label exceeds ω_n(β)")
    if r.rules_used() & {"Cons", "Norm"} or any(x.i for x in r.nodes()):
        raise CalculusError("(Cons)/(Norm) survived elimination")
    return replace(r, label=lab), n


@dataclass
class ProbeReport:
    system: str
    depth: int
    beta_bound: Ord
    targets: list
    sequents_explored: int = 0
    found: list = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.found

    def to_record(self) -> dict:
        return {"system": self.system, "depth": self.depth,
                "beta_bound": O.to_text(self.beta_bound),
                "targets": [S.show(t) for t in self.targets],
                "sequents_explored": self.sequents_explored,
                "found": [{"target": S.show(t), "derivation": to_record(d)} for t, d in self.found],
                "clean": self.clean}


PROBE_POOL = ("(= 0 1)", "(Tr (quote (= 0 1)))", "(not (Tr (quote (= 0 0))))",
              "(forall x (= x x))")


class _ExhaustiveI:
    """Every rule instance over a fixed code pool, full context kept in premises."""

    def __init__(self, sys: System, codes: Sequence[int], B: int, planted: bool):
        self.sys, self.codes, self.B, self.planted = sys, list(codes), B, planted
        self.lang = sentence_language(sys)
        self.memo: dict = {}

    def mk(self, rule, seq, ps=(), **kw):
        d = node(rule, seq, ps, **kw)
        i = 1 if rule in ("Cons", "Norm") else max((p.i for p in ps), default=0)
        alpha = max_ord(p.alpha for p in ps)
        if rule == "TrIntro":
            alpha = succ(alpha)
        return replace(d, i=i, alpha=alpha, label=max_ord([d.label, alpha]))

    def search(self, seq: frozenset, depth: int):
        k = (seq, depth)
        if k in self.memo:
            return self.memo[k]
        self.memo[k] = None
        d = self._search(seq, depth)
        self.memo[k] = d
        return d

    def _search(self, seq, depth):
        if self.planted and any(isinstance(f, Eq) and not true_arith_literal(f) for f in seq):
            return node("Planted", seq)
        for r in ("Ax1", "Ax3", "Comp", "Ax4P", "Ax5P"):
            if r in RULES[self.sys.name]:
                d = self.mk(r, seq)
                if _local_ok(d, self.sys):
                    return d
        if depth <= 0:
            return None
        rules = RULES[self.sys.name]
        for f in sorted(seq, key=S.show):
            tries = []
            if isinstance(f, Or):
                tries.append(("Or", [seq | {key(f.a), key(f.b)}], {}))
            elif isinstance(f, And):
                tries.append(("And", [seq | {key(f.a)}, seq | {key(f.b)}], {}))
            elif isinstance(f, Exists):
                for n in range(self.B + 1):
                    tries.append(("Exists", [seq | {key(S.subst(f.f, f.v, Num(n)))}], {"witness": n}))
            elif isinstance(f, Forall):
                tries.append(("Forall", [seq | {key(S.subst(f.f, f.v, Num(n)))}
                                         for n in range(self.B + 1)], {}))
            elif isinstance(f, Tr):
                v = value(f.t)
                if v is not None and S.is_sentence(v, self.lang):
                    tries.append(("TrIntro", [keys([S.decode(v)])], {}))
            for rule, prem, side in tries:
                ps = [self.search(frozenset(q), depth - 1) for q in prem]
                if all(p is not None for p in ps):
                    kw = {"omega_bound": self.B} if rule == "Forall" else {}
                    return self.mk(rule, seq, ps, side={"principal": f, **side}, **kw)
        for m in self.codes:
            if S.is_sentence(m, self.lang):
                q0 = self.search(seq | {_tr(m)}, depth - 1)
                q1 = q0 and self.search(seq | {_tr(neg_code(m))}, depth - 1)
                if q1:
                    return self.mk("Cons", seq, [q0, q1], side={"n": m})
            elif "Norm" in rules:
                q = self.search(seq | {_tr(m)}, depth - 1)
                if q:
                    return self.mk("Norm", seq, [q], side={"n": m})
        return None


def consistency_probe(sys="I", depth: int = 3, beta_bound: Ord = O.OMEGA,
                      pool: Sequence[str] = PROBE_POOL, B: int = 1,
                      planted: bool = False) -> ProbeReport:
    """Exhaustive bounded search for a derivation of a false equation.

    The search space is every sequent reachable backwards from a target, with
    Cons/Norm cut formulas drawn from the pool codes, their negations and one
    non-sentence code.  ``planted`` adds an unsound axiom as a detector check.
    """
    sys = as_system(sys)
    if not is_i_family(sys):
        raise CalculusError("the probe runs on I, I′ or I*_X")
    forms = [S.parse(p) for p in pool]
    codes = []
    for f in forms:
        c = S.encode(f)
        codes += [c, neg_code(c)]
    codes.append(2)  # not a sentence code
    targets = [key(f) for f in forms if isinstance(key(f), Eq) and not true_arith_literal(f)]
    if not targets:
        targets = [key(S.parse("(= 0 1)"))]
    rep = ProbeReport(str(sys), depth, beta_bound, targets)
    ex = _ExhaustiveI(sys, sorted(set(codes)), B, planted)
    for t in targets:
        d = ex.search(frozenset({t}), depth)
        if d is not None and O.compare(d.label, beta_bound) != O.GT:
            rep.found.append((t, d))
    rep.sequents_explored = len(ex.memo)
    return rep


# --------------------------------------------------------------- file format

_FORMULA_SIDES = ("principal", "cut")


def to_record(d: Derivation) -> dict:
    side = {}
    for k, v in d.side.items():
        if v is None:
            continue
        if k in _FORMULA_SIDES:
            side[k] = S.show(v)
        elif isinstance(v, Derivation):
            side[k] = to_record(v)
        else:
            side[k] = v
    rec = {"rule": d.rule,
           "conclusion": sorted(S.show(f) for f in d.conclusion),
           "label": O.to_text(d.label),
           "rank": d.rank,
           "omega_bound": d.omega_bound,
           "side": side,
           "premises": [to_record(p) for p in d.premises]}
    if d.i or not d.alpha.is_zero():
        rec["i"] = d.i
        rec["alpha"] = O.to_text(d.alpha)
    return rec


def from_record(rec: dict) -> Derivation:
    try:
        side = {}
        for k, v in (rec.get("side") or {}).items():
            if k in _FORMULA_SIDES:
                side[k] = S.parse(v)
            elif isinstance(v, dict) and "rule" in v:
                side[k] = from_record(v)
            else:
                side[k] = v
        return Derivation(
            rule=rec["rule"],
            conclusion=frozenset(S.parse(s) for s in rec["conclusion"]),
            label=O.parse_ord(str(rec.get("label", "0"))),
            premises=tuple(from_record(p) for p in rec.get("premises", ())),
            rank=int(rec.get("rank", 0)),
            omega_bound=rec.get("omega_bound"),
            side=side,
            i=int(rec.get("i", 0)),
            alpha=O.parse_ord(str(rec.get("alpha", "0"))))
    except (KeyError, TypeError, AttributeError) as e:
        raise CalculusError(f"malformed derivation record: {e!r}") from e


def dumps(d: Derivation, system: str | None = None) -> str:
    rec = {"system": system, "derivation": to_record(d)} if system else to_record(d)
    return json.dumps(rec, ensure_ascii=False, indent=1, sort_keys=True)


def loads(text: str) -> tuple[Derivation, str | None]:
    """Parse a derivation file; returns the tree and the system named in its header."""
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as e:
        raise CalculusError(f"not a derivation file: {e}") from e
    if not isinstance(rec, dict):
        raise CalculusError("a derivation file holds one JSON object")
    if "derivation" in rec:
        return from_record(rec["derivation"]), rec.get("system")
    return from_record(rec), None


# ---------------------------------------------------------------- Tr-Elim

def iprime_to_vfw(e: Derivation) -> Derivation:
    """Read an I′ derivation in VFW^∞: Tr-Intro steps become (Ax_I′) leaves."""
    if e.rule == "TrIntro":
        return Derivation("AxIprime", e.conclusion, e.label,
                          side={"principal": e.side["principal"], "iprime": e.premises[0]})
    rule = "Ax2" if e.rule == "Ax3" else e.rule
    return replace(e, rule=rule, premises=tuple(iprime_to_vfw(p) for p in e.premises),
                   i=0, alpha=ZERO, rank=0)


def _lift_iprime(e: Derivation, label: Ord) -> Derivation:
    if O.compare(e.label, label) == O.LT:
        return replace(e, label=label)
    return e


def extract_iprime(d: Derivation, B: int = 2) -> Derivation:
    """I′ derivation of ``A`` from a VFW^∞ template derivation ending in ``Tr⌜A⌝``.

    Handles (Ax_I′), (Rep) and (Del) ends; other last rules are reported.
    """
    f = d.side.get("principal")
    n = tr_value(key(f)) if f is not None else None
    if n is None:
        raise CalculusError(f"{d.rule} does not end in a Tr-atom")
    if d.rule == "AxIprime":
        return d.side["iprime"]
    if d.rule == "Rep":
        g = _decoded(n)
        inner = extract_iprime(d.premises[0], B)
        prem = _lift_iprime(inner, ZERO)
        alpha = succ(prem.alpha)
        return Derivation("TrIntro", frozenset({key(g)}), _above(max_ord([d.label, alpha]), (prem,)),
                          (prem,), side={"principal": key(g)}, i=prem.i, alpha=alpha)
    if d.rule == "Del":
        atom = extract_iprime(d.premises[0], B)
        if atom.alpha.is_zero():
            raise CalculusError("an atomic I′ derivation of Tr(n) needs Tr-Intro rank > 0")
        r, _ = disq_transform(atom, "Iprime", B)
        return r
    raise CalculusError(f"Tr-Elim extraction does not cover a final {d.rule}")


def tr_elim(d: Derivation, B: int = 2) -> Derivation:
    """From ``VFW^∞ ⊢_0^α Tr⌜A⌝`` build ``VFW^∞ ⊢_0^{ε_α} A``."""
    ks = d.keys
    if len(ks) != 1:
        raise CalculusError("Tr-Elim needs the single-formula sequent Tr⌜A⌝")
    (f,) = ks
    n = tr_value(f)
    if n is None or _decoded(n) is None:
        raise CalculusError("the conclusion must be Tr⌜A⌝ for a sentence A")
    if d.max_rank() != 0:
        raise CalculusError("Tr-Elim is stated for cut-free derivations")
    res = check(d, "VFWinf")
    if not res.ok:
        raise CalculusError(f"input does not check: {res.violations[0]}")
    A = key(_decoded(n))
    e = extract_iprime(d, B)
    if not e.keys <= {A}:
        raise CalculusError("extraction produced the wrong sequent")
    out = iprime_to_vfw(e)
    bound = epsilon(d.label)
    if O.compare(out.label, bound) == O.GT:
        raise CalculusError(f"label {O.to_text(out.label)} exceeds ε_α")
    return replace(out, conclusion=frozenset({A}), label=bound)


# ---------------------------------------------------------------- corpora

def _succs(n: int, k: int) -> Term:
    """A term of value ``n``: ``k`` successor steps over a numeral."""
    k = min(k, n)
    t: Term = Num(n - k)
    for _ in range(k):
        t = Succ(t)
    return t


def _pat_eq(a: int, rng) -> Formula:
    return Eq(_succs(a, rng.randrange(3)), Num(a))


def _cut_item(rng) -> Derivation:
    fam = rng.randrange(6)
    extra = [Eq(Num(rng.randrange(4)), Num(rng.randrange(1, 4) + 3))
             for _ in range(rng.randrange(3))]
    a, b = rng.randrange(5), rng.randrange(5)
    fa, fb = _pat_eq(a, rng), _pat_eq(b, rng)
    ca, cb = S.encode(fa), S.encode(fb)
    Ta, Tb = Tr(Num(ca)), Tr(Num(cb))
    qa = Tr(Quote(fa))

    def patl(f, ctx=()):
        return node("TrPAT", [f, *ctx, *extra], side={"principal": f})

    if fam == 0:  # literal against an (Ax.2) match
        d0 = patl(Ta)
        d1 = node("Ax2", [Not(Ta), qa, *extra])
        return node("Cut", [qa, *extra], [d0, d1], side={"cut": Ta}, rank=1)
    if fam == 1:  # conjunction of Tr atoms against a disjunction
        A = And(Ta, Tb)
        d0 = node("And", [A, *extra], [patl(Ta), patl(Tb)], side={"principal": A})
        N = Or(Not(Ta), Not(Tb))
        ax = node("Ax2", [Not(Ta), Not(Tb), qa, *extra])
        d1 = node("Or", [N, qa, *extra], [ax], side={"principal": N})
        return node("Cut", [qa, *extra], [d0, d1], side={"cut": A}, rank=2)
    B = rng.randrange(1, 4)
    x = S.Var("x")
    body = Tr(_op("eq", NumOf(x), NumOf(x)))
    A = Forall("x", body)

    def inst(n):
        return key(S.subst(body, "x", Num(n)))

    if fam in (2, 3):  # ω-rule against a witness
        d0 = node("Forall", [A, *extra], [patl(inst(n)) for n in range(B + 1)],
                  label=O.OMEGA, omega_bound=B, side={"principal": A})
        w = rng.randrange(B + 1)
        qw = Tr(Quote(Eq(Num(w), Num(w))))
        N = Exists("x", Not(body))
        ax = node("Ax2", [Not(inst(w)), qw, *extra])
        d1 = node("Exists", [N, qw, *extra], [ax], side={"principal": N, "witness": w})
        if fam == 3:  # an inner literal cut below the main one
            d1 = node("Exists", [N, qw, *extra],
                      [node("Cut", [Not(inst(w)), qw, *extra],
                            [patl(Tr(Num(S.encode(Eq(Num(w), Num(w))))), [Not(inst(w))]),
                             node("Ax2", [Not(Tr(Num(S.encode(Eq(Num(w), Num(w)))))), Not(inst(w)), qw, *extra])],
                            side={"cut": Tr(Num(S.encode(Eq(Num(w), Num(w)))))}, rank=1)],
                      side={"principal": N, "witness": w}, rank=1)
        return node("Cut", [qw, *extra], [d0, d1], side={"cut": A}, rank=2)
    if fam == 4:  # an existential cut formula against the ω-rule
        E = Exists("x", body)
        w = rng.randrange(B + 1)
        d0 = node("Exists", [E, *extra], [patl(inst(w))], side={"principal": E, "witness": w})
        N = Forall("x", Not(body))
        qs = [Tr(Quote(Eq(Num(n), Num(n)))) for n in range(B + 1)]
        d1 = node("Forall", [N, *qs, *extra],
                  [node("Ax2", [Not(inst(n)), *qs, *extra]) for n in range(B + 1)],
                  label=O.OMEGA, omega_bound=B, side={"principal": N})
        return node("Cut", [*qs, *extra], [d0, d1], side={"cut": E}, rank=2)
    # a true equation cut away
    e = Eq(Num(a), _succs(a, 1))
    d0 = node("Ax1", [e, *extra])
    d1 = node("Ax2", [Not(e), Not(Ta), Ta, *extra])
    return node("Cut", [Not(Ta), Ta, *extra], [d0, d1], side={"cut": e}, rank=1)


def cut_corpus(n: int = 100, seed: int = 0) -> list[Derivation]:
    """Checkable VFM^∞ derivations with rank ≤ 2 and label ≤ ω²."""
    rng = random.Random(seed)
    return [_cut_item(rng) for _ in range(n)]


DISQ_SENTENCES = ("(= 0 0)", "(forall x (= x x))", "(and (= 1 1) (= 2 2))",
                  "(or (= 0 1) (= 0 0))", "(exists x (= x 2))", "(Tr (quote (= 0 0)))")


def _i_prove(f: Formula, alpha: Ord, B: int = 2) -> Derivation:
    d = Prover("I", B=B, alpha=alpha, hints=DEFAULT_HINTS).prove([f])
    if d is None:
        raise CalculusError(f"no I-derivation of {S.show(f)}")
    return d


def _disq_item(fam: int, src: str, gamma: list) -> Derivation:
    Bf = S.parse(src)
    m = S.encode(Bf)
    nm = neg_code(m)
    Tm, Tn = Tr(Num(m)), Tr(Num(nm))
    body = _i_prove(Bf, O.TWO)
    a1 = succ(body.alpha)
    intro = node("TrIntro", [*gamma, Tm], [body], side={"principal": Tm}, alpha=a1)
    if fam == 0:  # (Cons) with a Tr-Intro premise
        other = node("Ax1", [*gamma, Tn], alpha=a1)
        return node("Cons", gamma, [intro, other], side={"n": m}, i=1, alpha=a1)
    if fam == 1:  # (Comp) closes the second premise
        comp = node("Comp", [*gamma, Tn, Tm], alpha=a1)
        inner = node("Cons", [*gamma, Tn], [comp, node("Ax1", [*gamma, Tn], alpha=a1)],
                     side={"n": m}, i=1, alpha=a1)
        return node("Cons", gamma, [intro, inner], side={"n": m}, i=1, alpha=a1)
    if fam == 2:  # (Norm) over a non-sentence code above a (Cons)
        cons = node("Cons", [*gamma, Tr(Num(2))],
                    [replace(intro, conclusion=intro.conclusion | {Tr(Num(2))}),
                     node("Ax1", [*gamma, Tr(Num(2)), Tn], alpha=a1)],
                    side={"n": m}, i=1, alpha=a1)
        return node("Norm", gamma, [cons], side={"n": 2}, i=1, alpha=a1)
    # nested Tr-Intro: Tr⌜Tr⌜B⌝⌝ under (Cons)
    outer = Tr(Quote(Tm))
    k = S.encode(Tm)
    Tk = Tr(Num(k))
    inner_intro = node("TrIntro", [Tm], [body], side={"principal": Tm}, alpha=a1)
    top = node("TrIntro", [*gamma, Tk], [inner_intro], side={"principal": outer}, alpha=succ(a1))
    other = node("Ax1", [*gamma, Tr(Num(neg_code(k)))], alpha=succ(a1))
    return node("Cons", gamma, [top, other], side={"n": k}, i=1, alpha=succ(a1))


def disq_corpus(n: int = 50, seed: int = 0) -> list[Derivation]:
    """Equation-only I-derivations with Tr-Intro rank α > 0."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        fam = len(out) % 4
        src = DISQ_SENTENCES[rng.randrange(len(DISQ_SENTENCES))]
        a = rng.randrange(4)
        gamma = [Eq(_succs(a, rng.randrange(3)), Num(a))]
        gamma += [Eq(Num(rng.randrange(3)), Num(rng.randrange(3, 6))) for _ in range(rng.randrange(3))]
        out.append(_disq_item(fam, src, gamma))
    return out


TR_ELIM_SENTENCES = ("(= 0 0)", "(forall x (= x x))", "(or (= 0 1) (Tr (quote (= 1 1))))",
                     "(and (= 2 2) (exists x (= x 1)))", "(Tr (quote (= 0 0)))")


def _axiprime(f: Formula, alpha: Ord) -> Derivation:
    e = Prover("Iprime", B=2, alpha=alpha, hints=DEFAULT_HINTS).prove([f])
    if e is None:
        raise CalculusError(f"no I′ derivation of {S.show(f)}")
    t = Tr(Quote(f))
    return Derivation("AxIprime", frozenset({t}), e.label, side={"principal": t, "iprime": e})


def tr_elim_corpus() -> list[Derivation]:
    """VFW^∞ derivations of ``Tr⌜A⌝`` assembled from (Rep) and (Ax_I′)."""
    out = []
    for src in TR_ELIM_SENTENCES:
        A = S.parse(src)
        t = Tr(Quote(A))
        tt = Tr(Quote(t))
        ax = _axiprime(A, O.TWO)
        rep = node("Rep", [tt], [ax], side={"principal": tt})
        ttt = Tr(Quote(tt))
        out.append(ax)
        out.append(rep)
        out.append(node("Rep", [ttt], [rep], side={"principal": ttt}))
        out.append(node("Del", [t], [_axiprime(t, O.finite(3))], side={"principal": t}))
    return out
