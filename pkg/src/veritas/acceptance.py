"""The ten acceptance criteria as runnable checks.

Each check returns a :class:`Outcome`; ``run_all`` is what ``veritas selftest``
and the acceptance test module drive.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product

from . import calculus as C
from . import interpret as I
from . import ordinals as O
from . import semantics as M
from . import syntax as S


@dataclass
class Outcome:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float = 0.0
    limit: float | None = None
    facts: dict = field(default_factory=dict)

    @property
    def line(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        return f"{verdict} [{self.number}] {self.title}: {self.detail} ({self.seconds:.2f}s)"

    def to_record(self) -> dict:
        return {"criterion": self.number, "title": self.title, "ok": self.ok,
                "detail": self.detail, "seconds": round(self.seconds, 3),
                "limit_seconds": self.limit, "facts": self.facts}


def _timed(number, title, limit, fn) -> Outcome:
    t = time.perf_counter()
    try:
        ok, detail, facts = fn()
    except Exception as e:  # a crash is a failure, reported as such
        ok, detail, facts = False, f"raised {e!r}", {}
    dt = time.perf_counter() - t
    if limit is not None and dt > limit:
        ok, detail = False, f"{detail}; took {dt:.1f}s, limit {limit}s"
    return Outcome(number, title, ok, detail, dt, limit, facts)


def monotonicity():
    pools = M.liar_family_pools()
    pairs = bad = 0
    for e in M.SCHEMES:
        for U in pools:
            r = M.check_monotone(e, U)
            pairs += r.pairs_checked
            bad += len(r.violations)
    return bad == 0, f"{len(pools)} pools x {len(M.SCHEMES)} schemes, {pairs} pairs, {bad} violations", \
        {"pools": len(pools), "pairs": pairs, "violations": bad}


SOUNDNESS = (("VF", "vc"), ("VFminus", "vb"), ("VFM", "mc"), ("VFW", "mc"))


def soundness():
    U = M.standard_universe()
    parts, facts, ok = [], {}, True
    for theory, e in SOUNDNESS:
        r = M.check_axioms(theory, U, M.lfp(e, U))
        n = sum(r.checked.values())
        ok &= r.ok and n > 0
        parts.append(f"{theory}/{e} {len(r.failures)} failures of {n}")
        facts[theory] = r.to_record()
    return ok, "; ".join(parts), facts


def separation():
    U = M.standard_universe()
    fp = {e: M.lfp(e, U) for e in M.SCHEMES}
    not_tr = U.code_of(S.Not(S.Tr(S.Quote(S.zero_eq_one()))))
    member = {e: not_tr in fp[e] for e in M.SCHEMES}
    vf7 = M.AXIOMS["VFM"]["VF7"][0](S.encode(S.liar()))
    holds = {e: M.classical_sat(U, fp[e], vf7) for e in ("vb", "mc")}
    ok = (not member["sv"] and member["vb"] and member["vc"] and member["mc"]
          and not holds["vb"] and holds["mc"])
    detail = (f"¬Tr⌜0=1⌝ in lfp: {', '.join(f'{e}={member[e]}' for e in M.SCHEMES)}; "
              f"VF7 at λ: vb={holds['vb']}, mc={holds['mc']}")
    return ok, detail, {"membership": member, "vf7_at_liar": holds}


def cut_elimination():
    corpus = C.cut_corpus(100)
    bad, worst = [], O.ZERO
    omega2 = O.omega_exp(O.TWO)
    for j, d in enumerate(corpus):
        if not C.check(d, "VFMinf").ok or d.max_rank() > 2 or O.compare(d.label, omega2) == O.GT:
            bad.append((j, "input"))
            continue
        e = C.cut_eliminate(d)
        bound = O.omega_tower(d.max_rank(), d.label)
        good = (C.check(e, "VFMinf").ok and e.max_rank() == 0 and e.conclusion == d.conclusion
                and O.compare(e.label, bound) != O.GT)
        if not good:
            bad.append((j, "output"))
        worst = O.max_ord([worst, e.label])
    return not bad, f"{len(corpus)} derivations, {len(bad)} bad, largest output label {O.render(worst)}", \
        {"size": len(corpus), "bad": bad}


def consistency():
    parts, found = [], 0
    for sys in ("I", "Iprime", C.Istar([S.encode(S.parse("(= 0 0)"))])):
        r = C.consistency_probe(sys, depth=3, beta_bound=O.OMEGA)
        found += len(r.found)
        parts.append(f"{sys} {r.sequents_explored} sequents")
    planted = C.consistency_probe("I", depth=3, planted=True)
    ok = found == 0 and not planted.clean
    return ok, f"{'; '.join(parts)}; false equations derived: {found}; planted axiom detected: " \
               f"{not planted.clean}", {"found": found}


def disquotation():
    corpus = C.disq_corpus(50)
    bad = []
    for j, d in enumerate(corpus):
        if not C.check(d, "I").ok or d.alpha.is_zero():
            bad.append((j, "input"))
            continue
        e = C.disq_equations(d)
        good = (C.check(e, "I").ok and e.alpha.is_zero() and e.keys <= d.keys
                and O.compare(e.label, O.epsilon(d.label)) != O.GT)
        if not good:
            bad.append((j, "output"))
    return not bad, f"{len(corpus)} equation-only derivations, {len(bad)} bad", {"bad": bad}


def tr_elimination():
    corpus = C.tr_elim_corpus()
    bad = []
    for j, d in enumerate(corpus):
        if not C.check(d, "VFWinf").ok:
            bad.append((j, "input"))
            continue
        e = C.tr_elim(d)
        (f,) = d.keys
        A = C.key(S.decode(C.tr_value(f)))
        good = (C.check(e, "VFWinf").ok and e.keys == {A}
                and O.compare(e.label, O.epsilon(d.label)) != O.GT)
        if not good:
            bad.append((j, "output"))
    return not bad, f"{len(corpus)} Tr⌜A⌝ derivations, {len(bad)} bad", {"bad": bad}


def ordinal_engine():
    rng = random.Random(8)
    fixed = [O.veblen(O.ZERO, O.ZERO) == O.ONE,
             O.epsilon(O.ZERO) == O.Ord((O.Phi(O.ONE, O.ZERO),)),
             O.hat(O.ZERO) == O.veblen(O.TWO, O.ZERO)]
    pool = O.enumerate_notations(3, width=3)
    comm = mono = 0
    for _ in range(500):
        a, b, c = (rng.choice(pool) for _ in range(3))
        comm += O.natural_sum(a, b) != O.natural_sum(b, a)
        if O.compare(a, b) == O.LT:
            mono += O.compare(O.natural_sum(a, c), O.natural_sum(b, c)) != O.LT
    order = O.enumerate_notations(3)
    breaks = 0
    for x, y in product(order, repeat=2):
        c1, c2 = O.compare(x, y), O.compare(y, x)
        breaks += c1 != -c2 or ((c1 == O.EQ) != (x == y))
    for x, y, z in product(order, repeat=3):
        if O.compare(x, y) == O.LT and O.compare(y, z) == O.LT:
            breaks += O.compare(x, z) != O.LT
    ok = all(fixed) and not comm and not mono and not breaks
    return ok, f"identities {sum(fixed)}/3, commutativity breaks {comm}, monotonicity breaks {mono}, " \
               f"order breaks {breaks} over {len(order)} notations", {}


def xi_star_suite():
    R = I.standard_ramified_pool()
    levels = [O.ZERO, O.ONE]
    U = I.ramified_universe(R, levels)
    X = M.lfp("mc", U)
    r = I.check_xi_star_properties(U, X)
    parts = [f"ξ* items {len(r.failures)} failures of {sum(r.checked.values())}"]
    ok = r.ok
    for b in levels:
        t = I.check_rt_translation(U, X, b, R)
        ok &= t.ok and sum(t.checked.values()) > 0
        parts.append(f"RT level {O.render(b)} {len(t.failures)} failures of {sum(t.checked.values())}")
    return ok, "; ".join(parts), {"pool": len(U)}


def embedding():
    parts, bad = [], []
    for theory in ("VFM", "VFW", "VFMP"):
        items = C.embed_instances(theory)
        sys = C.THEORY_SYSTEM[theory]
        for name, args in items:
            try:
                d = C.embed_axiom(theory, name, *args)
                good = C.check(d, sys).ok and O.compare(d.label, O.EPS0) == O.LT
            except C.CalculusError:
                good = False
            if not good:
                bad.append((theory, name, args))
        parts.append(f"{theory} {len(items)} instances")
    m, n = S.encode_term(S.Num(0)), S.encode_term(S.Num(1))
    tree = C.vf1_converse(m, n)
    tree_ok = C.check(tree, "VFMinf").ok
    ok = not bad and tree_ok
    return ok, f"{', '.join(parts)}; {len(bad)} failed; VF1 converse tree checks: {tree_ok}", \
        {"failed": [f"{t} {a}" for t, a, _ in bad]}


CRITERIA = (
    (1, "monotonicity of the jump", 60, monotonicity),
    (2, "soundness of VF, VF⁻, VFM, VFW in their fixed points", 30 * 4, soundness),
    (3, "scheme separation", None, separation),
    (4, "cut-elimination bound", 120, cut_elimination),
    (5, "I-calculus consistency probe", 120, consistency),
    (6, "disquotation to Tr-Intro rank 0", None, disquotation),
    (7, "Tr-Elim admissibility", None, tr_elimination),
    (8, "ordinal engine", 10, ordinal_engine),
    (9, "ξ* and ramified translation suite", None, xi_star_suite),
    (10, "embedding templates", None, embedding),
)


def run(number: int) -> Outcome:
    for n, title, limit, fn in CRITERIA:
        if n == number:
            return _timed(n, title, limit, fn)
    raise KeyError(number)


def run_all() -> list[Outcome]:
    return [_timed(n, title, limit, fn) for n, title, limit, fn in CRITERIA]
