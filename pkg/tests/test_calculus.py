import random

import pytest

from veritas import calculus as C
from veritas import ordinals as O
from veritas import syntax as S
from veritas.calculus import node
from veritas.syntax import And, Eq, Not, Num, Quote, Succ, Tr, Zero

p = S.parse
ZZ = p("(= 0 0)")
ZO = S.zero_eq_one()


def tr(f):
    return Tr(Num(S.encode(f)))


# ------------------------------------------------------------------ checker

def test_axiom_leaf():
    assert C.check(node("Ax1", [ZZ, p("(Tr 5)")]), "VFMinf").ok
    assert not C.check(node("Ax1", [ZO]), "VFMinf").ok


def test_ax2_matches_up_to_value():
    n = S.encode(ZZ)
    d = node("Ax2", [Tr(Quote(ZZ)), Not(Tr(Num(n)))])
    assert C.check(d, "VFMinf").ok
    bad = node("Ax2", [Tr(Quote(ZZ)), Not(Tr(Num(n + 1)))])
    assert not C.check(bad, "VFMinf").ok


def test_cut_rank_violation_names_condition():
    A = p("(and (= 0 0) (= 1 1))")
    dA = C.prove([A], "VFMinf")
    dn = C.prove([C.dual(A), ZZ], "VFMinf")
    assert dA is not None and dn is not None
    assert C.co(A) == 1
    d = node("Cut", [ZZ], [dA, dn], side={"cut": A}, rank=1)
    res = C.check(d, "VFMinf")
    assert not res.ok
    assert any("co(A) < k" in v.condition for v in res.violations)
    assert C.check(C.weaken(d, rank=2), "VFMinf").ok


def test_cons_in_i_needs_index_one():
    m = S.encode(ZZ)
    T = Tr(Num(m))
    intro = node("TrIntro", [ZZ, T], [node("Ax1", [ZZ])], side={"principal": T}, alpha=O.ONE)
    other = node("Ax1", [ZZ, Tr(Num(C.neg_code(m)))], alpha=O.ONE)
    good = node("Cons", [ZZ], [intro, other], side={"n": m}, i=1, alpha=O.ONE)
    assert C.check(good, "I").ok
    bad = node("Cons", [ZZ], [intro, other], side={"n": m}, i=0, alpha=O.ONE)
    res = C.check(bad, "I")
    assert not res.ok
    assert any("i = 1" in v.condition for v in res.violations)


def test_labels_must_decrease():
    leaf = node("Ax1", [ZZ], label=O.OMEGA)
    d = node("Or", [p("(or (= 0 0) (= 0 1))")], [leaf], label=O.OMEGA,
             side={"principal": p("(or (= 0 0) (= 0 1))")})
    assert not C.check(d, "VFMinf").ok


def test_rules_are_system_specific():
    d = node("Comp", [tr(ZZ), Not(tr(ZZ))])
    assert not C.check(d, "VFMinf").ok


# --------------------------------------------------------------- weakening

def test_weaken_examples():
    d = node("Ax1", [ZZ])
    w = C.weaken(d, [ZO])
    assert w.conclusion == {ZZ, ZO} and w.rule == d.rule
    assert C.check(w, "VFMinf").ok
    i0 = node("Ax1", [ZZ])
    assert C.check(C.weaken(i0, i=1), "I").ok
    with pytest.raises(C.CalculusError):
        C.weaken(i0, i=2)
    with pytest.raises(C.CalculusError):
        C.weaken(C.weaken(i0, label=O.OMEGA), label=O.ONE)


def test_weaken_random_corpus():
    rng = random.Random(1)
    extras = [ZO, p("(Tr 7)"), p("(exists x (= x 3))"), Not(tr(ZZ))]
    corpus = C.cut_corpus(100, seed=4)
    for d in corpus:
        w = C.weaken(d, [rng.choice(extras)])
        assert C.check(w, "VFMinf").ok


# ------------------------------------------------------------ substitution

def test_substitute_equal_values():
    two, ss0 = Num(2), Succ(Succ(Zero()))
    d = node("Ax1", [Eq(two, two), p("(Tr 2)")])
    e = C.substitute_derivation(d, two, ss0)
    assert Tr(ss0) in e.conclusion
    assert C.check(e, "VFMinf").ok
    with pytest.raises(C.CalculusError):
        C.substitute_derivation(d, two, Num(3))


def test_substitute_inside_ax2():
    n = S.encode(ZZ)
    d = node("Ax2", [Tr(Num(n)), Not(Tr(Num(n)))])
    e = C.substitute_derivation(d, Num(n), Quote(ZZ))
    assert C.check(e, "VFMinf").ok


def test_substitute_over_corpus():
    for d in C.cut_corpus(30, seed=9):
        e = C.substitute_derivation(d, Num(0), Zero())
        assert C.check(e, "VFMinf").ok


# ---------------------------------------------------------- cut elimination

def _literal_cut():
    T = tr(ZZ)
    q = node("TrPAT", [T], side={"principal": T})
    r = node("Ax2", [T, Not(T)])
    return node("Cut", [T], [q, r], side={"cut": T}, rank=1)


def test_cut_on_literal_against_ax2():
    d = _literal_cut()
    assert C.check(d, "VFMinf").ok and d.size() == 3
    e = C.cut_eliminate(d)
    assert C.check(e, "VFMinf").ok
    assert "Cut" not in e.rules_used()
    assert e.conclusion == d.conclusion


def test_compound_cut_with_omega_label():
    A = p("(forall x (= x x))")
    dA = C.relabel(C.prove([A], "VFMinf", B=2))
    dn = C.prove([C.dual(A), ZZ], "VFMinf", B=2)
    d = node("Cut", [ZZ], [dA, dn], side={"cut": A}, rank=2)
    assert C.check(d, "VFMinf").ok
    e = C.cut_eliminate(d)
    assert C.check(e, "VFMinf").ok and e.max_rank() == 0


def test_rank_one_omega_label_bound():
    d = C.weaken(_literal_cut(), label=O.OMEGA)
    assert C.check(d, "VFMinf").ok and d.max_rank() == 1
    e = C.cut_eliminate(d)
    assert C.check(e, "VFMinf").ok
    assert O.compare(e.label, O.omega_exp(O.OMEGA)) != O.GT


def test_cut_eliminate_rank_zero_is_identity_up_to_labels():
    d = C.prove([p("(or (= 0 1) (= 1 1))")], "VFMinf")
    e = C.cut_eliminate(d)
    assert e.conclusion == d.conclusion and e.rules_used() == d.rules_used()
    assert e.size() == d.size()


def test_cut_corpus_bounds():
    for d in C.cut_corpus(100):
        assert C.check(d, "VFMinf").ok
        e = C.cut_eliminate(d)
        assert C.check(e, "VFMinf").ok and e.max_rank() == 0
        assert e.conclusion == d.conclusion
        assert O.compare(e.label, O.omega_tower(d.max_rank(), d.label)) != O.GT


# -------------------------------------------------------------- I calculus

@pytest.mark.parametrize("text", ["(= 0 1)", "(Tr 5)", "(and (= 0 0) (Tr 3))",
                                  "(forall x (= x x))", "(exists x (Tr x))"])
def test_identity(text):
    d = C.identity(p(text))
    assert C.check(d, "I").ok and d.i == 0 and d.alpha.is_zero()


def test_cut_admit_literal():
    T = tr(ZZ)
    d0 = node("TrIntro", [T], [node("Ax1", [ZZ])], side={"principal": T}, alpha=O.ONE)
    d1 = node("Ax3", [Not(T), T, p("(= 1 1)")], alpha=O.ONE)
    r = C.cut_admit_I(d0, d1, T)
    assert C.check(r, "I").ok
    assert r.label == O.omega_tower(C.co(T), O.natural_sum(d0.label, d1.label))
    assert r.i <= max(d0.i, d1.i) and O.compare(r.alpha, O.ONE) != O.GT


def test_cut_admit_conjunction():
    T = tr(ZZ)
    A = And(T, ZZ)
    intro = node("TrIntro", [T], [node("Ax1", [ZZ])], side={"principal": T}, alpha=O.ONE)
    d0 = node("And", [A], [intro, node("Ax1", [ZZ], alpha=O.ONE)], side={"principal": A}, alpha=O.ONE)
    d1 = C.weaken(C.identity(A), alpha=O.ONE)
    r = C.cut_admit_I(d0, d1, A)
    assert C.check(r, "I").ok
    assert r.label == O.omega_tower(C.co(A), O.natural_sum(d0.label, d1.label))
    assert C.key(A) in r.keys


def test_cut_admit_needs_matching_indices():
    T = tr(ZZ)
    d0 = node("Ax1", [ZZ, T])
    d1 = node("Ax1", [ZZ, Not(T)], i=1)
    with pytest.raises(C.CalculusError):
        C.cut_admit_I(d0, d1, T)


def test_disq_examples():
    # sequents are compared up to term values
    assert C.keys(C.disq([tr(ZO)])) == C.keys([ZO])
    assert C.keys(C.disq([ZZ, Tr(Num(2))])) == C.keys([ZZ])
    eqs = [ZZ, ZO, p("(= 3 4)")]
    assert C.keys(C.disq(eqs)) == C.keys(eqs)
    with pytest.raises(C.CalculusError):
        C.disq([p("(or (= 0 0) (= 0 1))")])


def _cons_over_intro():
    m = S.encode(ZZ)
    g = p("(= 2 2)")
    p0 = node("TrIntro", [g, Tr(Num(m))], [node("Ax1", [ZZ])], side={"principal": Tr(Num(m))}, alpha=O.ONE)
    p1 = node("Ax1", [g, Tr(Num(C.neg_code(m)))], alpha=O.ONE)
    return node("Cons", [g], [p0, p1], side={"n": m}, i=1, alpha=O.ONE)


def test_disq_transform_and_equations():
    d = _cons_over_intro()
    assert C.check(d, "I").ok
    r, n = C.disq_transform(d)
    assert C.check(r, "I").ok and r.alpha.is_zero()
    assert r.label == O.omega_tower(n, d.label)
    e = C.disq_equations(d)
    assert C.check(e, "I").ok and e.alpha.is_zero()
    assert O.compare(e.label, O.epsilon(d.label)) != O.GT


def test_disq_corpus():
    corpus = C.disq_corpus(50)
    assert len(corpus) == 50
    for d in corpus:
        assert C.check(d, "I").ok
        e = C.disq_equations(d)
        assert C.check(e, "I").ok and e.alpha.is_zero() and e.keys <= d.keys
        assert O.compare(e.label, O.epsilon(d.label)) != O.GT


def test_eliminate_cons_norm():
    plain = node("Ax1", [ZZ])
    r, n = C.eliminate_cons_norm(plain)
    assert r.keys == plain.keys
    g = p("(= 2 2)")
    m = S.encode(ZZ)
    d = node("Cons", [g], [node("Ax1", [g, Tr(Num(m))]), node("Ax1", [g, Tr(Num(C.neg_code(m)))])],
             side={"n": m}, i=1)
    assert C.check(d, "I").ok
    r, n = C.eliminate_cons_norm(d)
    assert C.check(r, "I").ok
    assert not r.rules_used() & {"Cons", "Norm"} and all(x.i == 0 for x in r.nodes())


# ------------------------------------------------------------------- probe

def test_probe_finds_nothing():
    for sys in ("I", "Iprime"):
        r = C.consistency_probe(sys, depth=3)
        assert r.clean and r.sequents_explored > 0


def test_probe_istar():
    r = C.consistency_probe(C.Istar([S.encode(ZZ)]), depth=3)
    assert r.clean


def test_planted_axiom_is_detected():
    r = C.consistency_probe("I", depth=3, planted=True)
    assert not r.clean and r.found


# ---------------------------------------------------------------- Tr-Elim

def test_tr_elim_corpus():
    corpus = C.tr_elim_corpus()
    assert len(corpus) == 20
    for d in corpus:
        assert C.check(d, "VFWinf").ok
        e = C.tr_elim(d)
        (f,) = d.keys
        A = C.key(S.decode(C.tr_value(f)))
        assert C.check(e, "VFWinf").ok and e.keys == {A}
        assert O.compare(e.label, O.epsilon(d.label)) != O.GT


def test_tr_elim_rejects_other_conclusions():
    with pytest.raises(C.CalculusError):
        C.tr_elim(node("Ax1", [ZZ]))


# --------------------------------------------------------------- embedding

def test_vf1_converse_tree():
    m, n = S.encode_term(Num(0)), S.encode_term(Num(1))
    d = C.vf1_converse(m, n)
    assert C.check(d, "VFMinf").ok
    # the implication on top of the five-node (Cons) tree
    assert d.rule == "Or" and d.premises[0].rule == "Cons" and d.size() == 5
    with pytest.raises(C.CalculusError):
        C.vf1_converse(S.encode(ZZ), S.encode(ZO))


def test_vf7_uses_cons_and_comp():
    d = C.embed_axiom("VFM", "VF7", S.encode(S.liar()))
    assert C.check(d, "VFMinf").ok
    assert {"TrCons", "TrComp"} <= d.rules_used()


def test_p_disq_rules():
    items = [(a, args) for a, args in C.embed_instances("VFMP") if "Disq" in a]
    assert items
    for name, args in items:
        d = C.embed_axiom("VFMP", name, *args)
        assert C.check(d, "VFMPinf").ok
        assert {"PDisq2", "Ax3"} <= d.rules_used() or {"PDisq1"} <= d.rules_used()


@pytest.mark.parametrize("theory", ["VFM", "VFW", "VFMP"])
def test_embedding_instances(theory):
    sys = C.THEORY_SYSTEM[theory]
    for name, args in C.embed_instances(theory):
        d = C.embed_axiom(theory, name, *args)
        assert C.check(d, sys).ok, (name, args)
        assert O.compare(d.label, O.EPS0) == O.LT


# ------------------------------------------------------------- file format

def test_file_roundtrip():
    for d in C.cut_corpus(10) + C.tr_elim_corpus()[:4] + [C.vf1_converse(S.encode_term(Num(0)), S.encode_term(Num(1)))]:
        text = C.dumps(d, "VFMinf")
        e, system = C.loads(text)
        assert system == "VFMinf"
        assert C.dumps(e, "VFMinf") == text


def test_loads_rejects_garbage():
    for bad in ("", "{", '{"rule": "Ax1"}', "[1, 2]"):
        with pytest.raises(C.CalculusError):
            C.loads(bad)
