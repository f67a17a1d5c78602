from itertools import product

import pytest

from veritas import ordinals as O
from veritas import syntax as S
from veritas.syntax import And, Eq, Forall, Not, Num, Or, Quote, Tr, Var, Zero


TERMS = (Zero(), Var("x"), Num(2), Quote(Eq(Zero(), Zero())))


def formulas(max_size: int) -> list:
    """Every formula over TERMS built from =, Tr, not, or, and, forall x, up to a size."""
    by_size: dict[int, list] = {}
    atoms = [Eq(a, b) for a, b in product(TERMS, repeat=2)] + [Tr(t) for t in TERMS]
    for a in atoms:
        by_size.setdefault(S.size(a), []).append(a)
    for n in range(1, max_size + 1):
        out = by_size.setdefault(n, [])
        for f in by_size.get(n - 1, []):
            out += [Not(f), Forall("x", f)]
        for i in range(1, n - 1):
            for a, b in product(by_size.get(i, []), by_size.get(n - 1 - i, [])):
                out += [Or(a, b), And(a, b)]
    return [f for n in range(max_size + 1) for f in by_size.get(n, [])]


SMALL = formulas(7)


def test_parse_examples():
    z = Zero()
    assert S.parse("(= 0 0)") == Eq(z, z)
    assert S.parse("(Tr (quote (= 0 0)))") == Tr(Quote(Eq(z, z)))
    assert S.parse("(or (not (Tr x)) (= x x))") == Or(Not(Tr(Var("x"))), Eq(Var("x"), Var("x")))
    assert S.parse("(-> (Tr x) (= x x))") == S.parse("(or (not (Tr x)) (= x x))")


def test_parse_errors_are_value_errors():
    for bad in ("(= 0", "(frob 0)", ")", ""):
        with pytest.raises(S.ParseError):
            S.parse(bad)
    assert issubclass(S.ParseError, ValueError)


def test_show_parse_roundtrip():
    for f in SMALL[::5]:
        assert S.parse(S.show(f)) == f


def test_code_roundtrip_and_injective():
    assert len(SMALL) > 1000
    seen = {}
    for f in SMALL:
        c = S.encode(f)
        assert S.decode(c) == f
        assert seen.setdefault(c, f) == f
    assert S.decode(S.encode(Eq(Zero(), Zero()))) == Eq(Zero(), Zero())


def test_not_a_code():
    assert S.decode(0) is S.NOT_A_CODE
    assert not S.NOT_A_CODE
    assert S.NOT_A_CODE is not None


def test_term_values():
    f = Eq(Zero(), Zero())
    assert S.eval_term(Num(7)) == 7
    assert S.eval_term(S.Succ(S.Succ(Zero()))) == 2
    assert S.eval_term(Quote(f)) == S.encode(f)
    with pytest.raises(S.OpenTermError):
        S.eval_term(Var("x"))


def test_neg_operation_matches_encoding():
    closed = [f for f in formulas(3) if not S.free_vars(f)]
    assert closed
    for f in closed:
        assert S.eval_term(S.CodeOp("neg", (Quote(f),))) == S.encode(Not(f))


def test_substitute_examples():
    v = Var("v")
    assert S.substitute(S.encode(Eq(v, Zero())), Num(3), "v") == S.encode(Eq(Num(3), Zero()))
    bound = S.encode(Forall("v", Eq(v, Zero())))
    assert S.substitute(bound, Num(3), "v") == bound


def test_substitute_on_codes_matches_trees():
    for f in SMALL[::3]:
        for t in (Num(4), Zero()):
            assert S.substitute(S.encode(f), t, "x") == S.encode(S.subst(f, "x", t))


def _truth(f, env):
    if isinstance(f, Not):
        return not _truth(f.f, env)
    if isinstance(f, Or):
        return _truth(f.a, env) or _truth(f.b, env)
    if isinstance(f, And):
        return _truth(f.a, env) and _truth(f.b, env)
    return env[f]


def _props(max_size):
    p, q = Tr(Num(1)), Tr(Num(2))
    level = [p, q]
    out = list(level)
    for _ in range(2):
        new = [Not(a) for a in level] + [c(a, b) for a in level for b in level for c in (Or, And)]
        out += new
        level = [f for f in new if S.size(f) <= max_size]
    return [f for f in out if S.size(f) <= max_size], (p, q)


def test_nnf_truth_tables():
    fs, (p, q) = _props(7)
    assert len(fs) > 20
    for f in fs:
        g = S.nnf(f)
        assert S.nnf(g) == g
        for vp, vq in product((True, False), repeat=2):
            env = {p: vp, q: vq}
            assert _truth(f, env) == _truth(g, env)


def test_nnf_examples():
    a, b = Eq(Zero(), Zero()), Tr(Num(5))
    assert S.nnf(Not(Or(a, b))) == And(S.nnf(Not(a)), S.nnf(Not(b)))
    assert S.nnf(Not(Not(a))) == S.nnf(a)


def test_complexity():
    z = Zero()
    assert S.complexity(Eq(z, z)) == 0
    assert S.complexity(And(Eq(z, z), Tr(Num(5)))) == 1
    x = Var("x")
    assert S.complexity(Forall("x", Or(Eq(x, x), Eq(x, z)))) == 2
    for f in SMALL[::4]:
        assert S.complexity(S.nnf(Not(f))) == S.complexity(S.nnf(f))


def test_languages():
    assert not S.is_sentence(S.encode(Tr(Num(5))), S.LN)
    assert S.is_sentence(S.encode(S.TrRam(O.ZERO, Num(5))), S.LRam(O.ONE))
    assert not S.is_sentence(S.encode(Eq(Var("v"), Zero())), S.LN)
    levels = [O.ZERO, O.ONE, O.OMEGA, O.EPS0]
    for lvl in levels:
        x = S.encode(S.TrRam(lvl, Num(3)))
        verdicts = [S.is_sentence(x, S.LRam(g)) for g in levels]
        # once true, stays true as the bound grows
        assert verdicts == sorted(verdicts)


def test_liar_and_truth_teller():
    lam = S.liar()
    assert S.unfold(lam) == Not(Tr(Quote(lam)))
    assert S.eval_term(Quote(lam)) == S.encode(lam)
    assert S.decode(S.encode(lam)) == lam
    tau = S.truth_teller()
    assert S.unfold(tau) == Tr(Quote(tau))
    assert S.encode(lam) != S.encode(tau)
