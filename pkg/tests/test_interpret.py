from itertools import chain, combinations

import pytest

from veritas import interpret as I
from veritas import ordinals as O
from veritas import semantics as M
from veritas import syntax as S
from veritas.syntax import And, Eq, Not, Num, Quote, Tr, TrRam, Zero

ZZ = Eq(Zero(), Zero())
LAM = S.liar()
FALSUM = S.encode(S.zero_eq_one())


def subsets(items):
    items = list(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))]


@pytest.fixture(scope="module")
def std():
    return M.standard_universe()


@pytest.fixture(scope="module")
def six():
    return M.Universe([LAM, ZZ, Tr(Quote(ZZ))], N=0)


@pytest.fixture(scope="module")
def ramified():
    R = I.standard_ramified_pool()
    U = I.ramified_universe(R, [O.ZERO, O.ONE])
    return R, U, M.lfp("mc", U)


def test_xi_examples(std):
    assert I.xi(S.encode(ZZ), frozenset(), std)
    assert I.xi(S.encode(Tr(Quote(ZZ))), {std.code_of(ZZ)}, std)
    # 2 is not a sentence code
    assert not S.is_sentence(2)
    assert I.xi(S.encode(Not(Tr(Num(2)))), frozenset(), std)


def test_xi_implies_membership_in_mc_fixed_point(std):
    X = M.lfp("mc", std)
    for c in std.codes:
        if I.xi(c, X, std):
            assert c in X


def test_xi_star_examples(std):
    X = M.lfp("mc", std)
    assert I.xi_star(std.code_of(ZZ), frozenset(), std)
    assert not I.xi_star(std.code_of(LAM), X, std)
    for c in std.codes:
        if I.xi_star(c, X, std):
            assert I.xi_star(I.neg_code(c), X, std)


def test_sk_jump_monotone(six):
    images = {X: I.sk_jump(X, six) for X in subsets(six.codes)}
    for X in images:
        for Y in images:
            if X <= Y:
                assert images[X] <= images[Y]


def test_sk_lfp(std, six):
    for U in (std, six):
        res = I.sk_lfp(U)
        lam = U.code_of(LAM)
        assert all(lam not in s for s in res.stages)
        assert res.fixed_point <= M.lfp("vc", U)
        assert U.consistent(res.fixed_point)


def test_xi_star_properties(std, ramified):
    r = I.check_xi_star_properties(std, M.lfp("mc", std))
    assert r.ok, r.failures[:3]
    assert sum(r.checked.values()) > 0
    _, U, X = ramified
    r = I.check_xi_star_properties(U, X)
    assert r.ok, r.failures[:3]
    for item in ("iv", "v", "viii"):
        assert r.checked.get(item, 0) > 0, item


def test_property_report_detects_a_bad_extension(std):
    # a set containing both 0=0 and its negation breaks the items
    X = frozenset(std.codes)
    assert not I.check_xi_star_properties(std, X).ok


def test_h():
    lvl1 = S.encode(TrRam(O.ONE, Quote(ZZ)))
    lvl0 = S.encode(TrRam(O.ZERO, Quote(ZZ)))
    assert I.h(S.encode(ZZ), O.ONE) == S.encode(ZZ)
    assert I.h(S.encode(ZZ), O.OMEGA) == S.encode(ZZ)
    assert I.h(lvl1, O.ONE) == FALSUM
    assert I.h(lvl0, O.ONE) == lvl0
    for x in (lvl0, lvl1, S.encode(ZZ)):
        assert I.h_agrees(x, O.ONE, O.OMEGA)


def test_k():
    z = S.encode(ZZ)
    assert I.k_translate(z) == z
    assert I.k_translate(S.encode(Not(ZZ))) == S.encode(Not(Tr(Num(z))))
    assert I.k_translate(2) == FALSUM
    assert I.k_translate(I.k_translate(z)) == z


def test_k_image_is_unramified(ramified):
    R, U, _ = ramified
    for c in U.codes[:60]:
        y = I.k_translate(c)
        assert S.is_sentence(y, S.LT) or y == FALSUM


def test_sigma():
    assert I.sigma(O.TWO, ZZ) == ZZ
    s = I.sigma(O.ONE, TrRam(O.ZERO, Quote(ZZ)))
    assert isinstance(s, Tr)
    # the kh term evaluates to the k-image of the quoted atom
    assert S.eval_term(s.t) == I.k_translate(I.h(S.encode(ZZ), O.ZERO))
    a, b = TrRam(O.ZERO, Quote(ZZ)), Eq(Num(1), Num(1))
    assert I.sigma(O.ONE, And(a, b)) == And(I.sigma(O.ONE, a), I.sigma(O.ONE, b))
    with pytest.raises(ValueError):
        I.sigma(O.ONE, TrRam(O.ONE, Quote(ZZ)))
    with pytest.raises(ValueError):
        I.sigma(O.ONE, Tr(Quote(ZZ)))


def test_rt_translation(ramified):
    R, U, X = ramified
    for b in (O.ZERO, O.ONE):
        r = I.check_rt_translation(U, X, b, R)
        assert r.ok, r.failures[:3]
        assert sum(r.checked.values()) > 0
    names = {name for name, _, _ in I.rt_instances(R, O.ONE)}
    assert "or" in names


def test_rt_translation_empty_level():
    R = I.RamifiedPool([], O.TWO)
    U = M.Universe([ZZ], N=0)
    r = I.check_rt_translation(U, frozenset(), O.ZERO, R)
    assert not r.checked and not r.failures
