from itertools import chain, combinations

import pytest

from veritas import semantics as M
from veritas import syntax as S
from veritas.syntax import Not, Or, Quote, Tr


def subsets(items):
    items = list(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))]


def oracle_admissible(e, U, X, Xp):
    """Admissibility spelled out directly on sets."""
    if not X <= Xp:
        return False
    negs = {c: U.neg[c] for c in U.codes}
    anti = {negs[c] for c in X}
    if e == "sv":
        return True
    if e == "vb":
        return not (Xp & anti)
    consistent = all(negs[c] not in Xp for c in Xp)
    if e == "vc":
        return consistent
    return consistent and all(c in Xp or negs[c] in Xp for c in U.codes)


def oracle_sat(e, U, X, phi):
    return all(M.classical_sat(U, Xp, phi)
               for Xp in subsets(U.codes) if oracle_admissible(e, U, X, Xp))


def oracle_jump(e, U, X):
    return frozenset(c for c in U.codes if oracle_sat(e, U, X, U.formula[c]))


LAM = S.liar()
TAU = S.truth_teller()
ZZ = S.parse("(= 0 0)")
ZO = S.zero_eq_one()


@pytest.fixture(scope="module")
def small():
    return M.Universe([LAM, ZZ, Tr(Quote(LAM))], N=0)


@pytest.fixture(scope="module")
def std():
    return M.standard_universe()


def test_universe_is_negation_closed(small):
    for c in small.codes:
        assert small.neg[small.neg[c]] == c
        assert small.neg[c] in small
    assert len(small) == 6


def test_classical_sat(std):
    assert not M.classical_sat(std, frozenset(), Tr(Quote(ZO)))
    assert M.classical_sat(std, {std.code_of(ZZ)}, Tr(Quote(ZZ)))


def test_admissible_examples(small):
    lam, nlam = small.code_of(LAM), small.code_of(Not(LAM))
    assert not M.admissible("vb", small, {nlam}, {lam})
    assert M.admissible("vc", small, {lam}, set())
    for Xp in subsets(small.codes):
        pairs_ok = all((a in Xp) != (b in Xp) for a, b in small.pairs)
        assert M.admissible("mc", small, set(), Xp) == pairs_ok
        assert pairs_ok == (len(Xp) == len(small) // 2 and small.consistent(Xp))


def test_sv_sat_examples(std):
    empty = frozenset()
    assert M.sv_sat("sv", std, empty, Or(LAM, Not(LAM)))
    assert not M.sv_sat("sv", std, empty, Not(Tr(Quote(ZO))))
    # vb needs 0=1 in the antiextension, which the first jump supplies
    assert not M.sv_sat("vb", std, empty, Not(Tr(Quote(ZO))))
    assert M.sv_sat("vb", std, {std.code_of(Not(ZO))}, Not(Tr(Quote(ZO))))
    assert oracle_sat("vb", M.Universe([ZO], N=0), {S.encode(M.canonical(Not(ZO)))}, Not(Tr(Quote(ZO))))


@pytest.mark.parametrize("e", M.SCHEMES)
def test_jump_matches_oracle_on_liar_pools(e):
    for U in M.liar_family_pools()[:12]:
        for X in subsets(U.codes)[::3]:
            assert M.jump(e, U, X) == oracle_jump(e, U, X)


def test_jump_keeps_arithmetic_truths(std):
    for e in M.SCHEMES:
        J = M.jump(e, std, frozenset())
        assert std.code_of(ZZ) in J
        assert std.code_of(Not(ZO)) in J


def test_liar_never_decided(small):
    lam, nlam = small.code_of(LAM), small.code_of(Not(LAM))
    grounded = [c for c in small.codes if not small.support(c)]
    for e in ("vb", "vc", "mc"):
        for X in subsets(grounded):
            if small.consistent(X):
                J = M.jump(e, small, X)
                assert lam not in J and nlam not in J


def test_scheme_ordering_and_consistency():
    for U in M.liar_family_pools():
        for X in subsets(U.codes)[::2]:
            if not U.consistent(X):
                continue
            js = [M.jump(e, U, X) for e in M.SCHEMES]
            assert js[0] <= js[1] <= js[2] <= js[3]
            for J in js[1:]:
                assert U.consistent(J)


def test_lfp_properties(std):
    tau = std.code_of(TAU)
    for e in M.SCHEMES:
        X = M.lfp(e, std)
        assert M.jump(e, std, X) == X
        assert std.code_of(ZZ) in X
        assert tau not in X
    for e in ("vb", "vc", "mc"):
        X = M.lfp(e, std)
        for c in std.codes:
            t = std.lookup(S.encode(Tr(Quote(std.formula[c]))))
            if t is not None:
                assert (c in X) == (t in X)


def test_lfp_trace_deltas(std):
    res = M.lfp_trace("mc", std)
    assert res.fixed_point == res.stages[-1]
    assert frozenset().union(*res.deltas) == res.fixed_point
    for a, b in zip(res.stages, res.stages[1:]):
        assert a < b


def test_mcx_enumerate():
    U = M.Universe([ZZ], N=0)
    assert len(M.mcx_enumerate(U, frozenset())) == 2
    c = U.code_of(ZZ)
    assert M.mcx_enumerate(U, {c, U.neg[c]}) == []
    small = M.Universe([LAM, ZZ], N=0)
    for Xp in M.mcx_enumerate(small, frozenset()):
        assert M.admissible("mc", small, frozenset(), Xp)


def test_monotone_report():
    U = M.liar_family_pools()[3]
    for e in M.SCHEMES:
        r = M.check_monotone(e, U)
        assert r.ok and r.pairs_checked == 3 ** len(U)


def test_monotone_detects_a_broken_jump():
    U = M.liar_family_pools()[0]

    def anti(e, U, X):
        return frozenset(U.codes) - frozenset(X)

    assert not M.check_monotone("vb", U, jump_fn=anti).ok


@pytest.mark.parametrize("theory,scheme", [("VF", "vc"), ("VFminus", "vb"), ("VFM", "mc"), ("VFW", "mc")])
def test_soundness(std, theory, scheme):
    r = M.check_axioms(theory, std, M.lfp(scheme, std))
    assert r.ok, r.failures[:3]
    assert sum(r.checked.values()) > 0


def test_vf7_fails_in_vb_fixed_point_at_liar(std):
    X = M.lfp("vb", std)
    r = M.check_axioms("VFM", std, X)
    failing = {name for name, _ in r.failures}
    assert "VF7" in failing
    # by direct evaluation
    vf7 = M.AXIOMS["VFM"]["VF7"][0](S.encode(LAM))
    assert not M.classical_sat(std, X, vf7)
    assert M.classical_sat(std, M.lfp("mc", std), vf7)


def test_separation(std):
    not_tr = std.code_of(Not(Tr(Quote(ZO))))
    member = {e: not_tr in M.lfp(e, std) for e in M.SCHEMES}
    assert member == {"sv": False, "vb": True, "vc": True, "mc": True}


def test_record_is_json_ready(std):
    import json
    r = M.check_axioms("VFM", std, M.lfp("mc", std))
    json.dumps(r.to_record())


def test_universe_file(tmp_path):
    p = tmp_path / "pool.txt"
    p.write_text("# liar pool\nnumeral_bound 0\n(= 0 0)\n(diag (not (Tr (self))))\n")
    U = M.read_universe(str(p))
    assert len(U) == 4 and U.N == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("(= x 0)\n")
    with pytest.raises(ValueError):
        M.read_universe(str(bad))
