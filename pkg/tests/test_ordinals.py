import random
from functools import cmp_to_key
from itertools import product

import pytest

from veritas import ordinals as O
from veritas.ordinals import EPS0, OMEGA, ONE, TWO, ZERO, compare, veblen


# Oracle below epsilon_0: an ordinal is a descending tuple of exponents,
# each exponent again such a tuple.  Comparison is lexicographic.

def cnf(x: O.Ord) -> tuple:
    out = []
    for t in x.terms:
        if not t.a.is_zero():
            raise ValueError("not below epsilon_0")
        out.append(cnf(t.b))
    return tuple(out)


def cnf_cmp(a: tuple, b: tuple) -> int:
    for s, t in zip(a, b):
        c = cnf_cmp(s, t)
        if c:
            return c
    return (len(a) > len(b)) - (len(a) < len(b))


def cnf_sorted(xs):
    return tuple(sorted(xs, key=cmp_to_key(cnf_cmp), reverse=True))


def cnf_nsum(a, b):
    return cnf_sorted(a + b)


def cnf_add(a, b):
    if not b:
        return a
    keep = tuple(e for e in a if cnf_cmp(e, b[0]) >= 0)
    return keep + b


def _small_pool() -> list:
    from itertools import combinations_with_replacement
    level = [ZERO]
    for depth in range(3):
        powers = [O.omega_exp(e) for e in level]
        new = set(level)
        for k in ((1, 2, 3) if depth < 2 else (1, 2)):
            for combo in combinations_with_replacement(powers, k):
                s = ZERO
                for p in sorted(combo, key=cmp_to_key(compare), reverse=True):
                    s = O.add(s, p)
                new.add(s)
        level = sorted(new, key=cmp_to_key(compare))
    return level[::max(1, len(level) // 150)]


SMALL = _small_pool()


def test_below_eps0_pool_is_large_enough():
    assert len(SMALL) > 50


@pytest.mark.parametrize("text,expected", [
    ("0", ZERO), ("1", ONE), ("w", OMEGA), ("e0", EPS0), ("(phi 0 0)", ONE),
])
def test_parse(text, expected):
    assert O.parse_ord(text) == expected


def test_parse_rejects_garbage():
    for bad in ("", "(phi 0", "q", "(+ G0 1)"):
        with pytest.raises(O.OrdinalError):
            O.parse_ord(bad)


def test_compare_basic_cases():
    assert compare(ONE, EPS0) == O.LT
    assert compare(veblen(ZERO, EPS0), EPS0) == O.EQ
    seq = [ZERO, ONE, OMEGA, O.omega_exp(TWO), EPS0, O.epsilon(ONE), veblen(TWO, ZERO)]
    for a, b in zip(seq, seq[1:]):
        assert compare(a, b) == O.LT


def test_compare_agrees_with_cnf_oracle():
    for x, y in product(SMALL, repeat=2):
        assert compare(x, y) == cnf_cmp(cnf(x), cnf(y))


def test_order_axioms_exhaustive_depth3():
    xs = O.enumerate_notations(3)
    for x, y in product(xs, repeat=2):
        c = compare(x, y)
        assert c == -compare(y, x)
        assert (c == O.EQ) == (x == y)
    for x, y, z in product(xs[::3], repeat=3):
        if compare(x, y) == O.LT and compare(y, z) == O.LT:
            assert compare(x, z) == O.LT


def test_veblen_values():
    assert veblen(ZERO, ZERO) == ONE
    assert veblen(ONE, ZERO) == EPS0
    assert veblen(ZERO, veblen(ONE, ZERO)) == veblen(ONE, ZERO)


def test_veblen_normal_and_stable():
    for a, b in product(O.enumerate_notations(2), repeat=2):
        v = veblen(a, b)
        assert O.is_normal(v)
        assert O.parse_ord(O.to_text(v)) == v


def test_add_versus_natural_sum():
    assert O.add(ONE, OMEGA) == OMEGA
    assert O.natural_sum(ONE, OMEGA) == O.add(OMEGA, ONE)


def test_sums_agree_with_cnf_oracle():
    rng = random.Random(3)
    for _ in range(300):
        a, b = rng.choice(SMALL), rng.choice(SMALL)
        assert cnf(O.natural_sum(a, b)) == cnf_nsum(cnf(a), cnf(b))
        assert cnf(O.add(a, b)) == cnf_add(cnf(a), cnf(b))


def test_natural_sum_commutative_and_monotone():
    rng = random.Random(11)
    pool = O.enumerate_notations(3, width=3)
    for _ in range(200):
        a, b = rng.choice(pool), rng.choice(pool)
        assert O.natural_sum(a, b) == O.natural_sum(b, a)
    for _ in range(200):
        a, b, c = (rng.choice(pool) for _ in range(3))
        if compare(b, c) == O.LT:
            assert compare(O.natural_sum(a, b), O.natural_sum(a, c)) == O.LT


def test_add_and_nsum_associative():
    rng = random.Random(5)
    for _ in range(150):
        a, b, c = (rng.choice(SMALL) for _ in range(3))
        assert O.add(O.add(a, b), c) == O.add(a, O.add(b, c))
        assert O.natural_sum(O.natural_sum(a, b), c) == O.natural_sum(a, O.natural_sum(b, c))


def test_omega_tower():
    a = O.omega_exp(OMEGA)
    assert O.omega_tower(0, a) == a
    # unfolded by hand: omega^(omega^0) = omega^1
    assert O.omega_tower(2, ZERO) == OMEGA
    assert O.omega_tower(1, EPS0) == EPS0
    for x in SMALL[:40]:
        assert compare(x, O.omega_tower(1, x)) != O.GT


def test_epsilon():
    assert O.epsilon(ZERO) == EPS0
    f = veblen(TWO, ZERO)
    assert O.epsilon(f) == f
    for x in O.enumerate_notations(2):
        if O.epsilon(x) != x:
            assert compare(O.epsilon(x), x) == O.GT


def test_hat():
    f20 = veblen(TWO, ZERO)
    assert O.hat(ZERO) == f20
    assert O.hat(f20) == veblen(TWO, ONE)
    # nothing strictly between phi_2(0) and phi_2(1) is an epsilon fixed point
    for x in O.enumerate_notations(3):
        if compare(f20, x) == O.LT and compare(x, veblen(TWO, ONE)) == O.LT:
            assert O.epsilon(x) != x
    for x in O.enumerate_notations(2):
        h = O.hat(x)
        assert O.epsilon(h) == h and compare(h, x) == O.GT
        assert compare(O.hat(h), h) == O.GT


def test_beta_sequence():
    assert O.beta_sequence(0) == EPS0
    assert O.beta_sequence(1) == veblen(EPS0, ZERO)
    bs = [O.beta_sequence(n) for n in range(6)]
    assert all(compare(a, b) == O.LT for a, b in zip(bs, bs[1:]))


def test_render():
    assert O.render(O.natural_sum(EPS0, OMEGA)) == "φ₁0 + ω"
    assert O.render(ZERO) == "0"


def test_text_roundtrip():
    for x in O.enumerate_notations(3)[::7]:
        assert O.parse_ord(O.to_text(x)) == x


def test_gamma0_is_only_a_bound():
    assert veblen(EPS0, EPS0) < O.G0
    assert not O.G0 < veblen(EPS0, EPS0)
