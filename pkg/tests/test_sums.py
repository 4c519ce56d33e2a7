import random
from fractions import Fraction

import pytest

import oracles
from mzlab.algebra import WordCombo, harmonic_product
from mzlab.indices import DomainError, mzv_dual
from mzlab.relations import compositions_of
from mzlab.sums import (
    difference_check,
    eval_Z_dia,
    eval_Z_h,
    f_g_h,
    h_via_f,
    h_via_g,
    zeta_dia,
    zeta_dia_flat,
    zeta_dia_star,
    zeta_flat,
    zeta_flat_tworow,
    zeta_float,
    zeta_n,
    zeta_tworow,
)


def all_indices(max_weight):
    out = []
    for w in range(1, max_weight + 1):
        for r in range(1, w + 1):
            out.extend(compositions_of(w, r))
    return out


def admissible(max_weight):
    return [k for k in all_indices(max_weight) if k[-1] >= 2]


def test_zeta_n_frozen():
    assert zeta_n((2,), 4) == Fraction(49, 36)
    assert zeta_n((1, 2), 5) == Fraction(17, 32)
    assert zeta_n((2,), 1) == 0
    assert zeta_n((), 7) == 1


def test_zeta_dia_frozen():
    assert zeta_dia((1, 2), 3) == Fraction(9, 8)
    assert zeta_dia((3,), 3) == Fraction(9, 8)
    assert zeta_dia((1, 3), 3) == Fraction(13, 16)
    for N in range(1, 21):
        assert zeta_dia((2, 3), N) == zeta_n((2, 3), N)
    with pytest.raises(DomainError):
        zeta_dia((2, 1), 5)


def test_zeta_dia_star_frozen():
    assert zeta_dia_star((1, 2), 3) == Fraction(9, 4)
    assert zeta_dia_star((2, 2), 4) == Fraction(1897, 1296)
    for N in range(1, 11):
        assert zeta_dia_star((2,), N) == zeta_n((2,), N)


def test_zeta_flat_frozen():
    assert zeta_flat((2,), 3) == Fraction(5, 4)
    assert zeta_flat((1,), 6) == sum(Fraction(1, n) for n in range(1, 6))
    assert zeta_flat((4,), 1) == 0


def test_zeta_dia_flat_frozen():
    assert zeta_dia_flat((1, 2), 3) == Fraction(9, 8)
    for N in range(1, 16):
        assert zeta_dia_flat((2,), N) == zeta_flat((2,), N)
    assert zeta_dia_flat((1, 2), 1) == 0


def test_against_oracles():
    rng = random.Random(53)
    pool = all_indices(5)
    for _ in range(30):
        k = rng.choice(pool)
        N = rng.randint(1, 7)
        assert zeta_n(k, N) == oracles.zeta_n(k, N)
        assert zeta_flat(k, N) == oracles.zeta_flat(k, N)
        if k[-1] >= 2:
            assert zeta_dia(k, N) == oracles.zeta_dia(k, N)
            assert zeta_dia_flat(k, N) == oracles.zeta_dia_flat(k, N)
            assert zeta_dia_star(k, N) == oracles.zeta_dia_star(k, N)


def test_msw_equality():
    for k in all_indices(6):
        for N in range(1, 21):
            assert zeta_n(k, N) == zeta_flat(k, N), (k, N)


def test_tworow_frozen_and_reduction():
    assert zeta_tworow((1,), (1,), 3) == Fraction(3, 2)
    assert zeta_flat_tworow((1,), (1,), 3) == Fraction(3, 2)
    assert zeta_tworow((2, 1), (1, 3), 4) == Fraction(5, 72)
    # the all-ones left row reduces to the plain and flat sums
    for k in all_indices(4):
        ones = (1,) * len(k)
        for N in range(1, 13):
            assert zeta_tworow(ones, k, N) == zeta_n(k, N)
            assert zeta_flat_tworow(ones, k, N) == zeta_flat(k, N)
    with pytest.raises(DomainError):
        zeta_tworow((1,), (1, 2), 5)


def test_tworow_equality_and_duality():
    idxs = [k for k in all_indices(6) if len(k) <= 2 and max(k) <= 3]
    for l in idxs:
        for k in idxs:
            if len(l) != len(k):
                continue
            for N in range(1, 13):
                lhs = zeta_tworow(l, k, N)
                assert lhs == zeta_flat_tworow(l, k, N), (l, k, N)
                # reversal duality comes with the same lattice count
                assert lhs == zeta_tworow(tuple(reversed(k)), tuple(reversed(l)), N)


def test_dia_equals_dia_flat():
    for k in admissible(7):
        for N in range(1, 16):
            assert zeta_dia(k, N) == zeta_dia_flat(k, N), (k, N)


def test_dia_duality():
    for k in admissible(8):
        dual = mzv_dual(k)
        for N in range(1, 21):
            assert zeta_dia(k, N) == zeta_dia(dual, N), (k, N)


def test_eval_Z_dia():
    euler = WordCombo({"yyx": 1, "yxx": -1})
    for N in range(1, 12):
        assert eval_Z_dia(euler, N) == 0
    assert eval_Z_dia(WordCombo.unit(), 7) == 1
    assert eval_Z_dia(WordCombo.from_word("yx", 2), 3) == Fraction(5, 2)
    from mzlab.algebra import Poly

    with pytest.raises(DomainError):
        eval_Z_dia(WordCombo({"yx": Poly((0, 1))}), 3)


def test_restricted_harmonic_product():
    # one admissible factor, one ge-2 factor: exact multiplicativity
    ge2_words = [WordCombo.from_index(k) for k in admissible(4) if min(k) >= 2]
    adm = [WordCombo.from_index(k) for k in admissible(5)]
    for a in adm:
        for b in ge2_words:
            prod = harmonic_product(a, b)
            for N in range(1, 16):
                assert eval_Z_dia(prod, N) == eval_Z_dia(a, N) * eval_Z_dia(b, N)


def test_unrestricted_product_fails():
    # the full harmonic square of (1,2) misses by the two displayed
    # boundary-correction sums at N = 5
    N = 5
    e12 = WordCombo.from_index((1, 2))
    square = harmonic_product(e12, e12)
    assert square == WordCombo(
        {
            "yyxyyx": 2,      # (1,2,1,2)
            "yyyxyx": 4,      # (1,1,2,2)
            "yyyxxx": 2,      # (1,1,4)
            "yyxxyx": 2,      # (1,3,2)
            "yxyxyx": 2,      # (2,2,2)
            "yxyxxx": 1,      # (2,4)
        }
    )
    lhs = zeta_dia((1, 2), N) ** 2
    rhs = eval_Z_dia(square, N)
    corr1 = sum(
        Fraction(1, (N - n1) ** 2 * n2**2 * n3**2)
        for n1 in range(1, N)
        for n2 in range(n1, N)
        for n3 in range(n2 + 1, N)
    )
    corr2 = sum(
        Fraction(1, (N - n1) ** 2 * n2**4)
        for n1 in range(1, N)
        for n2 in range(n1, N)
    )
    assert corr1 > 0 and corr2 > 0
    assert lhs != rhs
    assert lhs == rhs - 2 * corr1 - corr2


def test_eval_Z_h():
    assert eval_Z_h(WordCombo.from_word("yxy"), 4) == zeta_n((2, 1), 4)


def test_f_g_h_frozen():
    f, g, h = f_g_h((1, 1), 3)
    assert f == Fraction(5, 4)  # modified sum of (2) at N = 3
    assert g == Fraction(49, 36)
    assert h == Fraction(49, 36)
    with pytest.raises(DomainError):
        f_g_h((), 3)


def test_h_against_oracle():
    for c in ((1, 1), (2, 1), (1, 2), (2, 2), (1, 1, 1, 1), (1, 2, 1, 1)):
        for N in range(1, 7):
            assert f_g_h(c, N)[2] == oracles.h_value(c, N), (c, N)


def test_h_via_f_and_g():
    comps = [
        c
        for w in range(2, 7)
        for parts in range(2, w + 1, 2)
        for c in compositions_of(w, parts)
    ]
    for c in comps:
        for N in range(2, 16):
            h = f_g_h(c, N)[2]
            assert h == h_via_f(c, N), (c, N)
            assert h == h_via_g(c, N), (c, N)


def test_difference_check():
    for c in ((1, 1), (2, 2), (1, 2, 1, 1)):
        for N in range(1, 11):
            assert difference_check(c, N)
    comps = [
        c
        for w in range(2, 7)
        for parts in range(2, w + 1, 2)
        for c in compositions_of(w, parts)
    ]
    for c in comps:
        for N in range(1, 16):
            assert difference_check(c, N), (c, N)


def test_zeta_float():
    # partial sums approach the classical limits from below
    assert abs(zeta_float((2,), 10**4) - 1.6449340668) < 2e-4
    assert abs(zeta_float((3,), 10**4) - 1.2020569032) < 1e-7
    with pytest.raises(DomainError):
        zeta_float((2, 1), 100)


def test_monotone_vanishing_of_correction():
    # the modified and plain sums converge to each other
    k = (1, 2)
    gaps = [float(zeta_dia(k, N) - zeta_n(k, N)) for N in (10, 40, 160)]
    assert gaps[0] > gaps[1] > gaps[2] > 0
