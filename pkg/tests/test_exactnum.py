import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pellpascal.exactnum import (
    AlgebraicRoot,
    DyadicInterval,
    QuarterInt,
    as_perfect_square,
    ikth_root,
    isqrt,
    refine,
)


def test_isqrt_examples():
    assert isqrt(0) == 0
    assert isqrt(456976) == 676
    assert isqrt(10**12 + 1) == 10**6


def test_isqrt_negative_rejected():
    with pytest.raises(ValueError):
        isqrt(-1)


def test_ikth_root_examples():
    assert ikth_root(8, 3) == 2
    assert ikth_root(1716, 3) == 11  # 11^3 = 1331 <= 1716 < 1728 = 12^3
    assert ikth_root(456976, 4) == 26  # 26^4 = 456976 exactly
    assert ikth_root(0, 5) == 0
    assert ikth_root(1, 7) == 1


def test_ikth_root_negative():
    with pytest.raises(ValueError):
        ikth_root(-4, 2)
    assert ikth_root(-8, 3) == -2
    assert ikth_root(-9, 3) == -3  # floor(-2.08...) = -3


def test_ikth_root_bad_index():
    with pytest.raises(ValueError):
        ikth_root(5, 0)


@given(st.integers(min_value=0, max_value=10**40))
@settings(max_examples=300, deadline=None)
def test_isqrt_bracket(n):
    r = isqrt(n)
    assert r * r <= n < (r + 1) * (r + 1)


@given(st.integers(min_value=0, max_value=10**40), st.integers(min_value=1, max_value=9))
@settings(max_examples=300, deadline=None)
def test_ikth_root_bracket(n, k):
    r = ikth_root(n, k)
    assert r**k <= n < (r + 1) ** k


def test_perfect_square_examples():
    assert as_perfect_square(729) == 27
    assert as_perfect_square(2) is None
    assert as_perfect_square(460) is None
    assert as_perfect_square(0) == 0
    assert as_perfect_square(-4) is None


def test_perfect_square_randomized_cross_check():
    # mirror check against squaring over 10^5 random 128-bit integers
    rng = random.Random(20260809)
    for _ in range(50_000):
        x = rng.getrandbits(64)
        assert as_perfect_square(x * x) == x
    for _ in range(50_000):
        n = rng.getrandbits(128)
        r = as_perfect_square(n)
        if r is None:
            s = isqrt(n)
            assert s * s != n
        else:
            assert r * r == n


def test_quarterint():
    m = QuarterInt.from_fraction(Fraction(9, 2))
    assert m.quarters == 18
    assert m.value == Fraction(9, 2)
    assert not m.is_integer and m.is_half_integer
    assert QuarterInt(8).is_integer
    with pytest.raises(ValueError):
        QuarterInt.from_fraction(Fraction(1, 3))


def test_algebraic_root_rationality():
    assert AlgebraicRoot(Fraction(4), 2).rational_value() == 2
    assert AlgebraicRoot(Fraction(8, 27), 3).rational_value() == Fraction(2, 3)
    assert AlgebraicRoot(Fraction(8), 2).rational_value() is None
    with pytest.raises(ValueError):
        AlgebraicRoot(Fraction(-2), 2)


def test_refine_perfect_power_contains_value():
    iv = refine(AlgebraicRoot(Fraction(4), 2), 12)
    assert iv.contains(2)


def test_refine_sqrt8_bracket():
    iv = refine(AlgebraicRoot(Fraction(8), 2), 20)
    # 2828427^2 < 8 * 10^12 < 2828428^2
    assert Fraction(2828427, 10**6) < iv.hi
    assert iv.lo < Fraction(2828428, 10**6)
    assert iv.width == Fraction(1, 2**20)


def test_refine_cbrt2_exact_interval():
    # at 10 bits the certified bracket is 1290^3 < 2 * 1024^3 < 1291^3
    iv = refine(AlgebraicRoot(Fraction(2), 3), 10)
    assert iv.lo == Fraction(1290, 1024)
    assert iv.hi == Fraction(1291, 1024)


@pytest.mark.parametrize("base,k", [(2, 2), (8, 2), (2, 3), (Fraction(4, 3), 6), (32, 4)])
def test_refine_nested_and_halving(base, k):
    root = AlgebraicRoot(Fraction(base), k)
    prev = refine(root, 4)
    for bits in range(5, 40):
        cur = refine(root, bits)
        assert prev.encloses(cur)
        assert cur.width * 2 <= prev.width * 2  # width 2^-bits halves exactly
        assert cur.width == Fraction(1, 2**bits)
        prev = cur


def test_interval_arithmetic():
    a = DyadicInterval(Fraction(1, 2), Fraction(3, 4))
    b = DyadicInterval(Fraction(-1, 4), Fraction(1, 8))
    s = a + b
    assert s.lo == Fraction(1, 4) and s.hi == Fraction(7, 8)
    p = a * b
    assert p.lo == Fraction(-3, 16) and p.hi == Fraction(3, 32)
    sq = (a - a) ** 2
    assert sq.contains(0)
    assert (-a).hi == -Fraction(1, 2)
    assert a.half_shift(1).lo == Fraction(1, 4)
