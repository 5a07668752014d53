import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from trisolve.intcore import (
    OO,
    divisors_k,
    exact_iroot,
    factorize,
    in_divisor_set,
    is_probable_prime,
    rational_root_d,
    solve_univariate,
    valuation,
    valuation_or_infinity,
    valuation_split,
)


def test_factorize_basic():
    f = factorize(12)
    assert f.sign == 1 and f.factors == ((2, 2), (3, 1))
    assert factorize(-1) == factorize(-1)
    assert factorize(-1).sign == -1 and factorize(-1).factors == ()
    assert factorize(-8).value() == -8


def test_factorize_fermat_number():
    f = factorize(2**64 + 1)
    assert f.factors == ((274177, 1), (67280421310721, 1))
    assert all(is_probable_prime(p) for p, _ in f.factors)
    assert f.value() == 2**64 + 1


def test_factorize_zero_rejected():
    with pytest.raises(ValueError):
        factorize(0)


@given(st.integers(min_value=-10**6, max_value=10**6).filter(lambda n: n != 0))
def test_factorize_reconstructs(n):
    assert factorize(n).value() == n


def test_valuation():
    assert valuation(12, 2) == 2
    assert valuation(12, 5) == 0
    assert valuation(-8, 2) == 3
    assert valuation_or_infinity(0, 7) is OO
    with pytest.raises(ValueError):
        valuation(0, 2)


def test_infinity_ordering():
    assert OO > 10**100
    assert not (OO < 5)
    assert min(3, OO) == 3
    assert OO == OO and OO != 0


def test_divisors_k_examples():
    assert divisors_k(6, 1) == [-6, -3, -2, -1, 1, 2, 3, 6]
    assert divisors_k(12, 2) == [-2, -1, 1, 2]
    assert divisors_k(7, 3) == [-1, 1]


def test_divisors_k_exhaustive_small():
    rng = random.Random(0)
    for _ in range(200):
        m = rng.randint(1, 10**4) * rng.choice([1, -1])
        k = rng.randint(1, 5)
        expected = [z for z in range(-abs(m), abs(m) + 1)
                    if z != 0 and m % z**k == 0]
        assert divisors_k(m, k) == expected


def test_in_divisor_set_conventions():
    assert in_divisor_set(3, 6, 1)
    assert not in_divisor_set(4, 6, 1)
    assert not in_divisor_set(0, 6, 1)
    assert in_divisor_set(17, 0, 2)  # D_k(0) is all nonzero z
    assert not in_divisor_set(0, 0, 1)


def test_rational_root_d():
    assert rational_root_d(Fraction(9, 4), 2) == Fraction(3, 2)
    assert rational_root_d(Fraction(8, 27), 3) == Fraction(2, 3)
    assert rational_root_d(Fraction(2), 2) is None
    assert rational_root_d(Fraction(-8), 3) == Fraction(-2)
    assert rational_root_d(Fraction(-4), 2) is None


@given(st.fractions(min_value=Fraction(-50), max_value=Fraction(50),
                    max_denominator=20).filter(lambda r: r != 0),
       st.integers(min_value=1, max_value=5))
def test_rational_root_roundtrip(s, d):
    r = s**d
    root = rational_root_d(r, d)
    assert root is not None
    assert root**d == r


def test_exact_iroot():
    assert exact_iroot(32, 5) == 2
    assert exact_iroot(-32, 5) == -2
    assert exact_iroot(-4, 2) is None
    assert exact_iroot(10**30, 3) == 10**10
    assert exact_iroot(10**30 + 1, 3) is None


def test_valuation_split_examples():
    assert valuation_split(4, -6, 2, 2) == ("bc", 1)
    assert valuation_split(1, 1, -2, 2) == ("ab", 0)
    assert valuation_split(9, -3, -6, 3) == ("bc", 1)
    assert valuation_split(2, 2, -4, 2) == ("ab", 1)
    assert valuation_split(0, 5, -5, 5) == ("bc", 1)
    assert valuation_split(3, 3, -6, 5) == ("abc", 0)


def test_valuation_split_property_bulk():
    # the two smallest valuations of a zero-sum triple are equal
    rng = random.Random(123)
    primes = [2, 3, 5, 7, 11]
    for _ in range(100_000):
        a = rng.randint(-3000, 3000)
        b = rng.randint(-3000, 3000)
        c = -a - b
        if a == 0 and b == 0:
            continue
        p = rng.choice(primes)
        tag, lo = valuation_split(a, b, c, p)
        vals = sorted(v for v in (valuation_or_infinity(a, p),
                                  valuation_or_infinity(b, p),
                                  valuation_or_infinity(c, p))
                      if v is not OO) or [OO]
        assert lo == vals[0]


def test_solve_univariate():
    ints, rats = solve_univariate([2, -3, 1])  # x^2-3x+2
    assert ints == [1, 2]
    ints, rats = solve_univariate([-3, 2])  # 2x-3
    assert ints == [] and rats == [Fraction(3, 2)]
    ints, rats = solve_univariate([1, 1, 1])  # t^2+t+1
    assert ints == [] and rats == []
    ints, rats = solve_univariate([0, 0, 5])  # 5x^2
    assert ints == [0]
    with pytest.raises(ValueError):
        solve_univariate([0, 0])


@given(st.lists(st.integers(min_value=-8, max_value=8), min_size=1, max_size=5))
@settings(max_examples=200)
def test_solve_univariate_vs_sweep(coeffs):
    if all(c == 0 for c in coeffs):
        return
    ints, _ = solve_univariate(coeffs)
    sweep = [x for x in range(-100, 101)
             if sum(c * x**i for i, c in enumerate(coeffs)) == 0]
    assert ints == sweep
