from itertools import combinations, permutations as iter_permutations
from math import comb, factorial

import pytest

from compstats.errors import OutOfRange
from compstats.polynomial import Poly, Series, q
from compstats.qanalog import (
    check_q_exponential_inverse,
    gaussian_binomial,
    pochhammer_inverse_series,
    q_factorial,
    q_int,
    q_pochhammer,
)
from compstats.statistics import inversions, major_index


def test_q_int():
    assert q_int(0) == Poly.zero()
    assert q_int(1) == Poly.one()
    assert q_int(4) == 1 + q + q ** 2 + q ** 3


def test_q_factorial_small():
    assert q_factorial(0) == Poly.one()
    assert q_factorial(2) == 1 + q
    # oracle: distribution of inversions over S_3
    expected = Poly.zero()
    for pi in iter_permutations((1, 2, 3)):
        expected = expected + Poly.variable("q", inversions(pi))
    assert expected == 1 + 2 * q + 2 * q ** 2 + q ** 3
    assert q_factorial(3) == expected


def test_q_pochhammer():
    assert q_pochhammer(0) == Poly.one()
    assert q_pochhammer(1) == 1 - q
    assert q_pochhammer(2) == (1 - q) * (1 - q ** 2)
    assert q_pochhammer(2) == 1 - q - q ** 2 + q ** 3


@pytest.mark.parametrize("n", range(13))
def test_pochhammer_factorial_identity(n):
    assert q_pochhammer(n) == q_factorial(n) * (1 - q) ** n


def _binary_word_gaussian(n, k):
    # oracle: sum q^inv over 0/1 words with k ones (inv counts 1-before-0 pairs)
    total = Poly.zero()
    for positions in combinations(range(n), k):
        word = [0] * n
        for i in positions:
            word[i] = 1
        inv = sum(1 for a in range(n) for b in range(a + 1, n)
                  if word[a] > word[b])
        total = total + Poly.variable("q", inv)
    return total


def test_gaussian_binomial_values():
    assert gaussian_binomial(5, 0) == Poly.one()
    assert gaussian_binomial(2, 1) == 1 + q
    expected = _binary_word_gaussian(4, 2)
    assert expected == 1 + q + 2 * q ** 2 + q ** 3 + q ** 4
    assert gaussian_binomial(4, 2) == expected


@pytest.mark.parametrize("n", range(7))
def test_gaussian_binomial_against_word_oracle(n):
    for k in range(n + 1):
        assert gaussian_binomial(n, k) == _binary_word_gaussian(n, k)


def test_gaussian_binomial_out_of_range():
    with pytest.raises(OutOfRange):
        gaussian_binomial(3, -1)
    with pytest.raises(OutOfRange):
        gaussian_binomial(3, 4)


def test_q_one_specializations():
    for n in range(9):
        assert q_int(n).eval_at_one("q") == Poly.constant(n)
        assert q_factorial(n).eval_at_one("q") == Poly.constant(factorial(n))
        for k in range(n + 1):
            value = gaussian_binomial(n, k).eval_at_one("q")
            assert value == Poly.constant(comb(n, k))


def test_gaussian_symmetry():
    for n in range(13):
        for k in range(n + 1):
            assert gaussian_binomial(n, k) == gaussian_binomial(n, n - k)


def test_maj_inv_equidistribution():
    # [k]_q! is both the inv and the maj generating function over S_k
    for k in range(7):
        by_inv = Poly.zero()
        by_maj = Poly.zero()
        for pi in iter_permutations(range(1, k + 1)):
            by_inv = by_inv + Poly.variable("q", inversions(pi))
            by_maj = by_maj + Poly.variable("q", major_index(pi))
        assert by_inv == q_factorial(k)
        assert by_maj == q_factorial(k)


def test_pochhammer_inverse_series():
    # coefficient of q^j in 1/(q)_n counts partitions of j into parts <= n
    series = pochhammer_inverse_series(3, "q", 8)
    assert series.coeff(q=0) == 1
    assert series.coeff(q=4) == 4   # 3+1, 2+2, 2+1+1, 1+1+1+1
    product = series * Series(q_pochhammer(3), "q", 8)
    assert product == Series.one("q", 8)


def test_q_exponential_inverse_check():
    assert check_q_exponential_inverse(1)
    # m = 2 by hand: 1 - (1+q) + q = 0
    assert Poly.one() - gaussian_binomial(2, 1) + q == Poly.zero()
    assert check_q_exponential_inverse(6)
