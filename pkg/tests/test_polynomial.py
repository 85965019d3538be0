import json

import pytest
from hypothesis import given, strategies as st

from compstats.errors import CapVarMismatch, InexactDivision, NonConvergent
from compstats.polynomial import (
    Poly,
    Series,
    divexact,
    geometric_series,
    monomial_exponents,
    monomial_key,
    p,
    q,
    t,
)


@st.composite
def small_polys(draw):
    n_terms = draw(st.integers(0, 5))
    terms = {}
    for _ in range(n_terms):
        key = monomial_key({
            "p": draw(st.integers(0, 4)),
            "q": draw(st.integers(0, 4)),
        })
        terms[key] = draw(st.integers(-5, 5))
    return Poly(terms)


def test_zero_terms_are_dropped():
    assert Poly({monomial_key({"p": 1}): 0}) == Poly.zero()
    assert not Poly.zero()
    assert (1 + p * q) + (-1) == p * q


def test_addition_identity_and_cancellation():
    x = 1 + 2 * p + q
    assert x + Poly.zero() == x
    assert x - x == Poly.zero()


def test_addition_coefficientwise():
    # oracle: add coefficients of equal monomials directly
    a = (p + p ** 2) * q
    assert a + a == 2 * p * q + 2 * p ** 2 * q


def test_multiplication_examples():
    assert (1 + q) * (1 - q) == 1 - q ** 2
    x = 3 * p * q ** 2 + 7
    assert x * Poly.one() == x
    assert (1 + p * q) * (1 + p * q) == 1 + 2 * p * q + p ** 2 * q ** 2


@given(small_polys(), small_polys(), small_polys())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_pow_matches_repeated_multiplication():
    base = 1 - q
    power = Poly.one()
    for exponent in range(6):
        assert base ** exponent == power
        power = power * base


def test_coeff_lookup():
    x = 1 + p * q
    assert x.coeff(p=1, q=1) == 1
    assert x.coeff(p=1) == 0
    assert x.coeff() == 1


def test_eval_at_one():
    assert (1 + p * q).eval_at_one("p") == 1 + q
    assert (p ** 2 * q + p * q).eval_at_one("p") == 2 * q


def test_rename_swap_and_collision():
    x = p ** 2 * q
    assert x.rename({"p": "t"}) == t ** 2 * q
    assert x.rename({"p": "q", "q": "p"}) == q ** 2 * p
    with pytest.raises(ValueError):
        x.rename({"p": "q"})


def test_truncate():
    x = 1 + p + p ** 2 * q + p ** 3
    assert x.truncate({"p": 2}) == 1 + p + p ** 2 * q
    assert x.truncate({"p": 2, "q": 0}) == 1 + p


def test_degree():
    assert (1 + p ** 3 * q).degree("p") == 3
    assert (1 + p ** 3 * q).degree("t") == 0
    assert Poly.zero().degree("p") == -1


def test_str_rendering():
    assert str(Poly.zero()) == "0"
    assert str(1 + p * q) == "1 + p q"
    assert str(1 - q - q ** 2 + q ** 3) == "1 - q - q^2 + q^3"
    assert str(-2 * p ** 2) == "-2 p^2"


def test_terms_in_graded_lex_order():
    x = p ** 2 + q ** 3 + p * q + 1
    degrees = [sum(key) for key, _ in x.terms()]
    assert degrees == sorted(degrees)


def test_json_round_trip():
    x = 1 + 2 * p * q - 3 * q ** 4
    data = json.loads(json.dumps(x.to_json_obj()))
    assert Poly.from_json_obj(data) == x
    assert data[0] == {"exponents": {}, "coefficient": "1"}


def test_monomial_key_validation():
    with pytest.raises(ValueError):
        monomial_key({"x": 1})
    with pytest.raises(ValueError):
        monomial_key({"p": -1})
    assert monomial_exponents(monomial_key({"p": 2, "t": 1})) == {"p": 2, "t": 1}


# ---------------------------------------------------------------------------
# Series
# ---------------------------------------------------------------------------

def test_series_truncates_on_construction():
    s = Series(1 + p + p ** 3, "p", 2)
    assert s.body == 1 + p


def test_series_mul_truncates():
    a = Series(1 + p + p ** 2, "p", 2)
    b = Series(1 + p, "p", 2)
    assert (a * b).body == 1 + 2 * p + 2 * p ** 2


def test_series_mul_identity_and_kill():
    x = Series(1 + p + p ** 2 * q, "p", 2)
    assert x * Series.one("p", 5) == Series(x.body, "p", 2)
    zero = Series(p, "p", 1) * Series(p, "p", 1)
    assert zero.body == Poly.zero()


def test_series_cap_var_mismatch():
    with pytest.raises(CapVarMismatch):
        Series.one("p", 3) * Series.one("q", 3)
    with pytest.raises(CapVarMismatch):
        Series.one("p", 3) + Series.one("q", 3)


def test_series_result_cap_is_minimum():
    a = Series(1 + p + p ** 2 + p ** 3, "p", 3)
    b = Series(Poly.one(), "p", 2)
    assert (a * b).cap == 2
    assert (a * b).body == 1 + p + p ** 2


@given(small_polys(), small_polys(), st.integers(0, 6))
def test_series_mul_equals_truncated_poly_mul(a, b, cap):
    product = (Series(a, "p", cap) * Series(b, "p", cap)).body
    assert product == (a * b).truncate({"p": cap})


def test_geometric_series_examples():
    assert geometric_series({"p": 1}, "p", 3).body == 1 + p + p ** 2 + p ** 3
    assert geometric_series({"p": 2}, "p", 3).body == 1 + p ** 2
    expected = 1 + p * q + p ** 2 * q ** 2
    assert geometric_series({"p": 1, "q": 1}, "p", 2).body == expected


def test_geometric_series_nonconvergent():
    with pytest.raises(NonConvergent):
        geometric_series({"q": 1}, "p", 3)


@given(st.integers(1, 3), st.integers(0, 2), st.integers(0, 8))
def test_geometric_series_inverts_one_minus_m(step, qexp, cap):
    m = {"p": step, "q": qexp}
    series = geometric_series(m, "p", cap)
    one_minus = Series(1 - Poly.term(m), "p", cap)
    assert (series * one_minus) == Series.one("p", cap)


# ---------------------------------------------------------------------------
# divexact
# ---------------------------------------------------------------------------

def test_divexact_basic():
    num = (1 + q) * (1 + q + q ** 2)
    assert divexact(num, 1 + q, "q") == 1 + q + q ** 2
    assert divexact(Poly.zero(), 1 + q, "q") == Poly.zero()


def test_divexact_sign_and_scale():
    num = 2 * (1 - q) * (1 + 3 * q)
    assert divexact(num, Poly.constant(2) * (1 - q), "q") == 1 + 3 * q


def test_divexact_rejects_inexact():
    with pytest.raises(InexactDivision):
        divexact(1 + q ** 2, 1 + q, "q")
    with pytest.raises(InexactDivision):
        divexact(q, q ** 2, "q")


def test_divexact_rejects_multivariate():
    with pytest.raises(ValueError):
        divexact(p * q, q, "q")
