import json

import pytest
import sympy
from hypothesis import given, strategies as st

from daisycube.poly import (
    BiPoly,
    RationalSeries,
    UniPoly,
    binomial,
    poly_from_dict,
    poly_from_json,
    series_coefficients,
    substitute_neg,
    substitute_shift,
    substitute_sum,
    substitute_univariate_shift,
    swap_vars,
)

X, Y = sympy.symbols("x y")
x, y = BiPoly.x(), BiPoly.y()
z = UniPoly.x()

small_ints = st.integers(-50, 50)
unipolys = st.dictionaries(st.integers(0, 6), small_ints, max_size=6).map(UniPoly)
bipolys = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), small_ints, max_size=8).map(BiPoly)


def to_sympy(p):
    if isinstance(p, UniPoly):
        return sum((c * X**k for k, c in p.coeffs.items()), sympy.Integer(0))
    return sum((c * X**k * Y**d for (k, d), c in p.coeffs.items()), sympy.Integer(0))


def from_sympy(expr):
    poly = sympy.Poly(sympy.expand(expr), X, Y)
    return BiPoly({m: int(c) for m, c in poly.terms()})


def test_arithmetic_examples():
    assert (2 + z) * (2 + z) == UniPoly([4, 4, 1])
    assert UniPoly([7, 9, 3]).evaluate(-1) == 1
    p = UniPoly([1, -2, 0, 5])
    assert p + 0 == p and p + UniPoly() == p
    assert (1 + x + y) ** 2 == BiPoly({(0, 0): 1, (1, 0): 2, (0, 1): 2, (2, 0): 1, (1, 1): 2, (0, 2): 1})


@given(unipolys, unipolys, unipolys)
def test_unipoly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert to_sympy(a * b).expand() == (to_sympy(a) * to_sympy(b)).expand()


@given(bipolys, bipolys, st.integers(-4, 4), st.integers(-4, 4))
def test_bipoly_evaluation_is_a_ring_map(a, b, u, v):
    assert (a * b).evaluate(u, v) == a.evaluate(u, v) * b.evaluate(u, v)
    assert (a + b).evaluate(u, v) == a.evaluate(u, v) + b.evaluate(u, v)


def test_no_zero_coefficients_stored():
    p = UniPoly({0: 1, 3: 0}) + UniPoly({0: -1})
    assert p.coeffs == {} and p.degree == -1 and not p
    assert (x - x).coeffs == {}


def test_substitute_shift_examples():
    assert substitute_shift(2 + z, -1) == 1 + x + y
    q3 = BiPoly({(0, 0): 1, (1, 0): 3, (0, 1): 3, (2, 0): 3, (1, 1): 6, (0, 2): 3})
    assert substitute_shift(UniPoly([7, 9, 3]), -1) == q3
    assert substitute_shift(UniPoly(5), -1) == 5


@given(unipolys, st.integers(-3, 3))
def test_substitute_shift_against_sympy(C, a):
    expected = from_sympy(to_sympy(C).subs(X, X + Y + a))
    assert substitute_shift(C, a) == expected


@given(unipolys)
def test_substitute_shift_then_y_equals_one(C):
    assert substitute_shift(C, -1).at_y(1) == C


def test_substitute_univariate_shift_examples():
    assert substitute_univariate_shift(UniPoly([1, 3, 3])) == UniPoly([7, 9, 3])
    for n in range(8):
        assert substitute_univariate_shift((1 + z) ** n) == (2 + z) ** n
    assert substitute_univariate_shift(UniPoly(1)) == 1


@given(unipolys, st.integers(-3, 3))
def test_substitute_univariate_shift_against_sympy(W, a):
    expected = sympy.Poly(sympy.expand(to_sympy(W).subs(X, X + a)), X)
    assert substitute_univariate_shift(W, a) == UniPoly({m[0]: int(c) for m, c in expected.terms()})


def test_substitute_sum_examples():
    assert substitute_sum(UniPoly([1, 2])) == 1 + 2 * x + 2 * y
    assert substitute_sum((1 + z) ** 2) == (1 + x + y) ** 2
    assert substitute_sum(UniPoly()) == 0


@given(unipolys)
def test_substitute_sum_is_symmetric_and_matches_sympy(W):
    D = substitute_sum(W)
    assert swap_vars(D) == D
    assert D == from_sympy(to_sympy(W).subs(X, X + Y))


def test_substitute_neg_examples():
    d110 = BiPoly({(0, 0): 1, (0, 1): 2, (0, 2): 3, (0, 3): 1, (1, 0): 2, (1, 1): 4,
                   (1, 2): 3, (2, 0): 1, (2, 1): 2})
    assert substitute_neg(d110) == 1
    for n in range(6):
        assert substitute_neg((1 + x + y) ** n) == 1
    assert substitute_neg(x * y) == UniPoly({2: -1})


def test_swap_vars():
    assert swap_vars(1 + 2 * x + y) == 1 + x + 2 * y
    assert swap_vars((1 + x + y) ** 3) == (1 + x + y) ** 3


@given(bipolys)
def test_swap_is_an_involution(D):
    assert swap_vars(swap_vars(D)) == D


def test_text_format():
    d = BiPoly({(0, 0): 1, (0, 1): 3, (1, 0): 3, (0, 2): 3, (1, 1): 6, (2, 0): 3})
    assert d.to_text() == "1 + 3*y + 3*x + 3*y^2 + 6*x*y + 3*x^2"
    assert UniPoly([0, -1, 0, 2]).to_text() == "-x + 2*x^3"
    assert BiPoly({(1, 2): -3, (0, 0): -1}).to_text() == "-1 - 3*x*y^2"
    assert UniPoly().to_text() == "0"


def test_json_round_trip():
    d = BiPoly({(0, 0): 1, (2, 1): -7, (0, 3): 10**30})
    doc = json.loads(d.to_json())
    assert doc["vars"] == ["x", "y"]
    assert doc["terms"][0] == {"x": 0, "y": 0, "coeff": "1"}
    assert poly_from_json(d.to_json()) == d
    w = UniPoly([1, 0, 3])
    assert w.to_dict() == {"vars": ["x"], "terms": [{"x": 0, "coeff": "1"}, {"x": 2, "coeff": "3"}]}
    assert poly_from_dict(w.to_dict()) == w
    with pytest.raises(ValueError):
        poly_from_dict({"vars": ["z"], "terms": []})


def test_coefficients_are_exact_big_integers():
    p = (2 + z) ** 80
    assert p[40] == binomial(80, 40) * 2**40
    assert p.evaluate(-1) == 1


def test_binomial_convention():
    assert binomial(5, 2) == 10
    assert binomial(2, 5) == 0
    assert binomial(-1, 0) == 0
    assert binomial(3, -1) == 0


def test_series_hypercube():
    s = 1 + x + y
    h = RationalSeries([1], [1, -s])
    coeffs = series_coefficients(h, 5)
    assert coeffs[3] == s**3
    assert all(c == s**i for i, c in enumerate(coeffs))


def test_series_lucas_by_long_division():
    # 1 + s z^2 = (1 - z - s z^2)(a0 + a1 z + a2 z^2 + ...): a0 = 1, a1 = 1, a2 = 1 + 2s
    s = x + y
    h = RationalSeries([1, 0, s], [1, -1, -s])
    a = series_coefficients(h, 2)
    assert a == [1, 1, 1 + 2 * s]


def test_series_constant_term_and_errors():
    S = RationalSeries([UniPoly([3, 1]), 2], [1, z])
    assert series_coefficients(S, 0) == [UniPoly([3, 1])]
    assert RationalSeries([1], [-1, 1]).coefficients(3) == [-1, -1, -1, -1]
    with pytest.raises(ZeroDivisionError):
        RationalSeries([1], [0, 1])
    with pytest.raises(ValueError):
        RationalSeries([1], [2, 1])


def test_series_map_applies_substitution():
    f = RationalSeries([1, 0, z], [1, -1, -z])
    g = f.map(substitute_univariate_shift)
    assert g.coefficients(6) == [substitute_univariate_shift(c) for c in f.coefficients(6)]
