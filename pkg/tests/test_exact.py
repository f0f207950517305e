from decimal import Decimal, getcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chiratio.approx import eval_decimal
from chiratio.constants import INV_PHI, chi, chi_prime, sqrt2
from chiratio.exact import (
    PHI,
    SQRT5,
    GoldenElem,
    RadicandMismatch,
    TowerElem,
    compare,
    from_json,
    golden_arith,
    golden_sqrt,
    rational_arith,
    sign,
    to_json,
    tower_arith,
    value_eq,
)
from oracles import root_decimal

BOUND = 10**6
fractions = st.builds(Fraction, st.integers(-BOUND, BOUND), st.integers(1, BOUND))
goldens = st.builds(GoldenElem, fractions, fractions)
elements = st.one_of(fractions, goldens)
positive_goldens = goldens.filter(lambda g: sign(g) > 0)


def towers():
    return st.builds(TowerElem, goldens, goldens.filter(lambda g: g != 0), positive_goldens)


# rational and golden arithmetic


def test_rational_examples():
    assert rational_arith(Fraction(1, 2), Fraction(1, 3), "add") == Fraction(5, 6)
    assert rational_arith(Fraction(3, 2), Fraction(3, 2), "sub") == 0
    with pytest.raises(ZeroDivisionError):
        rational_arith(Fraction(2), Fraction(0), "div")


def test_golden_examples():
    assert golden_arith(PHI, PHI, "mul") == GoldenElem(1, 1)
    assert golden_arith(GoldenElem(2, 1), GoldenElem(0, 1), "mul") == GoldenElem(2, 1)
    assert golden_arith(GoldenElem(1, 1), GoldenElem(1, 1), "mul") == GoldenElem(3, 2)
    with pytest.raises(ZeroDivisionError):
        golden_arith(PHI, GoldenElem(0, 0), "div")


def test_sqrt5_basis_round_trip():
    assert value_eq(GoldenElem.from_sqrt5(Fraction(1, 2), Fraction(1, 2)), PHI)
    assert PHI.to_sqrt5() == (Fraction(1, 2), Fraction(1, 2))
    assert golden_sqrt(GoldenElem(0, 5)) == SQRT5
    assert golden_sqrt(GoldenElem(1, 1)) == PHI
    assert golden_sqrt(GoldenElem(0, 2)) is None


@settings(max_examples=1000, deadline=None)
@given(elements, elements, elements)
def test_field_axioms(x, y, z):
    assert value_eq(x + y, y + x)
    assert value_eq(x * y, y * x)
    assert value_eq((x + y) + z, x + (y + z))
    assert value_eq((x * y) * z, x * (y * z))
    assert value_eq(x * (y + z), x * y + x * z)
    assert value_eq(x + (-x), 0)
    assert value_eq(x * 1, x) and value_eq(x + 0, x)
    if x != 0:
        assert value_eq(x * (1 / x), 1)


@settings(max_examples=1000, deadline=None)
@given(goldens, goldens)
def test_golden_mul_matches_numeric(x, y):
    getcontext().prec = 130
    phi = (1 + Decimal(5).sqrt()) / 2

    def num(g):
        return Decimal(g.a.numerator) / g.a.denominator * phi + Decimal(g.b.numerator) / g.b.denominator

    got = eval_decimal(golden_arith(x, y, "mul"), 100)
    assert abs(got.as_decimal() - num(x) * num(y)) <= Decimal(10) ** -100 + Decimal(10) ** -110


# towers


def test_sqrt_r_squared():
    r = GoldenElem(-2, 23)  # 22 - 2 sqrt5 in the phi-basis
    s = TowerElem(0, 1, r)
    assert tower_arith(s, s, "mul") == TowerElem(r, 0, r)


def test_chi_squared():
    c = chi()
    assert value_eq(tower_arith(c, c, "mul"), INV_PHI * c + 1)


def test_conjugate_product():
    x = TowerElem(GoldenElem(1, 2), GoldenElem(0, 3), GoldenElem(1, 6))
    prod = x * x.conjugate()
    assert prod.is_golden()
    assert prod.p == x.p * x.p - x.q * x.q * x.r


def test_mismatched_radicands():
    with pytest.raises(RadicandMismatch):
        tower_arith(chi(), chi_prime(), "add")
    # a radicand that differs by a square factor lifts
    assert value_eq(TowerElem(0, 2, 2), TowerElem(0, 1, 8))


def test_normalization():
    assert TowerElem(3, 0, 7).is_golden()
    assert TowerElem(1, 5, 0).is_golden()
    assert value_eq(TowerElem(0, 1, 4), 2)
    assert value_eq(TowerElem(0, 1, GoldenElem(1, 1)), PHI)
    with pytest.raises(ValueError):
        TowerElem(0, 1, -3)


@settings(max_examples=200, deadline=None)
@given(towers())
def test_tower_inverse(x):
    assert value_eq(tower_arith(x, tower_arith(TowerElem(1, 0, x.r), x, "div"), "mul"), 1)


# sign and equality


def test_sign_examples():
    assert sign(GoldenElem(0, 0)) == 0
    assert sign(GoldenElem(1, -1)) == 1
    assert compare(chi(), chi_prime()) == -1
    assert sign(GoldenElem(-1, 2)) == 1  # 2 - phi
    assert sign(TowerElem(GoldenElem(-1, 0), 1, 3)) == 1  # sqrt3 - phi


def test_value_eq_examples():
    assert value_eq((2 * PHI + 2) / (PHI + 1), 2)
    assert value_eq(PHI, GoldenElem(1, 0))
    assert not value_eq(chi(), chi_prime())


@settings(max_examples=300, deadline=None)
@given(st.one_of(fractions, goldens, towers()))
def test_sign_trichotomy(x):
    outcomes = [sign(x) == 0, sign(x) > 0, sign(-x) > 0]
    assert sum(outcomes) == 1


# guaranteed decimals


def test_decimal_examples():
    assert eval_decimal(PHI, 3).digits == "1.618"
    assert eval_decimal(chi(), 3).digits == "1.355"
    assert eval_decimal(chi(), 10).digits == root_decimal("chi", 10)
    assert eval_decimal(Fraction(-1, 3), 4).digits == "-0.3333"


@pytest.mark.parametrize("name,value", [("phi", PHI), ("sqrt2", sqrt2()), ("chi", chi()), ("chi_prime", chi_prime())])
def test_decimal_soundness_50_digits(name, value):
    d = eval_decimal(value, 50)
    assert d.digits == root_decimal(name, 50)
    assert d.error_bound < Fraction(1, 10**50)


# serialization


@settings(max_examples=200, deadline=None)
@given(st.one_of(fractions, goldens, towers()))
def test_json_round_trip(x):
    assert value_eq(from_json(to_json(x)), x)


def test_json_shape():
    assert to_json(Fraction(3, 4)) == {"kind": "rational", "value": "3/4"}
    assert to_json(GoldenElem(1, Fraction(-1, 2))) == {"kind": "golden", "a": "1/1", "b": "-1/2"}
    assert set(to_json(chi())) == {"kind", "p", "q", "r"}
