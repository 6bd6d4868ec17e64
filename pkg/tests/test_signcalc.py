import random

import pytest
from hypothesis import given, strategies as st

from e6chev.signcalc import (
    ONE, VARIABLES, MonomialParseError, SignMonomial, all_positive, evaluate,
    format_monomial, mul, parse_monomial, random_assignment, read_assignment,
)

monomials = st.builds(SignMonomial, st.sampled_from((1, -1)), st.integers(0, 2 ** 30 - 1))
assignments = st.fixed_dictionaries({v: st.sampled_from((1, -1)) for v in VARIABLES})


def v(name):
    return SignMonomial.var(name)


def test_thirty_distinct_variables():
    assert len(VARIABLES) == len(set(VARIABLES)) == 30
    assert "a0" in VARIABLES and "a10" not in VARIABLES


def test_mul_examples():
    assert mul(v("a1"), v("a2") * v("b1")) == parse_monomial("a1*a2*b1")
    assert mul(v("a1"), v("a1")) == ONE
    assert mul(-v("b5"), -(v("a1") * v("a6"))) == parse_monomial("a1*a6*b5")


def test_evaluate_examples():
    assert evaluate(parse_monomial("-a1*a6*b5"), all_positive()) == -1
    assert evaluate(ONE, all_positive()) == 1
    flipped = all_positive() | {"a1": -1}
    assert evaluate(parse_monomial("a1*b2"), flipped) == -1


def test_format_and_parse_examples():
    assert format_monomial(v("a1") * v("a2") * v("b1")) == "a1*a2*b1"
    m = parse_monomial("-a6*a0*b4*b5*b7*b9*g2*g3*g5*g6*d1*d2*e2")
    assert m.sign == -1 and len(m.variables()) == 13
    assert parse_monomial("b1*a1") == parse_monomial("a1*b1")
    assert str(parse_monomial("-1")) == "-1" and str(ONE) == "1"


def test_alpha0_sorts_after_alpha9():
    assert str(v("a0") * v("a1") * v("a9")) == "a1*a9*a0"


def test_grouped_subscripts():
    assert parse_monomial("a12*b1") == parse_monomial("a1*a2*b1")
    assert parse_monomial("-a60*b4679") == parse_monomial("-a6*a0*b4*b6*b7*b9")
    assert parse_monomial("a11") == ONE


@pytest.mark.parametrize("bad", ["", "a1**b2", "x1", "g7", "a1*", "2"])
def test_parse_errors_name_the_token(bad):
    with pytest.raises(MonomialParseError, match="bad factor"):
        parse_monomial(bad)


def test_pretty_groups_subscripts():
    assert parse_monomial("-a1*a6*b5").pretty() == "-α_{16}β_5"


def test_read_assignment_defaults_to_plus_one(tmp_path):
    path = tmp_path / "signs.csv"
    path.write_text("var,value\na1,-1\ng3,-1\n")
    signs = read_assignment(path)
    assert signs["a1"] == signs["g3"] == -1
    assert sum(1 for x in signs.values() if x == 1) == 28


def test_random_assignment_is_seeded():
    assert random_assignment(random.Random(5)) == random_assignment(random.Random(5))


@given(monomials)
def test_square_is_one(m):
    assert m * m == ONE


@given(monomials, monomials, assignments)
def test_evaluate_is_a_homomorphism(x, y, a):
    assert evaluate(x * y, a) == evaluate(x, a) * evaluate(y, a)


@given(monomials)
def test_parse_format_round_trip(m):
    assert parse_monomial(format_monomial(m)) == m
