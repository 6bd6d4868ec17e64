import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from e6chev.rootsys import (
    OPPOSITE, OrderError, UndefinedStringError, build_e6, height, neg, parse_root,
    precedes, r8_roots, root_name, simple_root,
)

E6 = build_e6()
ROOTS = st.sampled_from(E6.roots)

# Simple roots in R^8, written out independently of the library.
_H = Fraction(1, 2)
SIMPLE_R8 = {
    "a": (_H, -_H, -_H, -_H, -_H, -_H, -_H, _H),
    "b": (1, 1, 0, 0, 0, 0, 0, 0),
    "c": (-1, 1, 0, 0, 0, 0, 0, 0),
    "d": (0, -1, 1, 0, 0, 0, 0, 0),
    "e": (0, 0, -1, 1, 0, 0, 0, 0),
    "f": (0, 0, 0, -1, 1, 0, 0, 0),
}


def weyl_closure():
    """Positive roots via reflections in the simple roots, from the Gram matrix alone."""
    labels = "abcdef"
    gram = [[sum(Fraction(x) * y for x, y in zip(SIMPLE_R8[p], SIMPLE_R8[q])) for q in labels] for p in labels]
    found = {tuple(int(i == j) for j in range(6)) for i in range(6)}
    frontier = list(found)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(6):
                pairing = sum(r[j] * gram[j][i] for j in range(6))  # (r, alpha_i) * 2 / 2
                img = tuple(r[j] - (pairing if j == i else 0) for j in range(6))
                if all(x >= 0 for x in img) and any(img) and img not in found:
                    found.add(img)
                    nxt.append(img)
        frontier = nxt
    return found


def order_key(r):
    # x < y iff the first nonzero coefficient of y - x in (f, e, b, d, c, a) is positive
    return tuple(r[i] for i in (5, 4, 1, 3, 2, 0))


def test_positive_roots_match_weyl_closure():
    assert set(E6.positives) == weyl_closure()
    assert len(E6.positives) == 36 and len(E6) == 72


def test_numbering_is_the_lexicographic_order():
    assert list(E6.positives) == sorted(weyl_closure(), key=order_key)


def test_r8_realisation_agrees():
    def expand(r):
        return tuple(sum(Fraction(c) * SIMPLE_R8[lab][k] for c, lab in zip(r, "abcdef")) for k in range(8))
    assert {expand(r) for r in E6.roots} == r8_roots()


def test_table1_examples(system):
    assert system.root(1) == (1, 0, 0, 0, 0, 0) and height(system.root(1)) == 1
    assert "".join(map(str, system.root(18))) == "011210"
    assert height(system.root(18)) == 5
    assert height(system.root(36)) == 11


def test_precedes_examples():
    assert precedes(parse_root("a"), parse_root("c"))
    assert precedes((1, 1, 2, 3, 2, 1), (1, 2, 2, 3, 2, 1))
    assert not precedes(parse_root("c"), parse_root("a"))
    with pytest.raises(OrderError):
        precedes(parse_root("a"), parse_root("a"))


def test_sum_examples(system):
    a, b, c, d = (simple_root(x) for x in "abcd")
    assert system.add(a, c) == system.root(3)
    assert system.add(a, b) is None
    assert system.add(d, parse_root("-c-d")) == neg(c)
    assert system.add(a, neg(a)) is OPPOSITE and not OPPOSITE


def test_root_string_examples():
    a, b, c = (simple_root(x) for x in "abc")
    assert E6.root_string(a, c) == (0, 1)
    assert E6.root_string(a, b) == (0, 0)
    assert E6.root_string(c, parse_root("a+c")) == (1, 0)
    for bad in (a, neg(a)):
        with pytest.raises(UndefinedStringError):
            E6.root_string(a, bad)


def test_scalar_products():
    a, c, d, e = (simple_root(x) for x in "acde")
    assert E6.scalar_product(a, a) == 2
    assert E6.scalar_product(c, d) == -1
    assert E6.scalar_product(a, e) == 0


def test_index_and_make_root(system):
    for k in range(1, 37):
        assert system.index(system.root(k)) == k
        assert system.index(system.root(-k)) == -k
        assert system.root(-k) == neg(system.root(k))
    with pytest.raises(ValueError):
        system.make_root((1, -1, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        system.index((1, 1, 0, 0, 0, 0))


def test_parse_and_name_round_trip(system):
    for r in system.roots:
        assert parse_root(root_name(r)) == r
    assert parse_root("a + b + 2c + 2d + e") == (1, 1, 2, 2, 1, 0)


def test_decompositions_are_ordered_special_pairs(system):
    total = 0
    for t in system.positives:
        dec = system.decompositions(t)
        total += len(dec)
        for r, s in dec:
            assert precedes(r, s) and system.add(r, s) == t
        assert [r for r, _ in dec] == sorted((r for r, _ in dec), key=order_key)
    assert total == 120


@given(ROOTS)
def test_every_root_has_square_two_and_a_negative(r):
    assert E6.scalar_product(r, r) == 2
    assert neg(r) in E6
    assert 1 <= abs(height(r)) <= 11


@given(ROOTS, ROOTS)
def test_order_is_strict_and_total(r, s):
    if r != s:
        assert precedes(r, s) != precedes(s, r)


@given(ROOTS, ROOTS)
def test_simply_laced_strings(r, s):
    if s in (r, neg(r)):
        return
    p, q = E6.root_string(r, s)
    assert p + q <= 1  # strings of length at most 2 in a simply laced system
    if E6.add(r, s):
        assert p == 0
    assert E6.scalar_product(r, s) == p - q


def test_cartan_integers_bounded(system):
    for r, s in itertools.product(system.roots, system.simple):
        assert system.scalar_product(r, s) in (-2, -1, 0, 1, 2)
