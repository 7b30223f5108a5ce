import pytest
from hypothesis import given, strategies as st

from colored_partitions.colors import color, is_special_pair, primaries, secondaries
from colored_partitions.errors import InputError
from colored_partitions.parts import (
    Part, alpha, beta, class_gt, format_part, gg, halves, is_troublesome, make_part, merge,
    parse_part, succ, succeq, tri,
)

from conftest import P


def test_halves_even_and_odd():
    ad = color(1, 4)
    assert halves(Part(4, ad)) == (Part(2, color(4)), Part(2, color(1)))
    assert halves(Part(5, ad)) == (Part(3, color(1)), Part(2, color(4)))


def test_halves_are_consecutive_primaries():
    # upper half is the next primary part above the lower half in the chain
    for c in secondaries(5):
        for k in range(2, 30):
            x = Part(k, c)
            a, b = halves(x)
            assert a.size + b.size == k
            assert succ(a, b)
            assert {a.color.i, b.color.i} == {c.i, c.j}


def test_merge_inverts_halves():
    for c in secondaries(4):
        for k in range(2, 20):
            assert merge(*halves(Part(k, c))) == Part(k, c)


def test_merge_rejects_non_halves():
    with pytest.raises(InputError):
        merge(Part(3, color(1)), Part(1, color(2)))      # 4_ab halves are 2_b, 2_a
    with pytest.raises(InputError):
        merge(Part(2, color(1)), Part(1, color(1)))
    with pytest.raises(InputError):
        alpha(Part(3, color(2)))
    with pytest.raises(InputError):
        beta(Part(3, color(2)))


def test_succ_examples():
    a, b = color(1), color(2)
    assert succ(Part(2, a), Part(1, b))
    assert succ(Part(1, b), Part(1, a))
    assert not succ(Part(1, a), Part(1, b))
    assert not succ(Part(1, a), Part(1, a))
    assert succeq(Part(1, a), Part(1, a))


def test_tri_needs_strict_gap_between_secondaries():
    ab = color(1, 2)
    assert tri(Part(4, ab), Part(2, ab))
    assert not tri(Part(3, ab), Part(2, ab))
    # a primary part allows equality with y + 1
    a = color(1)
    assert tri(Part(2, a), Part(1, a))


def test_gg_relaxed_only_on_special_pairs():
    ad, bc, cd, ab = color(1, 4), color(2, 3), color(3, 4), color(1, 2)
    assert gg(Part(3, ad), Part(2, bc)) and not tri(Part(3, ad), Part(2, bc))
    assert gg(Part(2, cd), Part(2, ab)) and not tri(Part(2, cd), Part(2, ab))
    assert is_troublesome(Part(2, cd), Part(2, ab)) is False   # gg holds


def test_troublesome_primary_pairs():
    a, b = color(1), color(2)
    assert is_troublesome(Part(2, a), Part(1, b))
    assert not is_troublesome(Part(3, a), Part(1, b))


def test_class_order():
    assert class_gt(Part(5, color(1, 2)), Part(4, color(4, 5)))
    assert class_gt(Part(4, color(2, 3)), Part(4, color(1, 5)))
    assert not class_gt(Part(4, color(2, 3)), Part(4, color(2, 5)))


def test_shifts():
    x = Part(5, color(1, 3))
    assert x + 2 == Part(7, color(1, 3)) and x - 5 == Part(0, color(1, 3))


def test_make_part_validates():
    make_part(1, color(2))
    make_part(2, color(1, 2))
    for bad in [(0, color(1)), (1, color(1, 2)), (2.0, color(1)), (True, color(1))]:
        with pytest.raises(InputError):
            make_part(*bad)


def test_text_form():
    x = parse_part("12[ad]", 4)
    assert x == Part(12, color(1, 4))
    assert format_part(x) == "12[ad]" and format_part(x, pretty=False) == "12[a1a4]"
    assert P("3[a] 2[bc]", 4) == (Part(3, color(1)), Part(2, color(2, 3)))
    for bad in ["3", "3[e]", "x[a]", "1[ab]", "[a]"]:
        with pytest.raises(InputError):
            parse_part(bad, 4)


cols5 = st.sampled_from(primaries(5) + secondaries(5))
parts5 = st.builds(lambda k, c: Part(k + (1 if c.j else 0), c), st.integers(1, 25), cols5)


@given(parts5, parts5, parts5)
def test_relation_hierarchy(x, y, z):
    if tri(x, y):
        assert gg(x, y)
    if gg(x, y):
        assert succ(x, y)
    if succ(x, y) and succ(y, z):
        assert succ(x, z)
    if gg(x, y) and not tri(x, y):
        assert is_special_pair(x.color, y.color)


@given(parts5, parts5)
def test_succ_is_a_strict_total_order(x, y):
    assert (succ(x, y) + succ(y, x) + (x == y)) == 1


@given(st.integers(2, 200), st.sampled_from(secondaries(6)))
def test_halves_property(k, c):
    x = Part(k, c)
    a, b = alpha(x), beta(x)
    assert merge(a, b) == x
    assert not any(succ(a, Part(s, q)) and succ(Part(s, q), b)
                   for q in (color(c.i), color(c.j)) for s in range(b.size, a.size + 1))
