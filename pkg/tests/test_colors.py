from itertools import product

import pytest
from hypothesis import given, strategies as st

from colored_partitions.colors import (
    MAX_COLORS, Color, all_colors, canonical_name, check_palette, color, delta,
    is_special_pair, parse_color, pretty_name, primaries, rank, secondaries,
)
from colored_partitions.errors import InputError
from colored_partitions.parts import Part, alpha, beta, gg, succ, tri


def names(cols):
    return [pretty_name(c) for c in cols]


def test_chain_for_four_colors():
    assert names(all_colors(4)) == ["ab", "ac", "ad", "a", "bc", "bd", "b", "cd", "c", "d"]


def test_chain_for_three_colors():
    assert names(all_colors(3)) == ["ab", "ac", "a", "bc", "b", "c"]


@pytest.mark.parametrize("n", range(1, 9))
def test_rank_is_position_in_chain(n):
    for pos, c in enumerate(all_colors(n)):
        assert rank(c, n) == pos


@pytest.mark.parametrize("n", range(1, 9))
def test_palette_sizes(n):
    assert len(primaries(n)) == n
    assert len(secondaries(n)) == n * (n - 1) // 2


def test_order_key_ignores_palette_size():
    # a1a2 < a1 < a2 in every palette; adding colors only inserts in between
    for n in (2, 5, 30):
        cols = all_colors(n)
        assert cols.index(color(1, 2)) < cols.index(color(1)) < cols.index(color(2))


def test_special_pairs_four_colors():
    sp = {(pretty_name(p), pretty_name(q)) for p in secondaries(4) for q in secondaries(4)
          if is_special_pair(p, q)}
    assert sp == {("ad", "bc"), ("cd", "ab")}


def test_no_special_pairs_below_four_colors():
    for n in (2, 3):
        assert not any(is_special_pair(p, q) for p in secondaries(n) for q in secondaries(n))


def test_special_pairs_count_five_colors():
    # choose four indices, two interleavings each
    sp = [(p, q) for p in secondaries(5) for q in secondaries(5) if is_special_pair(p, q)]
    assert len(sp) == 2 * 5


def _delta_oracle(p, q):
    """min k - l with beta(k_p) above alpha(l_q), by scanning sizes."""
    best = None
    for l in range(2, 8):
        for k in range(2, 20):
            if succ(beta(Part(k, p)), alpha(Part(l, q))):
                d = k - l
                best = d if best is None else min(best, d)
    return best


@pytest.mark.parametrize("n", range(2, 7))
def test_delta_matches_oracle(n):
    for p, q in product(secondaries(n), repeat=2):
        assert delta(p, q) == _delta_oracle(p, q), (p, q)


@pytest.mark.parametrize("n", range(2, 7))
def test_delta_is_gg_gap_on_secondaries(n):
    for p, q in product(secondaries(n), repeat=2):
        gap = min(k for k in range(-3, 6) if gg(Part(10 + k, p), Part(10, q)))
        assert gap == delta(p, q)


# Minimal differences for n = 4; rows/columns in chain order ab ac ad a bc bd b cd c d.
TRI_TABLE = [
    [2, 2, 2, 2, 2, 2, 2, 2, 2, 2],
    [1, 2, 2, 2, 2, 2, 2, 2, 2, 2],
    [1, 1, 2, 2, 2, 2, 2, 2, 2, 2],
    [1, 1, 1, 1, 2, 2, 2, 2, 2, 2],
    [1, 1, 1, 1, 2, 2, 2, 2, 2, 2],
    [1, 1, 1, 1, 1, 2, 2, 2, 2, 2],
    [1, 1, 1, 1, 1, 1, 1, 2, 2, 2],
    [1, 1, 1, 1, 1, 1, 1, 2, 2, 2],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 2],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
]
GG_TABLE = [row[:] for row in TRI_TABLE]
GG_TABLE[2][4] = 1      # ad over bc
GG_TABLE[7][0] = 0      # cd over ab


def min_gap_matrix(rel, n=4):
    cols = all_colors(n)
    return [[min(k for k in range(-3, 6) if rel(Part(10 + k, p), Part(10, q))) for q in cols]
            for p in cols]


def test_tri_table():
    assert min_gap_matrix(tri) == TRI_TABLE


def test_gg_table():
    assert min_gap_matrix(gg) == GG_TABLE


def test_gg_table_relaxed_entries():
    ad, bc, cd, ab = color(1, 4), color(2, 3), color(3, 4), color(1, 2)
    assert delta(ad, bc) == 1 and delta(cd, ab) == 0 and delta(ab, ab) == 2


def test_names_roundtrip():
    for c in all_colors(6):
        assert parse_color(canonical_name(c), 6) is c
        assert parse_color(pretty_name(c), 6) is c


def test_canonical_names_for_large_palettes():
    c = color(3, 40)
    assert canonical_name(c) == "a3a40" and pretty_name(c) == "a3a40"
    assert parse_color("a3a40", 40) is c


@pytest.mark.parametrize("bad", ["", "a0", "a3a2", "a2a2", "zz", "ba", "a1a9", "q", 5])
def test_parse_color_rejects(bad):
    with pytest.raises(InputError):
        parse_color(bad, 4)


@pytest.mark.parametrize("n", [0, -1, MAX_COLORS + 1, 2.0, True, "4"])
def test_palette_checked(n):
    with pytest.raises(InputError):
        check_palette(n)


def test_color_constructor_validates():
    with pytest.raises(InputError):
        Color(3, 2)
    with pytest.raises(InputError):
        Color(0)


colors_st = st.builds(lambda i, j: color(min(i, j), max(i, j)) if i != j else color(i),
                      st.integers(1, 8), st.integers(1, 8))


@given(colors_st, colors_st, colors_st)
def test_order_is_total_and_transitive(p, q, r):
    assert (p < q) + (q < p) + (p == q) == 1
    if p <= q <= r:
        assert p <= r


@given(colors_st, colors_st)
def test_special_pair_is_asymmetric(p, q):
    assert not (is_special_pair(p, q) and is_special_pair(q, p))
