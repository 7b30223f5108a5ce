import pytest
from hypothesis import given, settings, strategies as st

from colored_partitions.errors import InputError, InternalError
from colored_partitions.machines import (
    Triplet, check_triplets, initial_tags, phi, phi_trace, phi_triplets, psi, psi_trace,
    psi_triplets,
)
from colored_partitions.partitions import (
    color_product, enumerate_set, enumerate_upto, in_E, in_O, total,
)

from conftest import P, fixture_parts

SMALL = P("5[b] 3[d] 2[a] 1[d] 1[c] 1[b] 1[a]", 4)
SMALL_IMAGE = P("5[b] 4[ad] 3[bc] 2[ad]", 4)
BIG = P("12[a] 7[b] 6[d] 6[c] 5[a] 4[d] 4[c] 4[b] 4[a] 3[c] 1[d] 1[c] 1[b] 1[a]", 4)
BIG_IMAGE = P("14[bd] 11[a] 10[ad] 9[bc] 8[ac] 3[c] 2[cd] 2[ab]", 4)


def T(head, middle, tail, n=4):
    return Triplet(P(head, n), P(middle, n), P(tail, n))


SMALL_TRIPLETS = [
    T("", "5[b] 3[d] 2[a]", "1[d] 1[c] 1[b] 1[a]"),
    T("5[b] 4[ad]", "2[d] 1[c]", "1[b] 1[a]"),
    T("5[b] 4[ad] 3[bc]", "1[d]", "1[a]"),
    T("5[b] 4[ad] 3[bc] 2[ad]", "", ""),
]


def test_phi_small_example():
    assert phi(SMALL, 4) == SMALL_IMAGE
    assert psi(SMALL_IMAGE, 4) == SMALL


def test_phi_small_example_steps():
    tr = phi_trace(SMALL, 4)
    assert [e.kind for e in tr.events] == ["merge", "cross", "merge", "cross", "merge"]
    assert tr.counts() == {"merge": 3, "cross": 2, "split": 0}


def test_triplet_tables():
    assert phi_triplets(SMALL, 4) == SMALL_TRIPLETS
    assert psi_triplets(SMALL_IMAGE, 4) == SMALL_TRIPLETS[::-1]
    check_triplets(SMALL_TRIPLETS, 4, "phi")
    check_triplets(SMALL_TRIPLETS[::-1], 4, "psi")


def test_triplet_checker_catches_bad_tables():
    bad = list(SMALL_TRIPLETS)
    bad[1] = T("5[b] 4[ad]", "1[c] 2[d]", "1[b] 1[a]")
    with pytest.raises(InternalError):
        check_triplets(bad, 4)
    with pytest.raises(InternalError):
        check_triplets(SMALL_TRIPLETS[:-1], 4)


def test_phi_big_example():
    assert phi(BIG, 4) == BIG_IMAGE
    assert psi(BIG_IMAGE, 4) == BIG


def test_psi_six_color_examples():
    cases = {
        "4[ae] 3[cd] 3[ab]": "4[a] 2[a] 1[e] 1[d] 1[c] 1[b]",
        "4[a] 3[ae] 2[cd] 1[b]": "4[a] 2[a] 1[e] 1[d] 1[c] 1[b]",
        "4[e] 3[ef] 3[cd] 3[ab] 1[f]": "4[e] 4[f] 1[f] 1[e] 1[d] 1[c] 1[b] 1[a]",
    }
    for src, out in cases.items():
        assert psi(P(src, 6), 6) == P(out, 6)
    # psi is not injective on E and can leave O
    assert not in_O(P("4[e] 4[f]", 6), 6)


def test_psi_bridge_example():
    nu, _ = fixture_parts("bridge_six")
    want = P("12[b] 11[a] 9[f] 9[e] 9[d] 9[c] 8[e] 8[d] 8[c] 7[a] 6[f] 5[d] 5[a]", 6)
    assert psi(nu, 6) == want


def test_machines_validate_input():
    with pytest.raises(InputError):
        phi(SMALL_IMAGE, 4)
    with pytest.raises(InputError):
        psi(P("3[ad] 3[bc]", 4), 4)


def test_initial_tags_cover_half_expansion():
    assert initial_tags(BIG_IMAGE) == [1, 3, 4, 6, 8, 10, 11, 13]


@pytest.mark.parametrize("n,M", [(2, 14), (3, 12), (4, 11), (5, 9)])
def test_roundtrip_and_triplets_on_small_O(n, M):
    for lam in enumerate_upto(n, M, "O"):
        tr = phi_trace(lam, n)
        nu = tr.result
        assert in_E(nu, n)
        assert total(nu) == total(lam) and color_product(nu, n) == color_product(lam, n)
        back = psi_trace(nu, n)
        assert back.result == lam
        check_triplets(tr.triplets, n, "phi")
        assert back.triplets == tr.triplets[::-1]


def test_phi_is_injective():
    for m in range(1, 13):
        images = [phi(lam, 4) for lam in enumerate_set(4, m, "O")]
        assert len(images) == len(set(images))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_psi_preserves_size_on_E(n):
    for nu in enumerate_upto(n, 9, "E"):
        lam = psi(nu, n)
        assert total(lam) == total(nu) and color_product(lam, n) == color_product(nu, n)
        assert all(x.is_primary for x in lam)


@st.composite
def o_partitions(draw):
    n = draw(st.integers(2, 7))
    # a random set of primary parts, ordered by succ
    sizes = draw(st.lists(st.tuples(st.integers(1, 12), st.integers(1, n)),
                          max_size=12, unique=True))
    lam = tuple(sorted(P(" ".join(f"{k}[a{i}]" for k, i in sizes), n),
                       key=lambda x: (x.size, x.color.key), reverse=True))
    return lam, n


@settings(max_examples=300, deadline=None)
@given(o_partitions())
def test_roundtrip_random(case):
    lam, n = case
    nu = phi(lam, n)
    assert in_E(nu, n)
    assert psi(nu, n) == lam
