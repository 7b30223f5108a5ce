import pytest

from colored_partitions.bridge import bridge_direct, index_split
from colored_partitions.forest import (
    bridge_from_theta, dot_export, forest, forest_report, is_motzkin, motzkin_word,
    relation_violations, root_edges, theta, word_of_forest,
)
from colored_partitions.partitions import enumerate_upto

from conftest import P

FOUR = P("14[bd] 11[a] 10[ad] 9[bc] 8[ac] 3[c] 2[cd] 2[ab]", 4)


def test_theta_table():
    th = theta(FOUR, 4)
    assert list(th[1:15]) == [2, 3, 1, 5, 6, 7, 8, 4, 9, 10, 11, 12, 13, 14]


def test_word_and_forest_of_example():
    ip = index_split(FOUR, 4)
    th = theta(FOUR, 4)
    assert motzkin_word(ip, th) == "HUDUUDUDDHUDUD"
    trees = forest(ip, th)
    # the segment before the first H is empty here
    assert len(trees) == 3 and trees[0].planted and not trees[0].root.children
    assert [t.primary for t in trees] == [None, 3, 10]
    assert sum(len(t.edges()) for t in trees) == 6
    assert trees[1].edges() == [1, 8, 4, 6]
    assert trees[2].edges() == [11, 13]
    assert root_edges(trees) == [1, 8, 11, 13]
    assert word_of_forest(trees) == "HUDUUDUDDHUDUD"
    assert bridge_from_theta(ip, th) == bridge_direct(ip)


def test_planted_first_tree():
    nu = P("6[ab] 3[bc] 1[a]", 3)
    ip = index_split(nu, 3)
    trees = forest(ip, theta(nu, 3))
    assert trees[0].planted and trees[0].root.children


def test_report_and_dot():
    rep = forest_report(FOUR, 4)
    assert rep["word"] == "HUDUUDUDDHUDUD" and len(rep["trees"]) == 3
    ip = index_split(FOUR, 4)
    dot = dot_export(forest(ip, theta(FOUR, 4)), ip)
    assert dot.startswith("digraph forest {") and dot.rstrip().endswith("}")
    assert dot.count("subgraph cluster_") == 3
    assert dot.count("->") == 6 + 1          # six weighted edges plus the dashed stem
    assert "14[bd] (i=1)" in dot and "11[a] (j=3)" in dot


def test_motzkin_checker():
    assert is_motzkin("HUDH") and is_motzkin("") and is_motzkin("UUDD")
    assert not is_motzkin("DU") and not is_motzkin("UUD")


def _inversion_count_ok(ip, th):
    # theta_{i+1} - (i+1) counts the indices after i that land left of nu_i
    for i in ip.upper:
        later = [u for u in ip.upper + ip.prim if u > i and th[u] < th[i]]
        if th[i + 1] - (i + 1) != len(later):
            return False
    return True


@pytest.mark.parametrize("n,M", [(3, 12), (4, 12), (5, 10), (6, 9)])
def test_position_relations(n, M):
    for nu in enumerate_upto(n, M, "E"):
        ip = index_split(nu, n, check=False)
        th = theta(nu, n)
        assert relation_violations(ip, th) == [], nu
        w = motzkin_word(ip, th)
        assert is_motzkin(w)
        br = bridge_direct(ip)
        assert bridge_from_theta(ip, th) == br
        for i in ip.upper:
            assert (br[i] == i) == (th[i + 1] == i + 1)
        assert _inversion_count_ok(ip, th)
        trees = forest(ip, th)
        assert word_of_forest(trees) == w
        assert len(trees) == len(ip.prim) + 1
        assert sum(len(t.edges()) for t in trees) == len(ip.upper)
        # root edges close before every later upper half
        want = [i for i in ip.upper if all(th[i + 1] < th[u] for u in ip.upper if u > i)]
        assert root_edges(trees) == want
