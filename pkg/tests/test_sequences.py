import pytest

from permstat import sequences as sq
from permstat.families import family
from permstat.perm import Permutation, statistics

TABLE1 = {
    2: [1],
    3: [1, 1],
    4: [3, 5, 1],
    5: [11, 21, 11, 1],
    6: [53, 113, 79, 19, 1],
    7: [309, 715, 589, 211, 29, 1],
    8: [2119, 5235, 4835, 2141, 461, 41, 1],
}


def test_derangement_numbers():
    assert [sq.derangement_d(n) for n in range(9)] == [1, 0, 1, 2, 9, 44, 265, 1854, 14833]
    assert sq.derangement_d(8) == sum(TABLE1[8])
    with pytest.raises(ValueError):
        sq.derangement_d(-1)


def test_dbar_examples():
    assert sq.dbar(4) == 3 == TABLE1[4][0]
    assert sq.derangement_d(6) == 5 * sq.dbar(6) == 265
    assert sq.dbar(5) == 3 * sq.dbar(4) + 2 * sq.dbar(3) == 11


@pytest.mark.parametrize("n", range(2, 9))
def test_dbar_relations(n):
    rel = sq.dbar_relations(n)
    assert all(rel.values())
    assert ("eq3" in rel) == (n >= 3)
    assert sq.dbar(n) == sq.dbar_enumerated(n)


def test_table_routes():
    assert sq.rlm_table(8) == TABLE1
    enum, cf = sq.rlm_rows_enumerated(8), sq.rlm_rows_cf(8)
    assert enum == cf
    assert enum[0] == [1]


def test_table_beyond_enumeration():
    t = sq.rlm_table(11)
    assert all(sum(t[n]) == sq.derangement_d(n) for n in t)
    with pytest.raises(ValueError):
        sq.rlm_rows_enumerated(11)


def test_d_sub2():
    assert sq.d_sub2(4) == 5 == TABLE1[4][1]
    assert sq.d_sub2(6) == 19 == TABLE1[6][3]
    assert sq.d_sub2_recurrence(TABLE1, 3)
    assert TABLE1[5][2] == TABLE1[4][1] + 6
    with pytest.raises(ValueError):
        sq.d_sub2(2)


def test_unique_derangement_with_most_minima():
    for n in range(2, 9):
        only = [s for s in family("Dn", n) if statistics(s).rlm == n - 1]
        assert only == [Permutation((n,) + tuple(range(1, n)))]


def test_csv_rendering():
    assert sq.table_csv(3) == "n,1,2\n2,1,\n3,1,1\n"


def test_all_number_checks():
    res = sq.number_checks(8)
    assert res and all(res.values()), res
