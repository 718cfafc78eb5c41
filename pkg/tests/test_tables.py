import pytest

from radialqc.errors import DomainError
from radialqc.tables import TABLE_IDS, compare_table, load_tables, recompute


@pytest.fixture(scope="module")
def tables():
    return load_tables()


def test_shape(tables):
    assert sorted(tables) == list(TABLE_IDS)
    assert all(len(rows) == 4 for rows in tables.values())
    assert [r.k for r in tables[3]] == [1, 2, 3, 4]


def test_exponents(tables):
    for tid, rows in tables.items():
        assert all(r.p == (0.5 if tid <= 4 else -0.6) for r in rows)


def test_values_are_verbatim(tables):
    first = tables[1][0]
    assert first.x == (-2.0, -2.65) and first.y == (2.65, -2.65)
    assert first.printed == {"B": 3.0496, "D": 143.4290, "M": 3.6030, "K": 2.6591}
    assert tables[3][0].x == (-2.45, -2.205)
    assert tables[6][1].printed == {"D": 3.95, "M": 1.83, "2j": 1.46}


def test_recompute_headers(tables):
    assert list(recompute(tables[5][0])) == ["2j", "D", "M"]


def test_fully_consistent_table():
    rep = compare_table(4)
    assert rep.per_header_ok and rep.multiset_ok and rep.claim_ok
    assert rep.exchanges == []


def test_exchange_detection():
    assert compare_table(1).exchanges == [("D", "K")]
    assert compare_table(2).exchanges == [("B", "D")]


def test_first_table_matches_as_multiset():
    rep = compare_table(1)
    assert rep.multiset_ok and not rep.per_header_ok
    assert rep.claim_ok_under_exchange and not rep.claim_ok


def test_rows_that_match_nothing_are_reported():
    rep = compare_table(2)
    assert [r.multiset_match for r in rep.rows] == [True, False, False, False]


def test_unknown_table():
    with pytest.raises(DomainError):
        compare_table(8)


@pytest.mark.parametrize("table_id", [1, 2])
def test_claims_hold_once_columns_are_exchanged(table_id):
    rep = compare_table(table_id)
    assert not rep.claim_ok
    assert rep.claim_ok_under_exchange


def test_later_tables_claims():
    assert compare_table(3).claim_ok
    assert compare_table(7).claim_ok
