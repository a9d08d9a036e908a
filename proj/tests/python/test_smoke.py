import math

import pytest

import lucasindex as li


def test_artin_constant():
    assert abs(li.artin_constant() - 0.3739558136) < 1e-9


def test_decompose_fibonacci():
    dec = li.decompose(1, 1)
    assert dec["s"] == -1
    assert dec["h"] == 2
    assert dec["gamma0"] == {"x": "1/2", "y": "1/2", "d": 5}
    assert dec["chi"] == [(1, "1"), (2, "-1/2"), (4, "-1/4"), (20, "1/4")]


def test_gu_table_period():
    table = li.gu_table(1, 1)
    assert table["period"] == 20
    assert table["values"][0] == "3/4"
    assert table["values"][1] == "1"
    assert table["values"][10] == "1/2"


def test_delta_values():
    value, coeff = li.delta(1, 1, 1)
    assert coeff == "1"
    assert abs(value - 0.373956) < 1e-6
    value, coeff = li.delta(10, 2, 8)
    assert value == 0.0
    assert coeff == "0"


def test_delta_series_brackets_closed_form():
    value, bound = li.delta_series(1, 1, 1, 2000)
    assert abs(value - li.delta(1, 1, 1)[0]) <= bound


def test_rank_and_index():
    assert li.rank_of_appearance(1, 1, 11) == 10
    assert li.index_of_appearance(1, 1, 11) == 1
    assert li.index_of_appearance(1, 1, 29) == 2


def test_scan_partition():
    result = li.scan(1, 1, 2000, workers=2)
    assert result["prime_count"] == 2000
    assert sum(result["counts"].values()) + len(result["skipped"]) == 2000
    assert result["skipped"] == [2, 5]


def test_compare_rows():
    rows = li.compare(4, -1, t_max=6, n_primes=20000)
    assert len(rows) == 6
    for row in rows:
        if row["t"] % 2 == 1:
            assert row["delta"] == 0.0
            assert not row["flagged"]
        else:
            assert row["delta"] > 0
            assert row["error_pct"] is not None


def test_validation_error():
    with pytest.raises(Exception) as exc:
        li.decompose(2, -1)
    assert "square" in str(exc.value).lower()


def test_mass_bound():
    total = sum(li.delta_table(1, 1, 200))
    assert total < 1.0
    assert total > 0.9  # most of the mass sits at small t
