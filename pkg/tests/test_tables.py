from fractions import Fraction

import pytest

from bornforge.tables import REPRODUCERS, case_r3_heis3, remark_r4, sweep_r3_heis3


@pytest.mark.parametrize("table", sorted(REPRODUCERS))
def test_reproduce(table):
    res = REPRODUCERS[table]()
    assert res.ok, res.diffs
    assert res.diffs == []


def test_sweep_case_split():
    res = sweep_r3_heis3([(x, 0, 0, 0) for x in range(-2, 3)])
    assert res.ok
    assert [row[-1] for row in res.rows] == ["h11", "h4", "h10", "h7", "h11"]
    res = sweep_r3_heis3([(0, y, 0, 0) for y in (1, 2)])
    assert [row[-1] for row in res.rows] == ["h13", "h13"]


def test_empty_sweep():
    res = sweep_r3_heis3([])
    assert res.rows == [] and res.ok


def test_case_labels():
    assert case_r3_heis3(Fraction(1, 2), 0) == "h11"
    assert case_r3_heis3(-1, 0) == "h4"
    assert case_r3_heis3(0, Fraction(-3)) == "h13"


@pytest.mark.parametrize("variant", ["remark", "table2"])
def test_remark_r4(variant):
    res = remark_r4(variant)
    assert res.ok, res.diffs


def test_parallel_matches_serial(monkeypatch):
    monkeypatch.setenv("BORNFORGE_JOBS", "1")
    serial = REPRODUCERS[5]()
    monkeypatch.setenv("BORNFORGE_JOBS", "3")
    parallel = REPRODUCERS[5]()
    assert serial.rows == parallel.rows


def test_h13_point_has_non_flat_g():
    from bornforge.geometry import is_flat
    from bornforge.products import bicross, family_R3_heis3

    prod = bicross(family_R3_heis3(1, 1))
    assert not is_flat(prod.algebra, prod.born.g)
    assert not is_flat(prod.algebra, prod.born.h)
