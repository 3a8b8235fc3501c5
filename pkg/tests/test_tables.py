import pytest

from lifeinfo.measures import Convention
from lifeinfo.tables import GOLDEN, all_match, compute_tables


@pytest.fixture(scope="module")
def cells():
    return {(c.table, c.measure, c.j): c for c in compute_tables()}


def test_cell_count(cells):
    expected = sum(len(v) if isinstance(v, list) else 1 for rows in GOLDEN.values() for v in rows.values())
    assert len(cells) == expected == 38


def test_table2_row(cells):
    for m, want in (("shannon", 1.5846), ("cum-residual-entropy", 1.118998), ("cum-past-entropy", 0.9975468)):
        c = cells[("table2", m, None)]
        assert c.status == "match"
        assert abs(c.computed - want) <= 1e-4


def test_four_decimal_cell(cells):
    c = cells[("table3", "residual-inaccuracy", 2)]
    assert c.tol == 1e-3
    assert c.status == "match"


def test_flagged_cell_never_fails(cells):
    c = cells[("table1", "mean-residual", 5)]
    assert c.status == "flagged"
    assert c.computed == 1.0
    assert "suspected typo" in c.note
    assert not c.counts_as_failure


def test_inadmissible_cells(cells):
    for key in (("table1", "residual-entropy", 6), ("table1", "mean-residual", 6), ("table3", "residual-inaccuracy", 4)):
        assert cells[key].status == "inadmissible"
        assert cells[key].computed is None


def test_residual_entropy_x4_by_hand(cells):
    # P̄(x_4) = 25/324 + 5/324 = 30/324; PaperInclusive sum over k = 4, 5, 6
    import math

    s = 30 / 324
    ps = (5 / 27, 25 / 324, 5 / 324)
    want = -sum(p / s * math.log(p / s) for p in ps)
    assert cells[("table1", "residual-entropy", 4)].computed == pytest.approx(want, abs=1e-14)
    assert want == pytest.approx(-0.9357332, abs=1e-7)


def test_residual_entropy_x3_published_value_not_reproduced(cells):
    # documented discrepancy: the published 1.192166 is not reproduced by any
    # summation range; the computed value is kept and the cell is a mismatch
    c = cells[("table1", "residual-entropy", 3)]
    assert c.computed == pytest.approx(0.7867012, abs=1e-7)
    assert c.status == "mismatch"


def test_only_known_mismatch(cells):
    bad = [k for k, c in cells.items() if c.counts_as_failure]
    assert bad == [("table1", "residual-entropy", 3)]
    assert not all_match(cells.values())


def test_proper_convention_breaks_inclusive_cells():
    cells = {(c.table, c.measure, c.j): c for c in compute_tables(Convention.PROPER)}
    assert cells[("table1", "residual-entropy", 5)].status == "mismatch"
    assert cells[("table1", "past-entropy", 3)].status == "match"
