import pytest

from cli.utils_cli import load_expected, reproduce_table
from cli.utils_cli.tables import PRINT_ATOL, TABLE_ATOL
from nonhermitian.shooting import ShootingProblem, refine


@pytest.fixture(scope="module")
def tables():
    return {n: reproduce_table(n) for n in (1, 2, 3)}


def test_default_coupling_reproduces_table1(tables):
    frame = tables[1]
    assert len(frame) == len(load_expected(1))
    assert frame["within_tol"].all(), frame.loc[~frame["within_tol"]].to_string()
    assert frame["within_print"].sum() >= 20


@pytest.mark.parametrize("n", [2, 3])
def test_other_tables_reproduced(tables, n):
    frame = tables[n]
    assert frame["within_tol"].all(), frame.loc[~frame["within_tol"]].to_string()
    assert (frame["abs_error"] <= TABLE_ATOL).all()
    assert frame["within_print"].any()


def test_print_flag_is_stricter(tables):
    for frame in tables.values():
        assert (frame["within_print"] == (frame["abs_error"] <= PRINT_ATOL)).all()
        assert not (frame["within_print"] & ~frame["within_tol"]).any()


def test_transposed_digits_are_annotated(tables):
    expected = load_expected(2)
    noted = expected.loc[expected["note"] != ""]
    assert set(noted["column"]) == {"T=4.63 N=40"}
    assert noted["value"].tolist() == [1.3291267, 1.3291267]

    frame = tables[2]
    cells = frame.loc[frame["column"] == "T=4.63 N=40"]
    assert cells["within_print"].all()
    assert cells["note"].notna().all()
    assert cells["computed_im"].abs().tolist() == pytest.approx([0.0886971] * 2, abs=1e-6)
    assert frame.loc[frame["column"] != "T=4.63 N=40", "note"].isna().all()


def test_shooting_sides_with_the_computed_value(tables):
    frame = tables[1]
    cell = frame.loc[(frame["column"] == "N=40") & (frame["state"] == 8)].iloc[0]
    assert not cell["within_print"]
    refined = refine(ShootingProblem(T=12.0, mu=1.0), cell["computed_re"])
    assert abs(refined - cell["computed_re"]) < 1e-8
    assert abs(refined - cell["expected"]) > 3e-7


def test_pair_counts_per_column(tables):
    assert set(tables[1]["pairs"]) == {3}
    per_column = tables[3].groupby("column", sort=False)["pairs"].first()
    assert per_column.to_dict() == {"T=12 mu=1": 3, "T=13 mu=1": 4, "T=12 mu=1.5": 4}
    smallest_box = tables[2].loc[tables[2]["column"] == "T=4.6182 N=40"]
    assert set(smallest_box["pairs"]) == {0}
    assert (smallest_box["computed_im"].abs() < 1e-9).all()


def test_nearest_coupling_misses_the_tables():
    frame = reproduce_table(1, coupling="nearest")
    assert not frame["within_tol"].all()


def test_unknown_table():
    with pytest.raises(FileNotFoundError):
        load_expected(4)
