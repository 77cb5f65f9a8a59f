import json
from fractions import Fraction
from pathlib import Path

import pandas
import pytest

from zigzag_boundary.characters.evaluators import uniform_character
from zigzag_boundary.characters.paintbox import OrientedPaintbox, RankedFrequencies
from zigzag_boundary.experiments.tables import (
    check_table,
    enumerate_table,
    heights_table,
    kernel_table,
    pmf_table,
    polya_table,
    sample_table,
    sym_table,
    trajectory_table,
    write_table,
)
from zigzag_boundary.zigzag.compositions import Composition


def test_enumerate_table():
    table = enumerate_table(4)
    assert list(table.columns) == ["composition", "word", "conjugate", "dimension"]
    assert len(table) == 8
    assert table["dimension"].sum() == 24
    assert table.iloc[0].to_dict() == {"composition": "1,1,1,1", "word": "---", "conjugate": "4", "dimension": 1}


def test_pmf_table_of_the_uniform_character():
    table = pmf_table(uniform_character(), 3).set_index("composition")
    assert set(table["p"]) == {"1/6"}
    assert table.loc["1,2", "d_p"] == "1/3"
    assert table.loc["3", "d_p"] == "1/6"
    assert table["d_p_float"].sum() == pytest.approx(1.0)


def test_sample_table(three_pieces):
    table = sample_table(three_pieces, 4, 5000, 1)
    assert list(table.columns) == ["shape", "dim", "empirical", "exact", "exact_float", "stderr"]
    assert len(table) == 8
    assert table["empirical"].sum() == pytest.approx(1.0)
    assert table["exact_float"].sum() == pytest.approx(1.0)
    assert (table["stderr"] >= 0).all()


def test_trajectory_table(single_up):
    table = trajectory_table(single_up, [2, 20], 0)
    assert table.to_dict("records") == [
        {"n": 2, "distance": "0", "distance_float": 0.0},
        {"n": 20, "distance": "0", "distance_float": 0.0},
    ]


def test_heights_table(gapped):
    table = heights_table(gapped, 6, 2)
    assert list(table.columns) == ["j", "xi", "phi_hat", "phi_limit"]
    assert table["j"].tolist() == [1, 2, 3, 4, 5, 6]
    assert ((table["phi_hat"] >= 0) & (table["phi_hat"] < 1)).all()


def test_polya_table():
    table = polya_table(Fraction(2), Fraction(3), 4, 1000, 0)
    assert table["shape"].tolist() == ["4", "1,3", "1,1,2", "1,1,1,1"]
    assert table["exact_float"].sum() == pytest.approx(1.0)
    assert table["empirical"].sum() == pytest.approx(1.0)


def test_kernel_table(empty_paintbox):
    table = kernel_table(empty_paintbox, Composition.of(1), [2, 4], 0)
    assert table["kernel"].tolist() == ["1", "1"]
    assert table["p_mu"].tolist() == ["1", "1"]


def test_check_table(three_pieces):
    table = check_table(three_pieces, 4)
    assert len(table) == 1
    summary = table.iloc[0]
    assert bool(summary["passed"])
    assert summary["checked"] == 8


def test_sym_table():
    table = sym_table(RankedFrequencies((Fraction(1),)), 3)
    assert table["h"].tolist() == ["1", "1", "1", "1"]
    assert table["p"].tolist() == ["0", "1", "1", "1"]


def test_write_csv(tmp_path: Path):
    table = pandas.DataFrame({"x": [1 / 3], "name": ["a"]})
    out = tmp_path / "table.csv"
    write_table(table, out)
    assert out.read_text(encoding="utf-8") == "x,name\n0.333333333333333,a\n"


def test_write_json(tmp_path: Path):
    out = tmp_path / "table.json"
    write_table(enumerate_table(3), out, "json")
    records = json.loads(out.read_text(encoding="utf-8"))
    assert len(records) == 4
    assert set(records[0]) == {"composition", "word", "conjugate", "dimension"}


def test_write_to_stdout(capsys):
    write_table(enumerate_table(1))
    assert capsys.readouterr().out.startswith("composition,word,conjugate,dimension\n")


def test_tables_accept_any_paintbox():
    table = sample_table(OrientedPaintbox.bi_interval(Fraction(1, 2)), 3, 200, 0)
    assert table.set_index("shape").loc["1,2", "exact"] == "1/2"
