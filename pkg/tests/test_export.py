import json

import pytest
from pydantic import ValidationError

from riordan.export import render_csv, render_matrix, render_series, render_table, table_frame
from riordan.validators import MatrixPayload, SeriesPayload
from series.power_series import PowerSeries


def test_ragged_rows_are_padded():
    frame = table_frame([[1], [1, "1/2"]])
    assert frame.shape == (2, 2)
    assert frame.iloc[0, 1] == ""


def test_csv(pascal):
    assert render_csv(pascal.prefix(3)) == "1,,\n1,1,\n1,2,1\n"
    assert render_matrix(pascal, "csv", 2) == "1,\n1,1"


def test_text_has_no_index(pascal):
    lines = render_matrix(pascal, "text", 3).splitlines()
    assert len(lines) == 3
    assert lines[2].split() == ["1", "2", "1"]


def test_json_matrix(pascal):
    data = json.loads(render_matrix(pascal, "json", 4))
    assert data["kind"] == "riordan"
    assert data["order"] == 4
    assert data["prefix"][3] == ["1", "3", "3", "1"]
    assert data["g"] == ["1", "-1", "0", "0"]


def test_json_series():
    s = PowerSeries.from_coeffs([1, "-1/3"], 3)
    assert json.loads(render_series(s, "json")) == {"kind": "series", "coeffs": ["1", "-1/3", "0"], "order": 3}
    assert render_series(s) == "1, -1/3, 0"


def test_json_table():
    data = json.loads(render_table([["DHV", 3]], "json", name="paths", columns=["word", "size"]))
    assert data == {"kind": "table", "name": "paths", "columns": ["word", "size"], "rows": [["DHV", "3"]]}


def test_unknown_format():
    with pytest.raises(ValueError):
        render_table([[1]], "xml")


def test_payload_validation():
    with pytest.raises(ValidationError):
        SeriesPayload(coeffs=["1", "2"], order=3)
    with pytest.raises(ValidationError):
        MatrixPayload(f=["1"], g=["1"], order=2, prefix=[["1"], ["1"]])
    assert MatrixPayload(f=["1"], g=["1"], order=1, prefix=[["1"]]).prefix == [[1]]
