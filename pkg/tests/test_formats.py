import json

import pytest
from hypothesis import given, settings, strategies as st

from hopfeq import formats
from hopfeq.catalog import example, quantum_plane, tk_bialgebra
from hopfeq.frt import build_br
from hopfeq.kernel import GF, QQ
from hopfeq.pairing import check_hopf_function
from hopfeq.tensorlab import endo_from_matrix


@pytest.mark.parametrize(
    "text,expected",
    [("Q", QQ), ("QQ", QQ), ("GF(5)", GF(5)), ({"GF": 3}, GF(3)), (7, GF(7))],
)
def test_parse_field(text, expected):
    assert formats.parse_field(text) == expected


@pytest.mark.parametrize("bad", ["GF(4)", "R", {"GF": "x"}, None])
def test_parse_field_rejects(bad):
    with pytest.raises(formats.FormatError):
        formats.parse_field(bad)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5).map(str) | st.sampled_from(["1/2", "-3/4"]), min_size=4, max_size=4), min_size=4, max_size=4))
def test_matrix_round_trip(rows):
    r = endo_from_matrix(QQ, 2, [[QQ(c) for c in row] for row in rows])
    d = json.loads(json.dumps(formats.matrix_to_json(r)))
    assert formats.matrix_from_json(d) == r


def test_matrix_errors_name_the_location():
    with pytest.raises(formats.FormatError, match="matrix"):
        formats.matrix_from_json({"field": "Q", "n": 2, "matrix": [["1"]]})
    with pytest.raises(formats.FormatError, match="n"):
        formats.matrix_from_json({"field": "Q", "matrix": []})
    with pytest.raises(formats.FormatError):
        formats.matrix_from_json({"field": {"GF": 2}, "n": 1, "matrix": [["1/2"]]})


def test_load_json_reports_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"field": "Q",\n "n": }')
    with pytest.raises(formats.FormatError, match="line 2"):
        formats.load_json(p)


@pytest.mark.parametrize(
    "host",
    [tk_bialgebra(QQ), example("fk").bialgebra, quantum_plane(2), build_br(endo_from_matrix(GF(2), 2, [[1, 0, 0, 0], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))],
    ids=["T(k)", "F(k)", "quantum plane", "B(R)"],
)
def test_bialgebra_round_trip(host):
    d = json.loads(formats.dumps(formats.bialgebra_to_json(host)))
    again = formats.bialgebra_from_json(d)
    assert formats.bialgebra_to_json(again) == d
    assert again.check_axioms().status == host.check_axioms().status


def test_sigma_round_trip():
    b = example("fk")
    s = b.sigma()
    d = json.loads(formats.dumps(formats.sigma_to_json(s)))
    again = formats.sigma_from_json(b.bialgebra, d)
    assert again.table == s.table
    assert check_hopf_function(again).passed


def test_sigma_rejects_unknown_names():
    b = example("tk")
    with pytest.raises(formats.FormatError):
        formats.sigma_from_json(b.bialgebra, {"C": ["w"], "table": {"w": {"x": "1"}}})


def test_element_from_json():
    T = tk_bialgebra(QQ)
    R = formats.element_from_json(T, {"A": ["x"], "terms": [{"a": ["x"], "h": "1"}]})
    assert R.tensor == T.tensor(T.gen("x"), T.one())
    with pytest.raises(formats.FormatError):
        formats.element_from_json(T, {"A": ["x"], "terms": [{"a": ["z"], "h": "1"}]})
