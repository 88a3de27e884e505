import json

import numpy as np
import pytest

from radnorm.core import EdgeSet, WeightMatrix
from radnorm.matio import (
    ParseError,
    dump_json,
    edges_from_text,
    edges_to_text,
    load_input,
    load_json,
    matrix_from_text,
    matrix_to_text,
)


@pytest.fixture
def weird_matrix():
    rng = np.random.default_rng(9)
    a = rng.standard_normal((4, 3)) * np.exp(rng.uniform(-20, 20, (4, 3)))
    return WeightMatrix(a)


def test_json_matrix_round_trip(tmp_path, weird_matrix):
    path = tmp_path / "m.json"
    dump_json(weird_matrix, path)
    back = load_json(path)
    assert isinstance(back, WeightMatrix)
    assert np.array_equal(back.entries, weird_matrix.entries)


def test_json_square_uses_n(tmp_path):
    A = WeightMatrix(np.eye(3), symmetric=True)
    path = tmp_path / "m.json"
    dump_json(A, path)
    d = json.loads(path.read_text())
    assert d["n"] == 3 and d["symmetric"] is True


def test_json_edges_round_trip_one_based(tmp_path):
    E = EdgeSet(5, ((0, 1), (4, 4)))
    path = tmp_path / "e.json"
    dump_json(E, path)
    d = json.loads(path.read_text())
    assert d["pairs"] == [[1, 2], [5, 5]]
    back = load_json(path)
    assert back.pairs == E.pairs


def test_text_matrix_round_trip(weird_matrix):
    assert np.array_equal(
        matrix_from_text(matrix_to_text(weird_matrix)).entries, weird_matrix.entries
    )


def test_text_matrix_integers_bit_exact():
    A = WeightMatrix([[1, -2], [3, 4]])
    text = matrix_to_text(A)
    back = matrix_from_text(text)
    assert np.array_equal(back.entries, A.entries)


def test_text_edges_round_trip():
    E = EdgeSet(4, ((0, 1), (1, 0), (3, 3)))
    assert edges_from_text(edges_to_text(E)).pairs == E.pairs


def test_load_input_dispatch(tmp_path):
    mpath = tmp_path / "m.txt"
    mpath.write_text(matrix_to_text(WeightMatrix([[0, 1], [1, 0]])))
    assert isinstance(load_input(mpath), WeightMatrix)

    epath = tmp_path / "e.txt"
    epath.write_text(edges_to_text(EdgeSet(4, ((0, 1), (2, 3)))))
    assert isinstance(load_input(epath), EdgeSet)

    jpath = tmp_path / "e.json"
    dump_json(EdgeSet(2, ((0, 1),)), jpath)
    assert isinstance(load_input(jpath), EdgeSet)


def test_parse_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        load_input(bad)
    with pytest.raises(ParseError):
        matrix_from_text("2 2\n1 2\n")
    with pytest.raises(ParseError):
        load_json(_write(tmp_path, "noentries.json", '{"n": 2}'))
    with pytest.raises(ParseError):
        load_json(_write(tmp_path, "shape.json", '{"n": 3, "entries": [[1, 2], [3, 4]]}'))
    with pytest.raises(ParseError):
        load_json(_write(tmp_path, "range.json", '{"n": 2, "pairs": [[1, 3]]}'))


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p
