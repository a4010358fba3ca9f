import json

import pytest
from hypothesis import given, settings

from conftest import partial_graphs
from gucycles import io
from gucycles.euler import EulerTour
from gucycles.families import IsoClassCode
from gucycles.overlap_digraph import fully_compressed
from gucycles.words import PartialWord, WordError


@given(partial_graphs(max_n=8))
@settings(deadline=None)
def test_graph_json_roundtrip(g):
    text = io.dump_json(io.graph_to_json(g))
    assert io.graph_from_json(json.loads(text)) == g


def test_dump_json_layout():
    text = io.dump_json({"n": 2, "edges": [[1, 2]], "rows": [{"a": 1}, {"a": 2}]})
    assert text.splitlines()[1] == ' "n": 2,'
    assert ' "edges": [[1, 2]],' in text
    assert '  {"a": 1},' in text
    assert json.loads(text)["rows"][1] == {"a": 2}


def test_digraph_json_and_dot():
    d = fully_compressed(3)
    obj = io.digraph_to_json(d)
    assert len(obj["edges"]) == 4 and all(len(e["origin"]) == 2 for e in obj["edges"])
    dot = io.digraph_to_dot(d)
    assert dot.count("->") == 4 and "*13" in dot


def test_tour_json_roundtrip():
    t = EulerTour((3, 1, 2), 0)
    assert io.tour_from_json(io.tour_to_json(t)) == t


def test_word_files():
    w = io.read_word("# comment\ncyclic\n0001\n0111\n")
    assert w.cyclic and str(w) == "00010111"
    assert io.read_word("*01").cyclic is False
    assert io.read_word(io.write_word(PartialWord.parse("*{0,1}1", cyclic=True))).cyclic
    with pytest.raises(WordError):
        io.read_word("# nothing\n")
    with pytest.raises(WordError):
        io.read_word("linear\n")


def test_read_order_formats():
    assert io.read_order("[[1, 2]]\n0x3\n", "labeled", 3) == [1, 3]
    assert io.read_order("n3:0x1\n", "unlabeled", 3) == [IsoClassCode(3, 1)]
    assert io.read_order("2,3,1\n312\n", "permutation", 3) == [(2, 3, 1), (3, 1, 2)]
    assert io.read_order("# threshold\n01\n", "threshold", 3) == ["01"]


def test_fixtures_have_descriptions():
    names = io.fixture_names()
    assert len(names) >= 17
    for name in names:
        _, obj = io.load_fixture(name)
        assert obj["description"] and obj["family"]["kind"]
