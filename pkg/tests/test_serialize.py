import json

import pytest

from qdecomp import serialize
from qdecomp.automorphism import Automorphism
from qdecomp.constructions import combine, p4
from qdecomp.cube import make_cycle_graph, make_graph, make_hypercube
from qdecomp.search import find_decomposition
from qdecomp.verify import Path


def round_trip(d):
    back = serialize.decomposition_from_json(json.loads(serialize.dumps(d)))
    assert back.shape == d.shape and back.provenance == d.provenance
    assert [set(p) for p in back.pieces] == [set(p) for p in d.pieces]
    assert back.verify().ok
    return back


def test_hypercube_round_trip():
    d = p4.p4_divides_qn(5)
    obj = serialize.decomposition_to_json(d)
    assert obj["host"] == {"kind": "hypercube", "dim": 5}
    assert obj["shape"] == "P4" and len(obj["pieces"]) == 20
    assert all(len(e) == 2 for piece in obj["pieces"] for e in piece)
    round_trip(d)


def test_product_host_round_trip():
    round_trip(p4.lift_p4(1))


def test_generic_host_round_trip():
    g = make_graph([10, 11, 12, 13], [(10, 11), (11, 12), (12, 13), (13, 10)])
    d = find_decomposition(g, Path(2)).witness
    back = serialize.decomposition_from_json(json.loads(serialize.dumps(d)))
    assert back.verify().ok and len(back) == 2


def test_byte_stable():
    assert serialize.dumps(combine.subcube_decomposition(2, 4)) == serialize.dumps(combine.subcube_decomposition(2, 4))


def test_bad_inputs():
    with pytest.raises(serialize.FormatError):
        serialize.decomposition_from_json({"host": {"kind": "hypercube", "dim": 3}, "pieces": [[[1, 1]]]})
    with pytest.raises(serialize.FormatError):
        serialize.decomposition_from_json({"host": {"kind": "blob"}, "pieces": []})
    with pytest.raises(serialize.FormatError):
        serialize.decomposition_from_json([])


def test_graph_json():
    for g in (make_hypercube(3), make_cycle_graph(5)):
        back = serialize.graph_from_json(serialize.graph_to_json(g))
        assert back.num_edges == g.num_edges


def test_automorphism_json():
    fs = [Automorphism(3, 0b101, (2, 3, 1)), Automorphism.identity(3)]
    obj = serialize.automorphisms_to_json(fs)
    assert obj[0] == {"comp": [1, 3], "perm": [2, 3, 1]}
    assert serialize.automorphisms_from_json(obj, 3) == fs


def test_dot_colours_by_piece():
    d = combine.subcube_decomposition(1, 2)
    dot = serialize.to_dot(d)
    assert dot.startswith("graph decomposition {")
    assert dot.count(" -- ") == 4
    for i in range(4):
        assert f'color="{serialize.PALETTE[i]}", label="{i}"' in dot
