from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import DATA, load, segment_sequences, strand_maps
from strandgrade import io
from strandgrade.errors import InputError, SurgeryDisconnected
from strandgrade.pmc import split_pmc
from strandgrade.strands import StrandDiagram


def roundtrip(parse, dump, doc, *extra):
    once = io.dumps(dump(parse(doc, *extra)))
    twice = io.dumps(dump(parse(io.loads(once), *extra)))
    assert once == twice
    return once


def test_pmc_roundtrip():
    assert roundtrip(io.parse_pmc, io.pmc_to_json, load("pmc_genus1.json")) == '{"matching":[1,2,1,2],"points":4}'


def test_generator_roundtrip_sorts():
    doc = {"s": [2, 1], "chords": [[2, 3], [1, 4]]}
    out = roundtrip(io.parse_generator, io.generator_to_json, doc, split_pmc(1))
    assert out == '{"chords":[[1,4],[2,3]],"s":[1,2]}'


def test_grading_roundtrip():
    assert roundtrip(io.parse_grading, io.grading_to_json, {"maslov2": -1, "alpha": [1, 0, 0]})


def test_layers_and_segments_roundtrip():
    roundtrip(io.parse_layers, io.layers_to_json, load("layers_example.json"), 4)
    roundtrip(io.parse_segments, io.segments_to_json, load("segments_example.json"))


@pytest.mark.parametrize("name", ["bigon.json", "square.json", "boundary_bigon.json", "strips_genus2.json"])
def test_diagram_roundtrip(name):
    roundtrip(io.parse_diagram, io.diagram_to_json, load(name))


def test_domain_roundtrip():
    assert roundtrip(io.parse_domain, io.domain_to_json, {"mult": [1, 0]}) == '{"mult":[1,0]}'


@given(strand_maps(max_points=8))
def test_strands_roundtrip(a):
    n, phi = a
    roundtrip(io.parse_strands, io.strands_to_json, StrandDiagram.from_map(n, phi).to_json())


@given(segment_sequences())
def test_segments_roundtrip_property(segs):
    roundtrip(io.parse_segments, io.segments_to_json, io.segments_to_json(segs))


def test_parse_error_has_position():
    with pytest.raises(InputError, match=r"<x>:2:5"):
        io.loads('{"points": 4,\n    oops}', "<x>")


def test_read_missing_file(tmp_path):
    with pytest.raises(InputError, match="cannot read"):
        io.read_json(tmp_path / "nope.json")


@pytest.mark.parametrize(
    "doc, message",
    [
        ({"matching": [1, 2, 1, 2]}, "missing key 'points'"),
        ({"points": "4", "matching": [1, 2, 1, 2]}, "expected an integer"),
        ({"points": 4, "matching": [1, 2, 1, True]}, "expected an integer"),
        ([1, 2], "expected an object"),
    ],
)
def test_schema_errors(doc, message):
    with pytest.raises(InputError, match=message):
        io.parse_pmc(doc)


def test_bad_pmc_file():
    with pytest.raises(SurgeryDisconnected):
        io.parse_pmc(io.read_json(DATA / "pmc_bad.json"))


def test_diagram_needs_pmc():
    doc = load("bigon.json")
    del doc["pmc"]
    with pytest.raises(InputError, match="no pointed matched circle"):
        io.parse_diagram(doc)
    assert io.parse_diagram(doc, split_pmc(1)).num_beta == 2
