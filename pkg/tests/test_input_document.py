from dapoly.geometry_error import DuplicateHyperplaneError
from dapoly.hyperplane_arrangement import Arrangement
from dapoly.input_document import dump_document, load_document, parse_document
from dapoly.input_error import ParseError
from dapoly.semilattice import Semilattice
from dapoly.semilattice_error import MissingMeetError
from dapoly.wiring_diagram import WiringDiagram
from dapoly.wiring_error import RepeatedCrossingError
from faker import Faker
from fractions import Fraction
from tests.arrangements import fixture_path, load_fixture
import json
import pytest

fake = Faker()


def test_load_hyperplanes():
    document = load_fixture("point_on_line.json")

    assert document.kind == "hyperplanes"
    assert isinstance(document.payload, Arrangement)
    assert document.payload.hyperplanes[0].offset == Fraction(3, 2)


def test_hyperplanes_are_stored_canonically():
    document = load_fixture("parallel_lines.json")

    assert document.payload.hyperplanes[1].normal == (1, 0)
    assert document.payload.hyperplanes[1].offset == 1


def test_load_wiring():
    document = load_fixture("wiring_generic.json")

    assert document.kind == "wiring"
    assert isinstance(document.payload, WiringDiagram)
    assert document.payload.final_permutation == (2, 1, 0)


def test_wiring_size_defaults_to_two():
    document = parse_document({"kind": "wiring", "wires": 2, "events": [{"top": 0}]})

    assert document.payload.events[0].size == 2


def test_load_semilattice():
    document = load_fixture("semilattice_axes.json")

    assert document.kind == "semilattice"
    assert isinstance(document.payload, Semilattice)
    assert document.payload.is_leq(0, 3)


def test_integer_entries_are_accepted():
    document = parse_document(
        {"kind": "hyperplanes", "ambient_dim": 2, "hyperplanes": [{"normal": [2, 0], "offset": -4}]}
    )

    assert document.payload.hyperplanes[0].offset == -2


def test_missing_file():
    missing = f"/nonexistent/{fake.file_name(extension='json')}"

    with pytest.raises(ParseError) as exception:
        load_document(missing)

    assert "Cannot read" in str(exception.value)


def test_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"kind": "hyperplanes", ')

    with pytest.raises(ParseError) as exception:
        load_document(str(path))

    assert "not valid JSON" in str(exception.value)


def test_file_that_is_not_utf8(tmp_path):
    path = tmp_path / "latin1.json"
    path.write_bytes(b'{"kind": "wiring", "wires": 2, "note": "\xff"}')

    with pytest.raises(ParseError) as exception:
        load_document(str(path))

    assert "not UTF-8" in str(exception.value)


@pytest.mark.parametrize(
    "data",
    [
        [],
        {"kind": "polytope"},
        {"ambient_dim": 2, "hyperplanes": []},
        {"kind": "hyperplanes", "hyperplanes": []},
        {"kind": "hyperplanes", "ambient_dim": 0, "hyperplanes": []},
        {"kind": "hyperplanes", "ambient_dim": "2", "hyperplanes": []},
        {"kind": "hyperplanes", "ambient_dim": 1, "hyperplanes": [{"normal": [0.5], "offset": 0}]},
        {"kind": "hyperplanes", "ambient_dim": 1, "hyperplanes": [{"normal": ["1/0"], "offset": 0}]},
        {"kind": "hyperplanes", "ambient_dim": 1, "hyperplanes": [{"normal": [True], "offset": 0}]},
        {"kind": "hyperplanes", "ambient_dim": 1, "hyperplanes": [{"offset": 0}]},
        {"kind": "wiring", "wires": 2.0},
        {"kind": "wiring", "wires": 3, "events": [{"size": 2}]},
        {"kind": "semilattice", "ambient_dim": 2, "flats": [{"id": 0}]},
        {"kind": "semilattice", "ambient_dim": 2, "flats": [{"id": 0, "dim": 2}], "leq": [[0]]},
    ],
)
def test_malformed_documents(data):
    with pytest.raises(ParseError):
        parse_document(data)


def test_domain_errors_pass_through():
    with pytest.raises(DuplicateHyperplaneError):
        parse_document(
            {
                "kind": "hyperplanes",
                "ambient_dim": 1,
                "hyperplanes": [{"normal": ["1"], "offset": "1"}, {"normal": ["3"], "offset": "3"}],
            }
        )

    with pytest.raises(RepeatedCrossingError):
        parse_document({"kind": "wiring", "wires": 2, "events": [{"top": 0}, {"top": 0}]})

    with pytest.raises(MissingMeetError):
        parse_document(
            {
                "kind": "semilattice",
                "ambient_dim": 2,
                "flats": [
                    {"id": 0, "dim": 2}, {"id": 1, "dim": 1}, {"id": 2, "dim": 1},
                    {"id": 3, "dim": 0}, {"id": 4, "dim": 0},
                ],
                "leq": [[0, 1], [0, 2], [1, 3], [2, 3], [1, 4], [2, 4]],
            }
        )


def test_dump_hyperplanes_uses_canonical_strings():
    dumped = dump_document(load_fixture("point_on_line.json"))

    assert dumped == {
        "kind": "hyperplanes",
        "ambient_dim": 1,
        "hyperplanes": [{"normal": ["1"], "offset": "3/2"}],
    }


def test_dump_wiring_matches_file():
    with open(fixture_path("wiring_generic.json")) as fh:
        raw = json.load(fh)

    assert dump_document(load_fixture("wiring_generic.json")) == raw


def test_dump_semilattice_drops_reflexive_pairs_but_keeps_closure():
    dumped = dump_document(load_fixture("semilattice_axes.json"))

    assert dumped["leq"] == [[0, 1], [0, 2], [0, 3], [1, 3], [2, 3]]
    assert parse_document(dumped).payload.leq == load_fixture("semilattice_axes.json").payload.leq
