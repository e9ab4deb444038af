import json
from dataclasses import dataclass
from typing import Any

from dapoly.hyperplane_arrangement import Arrangement, Hyperplane
from dapoly.input_error import ParseError
from dapoly.poset import validate_semilattice
from dapoly.rational_matrix import format_rational, to_rational
from dapoly.semilattice import Flat, Semilattice
from dapoly.wiring_diagram import CrossingEvent, WiringDiagram, validate_wiring

KINDS = ("hyperplanes", "wiring", "semilattice")


@dataclass(frozen=True)
class InputDocument:
    """
        A self-describing input: ``kind`` is one of "hyperplanes", "wiring",
        "semilattice" and ``payload`` the validated Arrangement,
        WiringDiagram or Semilattice.
    """

    kind: str
    payload: Any


def load_document(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise ParseError(f"Cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise ParseError(f"{path} is not valid JSON: {e}")
    except UnicodeDecodeError as e:
        raise ParseError(f"{path} is not UTF-8 text: {e}")

    return parse_document(data)


def parse_document(data):
    """
        Validate a decoded JSON document and build its payload.

        Shape errors raise ParseError; the payload's own validator raises the
        domain errors (duplicate hyperplanes, repeated crossings, missing meets...).
    """

    if not isinstance(data, dict) or data.get("kind") not in KINDS:
        raise ParseError(f"Document must be an object with kind in {KINDS}")

    kind = data["kind"]

    try:
        if kind == "hyperplanes":
            payload = _parse_hyperplanes(data)
        elif kind == "wiring":
            payload = _parse_wiring(data)
        else:
            payload = _parse_semilattice(data)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"Malformed {kind} document: {e}")

    return InputDocument(kind, payload)


def dump_document(document):
    payload = document.payload

    if document.kind == "hyperplanes":
        return {
            "kind": "hyperplanes",
            "ambient_dim": payload.ambient_dim,
            "hyperplanes": [
                {
                    "normal": [format_rational(entry) for entry in hyperplane.normal],
                    "offset": format_rational(hyperplane.offset),
                }
                for hyperplane in payload.hyperplanes
            ],
        }

    if document.kind == "wiring":
        return {
            "kind": "wiring",
            "wires": payload.wires,
            "events": [{"top": event.top, "size": event.size} for event in payload.events],
        }

    return {
        "kind": "semilattice",
        "ambient_dim": payload.ambient_dim,
        "flats": [{"id": flat.id, "dim": flat.dim} for flat in payload.flats],
        "leq": [list(pair) for pair in sorted(payload.leq) if pair[0] != pair[1]],
    }


def _parse_hyperplanes(data):
    ambient_dim = _integer(data["ambient_dim"], "ambient_dim")
    if ambient_dim < 1:
        raise ValueError("ambient_dim must be at least 1")

    hyperplanes = [
        Hyperplane.of(
            [to_rational(entry) for entry in item["normal"]],
            to_rational(item["offset"]),
        )
        for item in data["hyperplanes"]
    ]

    return Arrangement.of(ambient_dim, hyperplanes)


def _parse_wiring(data):
    events = tuple(
        CrossingEvent(_integer(item["top"], "top"), _integer(item.get("size", 2), "size"))
        for item in data.get("events", [])
    )

    return validate_wiring(WiringDiagram(_integer(data["wires"], "wires"), events))


def _parse_semilattice(data):
    ambient_dim = _integer(data["ambient_dim"], "ambient_dim")
    if ambient_dim < 1:
        raise ValueError("ambient_dim must be at least 1")

    flats = [
        Flat(id=_integer(item["id"], "id"), dim=_integer(item["dim"], "dim"))
        for item in data["flats"]
    ]
    leq = [(_integer(x, "leq"), _integer(y, "leq")) for x, y in data.get("leq", [])]

    return validate_semilattice(Semilattice(ambient_dim=ambient_dim, flats=flats, leq=leq))


def _integer(value, name):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    return value
