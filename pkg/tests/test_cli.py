from dapoly import verifier
from dapoly.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from faker import Faker
from tests.arrangements import fixture_path
from dataclasses import replace
import json
import pytest

fake = Faker()


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# mobius
@pytest.mark.parametrize(
    "name, expected",
    [
        ("empty.json", "1"),
        ("axes.json", "x^2 + 2xy + y^2 - 2x - 2y + 1"),
        ("concurrent_lines.json", "x^2 + 3xy + y^2 - 3x - 3y + 2"),
        ("semilattice_axes.json", "x^2 + 2xy + y^2 - 2x - 2y + 1"),
        ("wiring_triple.json", "x^2 + 3xy + y^2 - 3x - 3y + 2"),
    ],
)
def test_mobius(capsys, name, expected):
    code, out, _ = run(capsys, "mobius", fixture_path(name))

    assert code == EXIT_OK
    assert out.strip() == expected


def test_mobius_json(capsys):
    code, out, _ = run(capsys, "mobius", fixture_path("axes.json"), "--json")
    payload = json.loads(out)

    assert code == EXIT_OK
    assert payload["rank"] == 2
    assert {"x": 1, "y": 1, "coeff": "2"} in payload["terms"]


# fpoly
def test_fpoly_generic_lines(capsys):
    code, out, _ = run(capsys, "fpoly", fixture_path("generic_lines.json"))

    assert code == EXIT_OK
    assert out.strip() == "3x^2 + 9x + 7"


def test_fpoly_abstract_semilattice(capsys):
    code, out, _ = run(capsys, "fpoly", fixture_path("example_semilattice.json"), "--json")
    payload = json.loads(out)

    assert code == EXIT_OK
    assert payload["string"] == "5x^2 + 20x + 16"
    assert payload["f_vector"] == [5, 20, 16]


# faces
def test_faces_json(capsys):
    code, out, _ = run(capsys, "faces", fixture_path("axes.json"), "--json")
    payload = json.loads(out)

    assert code == EXIT_OK
    assert payload["f_vector"] == [1, 4, 4]
    assert len(payload["faces"]) == 9
    assert payload["faces"][0] == {"signs": "00", "dim": 0, "flat": 3}


def test_faces_of_wiring(capsys):
    code, out, _ = run(capsys, "faces", fixture_path("wiring_triple.json"), "--json")

    assert code == EXIT_OK
    assert json.loads(out)["f_vector"] == [1, 6, 6]


def test_faces_text(capsys):
    code, out, _ = run(capsys, "faces", fixture_path("empty.json"))

    assert code == EXIT_OK
    assert out.splitlines() == ["f_vector: [0, 0, 1]", ".  dim 2  flat 0"]


def test_faces_of_semilattice_is_refused(capsys):
    code, out, err = run(capsys, "faces", fixture_path("semilattice_axes.json"))

    assert code == EXIT_USAGE
    assert out == ""
    assert err.startswith("error: ")


def test_faces_cap(capsys):
    code, _, err = run(capsys, "faces", fixture_path("planes_3d.json"), "--cap", "3")

    assert code == EXIT_USAGE
    assert "exceed the cap of 3" in err


# verify
def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", fixture_path("planes_3d.json"), "--json")
    payload = json.loads(out)

    assert code == EXIT_OK
    assert payload["match"] is True
    assert payload["f_vector_direct"] == [4, 18, 28, 15]


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", fixture_path("wiring_generic.json"))

    assert code == EXIT_OK
    assert "f-vector direct:   [3, 9, 7]" in out
    assert "match:             True" in out


def test_verify_semilattice_is_refused(capsys):
    code, _, err = run(capsys, "verify", fixture_path("example_semilattice.json"))

    assert code == EXIT_USAGE
    assert "semilattice" in err


@pytest.mark.parametrize(
    "match, euler_check, line",
    [
        (False, True, "match:             False"),
        (True, False, "euler check:       False"),
    ],
)
def test_verify_reports_disagreement(capsys, monkeypatch, match, euler_check, line):
    certify = verifier.call

    def disagreeing(document, *, cap):
        return replace(certify(document, cap=cap), match=match, euler_check=euler_check)

    monkeypatch.setattr(verifier, "call", disagreeing)

    code, out, _ = run(capsys, "verify", fixture_path("axes.json"))

    assert code == EXIT_MISMATCH
    assert EXIT_MISMATCH not in (EXIT_OK, EXIT_USAGE)
    assert line in out


def test_verify_json_reports_disagreement(capsys, monkeypatch):
    certify = verifier.call
    monkeypatch.setattr(
        verifier, "call", lambda document, *, cap: replace(certify(document, cap=cap), match=False)
    )

    code, out, _ = run(capsys, "verify", fixture_path("wiring_triple.json"), "--json")

    assert code == EXIT_MISMATCH
    assert json.loads(out)["match"] is False


# gen
def test_gen_is_deterministic(capsys):
    seed = str(fake.random_int(min=0, max=99_999))

    first = run(capsys, "gen", "--kind", "hyperplanes", "--seed", seed, "--count", "5")
    second = run(capsys, "gen", "--kind", "hyperplanes", "--seed", seed, "--count", "5")

    assert first == second
    assert len(json.loads(first[1])["hyperplanes"]) == 5


@pytest.mark.parametrize(
    "args",
    [
        ["--kind", "hyperplanes", "--dim", "3", "--count", "5"],
        ["--kind", "wiring", "--wires", "6"],
        ["--kind", "wiring", "--wires", "4", "--crossings", "3"],
    ],
)
def test_gen_output_verifies(capsys, tmp_path, args):
    code, out, _ = run(capsys, "gen", "--seed", "2024", *args)
    path = tmp_path / "generated.json"
    path.write_text(out)

    assert code == EXIT_OK
    assert run(capsys, "verify", str(path))[0] == EXIT_OK


# errors
@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["mobius"],
        ["gen", "--seed", "1"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


@pytest.mark.parametrize(
    "argv, message",
    [
        (["gen", "--kind", "polytope", "--seed", "1"], "--kind must be"),
        (["gen", "--kind", "wiring", "--seed", "one"], "--seed expects an integer"),
        (["faces", fixture_path("axes.json"), "--cap", "many"], "--cap expects an integer"),
        (["mobius", "/nonexistent/arrangement.json"], "Cannot read"),
    ],
)
def test_reported_errors(capsys, argv, message):
    code, _, err = run(capsys, *argv)

    assert code == EXIT_USAGE
    assert message in err


def test_undecodable_file_is_a_parse_error(capsys, tmp_path):
    path = tmp_path / "latin1.json"
    path.write_bytes(b'{"kind": "wiring", "wires": 2, "x": "\xff"}')

    code, out, err = run(capsys, "mobius", str(path))

    assert code == EXIT_USAGE
    assert out == ""
    assert "not UTF-8" in err
