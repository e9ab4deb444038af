"""
Möbius polynomials, f-polynomials and face counts of hyperplane arrangements
and wiring diagrams.

Usage:
    dapoly mobius <file> [--json] [--cap M] [-v]
    dapoly fpoly <file> [--json] [--cap M] [-v]
    dapoly faces <file> [--json] [--cap M] [-v]
    dapoly verify <file> [--json] [--cap M] [-v]
    dapoly gen --kind KIND --seed S [--dim N] [--count M] [--bound B] [--wires W] [--crossings C] [-v]
    dapoly (-h | --help)

Options:
    --json              Machine-readable JSON on stdout.
    --cap M             Largest number of hyperplanes to enumerate faces for [default: 12].
    --kind KIND         Kind of instance to generate: hyperplanes or wiring.
    --seed S            Random seed; equal seeds give identical output.
    --dim N             Ambient dimension of a generated arrangement [default: 2].
    --count M           Number of generated hyperplanes [default: 4].
    --bound B           Bound on generated numerators and denominators [default: 5].
    --wires W           Number of generated wires [default: 4].
    --crossings C       Number of generated crossing events (random when omitted).
    -v, --verbose       Debug logging on stderr.
    -h, --help          Show this screen.

Exit status: 0 on success, 1 when the theorem and the direct count disagree,
2 on usage, parse or validation errors.
"""

import json
import logging
import sys

from docopt import DocoptExit, docopt

from dapoly.dapoly_error import DapolyError
from dapoly.generator import random_arrangement, random_wiring
from dapoly.input_document import dump_document, load_document
from dapoly.input_error import ParamError
from dapoly.poset import f_from_mobius, f_vector_from_polynomial, mobius_polynomial
from dapoly import verifier

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def main(argv=None):
    try:
        opts = docopt(__doc__, argv)
    except DocoptExit as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE

    if opts["--verbose"]:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr)

    try:
        if opts["gen"]:
            return cmd_gen(opts)

        document = load_document(opts["<file>"])
        cap = _integer_option(opts, "--cap")

        if opts["mobius"]:
            return cmd_mobius(document, as_json=opts["--json"])
        if opts["fpoly"]:
            return cmd_fpoly(document, as_json=opts["--json"])
        if opts["faces"]:
            return cmd_faces(document, cap=cap, as_json=opts["--json"])
        return cmd_verify(document, cap=cap, as_json=opts["--json"])
    except DapolyError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def cmd_mobius(document, *, as_json=False):
    semilattice = verifier.semilattice_of(document)
    polynomial = mobius_polynomial(semilattice)

    if as_json:
        _emit({"rank": semilattice.rank, **polynomial.to_json()})
    else:
        print(polynomial)

    return EXIT_OK


def cmd_fpoly(document, *, as_json=False):
    semilattice = verifier.semilattice_of(document)
    f_polynomial = f_from_mobius(mobius_polynomial(semilattice), semilattice.rank)

    if as_json:
        _emit(
            {
                "f_vector": f_vector_from_polynomial(f_polynomial, semilattice.ambient_dim),
                **f_polynomial.to_json(),
            }
        )
    else:
        print(f_polynomial)

    return EXIT_OK


def cmd_faces(document, *, cap, as_json=False):
    semilattice = verifier.semilattice_of(document)
    faces = verifier.faces_of(document, cap=cap, lattice=semilattice)

    f_vector = [0] * (semilattice.ambient_dim + 1)
    for face in faces:
        f_vector[face.dim] += 1

    if as_json:
        _emit({"f_vector": f_vector, "faces": [face.to_json() for face in faces]})
    else:
        print(f"f_vector: {f_vector}")
        for face in faces:
            print(f"{face.sign_vector or '.'}  dim {face.dim}  flat {face.flat_id}")

    return EXIT_OK


def cmd_verify(document, *, cap, as_json=False):
    report = verifier.call(document, cap=cap)

    if as_json:
        _emit(report.to_json())
    else:
        print(f"mobius polynomial: {report.mobius_poly}")
        print(f"f-polynomial:      {report.f_poly_theorem}")
        print(f"f-vector theorem:  {report.f_vector_theorem}")
        print(f"f-vector direct:   {report.f_vector_direct}")
        print(f"euler check:       {report.euler_check}")
        print(f"match:             {report.match}")

    return EXIT_OK if report.match and report.euler_check else EXIT_MISMATCH


def cmd_gen(opts):
    seed = _integer_option(opts, "--seed")

    if opts["--kind"] == "hyperplanes":
        document = random_arrangement(
            dim=_integer_option(opts, "--dim"),
            count=_integer_option(opts, "--count"),
            bound=_integer_option(opts, "--bound"),
            seed=seed,
        )
    elif opts["--kind"] == "wiring":
        crossings = opts["--crossings"]
        document = random_wiring(
            wires=_integer_option(opts, "--wires"),
            crossings=None if crossings is None else _integer_option(opts, "--crossings"),
            seed=seed,
        )
    else:
        raise ParamError(f"--kind must be hyperplanes or wiring, got {opts['--kind']!r}")

    _emit(dump_document(document))

    return EXIT_OK


def _integer_option(opts, name):
    try:
        return int(opts[name])
    except (TypeError, ValueError):
        raise ParamError(f"{name} expects an integer, got {opts[name]!r}")


def _emit(payload):
    print(json.dumps(payload, indent=2))


if __name__ == "__main__":
    sys.exit(main())
