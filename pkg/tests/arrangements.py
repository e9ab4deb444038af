from fractions import Fraction
from pathlib import Path

from dapoly.hyperplane_arrangement import Arrangement
from dapoly.input_document import load_document

FILES = Path(__file__).parent / "files"


def fixture_path(name):
    return str(FILES / name)


def load_fixture(name):
    return load_document(fixture_path(name))


def generic_lines(m):
    # tangents y = 2tx - t^2 to a parabola: no two parallel, no three concurrent
    return Arrangement.of(
        2, [((Fraction(-2 * t), 1), Fraction(-t * t)) for t in range(1, m + 1)]
    )


def axes():
    return Arrangement.of(2, [((1, 0), 0), ((0, 1), 0)])


def concurrent_lines():
    return Arrangement.of(2, [((1, 0), 0), ((0, 1), 0), ((1, -1), 0)])


def triangle_lines():
    return Arrangement.of(2, [((1, 0), 0), ((0, 1), 0), ((1, 1), 1)])
