import itertools
import logging
import warnings
from dataclasses import dataclass

from dapoly.cap_exceeded_error import CapExceededError
from dapoly.fourier_motzkin import Inequality, is_feasible
from dapoly.geometry_error import DimensionMismatchError
from dapoly.hyperplane_arrangement import build_lattice, intersect, parametrize
from dapoly.rational_matrix import dot

DEFAULT_HYPERPLANE_CAP = 12
SIGNS = "0+-"

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignVector:
    """
        One entry of {+, 0, -} per hyperplane, in arrangement order.
    """

    signs: str

    def __post_init__(self):
        if any(sign not in SIGNS for sign in self.signs):
            raise ValueError(f"Sign vector {self.signs!r} uses symbols outside '+0-'")

    def __len__(self):
        return len(self.signs)

    def __str__(self):
        return self.signs

    def zeros(self):
        return frozenset(i for i, sign in enumerate(self.signs) if sign == "0")

    def is_chamber(self):
        return "0" not in self.signs


@dataclass(frozen=True)
class FaceRecord:
    sign_vector: SignVector
    dim: int
    flat_id: int

    def to_json(self):
        return {"signs": str(self.sign_vector), "dim": self.dim, "flat": self.flat_id}


class FaceOracle:
    """
        Exact nonemptiness test for sign conditions on an arrangement.

        The zero entries are solved first: their flat is parametrized from its
        canonical equations, and the strict conditions are rewritten in the
        flat's own coordinates before Fourier-Motzkin elimination. Charts are
        cached per zero set.
    """

    def __init__(self, arrangement):
        self.arrangement = arrangement
        self._charts = {}

    def chart(self, zeros):
        if zeros not in self._charts:
            flat = intersect(self.arrangement, zeros)
            if flat is None:
                self._charts[zeros] = None
            else:
                base, directions = parametrize(flat.equations, self.arrangement.ambient_dim)
                self._charts[zeros] = (flat, base, directions)
        return self._charts[zeros]

    def feasible(self, signs):
        """
            :param signs: string over '+0-' covering a prefix of the hyperplanes.
        """

        chart = self.chart(frozenset(i for i, sign in enumerate(signs) if sign == "0"))
        if chart is None:
            return False

        _, base, directions = chart
        system = []
        for index, sign in enumerate(signs):
            if sign == "0":
                continue
            hyperplane = self.arrangement.hyperplanes[index]
            coefficients = tuple(dot(hyperplane.normal, d) for d in directions)
            bound = hyperplane.offset - dot(hyperplane.normal, base)
            if sign == "+":
                system.append(Inequality(tuple(-c for c in coefficients), -bound))
            else:
                system.append(Inequality(coefficients, bound))

        return is_feasible(system, len(directions))

    def extensions(self, prefix):
        """
            Signs s (in 0, +, - order) for which ``prefix + s`` is feasible,
            given that ``prefix`` is.

            The face F of a feasible prefix is convex and open in its flat X.
            If the next hyperplane contains X only 0 survives; otherwise F meets
            the hyperplane iff it has points on both sides, so at most two
            eliminations decide all three children.
        """

        flat, _, _ = self.chart(frozenset(i for i, sign in enumerate(prefix) if sign == "0"))

        if len(prefix) in flat.support:
            return ["0"]
        if self.feasible(prefix + "0"):
            return list(SIGNS)
        return ["+"] if self.feasible(prefix + "+") else ["-"]


def feasible(arrangement, sign_vector):
    """
        True iff the face with the given sign vector is nonempty.

        :param sign_vector: SignVector or string over '+0-', one entry per hyperplane.
    """

    signs = str(sign_vector)
    if len(signs) != len(arrangement):
        raise DimensionMismatchError(
            f"Sign vector of length {len(signs)} for {len(arrangement)} hyperplanes"
        )

    return FaceOracle(arrangement).feasible(signs)


def enumerate_faces(arrangement, *, cap=DEFAULT_HYPERPLANE_CAP, lattice=None):
    """
        Every face of the arrangement, each exactly once.

        Depth-first over the hyperplanes in input order, trying 0, +, - at each
        level and abandoning any prefix whose conditions are already
        unsatisfiable. Output order is lexicographic with 0 < + < -.

        :param cap: largest number of hyperplanes accepted; raise it explicitly
        for bigger inputs.
        :param lattice: the arrangement's semilattice, when already built.
    """

    _check_cap(arrangement, cap)

    flat_ids = _flat_ids(arrangement, lattice)
    oracle = FaceOracle(arrangement)
    faces = []

    def visit(prefix):
        if len(prefix) == len(arrangement):
            faces.append(_record(oracle, flat_ids, prefix))
            return
        for sign in oracle.extensions(prefix):
            visit(prefix + sign)

    visit("")

    logger.debug("enumerated %d faces over %d hyperplanes", len(faces), len(arrangement))

    return faces


def enumerate_faces_exhaustive(arrangement, *, cap=DEFAULT_HYPERPLANE_CAP, lattice=None):
    """
        Same output as ``enumerate_faces`` from a plain scan of all 3^m sign vectors.
    """

    _check_cap(arrangement, cap)

    flat_ids = _flat_ids(arrangement, lattice)
    oracle = FaceOracle(arrangement)

    return [
        _record(oracle, flat_ids, "".join(signs))
        for signs in itertools.product(SIGNS, repeat=len(arrangement))
        if oracle.feasible("".join(signs))
    ]


def f_vector_oracle(arrangement, *, cap=DEFAULT_HYPERPLANE_CAP, lattice=None):
    f_vector = [0] * (arrangement.ambient_dim + 1)

    for face in enumerate_faces(arrangement, cap=cap, lattice=lattice):
        f_vector[face.dim] += 1

    return f_vector


def chambers(arrangement, *, cap=DEFAULT_HYPERPLANE_CAP):
    return [
        face.sign_vector
        for face in enumerate_faces(arrangement, cap=cap)
        if face.sign_vector.is_chamber()
    ]


def _record(oracle, flat_ids, signs):
    flat, _, _ = oracle.chart(frozenset(i for i, sign in enumerate(signs) if sign == "0"))

    return FaceRecord(SignVector(signs), flat.dim, flat_ids[flat.equations])


def _flat_ids(arrangement, lattice):
    if lattice is None:
        lattice = build_lattice(arrangement)
    return {flat.payload.equations: flat.id for flat in lattice.flats}


def _check_cap(arrangement, cap):
    if len(arrangement) > cap:
        raise CapExceededError(
            f"{len(arrangement)} hyperplanes exceed the cap of {cap}; pass a larger cap to override"
        )

    if cap > DEFAULT_HYPERPLANE_CAP:
        warnings.warn(
            f"Hyperplane cap raised to {cap}; face enumeration grows as 3^m"
        )
