import logging
from dataclasses import dataclass
from typing import List

from dapoly.bi_polynomial import BiPolynomial
from dapoly.face_enumerator import DEFAULT_HYPERPLANE_CAP, enumerate_faces
from dapoly.hyperplane_arrangement import build_lattice
from dapoly.input_error import UnsupportedKindError
from dapoly.poset import (
    euler_characteristic,
    f_from_mobius,
    f_vector_from_polynomial,
    mobius_polynomial,
)
from dapoly.wiring_diagram import lattice_from_wiring, sweep_faces

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerifyReport:
    """
        Both sides of the face-count theorem for one arrangement.

        ``match`` holds iff the f-polynomial coefficients predicted from the
        Möbius polynomial equal the directly enumerated face counts.
    """

    mobius_poly: BiPolynomial
    f_poly_theorem: BiPolynomial
    f_vector_theorem: List[int]
    f_vector_direct: List[int]
    euler_check: bool
    match: bool

    def to_json(self):
        return {
            "mobius_poly": self.mobius_poly.to_json(),
            "f_poly_theorem": self.f_poly_theorem.to_json(),
            "f_vector_theorem": list(self.f_vector_theorem),
            "f_vector_direct": list(self.f_vector_direct),
            "euler_check": self.euler_check,
            "match": self.match,
        }


def semilattice_of(document):
    if document.kind == "hyperplanes":
        return build_lattice(document.payload)
    if document.kind == "wiring":
        return lattice_from_wiring(document.payload)
    return document.payload


def faces_of(document, *, cap=DEFAULT_HYPERPLANE_CAP, lattice=None):
    """
        Directly enumerated faces: the sign-vector oracle for rational
        arrangements, the sweep for wiring diagrams.
    """

    if document.kind == "hyperplanes":
        return enumerate_faces(document.payload, cap=cap, lattice=lattice)
    if document.kind == "wiring":
        return sweep_faces(document.payload)

    raise UnsupportedKindError(
        "Abstract semilattices have no geometric realization to enumerate faces from"
    )


def call(document, *, cap=DEFAULT_HYPERPLANE_CAP):
    """
        Certify the face-count theorem on one realizable input.

        :param document: InputDocument of kind "hyperplanes" or "wiring".
        :param cap: hyperplane cap handed to the face enumerator.

        Returns a VerifyReport; raises UnsupportedKindError for abstract
        semilattices.
    """

    if document.kind not in ("hyperplanes", "wiring"):
        raise UnsupportedKindError(f"Cannot verify a {document.kind} document")

    semilattice = semilattice_of(document)
    n = semilattice.ambient_dim

    mobius_poly = mobius_polynomial(semilattice)
    f_poly = f_from_mobius(mobius_poly, semilattice.rank)
    f_theorem = f_vector_from_polynomial(f_poly, n)

    f_direct = [0] * (n + 1)
    for face in faces_of(document, cap=cap, lattice=semilattice):
        f_direct[face.dim] += 1

    report = VerifyReport(
        mobius_poly=mobius_poly,
        f_poly_theorem=f_poly,
        f_vector_theorem=f_theorem,
        f_vector_direct=f_direct,
        euler_check=euler_characteristic(f_direct) == (-1) ** n,
        match=f_theorem == f_direct,
    )

    logger.debug("verified %s document: theorem %s, direct %s", document.kind, f_theorem, f_direct)

    return report
