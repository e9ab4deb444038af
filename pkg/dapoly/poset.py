import logging

import networkx as nx

from dapoly.bi_polynomial import BiPolynomial
from dapoly.negative_coefficient_error import NegativeCoefficientError
from dapoly.semilattice import Semilattice
from dapoly.semilattice_error import (
    MissingMeetError,
    NoMinimumError,
    NotAPartialOrderError,
    RankViolationError,
    SemilatticeError,
    UnknownFlatError,
)

logger = logging.getLogger(__name__)


def validate_semilattice(candidate):
    """
        Check a candidate semilattice and return it with the order closed.

        :param candidate: a Semilattice whose ``leq`` lists X <= Y pairs,
        not necessarily transitively closed.

        Raises NoMinimumError, NotAPartialOrderError, MissingMeetError,
        RankViolationError or UnknownFlatError; otherwise returns a new
        Semilattice carrying the reflexive transitive closure.
    """

    if not candidate.flats:
        raise NoMinimumError("A semilattice needs at least the top flat")

    if candidate.ambient_dim < 0:
        raise RankViolationError(f"Negative ambient dimension {candidate.ambient_dim}")

    ids = [flat.id for flat in candidate.flats]
    if len(set(ids)) != len(ids):
        raise SemilatticeError("Flat ids must be unique")

    for flat in candidate.flats:
        if not 0 <= flat.dim <= candidate.ambient_dim:
            raise RankViolationError(
                f"Flat {flat.id} has dim {flat.dim} outside [0, {candidate.ambient_dim}]"
            )

    graph = nx.DiGraph()
    graph.add_nodes_from(ids)
    for x, y in candidate.leq:
        if x not in candidate or y not in candidate:
            raise UnknownFlatError(f"Order pair ({x}, {y}) names an unknown flat")
        if x != y:
            graph.add_edge(x, y)

    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        raise NotAPartialOrderError(f"Order relation has a cycle: {cycle}")

    closure = nx.transitive_closure_dag(graph)
    leq = set(closure.edges()) | {(x, x) for x in ids}

    minimal = sorted(x for x in ids if closure.in_degree(x) == 0)
    if len(minimal) != 1:
        raise NoMinimumError(f"Expected a unique minimum, found {minimal}")

    top = candidate.flat(minimal[0])
    if top.dim != candidate.ambient_dim:
        raise RankViolationError(
            f"Minimum flat {top.id} has dim {top.dim}, expected {candidate.ambient_dim}"
        )

    semilattice = Semilattice(
        ambient_dim=candidate.ambient_dim, flats=candidate.flats, leq=leq
    )

    for x, y in closure.edges():
        if semilattice.rank_of[x] >= semilattice.rank_of[y]:
            raise RankViolationError(
                f"Flat {x} < flat {y} but rk {semilattice.rank_of[x]} >= rk {semilattice.rank_of[y]}"
            )

    _check_meets(semilattice)

    logger.debug(
        "validated semilattice: %d flats, %d order pairs, rank %d",
        len(semilattice),
        len(leq),
        semilattice.rank,
    )

    return semilattice


def mobius(semilattice, x, y):
    """
        mu(X, Y) from the semilattice's Möbius table; 0 when X is not <= Y.
    """

    semilattice.flat(x)
    semilattice.flat(y)

    return semilattice.mobius_table[(x, y)]


def mobius_polynomial(semilattice):
    """
        M(x, y) = sum of mu(X, Y) x^rk(X) y^(rk A - rk Y) over comparable pairs.
    """

    rank = semilattice.rank
    terms = {}

    for (x, y), value in semilattice.mobius_table.entries.items():
        key = (semilattice.rank_of[x], rank - semilattice.rank_of[y])
        terms[key] = terms.get(key, 0) + value

    return BiPolynomial(terms)


def f_from_mobius(polynomial, rank):
    """
        f(x) = (-1)^rk A * M(-x, -1).

        Raises NegativeCoefficientError when a coefficient comes out negative:
        face counts cannot be, so the input was not the Möbius polynomial of an
        arrangement.
    """

    terms = {}
    for (i, j), coeff in polynomial.terms.items():
        sign = -1 if (i + j + rank) % 2 else 1
        terms[(i, 0)] = terms.get((i, 0), 0) + sign * coeff

    f_polynomial = BiPolynomial(terms)

    negative = {i: c for (i, _), c in f_polynomial.terms.items() if c < 0}
    if negative:
        raise NegativeCoefficientError(
            f"f-polynomial {f_polynomial} has negative coefficients at x^{sorted(negative)}"
        )

    return f_polynomial


def f_vector_from_polynomial(f_polynomial, ambient_dim):
    return [f_polynomial.coefficient(ambient_dim - i) for i in range(ambient_dim + 1)]


def flat_chamber_counts(semilattice):
    """
        Number of chambers of the restriction to each flat X:
        the sum of (-1)^(rk Y - rk X) mu(X, Y) over Y >= X.
    """

    counts = {x: 0 for x in semilattice.ids()}

    for (x, y), value in semilattice.mobius_table.entries.items():
        sign = -1 if (semilattice.rank_of[y] - semilattice.rank_of[x]) % 2 else 1
        counts[x] += sign * value

    return counts


def f_vector_from_semilattice(semilattice):
    """
        [f_0, ..., f_n]: every i-face is a chamber of exactly one i-flat.
    """

    f_vector = [0] * (semilattice.ambient_dim + 1)

    for flat_id, count in flat_chamber_counts(semilattice).items():
        f_vector[semilattice.flat(flat_id).dim] += count

    return f_vector


def chamber_count(semilattice):
    top = semilattice.top
    table = semilattice.mobius_table

    return sum(
        (-1 if semilattice.rank_of[x] % 2 else 1) * table[(top, x)]
        for x in semilattice.ids()
    )


def euler_characteristic(f_vector):
    return sum((-1) ** i * count for i, count in enumerate(f_vector))


def upper_set(semilattice, flat_id):
    """
        The sub-semilattice {Y >= X} re-rooted at X, living in dimension dim X.
    """

    root = semilattice.flat(flat_id)
    members = semilattice.above(flat_id)

    return Semilattice(
        ambient_dim=root.dim,
        flats=[flat for flat in semilattice.flats if flat.id in members],
        leq=[(x, y) for (x, y) in semilattice.leq if x in members and y in members],
    )


def _check_meets(semilattice):
    ids = semilattice.ids()

    for index, x in enumerate(ids):
        for y in ids[index + 1:]:
            lower = semilattice.below(x) & semilattice.below(y)
            greatest = max(lower, key=lambda z: (semilattice.rank_of[z], z))
            if not lower <= semilattice.below(greatest):
                raise MissingMeetError(f"Flats {x} and {y} have no greatest lower bound")
