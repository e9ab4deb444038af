import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Tuple

from dapoly.geometry_error import (
    DimensionMismatchError,
    DuplicateHyperplaneError,
    FlatNotInLatticeError,
    GeometryError,
)
from dapoly.poset import validate_semilattice
from dapoly.rational_matrix import (
    RationalMatrix,
    RationalVector,
    dot,
    in_row_space,
    is_consistent,
    pivot_columns,
    rref,
    to_rational,
)
from dapoly.semilattice import Flat, Semilattice

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Hyperplane:
    """
        The set {x : normal . x = offset}. P+ is normal . x > offset,
        P- is normal . x < offset. Always built through ``Hyperplane.of``,
        which scales the first nonzero normal entry to 1.
    """

    normal: RationalVector
    offset: Fraction

    @classmethod
    def of(cls, normal, offset):
        normal = tuple(to_rational(entry) for entry in normal)
        offset = to_rational(offset)

        lead = next((entry for entry in normal if entry != 0), None)
        if lead is None:
            raise GeometryError("Hyperplane normal must be nonzero")

        return cls(tuple(entry / lead for entry in normal), offset / lead)

    @property
    def row(self):
        return self.normal + (self.offset,)

    def side(self, point):
        value = dot(self.normal, point) - self.offset
        return "0" if value == 0 else ("+" if value > 0 else "-")


@dataclass(frozen=True)
class Arrangement:
    ambient_dim: int
    hyperplanes: Tuple[Hyperplane, ...]

    @classmethod
    def of(cls, ambient_dim, hyperplanes):
        """
            :param ambient_dim: n, the dimension of the ambient space.
            :param hyperplanes: Hyperplanes, or (normal, offset) pairs.

            Raises DimensionMismatchError or DuplicateHyperplaneError.
        """

        if ambient_dim < 0:
            raise DimensionMismatchError(f"Ambient dimension {ambient_dim} is negative")

        canonical = []
        for item in hyperplanes:
            hyperplane = item if isinstance(item, Hyperplane) else Hyperplane.of(*item)

            if len(hyperplane.normal) != ambient_dim:
                raise DimensionMismatchError(
                    f"Normal of length {len(hyperplane.normal)} in dimension {ambient_dim}"
                )
            if hyperplane in canonical:
                raise DuplicateHyperplaneError(
                    f"Hyperplane {len(canonical)} repeats hyperplane {canonical.index(hyperplane)}"
                )

            canonical.append(hyperplane)

        return cls(ambient_dim, tuple(canonical))

    def __len__(self):
        return len(self.hyperplanes)

    def subarrangement(self, indices):
        return Arrangement(self.ambient_dim, tuple(self.hyperplanes[i] for i in sorted(set(indices))))


@dataclass(frozen=True)
class AffineFlat:
    """
        A nonempty intersection of hyperplanes, identified by the nonzero rows
        of the reduced echelon form of its augmented equation system.
    """

    equations: RationalMatrix
    dim: int
    support: FrozenSet[int]

    def contains(self, other):
        """True when ``other`` is a subset of this flat."""

        return all(in_row_space(row, other.equations) for row in self.equations)


def intersect(arrangement, support):
    """
        The flat cut out by the hyperplanes in ``support``, or None when they
        have no common point.

        The returned flat's support is maximal: it lists every hyperplane of the
        arrangement containing the intersection.
    """

    support = frozenset(support)
    n = arrangement.ambient_dim

    for index in support:
        if not 0 <= index < len(arrangement):
            raise DimensionMismatchError(f"No hyperplane with index {index}")

    rows = [arrangement.hyperplanes[i].row for i in sorted(support)]
    reduced, rank = rref(rows, augmented=True)

    if not is_consistent(reduced):
        return None

    equations = tuple(row for row in reduced if any(entry != 0 for entry in row))
    maximal = frozenset(
        index
        for index, hyperplane in enumerate(arrangement.hyperplanes)
        if index in support or in_row_space(hyperplane.row, equations)
    )

    return AffineFlat(equations, n - rank, maximal)


def build_lattice(arrangement):
    """
        Intersection semilattice of a rational arrangement.

        Flats are found level by level: every flat found so far is intersected
        with each hyperplane not containing it, and new flats are deduplicated by
        their canonical equations. Ids are assigned by (rank, sorted support).
    """

    top = intersect(arrangement, ())
    found = {top.equations: top}
    frontier = [top]

    while frontier:
        following = []
        for flat in frontier:
            for index in range(len(arrangement)):
                if index in flat.support:
                    continue
                meet = intersect(arrangement, flat.support | {index})
                if meet is None or meet.equations in found:
                    continue
                found[meet.equations] = meet
                following.append(meet)
        frontier = following

    affine_flats = sorted(
        found.values(),
        key=lambda flat: (arrangement.ambient_dim - flat.dim, sorted(flat.support)),
    )
    flats = [
        Flat(id=flat_id, dim=flat.dim, support=flat.support, payload=flat)
        for flat_id, flat in enumerate(affine_flats)
    ]

    leq = []
    for x in flats:
        for y in flats:
            by_support = x.support <= y.support
            if by_support != x.payload.contains(y.payload):
                raise GeometryError(
                    f"Support order and equation order disagree on flats {x.id}, {y.id}"
                )
            if by_support:
                leq.append((x.id, y.id))

    logger.debug("built lattice: %d hyperplanes, %d flats", len(arrangement), len(flats))

    return validate_semilattice(
        Semilattice(ambient_dim=arrangement.ambient_dim, flats=flats, leq=leq)
    )


def restriction_arrangement(arrangement, flat):
    """
        The restriction A^X as an arrangement in the coordinates of X.

        Returns ``(restricted, groups)``; ``groups[k]`` lists the indices of the
        original hyperplanes whose trace on X is restricted hyperplane k.
        Hyperplanes containing X or missing it are dropped.
    """

    base, directions = parametrize(flat.equations, arrangement.ambient_dim)

    traces = []
    groups = []
    for index, hyperplane in enumerate(arrangement.hyperplanes):
        normal = tuple(dot(hyperplane.normal, direction) for direction in directions)
        offset = hyperplane.offset - dot(hyperplane.normal, base)

        if all(entry == 0 for entry in normal):
            continue

        trace = Hyperplane.of(normal, offset)
        if trace in traces:
            groups[traces.index(trace)].append(index)
        else:
            traces.append(trace)
            groups.append([index])

    restricted = Arrangement(flat.dim, tuple(traces))

    return restricted, tuple(tuple(group) for group in groups)


def restrict(arrangement, flat):
    """
        The semilattice of the restriction A^X, re-rooted at X.

        Flats of the result carry supports and payloads in the original
        arrangement, so it can be compared with ``upper_set`` directly.
        Raises FlatNotInLatticeError when X is not a flat of the arrangement.
    """

    recomputed = intersect(arrangement, flat.support) if flat.support or not flat.equations else None
    if recomputed is None or recomputed.equations != flat.equations:
        raise FlatNotInLatticeError("Flat is not an intersection of arrangement hyperplanes")

    restricted, groups = restriction_arrangement(arrangement, recomputed)
    inner = build_lattice(restricted)

    flats = []
    for inner_flat in inner.flats:
        support = set(recomputed.support)
        for k in inner_flat.support:
            support.update(groups[k])
        ambient = intersect(arrangement, support)
        flats.append(
            Flat(id=inner_flat.id, dim=ambient.dim, support=ambient.support, payload=ambient)
        )

    return Semilattice(ambient_dim=recomputed.dim, flats=flats, leq=inner.leq)


def parametrize(equations, n):
    """
        ``(base, directions)`` describing the solutions in R^n of a canonical
        system as {base + sum t_k directions[k]}; the free coordinates are the
        non-pivot columns.
    """

    pivots = pivot_columns(equations)
    free = [col for col in range(n) if col not in pivots]

    base = [Fraction(0)] * n
    for row, col in zip(equations, pivots):
        base[col] = row[-1]

    directions = []
    for free_col in free:
        direction = [Fraction(0)] * n
        direction[free_col] = Fraction(1)
        for row, col in zip(equations, pivots):
            direction[col] = -row[free_col]
        directions.append(tuple(direction))

    return tuple(base), tuple(directions)
