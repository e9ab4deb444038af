from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, FrozenSet, Optional

from dapoly.semilattice_error import UnknownFlatError


@dataclass(frozen=True)
class Flat:
    """
        An element of the intersection semilattice.

        :param id: integer handle, unique within its semilattice.
        :param dim: dimension of the flat, 0 <= dim <= ambient dimension.
        :param support: indices of every arrangement element containing the flat
        (empty for the top flat and for abstract input).
        :param payload: canonical equation system for representable input.
    """

    id: int
    dim: int
    support: FrozenSet[int] = frozenset()
    payload: Optional[Any] = field(default=None, compare=False)


class Semilattice:
    """
        A finite meet semilattice of flats ordered by reverse inclusion:
        X <= Y iff Y is contained in X. The top flat T is the minimum.

        Instances handed out by ``validate_semilattice`` carry the reflexive
        transitive closure in ``leq`` and are never mutated afterwards; the
        Möbius table is filled once on first access.
    """

    def __init__(self, *, ambient_dim, flats, leq):
        self.ambient_dim = ambient_dim
        self.flats = tuple(flats)
        self.leq = frozenset((x, y) for x, y in leq)
        self.rank_of = {flat.id: ambient_dim - flat.dim for flat in self.flats}
        self._by_id = {flat.id: flat for flat in self.flats}

    def __len__(self):
        return len(self.flats)

    def __iter__(self):
        return iter(self.flats)

    def __contains__(self, flat_id):
        return flat_id in self._by_id

    def flat(self, flat_id):
        try:
            return self._by_id[flat_id]
        except KeyError:
            raise UnknownFlatError(f"No flat with id {flat_id}")

    def ids(self):
        return sorted(self._by_id)

    def is_leq(self, x, y):
        return (x, y) in self.leq

    def above(self, flat_id):
        """Ids Y with flat_id <= Y, the flat itself included."""

        self.flat(flat_id)
        return self._above.get(flat_id, frozenset())

    def below(self, flat_id):
        """Ids Y with Y <= flat_id, the flat itself included."""

        self.flat(flat_id)
        return self._below.get(flat_id, frozenset())

    @cached_property
    def top(self):
        minimal = [x for x in self.ids() if self._below.get(x, frozenset()) <= {x}]
        return minimal[0] if len(minimal) == 1 else None

    @cached_property
    def rank(self):
        """rk A: the largest rank present."""

        return max(self.rank_of.values(), default=0)

    @cached_property
    def mobius_table(self):
        return MobiusTable.of(self)

    @cached_property
    def _above(self):
        index = {}
        for x, y in self.leq:
            index.setdefault(x, set()).add(y)
        return {key: frozenset(value) for key, value in index.items()}

    @cached_property
    def _below(self):
        index = {}
        for x, y in self.leq:
            index.setdefault(y, set()).add(x)
        return {key: frozenset(value) for key, value in index.items()}


class MobiusTable:
    """
        mu(X, Y) for every comparable pair X <= Y; incomparable pairs read as 0.
    """

    def __init__(self, entries):
        self.entries = dict(entries)

    def __getitem__(self, pair):
        return self.entries.get(pair, 0)

    def __len__(self):
        return len(self.entries)

    def row(self, source):
        return {y: value for (x, y), value in self.entries.items() if x == source}

    @classmethod
    def of(cls, semilattice):
        entries = {}

        # rows for distinct sources are independent of one another
        for source in semilattice.ids():
            for (x, y), value in _mobius_row(semilattice, source).items():
                entries[(x, y)] = value

        return cls(entries)


def _mobius_row(semilattice, source):
    # mu(X, Y) = -sum of mu(X, Z) over X <= Z < Y, visited in increasing rank
    row = {}
    upper = sorted(
        semilattice.above(source), key=lambda y: (semilattice.rank_of[y], y)
    )

    for y in upper:
        if y == source:
            row[y] = 1
            continue
        row[y] = -sum(
            row[z] for z in semilattice.below(y) if z != y and z in row
        )

    return {(source, y): value for y, value in row.items()}
