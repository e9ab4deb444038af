"""
Exact Fourier-Motzkin elimination over the rationals with strictness tracking.

A system is a list of Inequality rows ``coefficients . t < bound`` (strict) or
``coefficients . t <= bound``. Eliminating one variable pairs every row with a
positive coefficient against every row with a negative one; a combined row is
strict when either parent is. Once no variable is left, each row reads
``0 < bound`` or ``0 <= bound`` and the system is feasible iff all of them hold.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Inequality:
    coefficients: Tuple[Fraction, ...]
    bound: Fraction
    strict: bool = True

    def is_constant(self):
        return all(c == 0 for c in self.coefficients)

    def holds_trivially(self):
        return 0 < self.bound if self.strict else 0 <= self.bound

    def normalized(self):
        lead = next((abs(c) for c in self.coefficients if c != 0), None)
        if lead is None or lead == 1:
            return self
        return Inequality(
            tuple(c / lead for c in self.coefficients), self.bound / lead, self.strict
        )


def is_feasible(system, variables):
    """
        :param system: iterable of Inequality, each with ``variables`` coefficients.
        :param variables: number of unknowns.

        Returns True iff some rational point satisfies every row.
    """

    rows = _prune(system)
    if rows is None:
        return False

    for column in range(variables):
        rows = _eliminate(rows, column)
        if rows is None:
            return False

    return True


def _eliminate(rows, column):
    zero, positive, negative = [], [], []
    for row in rows:
        c = row.coefficients[column]
        (zero if c == 0 else positive if c > 0 else negative).append(row)

    combined = list(zero)
    for p in positive:
        for q in negative:
            scale_p = 1 / p.coefficients[column]
            scale_q = 1 / -q.coefficients[column]
            combined.append(
                Inequality(
                    tuple(
                        a * scale_p + b * scale_q
                        for a, b in zip(p.coefficients, q.coefficients)
                    ),
                    p.bound * scale_p + q.bound * scale_q,
                    p.strict or q.strict,
                )
            )

    return _prune(combined)


def _prune(rows):
    # constant rows are decided on the spot; the rest are deduplicated
    kept = {}
    for row in rows:
        if row.is_constant():
            if not row.holds_trivially():
                return None
            continue
        row = row.normalized()
        kept[row] = None

    return list(kept)
