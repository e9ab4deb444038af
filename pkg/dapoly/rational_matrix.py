import re
from fractions import Fraction
from typing import Sequence, Tuple

RATIONAL_REGEX = r"^-?[0-9]+(/[0-9]+)?$"

RationalVector = Tuple[Fraction, ...]
RationalMatrix = Tuple[RationalVector, ...]


def to_rational(value):
    """
        Convert a JSON scalar to an exact Fraction.

        :param value: an int, a Fraction, or a string "p", "-p" or "p/q" with q > 0.
        Floats are refused: every coordinate in this package is exact.
    """

    if isinstance(value, bool):
        raise ValueError(f"Not a rational: {value!r}")

    if isinstance(value, (int, Fraction)):
        return Fraction(value)

    if not isinstance(value, str) or not re.search(RATIONAL_REGEX, value.strip()):
        raise ValueError(f"Not a rational: {value!r}")

    if "/" in value and int(value.split("/")[1]) == 0:
        raise ValueError(f"Zero denominator: {value!r}")

    return Fraction(value.strip())


def format_rational(value):
    value = Fraction(value)

    if value.denominator == 1:
        return str(value.numerator)

    return f"{value.numerator}/{value.denominator}"


def as_matrix(rows):
    return tuple(tuple(Fraction(entry) for entry in row) for row in rows)


def rref(matrix, augmented=False):
    """
        Reduced row echelon form over the rationals.

        :param matrix: sequence of equal-length rows of rationals.

        :param augmented: when True the last column is a right-hand side and is
        never chosen as a pivot column.

        Returns ``(reduced, rank)``: leading ones, zeros above and below every
        pivot, zero rows moved to the bottom, rank = number of pivots.
    """

    rows = [list(row) for row in as_matrix(matrix)]

    if not rows:
        return (), 0

    n_rows = len(rows)
    n_cols = len(rows[0])
    pivot_cols = n_cols - 1 if augmented else n_cols

    piv_r = 0
    for piv_c in range(pivot_cols):
        if piv_r == n_rows:
            break

        for i_row in range(piv_r, n_rows):
            if rows[i_row][piv_c] != 0:
                break
        else:
            continue

        rows[piv_r], rows[i_row] = rows[i_row], rows[piv_r]

        inv = 1 / rows[piv_r][piv_c]
        rows[piv_r] = [entry * inv for entry in rows[piv_r]]

        for r in range(n_rows):
            fr = rows[r][piv_c]
            if r == piv_r or fr == 0:
                continue
            rows[r] = [e - p * fr for e, p in zip(rows[r], rows[piv_r])]

        piv_r += 1

    return tuple(tuple(row) for row in rows), piv_r


def pivot_columns(reduced):
    pivots = []

    for row in reduced:
        for col, entry in enumerate(row):
            if entry != 0:
                pivots.append(col)
                break

    return pivots


def is_consistent(reduced):
    # a zero coefficient row with a nonzero right-hand side reads 0 = c
    return not any(
        all(entry == 0 for entry in row[:-1]) and row[-1] != 0
        for row in reduced
    )


def reduce_row(row, reduced):
    """
        Remainder of ``row`` after elimination against the nonzero rows of a
        reduced echelon system; zero iff ``row`` lies in their row space.
    """

    remainder = list(row)

    for pivot_row, col in zip(reduced, pivot_columns(reduced)):
        factor = remainder[col]
        if factor != 0:
            remainder = [r - factor * p for r, p in zip(remainder, pivot_row)]

    return tuple(remainder)


def in_row_space(row, reduced):
    return all(entry == 0 for entry in reduce_row(row, reduced))


def dot(left: Sequence[Fraction], right: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(left, right)), Fraction(0))
