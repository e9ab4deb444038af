from dapoly.input_error import ParseError


class BiPolynomial:
    """
        Integer polynomial in x and y, stored as a map
        (x exponent, y exponent) -> coefficient with no zero coefficients.

        Univariate polynomials in x (the f-polynomial) are BiPolynomials whose
        y exponents are all zero.
    """

    def __init__(self, terms=None):
        canonical = {}

        for (i, j), coeff in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"Negative exponent in term x^{i}y^{j}")
            canonical[(int(i), int(j))] = canonical.get((int(i), int(j)), 0) + int(coeff)

        self.terms = {key: value for key, value in canonical.items() if value != 0}

    @classmethod
    def univariate(cls, coefficients):
        """
            :param coefficients: list where entry k is the coefficient of x^k.
        """

        return cls({(k, 0): c for k, c in enumerate(coefficients)})

    def coefficient(self, x_exp, y_exp=0):
        return self.terms.get((x_exp, y_exp), 0)

    def is_univariate(self):
        return all(j == 0 for (_, j) in self.terms)

    def degree(self):
        return max((i for (i, _) in self.terms), default=0)

    def evaluate(self, x, y=0):
        return sum(c * x ** i * y ** j for (i, j), c in self.terms.items())

    def __add__(self, other):
        merged = dict(self.terms)
        for key, value in other.terms.items():
            merged[key] = merged.get(key, 0) + value
        return BiPolynomial(merged)

    def __eq__(self, other):
        return isinstance(other, BiPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"BiPolynomial({str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"

        pieces = []
        for index, ((i, j), coeff) in enumerate(self.sorted_terms()):
            monomial = _monomial(i, j)
            magnitude = abs(coeff)
            body = monomial if magnitude == 1 and monomial else f"{magnitude}{monomial}"

            if index == 0:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")

        return " ".join(pieces)

    def sorted_terms(self):
        # descending total degree, then descending x exponent
        return sorted(
            self.terms.items(),
            key=lambda item: (-(item[0][0] + item[0][1]), -item[0][0]),
        )

    def to_json(self):
        return {
            "terms": [
                {"x": i, "y": j, "coeff": str(coeff)}
                for (i, j), coeff in self.sorted_terms()
            ],
            "string": str(self),
        }

    @classmethod
    def from_json(cls, document):
        try:
            return cls(
                {
                    (int(term["x"]), int(term["y"])): int(term["coeff"])
                    for term in document["terms"]
                }
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"Malformed polynomial: {e}")


def _monomial(i, j):
    x_part = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
    y_part = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
    return f"{x_part}{y_part}"
