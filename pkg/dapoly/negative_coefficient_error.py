from dapoly.dapoly_error import DapolyError


class NegativeCoefficientError(DapolyError):
    pass
