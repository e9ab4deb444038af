from dapoly.dapoly_error import DapolyError


class CapExceededError(DapolyError):
    pass
