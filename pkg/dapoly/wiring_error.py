from dapoly.dapoly_error import DapolyError


class WiringError(DapolyError):
    pass


class OutOfRangeError(WiringError):
    pass


class RepeatedCrossingError(WiringError):
    pass
